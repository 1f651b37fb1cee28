// Copyright 2026 The blochnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "report.hpp"

#include <cstdio>
#include <string>

namespace blochnorm::cli {
namespace {

using nlohmann::json;

std::string scalar(const json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool flat(const json& v) {
  if (!v.is_array()) return false;
  for (const json& e : v) {
    if (e.is_object()) return false;
    if (e.is_array() && !flat(e)) return false;
  }
  return true;
}

std::string inline_array(const json& v) {
  std::string s = "[";
  bool first = true;
  for (const json& e : v) {
    if (!first) s += ", ";
    first = false;
    s += e.is_array() ? inline_array(e) : scalar(e);
  }
  return s + "]";
}

void render(std::ostream& out, const std::string& path, const json& v) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) {
      render(out, path.empty() ? key : path + "." + key, child);
    }
  } else if (v.is_array() && !(flat(v) && (v.empty() || !v[0].is_array() || !v[0][0].is_array()))) {
    for (std::size_t i = 0; i < v.size(); ++i) render(out, path + "[" + std::to_string(i) + "]", v[i]);
  } else {
    out << path << " = " << (v.is_array() ? inline_array(v) : scalar(v)) << '\n';
  }
}

}  // namespace

void write_report(std::ostream& out, const nlohmann::json& report, Format format) {
  if (format == Format::kJson) {
    out << report.dump(2) << '\n';
  } else {
    render(out, "", report);
  }
}

}  // namespace blochnorm::cli
