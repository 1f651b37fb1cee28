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
#ifndef BLOCHNORM_TOOLS_REPORT_HPP_
#define BLOCHNORM_TOOLS_REPORT_HPP_

#include <ostream>

#include <nlohmann/json.hpp>

namespace blochnorm::cli {

enum class Format { kJson, kText };

/// Reports are assembled as JSON and rendered in either format, so both
/// carry the same values. Text renders one "path = value" line per leaf;
/// arrays of scalars stay on one line. Doubles print as %.17g.
void write_report(std::ostream& out, const nlohmann::json& report, Format format);

}  // namespace blochnorm::cli

#endif  // BLOCHNORM_TOOLS_REPORT_HPP_
