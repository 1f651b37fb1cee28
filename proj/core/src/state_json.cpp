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
#include "blochnorm/state_json.hpp"

#include <cmath>
#include <sstream>

#include "blochnorm/error.hpp"

namespace blochnorm {
namespace {

using nlohmann::json;

std::string short_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) parse_error(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double require_number(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) parse_error(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

ComplexVector amplitudes_from_json(const json& j) {
  if (!j.is_array()) parse_error("'amplitudes' must be an array of [re, im] pairs");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

ComplexMatrix matrix_from_json(const json& j, Eigen::Index dim) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
    parse_error("'matrix' must have " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      parse_error("matrix row " + std::to_string(r) + " must have " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_error("complex numbers are encoded as [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

LoadedState builtin_state(const std::string& name, int d, int parties, const json& params) {
  if (name == "ghz") {
    PureState psi = ghz(d, parties);
    return {from_pure(psi), psi,
            "ghz(d=" + std::to_string(d) + ", n=" + std::to_string(parties) + ")"};
  }
  if (name == "isotropic_ghz4") {
    if (parties != 4) parse_error("isotropic_ghz4 is a four-party state");
    const double x = require_number(params, "x");
    DensityMatrix rho = isotropic_ghz4(x, d);
    std::optional<PureState> pure;
    if (x == 1.0) pure = ghz(d, 4);
    return {std::move(rho), std::move(pure),
            "isotropic_ghz4(x=" + short_number(x) + ", d=" + std::to_string(d) + ")"};
  }
  if (name == "product_max_entangled") {
    if (parties != 4) parse_error("product_max_entangled is a four-party state");
    PureState psi = product_max_entangled(d);
    return {from_pure(psi), psi, "product_max_entangled(d=" + std::to_string(d) + ")"};
  }
  parse_error("unknown builtin state '" + name + "'");
}

LoadedState state_from_json(const json& j) {
  if (!j.is_object()) parse_error("state must be a JSON object");
  const int d = require_int(j, "d");
  const int n = require_int(j, "parties");
  const json& kind_field = require(j, "kind");
  if (!kind_field.is_string()) parse_error("'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();
  if (d < 2) throw Error(ErrorCode::kInvalidDimension, "d must be >= 2");
  if (n < 1 || n > kMaxParties) throw Error(ErrorCode::kInvalidDimension, "parties must lie in [1, 4]");

  if (kind == "pure") {
    PureState psi(d, n, amplitudes_from_json(require(j, "amplitudes")));
    return {from_pure(psi), psi, "pure state"};
  }
  if (kind == "ensemble") {
    const json& members = require(j, "members");
    if (!members.is_array()) parse_error("'members' must be an array");
    std::vector<EnsembleMember> list;
    for (const json& m : members) {
      list.push_back({require_number(m, "weight"),
                      PureState(d, n, amplitudes_from_json(require(m, "amplitudes")))});
    }
    Ensemble e(std::move(list));
    std::optional<PureState> pure;
    if (e.members().size() == 1) pure = e.members().front().state;
    return {from_ensemble(e), std::move(pure),
            "ensemble of " + std::to_string(e.members().size()) + " pure states"};
  }
  if (kind == "matrix") {
    const auto dim = static_cast<Eigen::Index>(ipow(d, n));
    return {DensityMatrix(d, n, matrix_from_json(require(j, "matrix"), dim)), std::nullopt,
            "density matrix"};
  }
  if (kind == "builtin") {
    const json& spec = require(j, "builtin");
    const json& name = require(spec, "name");
    if (!name.is_string()) parse_error("builtin 'name' must be a string");
    const json params = spec.contains("params") ? spec.at("params") : json::object();
    return builtin_state(name.get<std::string>(), d, n, params);
  }
  parse_error("unknown state kind '" + kind + "'");
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json state_to_json(const DensityMatrix& rho) {
  return {{"d", rho.local_dim()},
          {"parties", rho.num_parties()},
          {"kind", "matrix"},
          {"matrix", matrix_to_json(rho.matrix())}};
}

json state_to_json(const PureState& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    amps.push_back(complex_to_json(psi.amplitudes()(i)));
  }
  return {{"d", psi.local_dim()}, {"parties", psi.num_parties()}, {"kind", "pure"}, {"amplitudes", amps}};
}

json basis_to_json(const GeneratorBasis& basis) {
  json gens = json::array();
  for (const ComplexMatrix& g : basis.generators()) gens.push_back(matrix_to_json(g));
  return {{"d", basis.local_dim()}, {"count", basis.size()}, {"generators", gens}};
}

json tensor_to_json(const BlochTensor& t) {
  json parties = json::array();
  for (int p : t.subset().parties()) parties.push_back(p);
  return {{"subset", parties},
          {"label", t.subset().label()},
          {"norm_sq", t.norm_sq()},
          {"norm", std::sqrt(t.norm_sq())},
          {"coefficients", t.coefficients()}};
}

}  // namespace blochnorm
