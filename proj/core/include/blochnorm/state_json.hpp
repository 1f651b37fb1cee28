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
#ifndef BLOCHNORM_STATE_JSON_HPP_
#define BLOCHNORM_STATE_JSON_HPP_

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "blochnorm/bloch_decomposition.hpp"
#include "blochnorm/quantum_states.hpp"
#include "blochnorm/su_basis.hpp"

namespace blochnorm {

// State files:
//   {"d": 2, "parties": 2, "kind": "pure", "amplitudes": [[re, im], ...]}
//   {"d": 2, "parties": 1, "kind": "ensemble",
//    "members": [{"weight": 0.5, "amplitudes": [...]}, ...]}
//   {"d": 2, "parties": 1, "kind": "matrix", "matrix": [[[re, im], ...], ...]}
//   {"d": 3, "parties": 3, "kind": "builtin",
//    "builtin": {"name": "ghz" | "isotropic_ghz4" | "product_max_entangled",
//                "params": {"x": 0.7}}}
// Matrices are row-major; party 1 is the most significant index.

struct LoadedState {
  DensityMatrix rho;
  std::optional<PureState> pure;  ///< set for pure and pure builtin inputs
  std::string description;
};

/// Throws Error(kParse) for schema violations and the validation errors of
/// the state constructors for physically invalid input.
LoadedState state_from_json(const nlohmann::json& j);

/// Builds a builtin state. params may carry "x" for isotropic_ghz4.
LoadedState builtin_state(const std::string& name, int d, int parties,
                          const nlohmann::json& params);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

/// Dense "matrix" kind encoding of rho.
nlohmann::json state_to_json(const DensityMatrix& rho);
nlohmann::json state_to_json(const PureState& psi);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json basis_to_json(const GeneratorBasis& basis);
nlohmann::json tensor_to_json(const BlochTensor& t);

}  // namespace blochnorm

#endif  // BLOCHNORM_STATE_JSON_HPP_
