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
#include "blochnorm/error.hpp"

namespace blochnorm {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDimension: return "invalid-dimension";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kInvalidSubset: return "invalid-subset";
    case ErrorCode::kUnsupportedInput: return "unsupported-input";
    case ErrorCode::kConfiguration: return "configuration";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace blochnorm
