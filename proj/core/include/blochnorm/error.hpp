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

#ifndef BLOCHNORM_ERROR_HPP_
#define BLOCHNORM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace blochnorm {

enum class ErrorCode {
  kInvalidDimension,
  kValidation,
  kInvalidSubset,
  kUnsupportedInput,
  kConfiguration,
  kParse,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library is an Error; callers that only need
// the message can catch std::runtime_error.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blochnorm

#endif  // BLOCHNORM_ERROR_HPP_
