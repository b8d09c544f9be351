// Copyright 2026 The effectdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EFFECTDUAL_ERROR_HPP
#define EFFECTDUAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace effectdual {

enum class ErrorCode {
  parse,
  validation,
  dimension_mismatch,
  space_mismatch,
  not_orthogonal,
  not_affine,
  not_homomorphism,
  not_povm,
  not_state,
  range_violation,
  not_transitive,
  singular_average,
  io,
  callback,
  internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace effectdual

#endif
