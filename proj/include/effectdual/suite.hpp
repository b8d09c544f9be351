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

#ifndef EFFECTDUAL_SUITE_HPP
#define EFFECTDUAL_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "effectdual/matrix.hpp"

namespace effectdual {

struct PropertyResult {
  std::string name;
  int trials = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteConfig {
  std::uint64_t seed = 0;
  int trials = 500;
  Tolerance tol{};
  // When set, fixture-backed checks load from this directory instead of the
  // in-memory builders; unreadable or corrupted files surface as errors.
  std::string fixtures_dir;
};

// One seeded pass over every module invariant. Each property draws from its
// own child generator, so results do not depend on check ordering.
std::vector<PropertyResult> run_property_suite(const SuiteConfig& cfg);

nlohmann::json suite_report(const std::vector<PropertyResult>& results,
                            const SuiteConfig& cfg);

}  // namespace effectdual

#endif
