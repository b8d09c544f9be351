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

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "effectdual/error.hpp"
#include "effectdual/suite.hpp"

namespace {

using namespace effectdual;

TEST_CASE("property suite passes on built-in sources") {
  SuiteConfig cfg;
  cfg.seed = 17;
  cfg.trials = 60;
  const auto results = run_property_suite(cfg);
  CHECK(results.size() >= 30);
  std::set<std::string> names;
  for (const auto& r : results) {
    INFO(r.name, " deviated by ", r.max_deviation, " against ", r.tolerance);
    CHECK(r.pass);
    CHECK(r.max_deviation <= r.tolerance);
    CHECK(names.insert(r.name).second);
  }
}

TEST_CASE("property suite is deterministic in its config") {
  SuiteConfig cfg;
  cfg.seed = 23;
  cfg.trials = 40;
  const auto a = run_property_suite(cfg);
  const auto b = run_property_suite(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].max_deviation == b[i].max_deviation);
    CHECK(a[i].trials == b[i].trials);
  }
  CHECK(suite_report(a, cfg).dump() == suite_report(b, cfg).dump());
}

TEST_CASE("property suite passes on the shipped fixture files") {
  SuiteConfig cfg;
  cfg.seed = 17;
  cfg.trials = 40;
  cfg.fixtures_dir = EFFECTDUAL_FIXTURES_DIR;
  const auto results = run_property_suite(cfg);
  for (const auto& r : results) {
    INFO(r.name, " deviated by ", r.max_deviation, " against ", r.tolerance);
    CHECK(r.pass);
  }
}

TEST_CASE("corrupted fixture directories surface as errors") {
  SuiteConfig cfg;
  cfg.trials = 10;
  cfg.fixtures_dir = "/tmp/effectdual_suite_missing_dir";
  CHECK_THROWS_AS(run_property_suite(cfg), Error);

  const std::string dir = "/tmp/effectdual_suite_bad_fixtures";
  std::filesystem::create_directories(dir);
  std::ofstream(dir + "/trine.json") << "{\"space\": [";
  cfg.fixtures_dir = dir;
  try {
    run_property_suite(cfg);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
  }
}

TEST_CASE("suite report carries the run configuration") {
  SuiteConfig cfg;
  cfg.seed = 5;
  cfg.trials = 20;
  const auto results = run_property_suite(cfg);
  const auto j = suite_report(results, cfg);
  CHECK(j["seed"] == 5);
  CHECK(j["trials"] == 20);
  CHECK(j["algorithm"] == "mt19937_64");
  CHECK(j["pass"] == true);
  CHECK(j["results"].size() == results.size());
  CHECK(j["results"][0].contains("max_deviation"));
  CHECK(j["results"][0].contains("tolerance"));
}

}  // namespace
