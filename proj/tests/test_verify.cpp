/*
   Copyright 2026 The knormal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"

#include "knormal/verify.hpp"

using namespace knormal;

TEST_CASE("suites at reduced scale") {
  VerifyOptions opt;
  opt.max_card = 1 << 10;
  opt.element_card = 1 << 8;
  opt.estimate_hi = 5000;
  opt.divisor_sum_hi = 500;
  opt.euler_q_hi = 300;
  opt.euler_k_hi = 4;
  opt.practical_n_hi = 20;
  std::vector<int> seen;
  auto results = run_suite(Suite::All, opt, [&](const CriterionResult& r) { seen.push_back(r.id); });
  REQUIRE(results.size() == 11);
  CHECK(seen == suite_criteria(Suite::All));
  for (const auto& r : results) {
    INFO(r.id << " " << r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK_FALSE(r.name.empty());
  }
}

TEST_CASE("suite membership") {
  CHECK(suite_criteria(Suite::Census) == std::vector<int>{1, 2, 3});
  CHECK(suite_criteria(Suite::Bounds) == std::vector<int>{6, 7, 8, 10, 11});
  CHECK(suite_criteria(Suite::Construct) == std::vector<int>{4, 5, 9});
  for (auto s : {Suite::All, Suite::Census, Suite::Bounds, Suite::Construct}) CHECK(parse_suite(to_string(s)) == s);
  CHECK_THROWS_AS(parse_suite("everything"), InvalidArgument);
}

TEST_CASE("the known sieve instance must be in the grid") {
  VerifyOptions opt;
  opt.max_card = 128;  // excludes F_256, so (2, 8, 0) cannot trigger
  auto r = run_suite(Suite::Bounds, opt);
  REQUIRE(r.size() == 5);
  CHECK(r[0].id == 6);
  CHECK_FALSE(r[0].passed);
}
