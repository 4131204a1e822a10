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

#ifndef KNORMAL_VERIFY_HPP
#define KNORMAL_VERIFY_HPP

// End-to-end checks of the counting formulas, the existence theorems and the
// numeric estimates over exhaustively searchable fields.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "knormal/common.hpp"

namespace knormal {

enum class Suite { All, Census, Bounds, Construct };
std::string to_string(Suite s);
Suite parse_suite(const std::string& s);

struct VerifyOptions {
  /// Largest q^n for the census grid (q <= 9).
  std::uint64_t max_card = std::uint64_t{1} << 18;
  /// Largest q^n for per-element F_q-order and construction checks.
  std::uint64_t element_card = std::uint64_t{1} << 14;
  std::uint64_t estimate_hi = 1000000;
  std::uint64_t divisor_sum_hi = 20000;
  std::uint64_t euler_q_hi = 10000;
  unsigned euler_k_hi = 64;
  unsigned practical_n_hi = 40;
  unsigned threads = 1;
  unsigned factor_bits = kDefaultFactorBits;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Criteria in the suite, in id order. `progress` is called after each one.
std::vector<CriterionResult> run_suite(Suite suite, const VerifyOptions& opt = {},
                                       const std::function<void(const CriterionResult&)>& progress = {});

/// Ids covered by a suite.
std::vector<int> suite_criteria(Suite suite);

}  // namespace knormal

#endif  // KNORMAL_VERIFY_HPP
