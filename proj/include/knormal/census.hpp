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

#ifndef KNORMAL_CENSUS_HPP
#define KNORMAL_CENSUS_HPP

// Exact k-normal counts from the enumerator polynomial
//   P_n(z) = prod_i (1 + Phi_q(f_i) z^{d_i} + ... + Phi_q(f_i^{p^t}) z^{p^t d_i}),
// where f_i runs over the irreducible factors of x^u - 1, n = p^t u.

#include <cstdint>
#include <string>
#include <vector>

#include "knormal/cyclotomic.hpp"

namespace knormal {

struct CensusReport {
  std::uint64_t q = 0;
  unsigned n = 0;
  /// A_n(0), ..., A_n(n): A_n(i) counts elements whose F_q-order has degree i.
  std::vector<BigInt> coeffs;
  bool practical = false;

  /// N_k = A_n(n - k).
  const BigInt& count_k_normal(unsigned k) const;
  BigInt total() const;
};

CensusReport enumerator_polynomial(std::uint64_t q, unsigned n);

/// N_k; throws InvalidArgument unless 0 <= k <= n.
BigInt count_k_normal(std::uint64_t q, unsigned n, unsigned k);

/// Subset sums of the factor-degree multiset (bounded knapsack) cover [0, n].
bool degrees_cover(const std::vector<DegreeClass>& classes, unsigned n);
/// Reachable divisor degrees 0..n.
std::vector<bool> reachable_degrees(const std::vector<DegreeClass>& classes, unsigned n);

/// x^n - 1 has a divisor of every degree in [0, n].
bool is_fq_practical(std::uint64_t q, unsigned n);

/// Every prime divisor of n divides p (q - 1). Requires n >= 2.
bool prime_divisor_condition(std::uint64_t q, unsigned n);

struct ClosedFormReport {
  bool applicable = false;
  /// "prime_power" (n = p^t), "split" (primes of n divide q - 1), or "" when not applicable.
  std::string form;
  std::vector<BigInt> expected;  // A_n(0..n) from the closed form
  bool matches = false;
};

/// Evaluates the applicable closed form and compares it coefficient-wise
/// with enumerator_polynomial.
ClosedFormReport closed_form_cross_check(std::uint64_t q, unsigned n);

}  // namespace knormal

#endif  // KNORMAL_CENSUS_HPP
