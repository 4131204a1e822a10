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

#ifndef KNORMAL_CONSTRUCT_HPP
#define KNORMAL_CONSTRUCT_HPP

// Explicit divisors of x^n - 1 of every degree when each prime divisor of n
// divides p(q - 1), built by the inductive construction rather than by search.

#include <cstdint>
#include <string>

#include "knormal/poly.hpp"

namespace knormal {

enum class PrimePowerCase {
  Binary,         // r = 2: products of x^{2^i} + 1 along the binary digits of k
  Split,          // r^d | q - 1: distinct linear factors other than x - 1
  MixedDegrees,   // otherwise: r-adic digits spread over factors of degree r^i
};
std::string to_string(PrimePowerCase c);

/// Which construction applies to x^{r^d} - 1 over F_q. Requires r prime, r | q - 1, d >= 1.
PrimePowerCase prime_power_case(std::uint64_t q, std::uint64_t r, unsigned d);

/// Degree-k divisor f of x^{r^d} - 1 with f(1) != 0, for 1 <= k <= r^d - 1.
Poly constructive_divisor_prime_power(const FieldPtr& fq, std::uint64_t r, unsigned d, unsigned k);

/// Degree-k divisor of x^n - 1 for 0 <= k <= n, by induction on the number of
/// distinct primes of n. Requires every prime divisor of n to divide p(q - 1).
/// Each step is checked (degree, divisibility, coprimality of the two parts).
Poly practical_divisor(const FieldPtr& fq, unsigned n, unsigned k);

}  // namespace knormal

#endif  // KNORMAL_CONSTRUCT_HPP
