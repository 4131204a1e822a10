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

#ifndef KNORMAL_INTEGER_HPP
#define KNORMAL_INTEGER_HPP

// Integer number theory: primality, factoring, and the classical
// multiplicative functions phi, mu, d, W.

#include <cstdint>
#include <vector>

#include "knormal/common.hpp"

namespace knormal {

struct IntFactor {
  BigInt prime;
  unsigned exponent = 0;
  friend bool operator==(const IntFactor&, const IntFactor&) = default;
};

/// Prime factorization of an integer, primes ascending.
using IntFactorization = std::vector<IntFactor>;

/// Trial-division cutoff: integers below 2^32 are tested by trial division
/// and are therefore proven prime or composite.
inline constexpr std::uint64_t kTrialDivisionPrimalityLimit = std::uint64_t{1} << 32;

/// Deterministic trial division; n must be below kTrialDivisionPrimalityLimit.
bool is_prime_u64(std::uint64_t n);

/// Trial division below 2^32, Miller-Rabin with the first 13 prime bases above
/// (proven correct below 3.3e24, which covers the default 96-bit factoring budget
/// up to 2^81; above that a composite passing all 13 bases is not known to exist).
bool is_prime(const BigInt& n);

/// Full factorization of m >= 1 by trial division then Pollard-Brent rho.
/// Throws BudgetExceeded when m has more than `max_bits` bits or rho stalls.
/// The result is checked: product equals m and every base passes is_prime.
IntFactorization factor_integer(const BigInt& m, unsigned max_bits = kDefaultFactorBits);

/// Factorization of q^n - 1 through its cyclotomic split q^n - 1 = prod_{d|n} Phi_d(q);
/// the budget is still applied to q^n - 1 as a whole.
IntFactorization factor_q_power_minus_one(std::uint64_t q, unsigned n,
                                          unsigned max_bits = kDefaultFactorBits);

BigInt product(const IntFactorization& f);

std::uint64_t euler_phi(std::uint64_t n);
BigInt euler_phi(const IntFactorization& f);
int mobius(std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);
/// Number of squarefree divisors, 2^(number of distinct primes).
BigInt squarefree_divisor_count(const IntFactorization& f);

/// Factorization of a machine integer (trial division only).
IntFactorization factor_small(std::uint64_t n);
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);
/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Least e >= 1 with q^e = 1 (mod u); requires gcd(q, u) = 1.
std::uint64_t multiplicative_order_mod(std::uint64_t q, std::uint64_t u);

/// If q = p^s for a prime p, returns (p, s); otherwise (0, 0).
std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace knormal

#endif  // KNORMAL_INTEGER_HPP
