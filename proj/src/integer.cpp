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

#include "knormal/integer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace knormal {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::msb;
using boost::multiprecision::powm;

constexpr std::array<unsigned, 13> kMillerRabinBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr std::uint64_t kTrialFactorLimit = 1 << 16;
constexpr std::uint64_t kRhoIterationCap = std::uint64_t{1} << 26;

bool miller_rabin(const BigInt& n) {
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  unsigned r = 0;
  while (!bit_test(d, 0)) {
    d >>= 1;
    ++r;
  }
  for (unsigned a : kMillerRabinBases) {
    BigInt x = powm(BigInt(a), d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned i = 1; i < r; ++i) {
      x = (x * x) % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Pollard-Brent; returns a nontrivial factor of composite n or 0 on stall.
std::uint64_t rho_u64(std::uint64_t n, std::uint64_t c) {
  if (n % 2 == 0) return 2;
  auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
  std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
  std::uint64_t r = 1, iters = 0;
  constexpr std::uint64_t m = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod_u64(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      iters += m;
    }
    r *= 2;
    if (iters > kRhoIterationCap) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

BigInt rho_big(const BigInt& n, unsigned c) {
  if (!bit_test(n, 0)) return 2;
  auto f = [&](const BigInt& v) { return (v * v + c) % n; };
  BigInt y = 2, x = 2, g = 1, q = 1, ys = 2;
  std::uint64_t r = 1, iters = 0;
  constexpr std::uint64_t m = 128;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = (q * (x > y ? BigInt(x - y) : BigInt(y - x))) % n;
      }
      g = gcd(q, n);
      iters += m;
    }
    r *= 2;
    if (iters > kRhoIterationCap) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

void split_composite(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned c = 1; c < 64; ++c) {
    BigInt d;
    if (n <= BigInt(UINT64_MAX)) {
      d = rho_u64(static_cast<std::uint64_t>(n), c);
    } else {
      d = rho_big(n, c);
    }
    if (d > 1 && d < n) {
      split_composite(d, out);
      split_composite(n / d, out);
      return;
    }
  }
  throw BudgetExceeded("factor", "Pollard rho did not split " + n.str());
}

void merge_into(std::map<BigInt, unsigned>& acc, const IntFactorization& f) {
  for (const auto& [p, e] : f) acc[p] += e;
}

IntFactorization from_map(const std::map<BigInt, unsigned>& m) {
  IntFactorization out;
  out.reserve(m.size());
  for (const auto& [p, e] : m) out.push_back({p, e});
  return out;
}

void check_budget(const BigInt& m, unsigned max_bits) {
  if (m > 0 && msb(m) + 1 > max_bits) {
    throw BudgetExceeded("factor-bits", "integer " + m.str() + " exceeds the " +
                                            std::to_string(max_bits) + "-bit factoring budget");
  }
}

}  // namespace

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n >= kTrialDivisionPrimalityLimit) {
    throw InvalidArgument("is_prime_u64: " + std::to_string(n) + " is above the trial-division cutoff");
  }
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < kTrialDivisionPrimalityLimit) return is_prime_u64(static_cast<std::uint64_t>(n));
  for (unsigned p : kMillerRabinBases) {
    if (n % p == 0) return false;
  }
  return miller_rabin(n);
}

IntFactorization factor_integer(const BigInt& m, unsigned max_bits) {
  if (m < 1) throw InvalidArgument("factor_integer: input must be positive");
  check_budget(m, max_bits);
  std::map<BigInt, unsigned> acc;
  BigInt rest = m;
  for (std::uint64_t d = 2; d < kTrialFactorLimit && BigInt(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    while (rest % d == 0) {
      ++acc[BigInt(d)];
      rest /= d;
    }
  }
  if (rest > 1) {
    if (rest < BigInt(kTrialFactorLimit) * kTrialFactorLimit) {
      ++acc[rest];  // no factor below its square root
    } else {
      split_composite(rest, acc);
    }
  }
  IntFactorization out = from_map(acc);
  if (product(out) != m) throw VerificationError("factor_integer: product check failed for " + m.str());
  for (const auto& [p, e] : out) {
    if (!is_prime(p)) throw VerificationError("factor_integer: non-prime base " + p.str());
  }
  return out;
}

IntFactorization factor_q_power_minus_one(std::uint64_t q, unsigned n, unsigned max_bits) {
  if (q < 2 || n < 1) throw InvalidArgument("factor_q_power_minus_one: need q >= 2, n >= 1");
  const BigInt total = ipow(BigInt(q), n) - 1;
  check_budget(total, max_bits);
  // cyclotomic values Phi_d(q) for d | n, smallest first
  std::map<std::uint64_t, BigInt> cyclo;
  std::map<BigInt, unsigned> acc;
  for (std::uint64_t d : divisors(n)) {
    BigInt v = ipow(BigInt(q), static_cast<unsigned>(d)) - 1;
    for (const auto& [e, val] : cyclo) {
      if (d % e == 0) v /= val;
    }
    cyclo[d] = v;
    merge_into(acc, factor_integer(v, max_bits));
  }
  IntFactorization out = from_map(acc);
  if (product(out) != total) throw VerificationError("factor_q_power_minus_one: product check failed");
  return out;
}

BigInt product(const IntFactorization& f) {
  BigInt r = 1;
  for (const auto& [p, e] : f) r *= ipow(p, e);
  return r;
}

IntFactorization factor_small(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factor_small: zero");
  IntFactorization out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.push_back({BigInt(d), e});
  }
  if (n > 1) out.push_back({BigInt(n), 1});
  return out;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& f : factor_small(n)) out.push_back(static_cast<std::uint64_t>(f.prime));
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p : distinct_prime_factors(n)) r = r / p * (p - 1);
  return r;
}

BigInt euler_phi(const IntFactorization& f) {
  BigInt r = 1;
  for (const auto& [p, e] : f) r *= (p - 1) * ipow(p, e - 1);
  return r;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (const auto& [p, e] : factor_small(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& f : factor_small(n)) r *= f.exponent + 1;
  return r;
}

BigInt squarefree_divisor_count(const IntFactorization& f) { return BigInt(1) << f.size(); }

std::uint64_t multiplicative_order_mod(std::uint64_t q, std::uint64_t u) {
  if (u == 0) throw InvalidArgument("multiplicative_order_mod: modulus zero");
  if (u == 1) return 1;
  if (std::gcd(q % u, u) != 1) throw InvalidArgument("multiplicative_order_mod: q not invertible mod u");
  // ord divides phi(u); reduce phi(u) prime by prime
  std::uint64_t e = euler_phi(u);
  for (std::uint64_t r : distinct_prime_factors(e)) {
    while (e % r == 0 && powmod_u64(q, e / r, u) == 1) e /= r;
  }
  return e;
}

std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return {0, 0};
  auto fac = factor_small(q);
  if (fac.size() != 1) return {0, 0};
  return {static_cast<std::uint64_t>(fac[0].prime), fac[0].exponent};
}

}  // namespace knormal
