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

#include "knormal/construct.hpp"

#include "knormal/census.hpp"
#include "knormal/cyclotomic.hpp"
#include "knormal/integer.hpp"

namespace knormal {

namespace {

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void check_divisor(const Poly& f, unsigned n, unsigned k, const char* where) {
  if (static_cast<unsigned>(f.degree()) != k || !f.is_monic()) {
    throw VerificationError(std::string(where) + ": wrong degree");
  }
  if (!divides(f, Poly::xn_minus_one(f.field(), n))) {
    throw VerificationError(std::string(where) + ": not a divisor of x^n - 1");
  }
}

}  // namespace

std::string to_string(PrimePowerCase c) {
  switch (c) {
    case PrimePowerCase::Binary: return "binary";
    case PrimePowerCase::Split: return "split";
    case PrimePowerCase::MixedDegrees: return "mixed_degrees";
  }
  return "binary";
}

PrimePowerCase prime_power_case(std::uint64_t q, std::uint64_t r, unsigned d) {
  if (!is_prime_u64(r) || (q - 1) % r != 0) throw InvalidArgument("r must be a prime dividing q - 1");
  if (d < 1) throw InvalidArgument("d must be >= 1");
  if (r == 2) return PrimePowerCase::Binary;
  return (q - 1) % upow(r, d) == 0 ? PrimePowerCase::Split : PrimePowerCase::MixedDegrees;
}

Poly constructive_divisor_prime_power(const FieldPtr& fq, std::uint64_t r, unsigned d, unsigned k) {
  const std::uint64_t q = fq->q();
  const auto kind = prime_power_case(q, r, d);
  const std::uint64_t n = upow(r, d);
  if (k < 1 || k >= n) throw InvalidArgument("k must lie in [1, r^d - 1]");

  Poly f = Poly::one(fq);
  if (kind == PrimePowerCase::Binary) {
    for (unsigned i = 0; i < d; ++i) {
      if ((k >> i) & 1) f = f * (Poly::monomial(fq, std::size_t{1} << i) + Poly::one(fq));
    }
  } else {
    const auto xn1 = factor_xn_minus_1(fq, static_cast<unsigned>(n));
    std::vector<const Poly*> linear;
    for (const auto& pf : xn1) {
      if (pf.base.degree() == 1 && pf.base.eval(1) != 0) linear.push_back(&pf.base);
    }
    if (kind == PrimePowerCase::Split) {
      for (unsigned i = 0; i < k; ++i) f = f * *linear.at(i);
    } else {
      unsigned s = 0;
      while ((q - 1) % upow(r, s + 1) == 0) ++s;
      std::vector<unsigned> digit(d);
      for (unsigned i = 0, v = k; i < d; ++i, v /= static_cast<unsigned>(r)) digit[i] = v % r;
      // digit a_{i-1}, s < i <= d, takes a_{i-1} r^{s-1} factors of degree r^{i-s}
      for (unsigned i = s + 1; i <= d; ++i) {
        const std::uint64_t want_deg = upow(r, i - s);
        std::uint64_t want = digit[i - 1] * upow(r, s - 1);
        for (const auto& pf : xn1) {
          if (!want) break;
          if (static_cast<std::uint64_t>(pf.base.degree()) != want_deg) continue;
          f = f * pf.base;
          --want;
        }
        if (want) throw VerificationError("constructive_divisor_prime_power: too few factors of degree r^i");
      }
      std::uint64_t D = 0;
      for (unsigned i = 0; i < s; ++i) D += digit[i] * upow(r, i);
      for (std::uint64_t i = 0; i < D; ++i) f = f * *linear.at(i);
    }
  }
  check_divisor(f, static_cast<unsigned>(n), k, "constructive_divisor_prime_power");
  if (f.eval(1) == 0) throw VerificationError("constructive_divisor_prime_power: f(1) = 0");
  return f;
}

Poly practical_divisor(const FieldPtr& fq, unsigned n, unsigned k) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (k > n) throw InvalidArgument("k must lie in [0, n]");
  if (k == 0) return Poly::one(fq);
  if (k == n) return Poly::xn_minus_one(fq, n);
  const std::uint64_t q = fq->q();
  const std::uint64_t p = fq->p();
  if (!prime_divisor_condition(q, n)) throw InvalidArgument("a prime divisor of n does not divide p(q - 1)");

  const auto primes = distinct_prime_factors(n);
  const Poly x_minus_1 = Poly::xn_minus_one(fq, 1);
  Poly f = Poly::one(fq);
  if (primes.size() == 1) {
    const std::uint64_t r = primes[0];
    if (r == p) {
      f = pow(x_minus_1, k);
    } else {
      unsigned d = 0;
      for (unsigned m = n; m > 1; m /= static_cast<unsigned>(r)) ++d;
      f = constructive_divisor_prime_power(fq, r, d, k);
    }
  } else if (n % p == 0) {
    unsigned n0 = n;
    while (n0 % p == 0) n0 /= static_cast<unsigned>(p);
    const unsigned a = k / n0, b = k % n0;
    f = pow(Poly::xn_minus_one(fq, n0), a) * practical_divisor(fq, n0, b);
  } else {
    const std::uint64_t r = primes[0];
    unsigned n1 = n, u = 0;
    while (n1 % r == 0) {
      n1 /= static_cast<unsigned>(r);
      ++u;
    }
    const unsigned a = k / n1, b = k % n1;
    const Poly g = a ? constructive_divisor_prime_power(fq, r, u, a).compose_power(n1) : Poly::one(fq);
    const Poly h = practical_divisor(fq, n1, b);
    if (gcd(g, h).degree() != 0) throw VerificationError("practical_divisor: g(x^n1) and h(x) share a factor");
    f = g * h;
  }
  check_divisor(f, n, k, "practical_divisor");
  return f;
}

}  // namespace knormal
