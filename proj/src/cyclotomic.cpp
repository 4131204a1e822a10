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

#include "knormal/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "knormal/field.hpp"
#include "knormal/integer.hpp"

namespace knormal {

namespace {

using ExtPoly = std::vector<FieldElement>;  // ascending, over a splitting field

// A primitive u-th root of unity in ext (u divides |ext^*|).
FieldElement root_of_unity(const FieldCtx& ext, std::uint64_t u, std::uint64_t seed) {
  const BigInt cofactor = (ext.card() - 1) / u;
  const auto primes = distinct_prime_factors(u);
  std::mt19937_64 rng(seed ^ (u * 0x9e3779b97f4a7c15ULL));
  const FieldElement one = ext.one();
  for (;;) {
    const FieldElement g = ext.random(rng);
    if (ext.is_zero(g)) continue;
    FieldElement z = ext.pow(g, cofactor);
    bool exact = true;
    for (auto r : primes) {
      if (ext.pow(z, u / r) == one) {
        exact = false;
        break;
      }
    }
    if (exact) return z;
  }
}

Poly minimal_polynomial(const FieldCtx& ext, const std::vector<std::uint64_t>& coset, const FieldElement& zeta) {
  ExtPoly acc{ext.one()};
  for (auto j : coset) {
    const FieldElement root = ext.pow(zeta, j);
    // acc *= (x - root)
    ExtPoly next(acc.size() + 1, ext.zero());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = ext.add(next[i + 1], acc[i]);
      next[i] = ext.sub(next[i], ext.mul(acc[i], root));
    }
    acc = std::move(next);
  }
  std::vector<Fq> c;
  c.reserve(acc.size());
  for (const auto& e : acc) {
    if (!ext.in_base(e)) throw VerificationError("minimal polynomial has a coefficient outside F_q");
    c.push_back(e.coeffs[0]);
  }
  return Poly(ext.base_ptr(), std::move(c));
}

PolyFactorization compute_factorization(const FieldPtr& fq, unsigned n) {
  const std::uint64_t q = fq->q();
  const auto [t, u] = split_characteristic(fq->p(), n);
  std::uint64_t mult = 1;
  for (unsigned i = 0; i < t; ++i) mult *= fq->p();

  PolyFactorization out;
  if (u == 1) {
    out.push_back({Poly::xn_minus_one(fq, 1), static_cast<unsigned>(mult)});
  } else {
    const auto m = static_cast<unsigned>(multiplicative_order_mod(q, u));
    const FieldCtx ext(fq, m);
    const FieldElement zeta = root_of_unity(ext, u, kDefaultSeed);
    for (const auto& coset : cyclotomic_cosets(q, u)) {
      Poly f = minimal_polynomial(ext, coset, zeta);
      if (static_cast<std::size_t>(f.degree()) != coset.size()) throw VerificationError("factor degree mismatch");
      out.push_back({std::move(f), static_cast<unsigned>(mult)});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.base < b.base; });
  }
  if (!(expand(out) == Poly::xn_minus_one(fq, n))) {
    throw VerificationError("factorization of x^n - 1 does not reproduce x^n - 1");
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t q, std::uint64_t u) {
  if (u == 0) throw InvalidArgument("cyclotomic_cosets: modulus zero");
  std::vector<char> seen(u, 0);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t a = 0; a < u; ++a) {
    if (seen[a]) continue;
    std::vector<std::uint64_t> c;
    std::uint64_t x = a;
    do {
      seen[x] = 1;
      c.push_back(x);
      x = mulmod_u64(x, q, u);
    } while (x != a);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::pair<unsigned, std::uint64_t> split_characteristic(std::uint64_t p, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("n must be positive");
  unsigned t = 0;
  while (n % p == 0) {
    n /= p;
    ++t;
  }
  return {t, n};
}

PolyFactorization factor_xn_minus_1(const FieldPtr& fq, unsigned n) {
  if (n < 1) throw InvalidArgument("factor_xn_minus_1: n must be >= 1");
  using Key = std::tuple<std::uint64_t, std::vector<std::uint32_t>, unsigned>;
  static std::mutex mu;
  static std::map<Key, PolyFactorization> cache;
  Key key{fq->q(), fq->modulus(), n};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) {
      // rebind to the caller's field object so pointer comparisons stay cheap
      PolyFactorization out;
      for (const auto& f : it->second) out.push_back({Poly(fq, f.base.coeffs()), f.multiplicity});
      return out;
    }
  }
  PolyFactorization out = compute_factorization(fq, n);
  std::lock_guard lock(mu);
  cache.emplace(std::move(key), out);
  return out;
}

PolyFactorization factor_xn_minus_1(std::uint64_t q, unsigned n) { return factor_xn_minus_1(base_field(q), n); }

Poly expand(const PolyFactorization& f) {
  if (f.empty()) throw InvalidArgument("expand: empty factorization has no field");
  Poly r = Poly::one(f.front().base.field());
  for (const auto& [b, e] : f) r = r * pow(b, e);
  return r;
}

std::vector<DegreeClass> degree_distribution(std::uint64_t q, unsigned n) {
  const auto pp = PrimePower::from_q(q);
  const auto [t, u] = split_characteristic(pp.p, n);
  std::uint64_t mult = 1;
  for (unsigned i = 0; i < t; ++i) mult *= pp.p;
  std::map<unsigned, std::uint64_t> counts;
  for (std::uint64_t d : divisors(u)) {
    const std::uint64_t ord = multiplicative_order_mod(q, d);
    counts[static_cast<unsigned>(ord)] += euler_phi(d) / ord;
  }
  std::vector<DegreeClass> out;
  for (const auto& [deg, c] : counts) out.push_back({deg, c, mult});
  return out;
}

std::vector<DegreeClass> degree_distribution(const PolyFactorization& f) {
  std::map<unsigned, std::pair<std::uint64_t, std::uint64_t>> acc;
  for (const auto& [b, e] : f) {
    auto& slot = acc[static_cast<unsigned>(b.degree())];
    if (slot.first && slot.second != e) throw InvalidArgument("degree_distribution: mixed multiplicities");
    ++slot.first;
    slot.second = e;
  }
  std::vector<DegreeClass> out;
  for (const auto& [deg, cm] : acc) out.push_back({deg, cm.first, cm.second});
  return out;
}

bool closed_form_hypotheses(std::uint64_t q, unsigned n) {
  if (n < 1) return false;
  for (auto r : distinct_prime_factors(n)) {
    if ((q - 1) % r != 0) return false;
  }
  return n % 8 != 0 || q % 4 == 1;
}

std::optional<std::vector<DegreeClass>> degree_distribution_closed_form(std::uint64_t q, unsigned n) {
  if (!closed_form_hypotheses(q, n)) return std::nullopt;
  const std::uint64_t m = n / std::gcd<std::uint64_t>(n, q - 1);
  std::vector<DegreeClass> out;
  for (auto t : divisors(m)) {
    out.push_back({static_cast<unsigned>(t), euler_phi(t) * n / (t * m), 1});
  }
  return out;
}

BigInt phi_q_prime_power(std::uint64_t q, unsigned d, std::uint64_t e) {
  if (e == 0) return 1;
  return (ipow(BigInt(q), d) - 1) * ipow(BigInt(q), static_cast<unsigned>((e - 1) * d));
}

BigInt phi_q(const PolyFactorization& f) {
  BigInt r = 1;
  for (const auto& [b, e] : f) {
    if (b.is_zero()) throw InvalidArgument("phi_q of the zero polynomial");
    r *= phi_q_prime_power(b.fq().q(), static_cast<unsigned>(b.degree()), e);
  }
  return r;
}

int mu_q(const PolyFactorization& f) {
  int sign = 1;
  for (const auto& [b, e] : f) {
    if (b.is_zero()) throw InvalidArgument("mu_q of the zero polynomial");
    if (e > 1) return 0;
    if (e == 1) sign = -sign;
  }
  return sign;
}

BigInt squarefree_divisor_count(const PolyFactorization& f) {
  std::size_t k = 0;
  for (const auto& pf : f) k += pf.multiplicity > 0;
  return BigInt(1) << k;
}

BigInt divisor_count(const PolyFactorization& f) {
  BigInt r = 1;
  for (const auto& pf : f) r *= pf.multiplicity + 1;
  return r;
}

void for_each_divisor(const PolyFactorization& f,
                      const std::function<bool(const std::vector<unsigned>&, const Poly&)>& visit) {
  if (f.empty()) return;
  const FieldPtr& fld = f.front().base.field();
  std::vector<std::vector<Poly>> powers;
  for (const auto& [b, e] : f) {
    std::vector<Poly> pw{Poly::one(fld)};
    for (unsigned j = 1; j <= e; ++j) pw.push_back(pw.back() * b);
    powers.push_back(std::move(pw));
  }
  std::vector<unsigned> ex(f.size(), 0);
  for (;;) {
    Poly d = Poly::one(fld);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (ex[i]) d = d * powers[i][ex[i]];
    }
    if (!visit(ex, d)) return;
    std::size_t i = f.size();
    while (i-- > 0) {
      if (ex[i] < f[i].multiplicity) {
        ++ex[i];
        break;
      }
      ex[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace knormal
