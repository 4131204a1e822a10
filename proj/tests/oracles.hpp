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

#ifndef KNORMAL_TESTS_ORACLES_HPP
#define KNORMAL_TESTS_ORACLES_HPP

// Brute-force reference computations. These deliberately avoid the library's
// Frobenius matrix, cyclotomic factorization and order-reduction paths; they
// only reuse ring arithmetic (FieldCtx::mul/add, Poly divrem).

#include <cstdint>
#include <map>
#include <vector>

#include "knormal/field.hpp"
#include "knormal/poly.hpp"

namespace knormal::oracle {

/// Least e >= 1 with a^e = 1, by stepping.
inline std::uint64_t naive_order(const FieldCtx& ctx, const FieldElement& a) {
  const FieldElement one = ctx.one();
  FieldElement x = a;
  std::uint64_t e = 1;
  while (!(x == one)) {
    x = ctx.mul(x, a);
    ++e;
  }
  return e;
}

/// a^q by repeated multiplication.
inline FieldElement naive_qth_power(const FieldCtx& ctx, const FieldElement& a) {
  FieldElement r = ctx.one();
  for (std::uint64_t i = 0; i < ctx.q(); ++i) r = ctx.mul(r, a);
  return r;
}

/// Rank of {a, a^q, ..., a^{q^{n-1}}} computed from naive powers.
inline unsigned naive_conjugate_rank(const FieldCtx& ctx, const FieldElement& a) {
  const BaseField& f = ctx.base();
  const unsigned n = ctx.degree();
  std::vector<std::vector<Fq>> m;
  FieldElement c = a;
  for (unsigned i = 0; i < n; ++i) {
    m.push_back(c.coeffs);
    c = naive_qth_power(ctx, c);
  }
  unsigned rank = 0;
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = rank;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const Fq inv = f.inv(m[rank][col]);
    for (unsigned r = 0; r < n; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Fq factor = f.mul(m[r][col], inv);
      for (unsigned j = 0; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

/// N_k for k = 0..n by scanning the field with naive_conjugate_rank.
inline std::vector<std::uint64_t> naive_census(const FieldCtx& ctx) {
  std::vector<std::uint64_t> counts(ctx.degree() + 1, 0);
  const std::uint64_t card = ctx.card_u64();
  for (std::uint64_t i = 0; i < card; ++i) ++counts[ctx.degree() - naive_conjugate_rank(ctx, ctx.element(i))];
  return counts;
}

/// Every monic polynomial of exactly degree d over F_q.
inline std::vector<Poly> all_monic(const FieldPtr& f, unsigned d) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= f->q();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Fq> c(d + 1);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = static_cast<Fq>(v % f->q());
      v /= f->q();
    }
    c[d] = 1;
    out.emplace_back(f, std::move(c));
  }
  return out;
}

/// All monic divisors of x^n - 1, found by trial division over all monic polynomials.
inline std::vector<Poly> monic_divisors_xn1(const FieldPtr& f, unsigned n) {
  const Poly xn = Poly::xn_minus_one(f, n);
  std::vector<Poly> out;
  for (unsigned d = 0; d <= n; ++d) {
    for (auto& cand : all_monic(f, d)) {
      if ((xn % cand).is_zero()) out.push_back(std::move(cand));
    }
  }
  return out;
}

/// |(F_q[x]/(f))^*| by counting residues coprime to f.
inline std::uint64_t unit_count(const Poly& f) {
  const unsigned d = static_cast<unsigned>(f.degree());
  std::uint64_t count = 0;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= f.fq().q();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Fq> c(d);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = static_cast<Fq>(v % f.fq().q());
      v /= f.fq().q();
    }
    // gcd(0, f) = f, so zero counts only in the zero ring F_q[x]/(1)
    if (gcd(Poly(f.field(), std::move(c)), f).degree() == 0) ++count;
  }
  return count;
}

/// Irreducibility by trial division with every monic polynomial of degree <= deg/2.
inline bool irreducible_by_trial(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    for (const auto& g : all_monic(f.field(), static_cast<unsigned>(d))) {
      if ((f % g).is_zero()) return false;
    }
  }
  return true;
}

/// Subset sums over integer x^n - 1 = prod_{d | n} Phi_d(x): degrees phi(d).
inline bool phi_practical(unsigned n) {
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    unsigned phi = 0;
    for (unsigned k = 1; k <= d; ++k) {
      unsigned a = k, b = d;
      while (b) {
        unsigned t = a % b;
        a = b;
        b = t;
      }
      phi += a == 1;
    }
    for (unsigned s = n + 1; s-- > phi;) reach[s] |= reach[s - phi];
  }
  for (unsigned s = 0; s <= n; ++s) {
    if (!reach[s]) return false;
  }
  return true;
}

}  // namespace knormal::oracle

#endif  // KNORMAL_TESTS_ORACLES_HPP
