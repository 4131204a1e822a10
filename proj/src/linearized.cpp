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

#include "knormal/linearized.hpp"

namespace knormal {

namespace {

void require_base(const FieldCtx& ctx, const Poly& f) {
  if (f.field() != ctx.base_ptr() && !(f.fq() == ctx.base())) {
    throw InvalidArgument("polynomial is over a different realization of F_q than the field");
  }
}

FqOrder strip(const FieldCtx& ctx, const PolyFactorization& xn1, Poly h, const std::vector<FieldElement>& orbit) {
  for (const auto& [f, e] : xn1) {
    for (unsigned j = 0; j < e; ++j) {
      Poly cand = h / f;
      if (!ctx.is_zero(apply_q_associate(ctx, cand, orbit))) break;
      h = std::move(cand);
    }
  }
  return {std::move(h)};
}

}  // namespace

std::vector<FieldElement> frobenius_orbit(const FieldCtx& ctx, const FieldElement& a, std::size_t len) {
  std::vector<FieldElement> out;
  out.reserve(len);
  if (len == 0) return out;
  out.push_back(a);
  while (out.size() < len) out.push_back(ctx.frobenius(out.back()));
  return out;
}

FieldElement apply_q_associate(const FieldCtx& ctx, const Poly& f, const std::vector<FieldElement>& orbit) {
  const std::size_t n = ctx.degree();
  const auto& c = f.coeffs();
  if (orbit.size() < std::min(c.size(), n)) throw InvalidArgument("apply_q_associate: orbit too short");
  FieldElement r = ctx.zero();
  for (std::size_t i = 0; i < c.size(); ++i) ctx.axpy(r, c[i], orbit[i % n]);
  return r;
}

FieldElement apply_q_associate(const FieldCtx& ctx, const Poly& f, const FieldElement& a) {
  ctx.check(a);
  require_base(ctx, f);
  const std::size_t len = std::min<std::size_t>(f.coeffs().size(), ctx.degree());
  return apply_q_associate(ctx, f, frobenius_orbit(ctx, a, len));
}

FqOrder fq_order(const FieldCtx& ctx, const FieldElement& a, const PolyFactorization& xn1) {
  ctx.check(a);
  return strip(ctx, xn1, Poly::xn_minus_one(ctx.base_ptr(), ctx.degree()), frobenius_orbit(ctx, a, ctx.degree()));
}

FqOrder fq_order(const FieldCtx& ctx, const FieldElement& a) {
  return fq_order(ctx, a, factor_xn_minus_1(ctx.base_ptr(), ctx.degree()));
}

unsigned normality_index(const FieldCtx& ctx, const FieldElement& a, const PolyFactorization& xn1) {
  return ctx.degree() - fq_order(ctx, a, xn1).degree();
}

unsigned normality_index(const FieldCtx& ctx, const FieldElement& a) {
  return ctx.degree() - fq_order(ctx, a).degree();
}

unsigned dim_check(const FieldCtx& ctx, const FieldElement& a) {
  ctx.check(a);
  const BaseField& f = ctx.base();
  const unsigned n = ctx.degree();
  std::vector<FieldElement> rows = frobenius_orbit(ctx, a, n);
  unsigned rank = 0;
  for (unsigned col = 0; col < n && rank < n; ++col) {
    unsigned piv = rank;
    while (piv < n && rows[piv].coeffs[col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[rank]);
    const Fq inv = f.inv(rows[rank].coeffs[col]);
    for (unsigned r = rank + 1; r < n; ++r) {
      const Fq c = rows[r].coeffs[col];
      if (c) ctx.axpy(rows[r], f.neg(f.mul(c, inv)), rows[rank]);
    }
    ++rank;
  }
  return rank;
}

FqOrderScanner::FqOrderScanner(const FieldCtx& ctx)
    : FqOrderScanner(ctx, factor_xn_minus_1(ctx.base_ptr(), ctx.degree())) {}

FqOrderScanner::FqOrderScanner(const FieldCtx& ctx, PolyFactorization xn1)
    : ctx_(ctx), xn1_(std::move(xn1)), xn_(Poly::xn_minus_one(ctx.base_ptr(), ctx.degree())) {}

FqOrder FqOrderScanner::fq_order(const FieldElement& a) const {
  return strip(ctx_, xn1_, xn_, frobenius_orbit(ctx_, a, ctx_.degree()));
}

unsigned FqOrderScanner::normality_index(const FieldElement& a) const {
  return ctx_.degree() - fq_order(a).degree();
}

}  // namespace knormal
