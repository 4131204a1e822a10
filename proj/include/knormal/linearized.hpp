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

#ifndef KNORMAL_LINEARIZED_HPP
#define KNORMAL_LINEARIZED_HPP

// q-associates acting on F_{q^n}: (sum a_i x^i) o alpha = sum a_i alpha^{q^i}.

#include <vector>

#include "knormal/cyclotomic.hpp"
#include "knormal/field.hpp"

namespace knormal {

/// The F_q-order of an element: the monic generator of its annihilator ideal,
/// always a divisor of x^n - 1.
struct FqOrder {
  Poly poly;
  unsigned degree() const noexcept { return static_cast<unsigned>(poly.degree()); }
  friend bool operator==(const FqOrder&, const FqOrder&) = default;
};

/// alpha, alpha^q, ..., alpha^{q^{len-1}}
std::vector<FieldElement> frobenius_orbit(const FieldCtx& ctx, const FieldElement& a, std::size_t len);

/// L_f(alpha) for arbitrary f over the field's base.
FieldElement apply_q_associate(const FieldCtx& ctx, const Poly& f, const FieldElement& a);
/// Same, reusing an orbit of length >= min(deg f + 1, n).
FieldElement apply_q_associate(const FieldCtx& ctx, const Poly& f, const std::vector<FieldElement>& orbit);

/// Starts from x^n - 1 and strips each irreducible factor while the quotient
/// still annihilates alpha. `xn1` must be the factorization of x^n - 1 over ctx.base().
FqOrder fq_order(const FieldCtx& ctx, const FieldElement& a, const PolyFactorization& xn1);
FqOrder fq_order(const FieldCtx& ctx, const FieldElement& a);

/// k such that alpha is k-normal: n - deg(fq_order).
unsigned normality_index(const FieldCtx& ctx, const FieldElement& a, const PolyFactorization& xn1);
unsigned normality_index(const FieldCtx& ctx, const FieldElement& a);

/// F_q-rank of the matrix with rows alpha, alpha^q, ..., alpha^{q^{n-1}},
/// by Gaussian elimination. Independent of fq_order.
unsigned dim_check(const FieldCtx& ctx, const FieldElement& a);

/// Reusable state for per-element F_q-order computations over one field.
class FqOrderScanner {
 public:
  explicit FqOrderScanner(const FieldCtx& ctx);
  FqOrderScanner(const FieldCtx& ctx, PolyFactorization xn1);

  const PolyFactorization& xn_minus_one() const noexcept { return xn1_; }
  FqOrder fq_order(const FieldElement& a) const;
  unsigned normality_index(const FieldElement& a) const;

 private:
  const FieldCtx& ctx_;
  PolyFactorization xn1_;
  Poly xn_;
};

}  // namespace knormal

#endif  // KNORMAL_LINEARIZED_HPP
