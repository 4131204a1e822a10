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

#ifndef KNORMAL_FIELD_HPP
#define KNORMAL_FIELD_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "knormal/base_field.hpp"
#include "knormal/integer.hpp"
#include "knormal/poly.hpp"

namespace knormal {

/// Element of F_{q^n} = F_q[z]/(h): exactly n coordinates over F_q, ascending in z.
struct FieldElement {
  std::vector<Fq> coeffs;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// The tower F_p ⊂ F_q ⊂ F_{q^n}. Immutable after construction and safe to share
/// across threads.
class FieldCtx {
 public:
  /// Extension of degree n over `base` with a seeded random irreducible modulus.
  /// No size budget is applied; see make_field for the budgeted entry point.
  FieldCtx(FieldPtr base, unsigned n, std::uint64_t seed = kDefaultSeed);
  /// Extension defined by the given monic irreducible h (checked).
  explicit FieldCtx(Poly h);

  const BaseField& base() const noexcept { return *base_; }
  const FieldPtr& base_ptr() const noexcept { return base_; }
  std::uint64_t q() const noexcept { return base_->q(); }
  unsigned degree() const noexcept { return n_; }
  const Poly& modulus() const noexcept { return h_; }
  /// q^n
  const BigInt& card() const noexcept { return card_; }
  /// q^n as a machine integer; throws BudgetExceeded beyond 2^63.
  std::uint64_t card_u64() const;

  FieldElement zero() const { return {std::vector<Fq>(n_, 0)}; }
  FieldElement one() const { return from_base(1); }
  FieldElement from_base(Fq c) const;
  /// The class of z.
  FieldElement generator() const;
  bool is_zero(const FieldElement& a) const noexcept;
  bool in_base(const FieldElement& a) const noexcept;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const FieldElement& a, Fq c) const;
  /// a += c * b
  void axpy(FieldElement& a, Fq c, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, const BigInt& e) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;

  /// a^q, computed as an F_q-linear map from a precomputed matrix.
  FieldElement frobenius(const FieldElement& a) const;

  /// Bijection with [0, q^n): coordinate i is base-q digit i.
  std::uint64_t index(const FieldElement& a) const;
  FieldElement element(std::uint64_t index) const;
  FieldElement random(std::mt19937_64& rng) const;

  /// Throws InvalidArgument unless a is canonical in this field.
  void check(const FieldElement& a) const;

 private:
  void init_frobenius();

  FieldPtr base_;
  unsigned n_ = 0;
  Poly h_;
  BigInt card_;
  std::vector<FieldElement> frob_rows_;  // z^{q i} mod h
};

/// Budgeted constructor for F_{q^n} with q = p^s. Throws InvalidArgument on a
/// non-prime p or zero degree, BudgetExceeded when q^n > max_card.
FieldCtx make_field(std::uint64_t p, unsigned s, unsigned n, std::uint64_t max_card = kDefaultMaxCard,
                    std::uint64_t seed = kDefaultSeed);

/// Multiplicative order of a nonzero element, by exponent reduction over the
/// factorization of q^n - 1 (which is checked against the field).
BigInt mult_order(const FieldCtx& ctx, const FieldElement& a, const IntFactorization& fact);
bool is_primitive(const FieldCtx& ctx, const FieldElement& a, const IntFactorization& fact);

/// Factorization of |F_{q^n}^*| = q^n - 1 for this field.
IntFactorization group_order_factorization(const FieldCtx& ctx, unsigned max_bits = kDefaultFactorBits);

}  // namespace knormal

#endif  // KNORMAL_FIELD_HPP
