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

#ifndef KNORMAL_BASE_FIELD_HPP
#define KNORMAL_BASE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "knormal/common.hpp"

namespace knormal {

/// q = p^s with p prime.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned s = 0;
  std::uint64_t q = 0;

  /// Validates p (trial division) and that q stays below 2^32.
  static PrimePower from_parts(std::uint64_t p, unsigned s);
  /// Throws InvalidArgument if q is not a prime power.
  static PrimePower from_q(std::uint64_t q);

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An element of F_q, stored as the integer whose base-p digits are the
/// coefficients of its residue modulo g (ascending powers of y).
using Fq = std::uint32_t;

/// F_q realized as F_p[y]/(g). Immutable once built; share through FieldPtr.
class BaseField {
 public:
  /// Picks g by seeded sampling plus an irreducibility test.
  static std::shared_ptr<const BaseField> make(PrimePower pp, std::uint64_t seed = kDefaultSeed);
  /// Uses the given monic modulus (ascending F_p coefficients, degree s). Checked for irreducibility.
  static std::shared_ptr<const BaseField> with_modulus(std::uint64_t p, std::vector<std::uint32_t> g);

  const PrimePower& prime_power() const noexcept { return pp_; }
  std::uint64_t p() const noexcept { return pp_.p; }
  unsigned s() const noexcept { return pp_.s; }
  std::uint64_t q() const noexcept { return pp_.q; }
  /// Monic modulus g over F_p, ascending; for s = 1 this is y.
  const std::vector<std::uint32_t>& modulus() const noexcept { return g_; }

  Fq zero() const noexcept { return 0; }
  Fq one() const noexcept { return 1; }
  /// Image of an integer under Z -> F_p -> F_q.
  Fq from_int(std::int64_t v) const noexcept;

  Fq add(Fq a, Fq b) const noexcept {
    if (pp_.s == 1) {
      std::uint64_t r = std::uint64_t{a} + b;
      return static_cast<Fq>(r >= pp_.p ? r - pp_.p : r);
    }
    if (!add_table_.empty()) return add_table_[std::size_t{a} * pp_.q + b];
    return add_digits(a, b, false);
  }
  Fq sub(Fq a, Fq b) const noexcept {
    if (pp_.s == 1) return static_cast<Fq>(a >= b ? a - b : a + pp_.p - b);
    if (!add_table_.empty()) return add_table_[std::size_t{a} * pp_.q + neg_table_[b]];
    return add_digits(a, b, true);
  }
  Fq neg(Fq a) const noexcept {
    if (pp_.s == 1) return static_cast<Fq>(a == 0 ? 0 : pp_.p - a);
    if (!neg_table_.empty()) return neg_table_[a];
    return add_digits(0, a, true);
  }
  Fq mul(Fq a, Fq b) const noexcept {
    if (pp_.s == 1) return static_cast<Fq>(std::uint64_t{a} * b % pp_.p);
    if (!mul_table_.empty()) return mul_table_[std::size_t{a} * pp_.q + b];
    return mul_digits(a, b);
  }
  /// Throws InvalidArgument for 0.
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const noexcept;

  std::vector<std::uint32_t> digits(Fq a) const;
  Fq from_digits(std::span<const std::uint32_t> d) const;

  /// Same characteristic, degree and modulus.
  friend bool operator==(const BaseField& a, const BaseField& b) { return a.pp_ == b.pp_ && a.g_ == b.g_; }

 private:
  BaseField(PrimePower pp, std::vector<std::uint32_t> g);
  Fq add_digits(Fq a, Fq b, bool subtract) const noexcept;
  Fq mul_digits(Fq a, Fq b) const noexcept;

  PrimePower pp_;
  std::vector<std::uint32_t> g_;
  // Operation tables are built only for s > 1 and q <= kTableLimit.
  std::vector<std::uint16_t> add_table_, mul_table_, neg_table_, inv_table_;
  static constexpr std::uint64_t kTableLimit = 1024;
};

using FieldPtr = std::shared_ptr<const BaseField>;

/// Memoized BaseField::make(PrimePower::from_q(q), seed).
FieldPtr base_field(std::uint64_t q, std::uint64_t seed = kDefaultSeed);

}  // namespace knormal

#endif  // KNORMAL_BASE_FIELD_HPP
