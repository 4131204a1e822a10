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

#ifndef KNORMAL_POLY_HPP
#define KNORMAL_POLY_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knormal/base_field.hpp"

namespace knormal {

/// Dense polynomial over F_q, coefficients ascending, no trailing zeros.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Fq> coeffs);

  static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
  static Poly one(FieldPtr f) { return constant(std::move(f), 1); }
  static Poly constant(FieldPtr f, Fq c);
  /// c * x^k
  static Poly monomial(FieldPtr f, std::size_t k, Fq c = 1);
  /// x^n - 1
  static Poly xn_minus_one(FieldPtr f, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  const BaseField& fq() const noexcept { return *field_; }
  const std::vector<Fq>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Fq lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Fq operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  Poly monic() const;
  Fq eval(Fq x) const noexcept;
  Poly scaled(Fq c) const;
  /// f(x^m)
  Poly compose_power(std::size_t m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && *a.field_ == *b.field_; }
  /// Canonical order: degree first, then coefficients from the constant term up.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  void trim() noexcept;
  void require_same_field(const Poly& o) const;

  FieldPtr field_;
  std::vector<Fq> c_;
};

/// a = quot * b + rem with deg rem < deg b. Throws InvalidArgument when b is zero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly pow(const Poly& base, unsigned e);
Poly powmod(const Poly& base, const BigInt& e, const Poly& mod);
/// Ben-Or test: no factor of degree <= deg/2, via gcd(f, x^{q^i} - x).
bool is_irreducible(const Poly& f);

/// Text format "q=<q>:c0,c1,...,cd" (coefficients ascending as F_q indices).
/// The zero polynomial is "q=<q>:".
std::string format_poly(const Poly& f);
/// Parses format_poly output over the default-seed field for that q,
/// or over `field` when given (its q must match the header).
Poly parse_poly(std::string_view text, FieldPtr field = nullptr);
/// Human-readable form, e.g. "x^2 + 2*x + 1".
std::string pretty(const Poly& f);

}  // namespace knormal

#endif  // KNORMAL_POLY_HPP
