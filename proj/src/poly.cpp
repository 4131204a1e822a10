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

#include "knormal/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace knormal {

Poly::Poly(FieldPtr field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Fq c : c_) {
    if (c >= field_->q()) throw InvalidArgument("polynomial coefficient out of range for F_q");
  }
  trim();
}

Poly Poly::constant(FieldPtr f, Fq c) { return Poly(std::move(f), {c}); }

Poly Poly::monomial(FieldPtr f, std::size_t k, Fq c) {
  std::vector<Fq> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(f), std::move(v));
}

Poly Poly::xn_minus_one(FieldPtr f, std::size_t n) {
  std::vector<Fq> v(n + 1, 0);
  v[0] = f->neg(1);
  v[n] = f->add(v[n], 1);
  return Poly(std::move(f), std::move(v));
}

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    throw InvalidArgument("polynomials over different realizations of F_q");
  }
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

Fq Poly::eval(Fq x) const noexcept {
  Fq r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::scaled(Fq c) const {
  std::vector<Fq> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::compose_power(std::size_t m) const {
  if (m == 0) throw InvalidArgument("compose_power: exponent must be positive");
  if (is_zero()) return *this;
  std::vector<Fq> v((c_.size() - 1) * m + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * m] = c_[i];
  return Poly(field_, std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const BaseField& f = *a.field_;
  std::vector<Fq> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(a.field_, std::move(v));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const BaseField& f = b.fq();
  if (a.degree() < b.degree()) return {Poly(b.field()), a};
  std::vector<Fq> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Fq> quot(r.size() - db, 0);
  const Fq inv_lead = f.inv(d.back());
  for (std::size_t i = r.size(); i-- > db;) {
    const Fq c = f.mul(r[i], inv_lead);
    quot[i - db] = c;
    if (!c) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, d[j]));
  }
  r.resize(db);
  return {Poly(b.field(), std::move(quot)), Poly(b.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow(const Poly& base, unsigned e) {
  Poly r = Poly::one(base.field());
  Poly b = base;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& mod) {
  Poly r = Poly::one(base.field()) % mod;
  Poly b = base % mod;
  if (e <= 0) return r;
  const auto bits = boost::multiprecision::msb(e);
  for (std::size_t i = bits + 1; i-- > 0;) {
    r = (r * r) % mod;
    if (bit_test(e, static_cast<unsigned>(i))) r = (r * b) % mod;
  }
  return r;
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x = Poly::monomial(f.field(), 1);
  const BigInt q = f.fq().q();
  Poly xq = x;
  for (int i = 1; i <= n / 2; ++i) {
    xq = powmod(xq, q, f);
    if (gcd(f, xq - x).degree() > 0) return false;
  }
  return true;
}

std::string format_poly(const Poly& f) {
  std::string out = "q=" + std::to_string(f.fq().q()) + ":";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.coeffs()[i]);
  }
  return out;
}

Poly parse_poly(std::string_view text, FieldPtr field) {
  auto fail = [&](const std::string& why) {
    return InvalidArgument("bad polynomial text '" + std::string(text) + "': " + why);
  };
  if (text.substr(0, 2) != "q=") throw fail("missing q= header");
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw fail("missing ':'");
  std::uint64_t q = 0;
  auto hdr = text.substr(2, colon - 2);
  if (auto [p, ec] = std::from_chars(hdr.data(), hdr.data() + hdr.size(), q); ec != std::errc() ||
                                                                             p != hdr.data() + hdr.size()) {
    throw fail("bad q");
  }
  if (!field) field = base_field(q);
  if (field->q() != q) throw fail("q does not match the supplied field");
  std::vector<Fq> c;
  auto body = text.substr(colon + 1);
  while (!body.empty()) {
    const auto comma = body.find(',');
    auto tok = body.substr(0, comma);
    std::uint64_t v = 0;
    if (auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v); ec != std::errc() ||
                                                                               p != tok.data() + tok.size()) {
      throw fail("bad coefficient '" + std::string(tok) + "'");
    }
    if (v >= q) throw fail("coefficient out of range");
    c.push_back(static_cast<Fq>(v));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (body.empty()) throw fail("trailing comma");
  }
  if (!c.empty() && c.back() == 0) throw fail("non-canonical trailing zero");
  return Poly(field, std::move(c));
}

std::string pretty(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Fq c = f.coeffs()[i];
    if (!c) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace knormal
