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

#include "knormal/field.hpp"

namespace knormal {

FieldCtx::FieldCtx(FieldPtr base, unsigned n, std::uint64_t seed) : base_(std::move(base)), n_(n), h_(base_) {
  if (n_ < 1) throw InvalidArgument("extension degree must be >= 1");
  const std::uint64_t q = base_->q();
  if (n_ == 1) {
    h_ = Poly::monomial(base_, 1);
  } else {
    std::mt19937_64 rng(seed ^ (q * 0x2545f4914f6cdd1dULL) ^ (std::uint64_t{n_} << 40));
    for (;;) {
      std::vector<Fq> c(n_ + 1);
      for (unsigned i = 0; i < n_; ++i) c[i] = static_cast<Fq>(rng() % q);
      c[n_] = 1;
      if (c[0] == 0) continue;
      Poly cand(base_, std::move(c));
      if (is_irreducible(cand)) {
        h_ = std::move(cand);
        break;
      }
    }
  }
  card_ = ipow(BigInt(q), n_);
  init_frobenius();
}

FieldCtx::FieldCtx(Poly h) : base_(h.field()), n_(static_cast<unsigned>(std::max(h.degree(), 0))), h_(std::move(h)) {
  if (h_.degree() < 1 || !h_.is_monic()) throw InvalidArgument("field modulus must be monic of degree >= 1");
  if (!is_irreducible(h_)) throw InvalidArgument("field modulus is reducible over F_q");
  card_ = ipow(BigInt(base_->q()), n_);
  init_frobenius();
}

void FieldCtx::init_frobenius() {
  const Poly zq = powmod(Poly::monomial(base_, 1), BigInt(base_->q()), h_);
  frob_rows_.clear();
  frob_rows_.reserve(n_);
  Poly cur = Poly::one(base_);
  for (unsigned i = 0; i < n_; ++i) {
    FieldElement e = zero();
    for (std::size_t j = 0; j < cur.coeffs().size(); ++j) e.coeffs[j] = cur.coeffs()[j];
    frob_rows_.push_back(std::move(e));
    cur = (cur * zq) % h_;
  }
}

std::uint64_t FieldCtx::card_u64() const {
  if (card_ > (BigInt(1) << 63)) throw BudgetExceeded("card", "field too large for element indexing");
  return static_cast<std::uint64_t>(card_);
}

FieldElement FieldCtx::from_base(Fq c) const {
  FieldElement e = zero();
  e.coeffs[0] = c;
  return e;
}

FieldElement FieldCtx::generator() const {
  if (n_ == 1) return from_base(base_->neg(h_.coeffs()[0]));
  FieldElement e = zero();
  e.coeffs[1] = 1;
  return e;
}

bool FieldCtx::is_zero(const FieldElement& a) const noexcept {
  for (Fq c : a.coeffs) {
    if (c) return false;
  }
  return true;
}

bool FieldCtx::in_base(const FieldElement& a) const noexcept {
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i]) return false;
  }
  return true;
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = base_->add(r.coeffs[i], b.coeffs[i]);
  return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = base_->sub(r.coeffs[i], b.coeffs[i]);
  return r;
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
  FieldElement r = a;
  for (auto& c : r.coeffs) c = base_->neg(c);
  return r;
}

FieldElement FieldCtx::scale(const FieldElement& a, Fq c) const {
  FieldElement r = a;
  for (auto& x : r.coeffs) x = base_->mul(x, c);
  return r;
}

void FieldCtx::axpy(FieldElement& a, Fq c, const FieldElement& b) const {
  if (!c) return;
  for (unsigned i = 0; i < n_; ++i) a.coeffs[i] = base_->add(a.coeffs[i], base_->mul(c, b.coeffs[i]));
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  const BaseField& f = *base_;
  std::vector<Fq> t(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    const Fq x = a.coeffs[i];
    if (!x) continue;
    for (unsigned j = 0; j < n_; ++j) {
      if (b.coeffs[j]) t[i + j] = f.add(t[i + j], f.mul(x, b.coeffs[j]));
    }
  }
  const auto& h = h_.coeffs();
  for (std::size_t i = t.size(); i-- > n_;) {
    const Fq c = t[i];
    if (!c) continue;
    for (unsigned j = 0; j < n_; ++j) t[i - n_ + j] = f.sub(t[i - n_ + j], f.mul(c, h[j]));
  }
  t.resize(n_);
  return {std::move(t)};
}

FieldElement FieldCtx::pow(const FieldElement& a, const BigInt& e) const {
  if (e < 0) throw InvalidArgument("negative exponent");
  FieldElement r = one();
  if (e == 0) return r;
  const auto bits = boost::multiprecision::msb(e);
  for (std::size_t i = bits + 1; i-- > 0;) {
    r = mul(r, r);
    if (bit_test(e, static_cast<unsigned>(i))) r = mul(r, a);
  }
  return r;
}

FieldElement FieldCtx::pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

FieldElement FieldCtx::frobenius(const FieldElement& a) const {
  FieldElement r = zero();
  for (unsigned i = 0; i < n_; ++i) axpy(r, a.coeffs[i], frob_rows_[i]);
  return r;
}

std::uint64_t FieldCtx::index(const FieldElement& a) const {
  const std::uint64_t q = base_->q();
  std::uint64_t v = 0;
  for (unsigned i = n_; i-- > 0;) v = v * q + a.coeffs[i];
  return v;
}

FieldElement FieldCtx::element(std::uint64_t index) const {
  const std::uint64_t q = base_->q();
  FieldElement e = zero();
  for (unsigned i = 0; i < n_; ++i) {
    e.coeffs[i] = static_cast<Fq>(index % q);
    index /= q;
  }
  return e;
}

FieldElement FieldCtx::random(std::mt19937_64& rng) const {
  FieldElement e = zero();
  for (auto& c : e.coeffs) c = static_cast<Fq>(rng() % base_->q());
  return e;
}

void FieldCtx::check(const FieldElement& a) const {
  if (a.coeffs.size() != n_) throw InvalidArgument("element has wrong number of coordinates");
  for (Fq c : a.coeffs) {
    if (c >= base_->q()) throw InvalidArgument("element coordinate out of range");
  }
}

FieldCtx make_field(std::uint64_t p, unsigned s, unsigned n, std::uint64_t max_card, std::uint64_t seed) {
  const auto pp = PrimePower::from_parts(p, s);
  if (n < 1) throw InvalidArgument("extension degree must be >= 1");
  if (ipow(BigInt(pp.q), n) > max_card) {
    throw BudgetExceeded("max-card", "q^n = " + ipow(BigInt(pp.q), n).str() + " exceeds the size budget " +
                                         std::to_string(max_card));
  }
  return FieldCtx(seed == kDefaultSeed ? base_field(pp.q) : BaseField::make(pp, seed), n, seed);
}

BigInt mult_order(const FieldCtx& ctx, const FieldElement& a, const IntFactorization& fact) {
  ctx.check(a);
  if (ctx.is_zero(a)) throw InvalidArgument("multiplicative order of zero");
  const BigInt group = ctx.card() - 1;
  if (product(fact) != group) throw InvalidArgument("factorization does not match q^n - 1");
  const FieldElement one = ctx.one();
  BigInt e = group;
  for (const auto& [r, k] : fact) {
    e /= ipow(r, k);
    FieldElement b = ctx.pow(a, e);
    while (!(b == one)) {
      b = ctx.pow(b, r);
      e *= r;
    }
  }
  return e;
}

bool is_primitive(const FieldCtx& ctx, const FieldElement& a, const IntFactorization& fact) {
  ctx.check(a);
  if (ctx.is_zero(a)) throw InvalidArgument("primitivity of zero");
  const BigInt group = ctx.card() - 1;
  if (product(fact) != group) throw InvalidArgument("factorization does not match q^n - 1");
  const FieldElement one = ctx.one();
  for (const auto& f : fact) {
    if (ctx.pow(a, BigInt(group / f.prime)) == one) return false;
  }
  return true;
}

IntFactorization group_order_factorization(const FieldCtx& ctx, unsigned max_bits) {
  return factor_q_power_minus_one(ctx.q(), ctx.degree(), max_bits);
}

}  // namespace knormal
