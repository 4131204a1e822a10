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

#include "knormal/base_field.hpp"

#include <map>
#include <mutex>
#include <random>

#include "knormal/integer.hpp"
#include "knormal/poly.hpp"

namespace knormal {

PrimePower PrimePower::from_parts(std::uint64_t p, unsigned s) {
  if (p >= kTrialDivisionPrimalityLimit || !is_prime_u64(p)) {
    throw InvalidArgument("characteristic " + std::to_string(p) + " is not a prime below 2^32");
  }
  if (s < 1) throw InvalidArgument("prime power exponent must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= p;
    if (q >= (std::uint64_t{1} << 32)) throw BudgetExceeded("q", "q = p^s must stay below 2^32");
  }
  return {p, s, q};
}

PrimePower PrimePower::from_q(std::uint64_t q) {
  auto [p, s] = prime_power_decompose(q);
  if (p == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return from_parts(p, s);
}

BaseField::BaseField(PrimePower pp, std::vector<std::uint32_t> g) : pp_(pp), g_(std::move(g)) {
  if (pp_.s == 1 || pp_.q > kTableLimit) return;
  const std::size_t q = pp_.q;
  add_table_.resize(q * q);
  mul_table_.resize(q * q);
  neg_table_.resize(q);
  inv_table_.resize(q);
  for (std::size_t a = 0; a < q; ++a) {
    neg_table_[a] = static_cast<std::uint16_t>(add_digits(0, static_cast<Fq>(a), true));
    for (std::size_t b = 0; b < q; ++b) {
      add_table_[a * q + b] = static_cast<std::uint16_t>(add_digits(static_cast<Fq>(a), static_cast<Fq>(b), false));
      const Fq m = mul_digits(static_cast<Fq>(a), static_cast<Fq>(b));
      mul_table_[a * q + b] = static_cast<std::uint16_t>(m);
      if (m == 1) inv_table_[a] = static_cast<std::uint16_t>(b);
    }
  }
}

std::shared_ptr<const BaseField> BaseField::make(PrimePower pp, std::uint64_t seed) {
  if (pp.s == 1) return std::shared_ptr<const BaseField>(new BaseField(pp, {0, 1}));
  auto prime = make(PrimePower::from_parts(pp.p, 1), seed);
  std::mt19937_64 rng(seed ^ (pp.q * 0x9e3779b97f4a7c15ULL));
  for (;;) {
    std::vector<Fq> c(pp.s + 1);
    for (unsigned i = 0; i < pp.s; ++i) c[i] = static_cast<Fq>(rng() % pp.p);
    c[pp.s] = 1;
    if (c[0] == 0) continue;
    Poly g(prime, c);
    if (is_irreducible(g)) return std::shared_ptr<const BaseField>(new BaseField(pp, std::move(c)));
  }
}

std::shared_ptr<const BaseField> BaseField::with_modulus(std::uint64_t p, std::vector<std::uint32_t> g) {
  if (g.size() < 2 || g.back() != 1) throw InvalidArgument("modulus must be monic of degree >= 1");
  const auto pp = PrimePower::from_parts(p, static_cast<unsigned>(g.size() - 1));
  for (auto c : g) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  if (pp.s == 1) return make(pp);
  auto prime = make(PrimePower::from_parts(p, 1));
  if (!is_irreducible(Poly(prime, g))) throw InvalidArgument("modulus is reducible over F_p");
  return std::shared_ptr<const BaseField>(new BaseField(pp, std::move(g)));
}

Fq BaseField::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(pp_.p);
  return static_cast<Fq>(((v % p) + p) % p);
}

Fq BaseField::inv(Fq a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in F_q");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, pp_.q - 2);
}

Fq BaseField::pow(Fq a, std::uint64_t e) const noexcept {
  Fq r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> BaseField::digits(Fq a) const {
  std::vector<std::uint32_t> d(pp_.s);
  for (unsigned i = 0; i < pp_.s; ++i) {
    d[i] = static_cast<std::uint32_t>(a % pp_.p);
    a = static_cast<Fq>(a / pp_.p);
  }
  return d;
}

Fq BaseField::from_digits(std::span<const std::uint32_t> d) const {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * pp_.p + d[i] % pp_.p;
  return static_cast<Fq>(v);
}

Fq BaseField::add_digits(Fq a, Fq b, bool subtract) const noexcept {
  const std::uint64_t p = pp_.p;
  std::uint64_t out = 0, place = 1;
  for (unsigned i = 0; i < pp_.s; ++i) {
    const std::uint64_t x = a % p, y = b % p;
    a = static_cast<Fq>(a / p);
    b = static_cast<Fq>(b / p);
    const std::uint64_t r = subtract ? (x + p - y) % p : (x + y) % p;
    out += r * place;
    place *= p;
  }
  return static_cast<Fq>(out);
}

Fq BaseField::mul_digits(Fq a, Fq b) const noexcept {
  const std::uint64_t p = pp_.p;
  const unsigned s = pp_.s;
  std::vector<std::uint64_t> x(s), y(s), prod(2 * s - 1, 0);
  for (unsigned i = 0; i < s; ++i) {
    x[i] = a % p;
    a = static_cast<Fq>(a / p);
    y[i] = b % p;
    b = static_cast<Fq>(b / p);
  }
  for (unsigned i = 0; i < s; ++i) {
    if (!x[i]) continue;
    for (unsigned j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  // g is monic: y^s = -sum g_j y^j
  for (std::size_t i = prod.size(); i-- > s;) {
    const std::uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < s; ++j) prod[i - s + j] = (prod[i - s + j] + (p - c) * g_[j]) % p;
  }
  std::uint64_t out = 0;
  for (unsigned i = s; i-- > 0;) out = out * p + prod[i];
  return static_cast<Fq>(out);
}

FieldPtr base_field(std::uint64_t q, std::uint64_t seed) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{q, seed}];
  if (!slot) slot = BaseField::make(PrimePower::from_q(q), seed);
  return slot;
}

}  // namespace knormal
