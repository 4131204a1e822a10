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

#include "doctest.h"

#include <map>
#include <random>

#include "knormal/linearized.hpp"
#include "oracles.hpp"

using namespace knormal;

namespace {

FieldElement find_cubic_root(const FieldCtx& f8) {
  for (std::uint64_t i = 0; i < 8; ++i) {
    auto b = f8.element(i);
    if (f8.pow(b, std::uint64_t{3}) == f8.add(b, f8.one())) return b;
  }
  FAIL("no root of x^3 + x + 1");
  return {};
}

Poly P(const FieldCtx& ctx, std::vector<Fq> c) { return Poly(ctx.base_ptr(), std::move(c)); }

std::vector<FieldCtx> small_fields() {
  return {make_field(2, 1, 3), make_field(2, 1, 4), make_field(2, 1, 6), make_field(3, 1, 3),
          make_field(3, 1, 4), make_field(2, 2, 3), make_field(5, 1, 2), make_field(2, 3, 2),
          make_field(3, 2, 2), make_field(7, 1, 2), make_field(2, 1, 1), make_field(5, 1, 1)};
}

}  // namespace

TEST_CASE("apply_q_associate") {
  auto f8 = make_field(2, 1, 3);
  const auto beta = find_cubic_root(f8);
  for (std::uint64_t i = 0; i < 8; ++i) {
    auto a = f8.element(i);
    CHECK(f8.is_zero(apply_q_associate(f8, Poly::xn_minus_one(f8.base_ptr(), 3), a)));
    CHECK(apply_q_associate(f8, P(f8, {0, 1}), a) == f8.frobenius(a));
    CHECK(apply_q_associate(f8, P(f8, {1, 0, 1}), a) ==
          apply_q_associate(f8, P(f8, {1, 1}), apply_q_associate(f8, P(f8, {1, 1}), a)));
  }
  // beta^4 = beta^2 + beta, i.e. (x^2 + x + 1) o beta = 0
  CHECK(f8.is_zero(apply_q_associate(f8, P(f8, {1, 1, 1}), beta)));
  CHECK(apply_q_associate(f8, Poly::zero(f8.base_ptr()), beta) == f8.zero());

  auto f9 = make_field(3, 1, 2);
  CHECK_THROWS_AS(apply_q_associate(f9, P(f8, {1}), f9.one()), InvalidArgument);
}

TEST_CASE("fq_order, normality_index and dim_check examples") {
  auto f8 = make_field(2, 1, 3);
  const auto beta = find_cubic_root(f8);
  const auto fb = f8.base_ptr();

  CHECK(fq_order(f8, f8.zero()).poly == Poly::one(fb));
  CHECK(fq_order(f8, f8.one()).poly == Poly(fb, {1, 1}));
  CHECK(fq_order(f8, beta).poly == Poly(fb, {1, 1, 1}));
  CHECK(fq_order(f8, f8.add(beta, f8.one())).poly == Poly::xn_minus_one(fb, 3));

  CHECK(normality_index(f8, f8.zero()) == 3);
  CHECK(normality_index(f8, beta) == 1);
  CHECK(normality_index(f8, f8.add(beta, f8.one())) == 0);

  CHECK(dim_check(f8, f8.zero()) == 0);
  CHECK(dim_check(f8, beta) == 2);
  CHECK(dim_check(f8, f8.add(beta, f8.one())) == 3);

  auto f81 = make_field(3, 1, 4);
  for (Fq c = 1; c < 3; ++c) {
    CHECK(fq_order(f81, f81.from_base(c)).poly == Poly(f81.base_ptr(), {2, 1}));
  }
}

TEST_CASE("dim_check equals deg fq_order and the naive rank, exhaustively") {
  for (const auto& ctx : small_fields()) {
    FqOrderScanner scan(ctx);
    for (std::uint64_t i = 0; i < ctx.card_u64(); ++i) {
      auto a = ctx.element(i);
      const auto ord = scan.fq_order(a);
      CHECK(ord == fq_order(ctx, a));
      CHECK(dim_check(ctx, a) == ord.degree());
      CHECK(oracle::naive_conjugate_rank(ctx, a) == ord.degree());
      CHECK(divides(ord.poly, Poly::xn_minus_one(ctx.base_ptr(), ctx.degree())));
      CHECK(ord.poly.is_monic());
    }
  }
}

TEST_CASE("annihilation iff the F_q-order divides") {
  std::mt19937_64 rng(3);
  for (const auto& ctx : small_fields()) {
    const auto xn = Poly::xn_minus_one(ctx.base_ptr(), ctx.degree());
    for (int trial = 0; trial < 100; ++trial) {
      auto a = ctx.random(rng);
      std::vector<Fq> c(rng() % (2 * ctx.degree() + 2));
      for (auto& x : c) x = static_cast<Fq>(rng() % ctx.q());
      const Poly f(ctx.base_ptr(), c);
      const bool zero = ctx.is_zero(apply_q_associate(ctx, f, a));
      CHECK(zero == divides(fq_order(ctx, a).poly, f % xn));
    }
  }
}

TEST_CASE("q-associates are additive and compose") {
  std::mt19937_64 rng(9);
  for (const auto& ctx : small_fields()) {
    const unsigned n = ctx.degree();
    const auto xn = Poly::xn_minus_one(ctx.base_ptr(), n);
    auto rand_poly = [&] {
      std::vector<Fq> c(n);
      for (auto& x : c) x = static_cast<Fq>(rng() % ctx.q());
      return Poly(ctx.base_ptr(), c);
    };
    for (int trial = 0; trial < 60; ++trial) {
      auto a = ctx.random(rng);
      auto f = rand_poly(), g = rand_poly();
      CHECK(apply_q_associate(ctx, f + g, a) ==
            ctx.add(apply_q_associate(ctx, f, a), apply_q_associate(ctx, g, a)));
      CHECK(apply_q_associate(ctx, (f * g) % xn, a) ==
            apply_q_associate(ctx, f, apply_q_associate(ctx, g, a)));
      CHECK(apply_q_associate(ctx, f * g, a) == apply_q_associate(ctx, g, apply_q_associate(ctx, f, a)));
    }
  }
}

TEST_CASE("each divisor h of x^n - 1 is the F_q-order of exactly Phi_q(h) elements") {
  for (const auto& ctx : small_fields()) {
    FqOrderScanner scan(ctx);
    std::map<std::vector<Fq>, std::uint64_t> hist;
    for (std::uint64_t i = 0; i < ctx.card_u64(); ++i) ++hist[scan.fq_order(ctx.element(i)).poly.coeffs()];
    const auto& f = scan.xn_minus_one();
    std::size_t divisors_seen = 0;
    for_each_divisor(f, [&](const std::vector<unsigned>& ex, const Poly& d) {
      PolyFactorization sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (ex[i]) sub.push_back({f[i].base, ex[i]});
      }
      CHECK(BigInt(hist[d.coeffs()]) == phi_q(sub));
      ++divisors_seen;
      return true;
    });
    CHECK(hist.size() == divisors_seen);
  }
}
