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

#include "knormal/census.hpp"
#include "knormal/search.hpp"
#include "oracles.hpp"

using namespace knormal;

namespace {

Poly P(const FieldPtr& f, std::vector<Fq> c) { return Poly(f, std::move(c)); }

std::vector<FieldCtx> small_fields() {
  return {make_field(2, 1, 3), make_field(2, 1, 4), make_field(2, 1, 6), make_field(3, 1, 3), make_field(3, 1, 4),
          make_field(2, 2, 3), make_field(5, 1, 2), make_field(2, 3, 2), make_field(3, 2, 2), make_field(2, 1, 1),
          make_field(5, 1, 1), make_field(7, 1, 2)};
}

// F_q-span dimension of the conjugates, computed by naive powering.
unsigned naive_index(const FieldCtx& ctx, const FieldElement& a) {
  return ctx.degree() - oracle::naive_conjugate_rank(ctx, a);
}

}  // namespace

TEST_CASE("find_normal") {
  auto f8 = make_field(2, 1, 3);
  auto fact = group_order_factorization(f8);
  auto ex = find_normal(f8);
  REQUIRE(ex.found);
  CHECK(naive_index(f8, *ex.witness) == 0);
  CHECK(ex.certificate->fq_order == Poly::xn_minus_one(f8.base_ptr(), 3));
  CHECK(verify_certificate(f8, *ex.witness, *ex.certificate, fact));

  SearchOptions rnd;
  rnd.strategy = Strategy::Random;
  rnd.seed = 7;
  auto r1 = find_normal(f8, rnd), r2 = find_normal(f8, rnd);
  REQUIRE(r1.found);
  CHECK(*r1.witness == *r2.witness);
  CHECK(naive_index(f8, *r1.witness) == 0);

  auto f4 = make_field(2, 1, 2);
  auto n4 = find_normal(f4);
  unsigned normals = 0;
  for (std::uint64_t i = 0; i < 4; ++i) normals += naive_index(f4, f4.element(i)) == 0;
  CHECK(normals == 2);
  CHECK(naive_index(f4, *n4.witness) == 0);

  auto f5 = make_field(5, 1, 1);
  auto n5 = find_normal(f5);
  CHECK_FALSE(f5.is_zero(*n5.witness));

  SearchOptions via;
  via.strategy = Strategy::ViaNormal;
  CHECK_THROWS_AS(find_normal(f8, via), InvalidArgument);
}

TEST_CASE("divisor_of_degree examples") {
  auto f3 = base_field(3);
  CHECK(divisor_of_degree(3, 4, 2) == P(f3, {1, 0, 1}));
  CHECK_FALSE(divisor_of_degree(2, 5, 2));
  auto f2 = base_field(2);
  CHECK(divisor_of_degree(2, 4, 3) == pow(P(f2, {1, 1}), 3));
  CHECK_FALSE(divisor_of_degree(2, 4, 3, true));
  CHECK(divisor_of_degree(2, 4, 0) == Poly::one(f2));
  CHECK(divisor_of_degree(2, 4, 4) == Poly::xn_minus_one(f2, 4));
  CHECK_FALSE(divisor_of_degree(2, 4, 5));
}

TEST_CASE("divisor_of_degree matches the first divisor in exponent order") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
    auto fq = base_field(q);
    for (unsigned n = 1; n <= 24; ++n) {
      const auto xn1 = factor_xn_minus_1(fq, n);
      const auto census = enumerator_polynomial(q, n);
      for (unsigned k = 0; k <= n; ++k) {
        for (bool unit : {false, true}) {
          std::optional<Poly> first;
          for_each_divisor(xn1, [&](const std::vector<unsigned>&, const Poly& f) {
            if (static_cast<unsigned>(f.degree()) != k || (unit && f.eval(1) == 0)) return true;
            first = f;
            return false;
          });
          const auto got = divisor_of_degree(fq, n, k, unit);
          CHECK(got.has_value() == first.has_value());
          if (got && first) CHECK(*got == *first);
          if (!unit) CHECK(got.has_value() == (census.count_k_normal(n - k) > 0));
        }
      }
    }
  }
}

TEST_CASE("divisor_of_degree agrees with trial division") {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 3}, {5, 4}}) {
    auto fq = base_field(q);
    const auto all = oracle::monic_divisors_xn1(fq, n);
    for (unsigned k = 0; k <= n; ++k) {
      bool any = false, any_unit = false;
      for (const auto& d : all) {
        if (static_cast<unsigned>(d.degree()) != k) continue;
        any = true;
        any_unit = any_unit || d.eval(1) != 0;
      }
      CHECK(divisor_of_degree(fq, n, k).has_value() == any);
      CHECK(divisor_of_degree(fq, n, k, true).has_value() == any_unit);
    }
  }
}

TEST_CASE("make_k_normal") {
  auto f8 = make_field(2, 1, 3);
  auto beta = *find_normal(f8).witness;
  auto f2 = f8.base_ptr();
  CHECK(make_k_normal(f8, beta, Poly::one(f2)) == beta);
  auto a = make_k_normal(f8, beta, P(f2, {1, 1}));
  CHECK(fq_order(f8, a).poly == P(f2, {1, 1, 1}));
  CHECK(naive_index(f8, a) == 1);
  CHECK(f8.is_zero(make_k_normal(f8, beta, Poly::xn_minus_one(f2, 3))));
  CHECK_THROWS_AS(make_k_normal(f8, f8.one(), P(f2, {1, 1})), InvalidArgument);
  CHECK_THROWS_AS(make_k_normal(f8, beta, P(f2, {1, 0, 1})), InvalidArgument);
  CHECK_THROWS_AS(make_k_normal(f8, beta, Poly::zero(f2)), InvalidArgument);
}

TEST_CASE("make_k_normal over every divisor") {
  for (const auto& ctx : small_fields()) {
    const auto beta = *find_normal(ctx).witness;
    const unsigned n = ctx.degree();
    const Poly xn = Poly::xn_minus_one(ctx.base_ptr(), n);
    for_each_divisor(factor_xn_minus_1(ctx.base_ptr(), n), [&](const std::vector<unsigned>&, const Poly& f) {
      auto a = make_k_normal(ctx, beta, f);
      CHECK(naive_index(ctx, a) == static_cast<unsigned>(f.degree()));
      // (x^n - 1)/f annihilates a, computed with naive q-th powers
      const Poly m = xn / f;
      FieldElement acc = ctx.zero(), conj = a;
      for (std::size_t i = 0; i < m.coeffs().size(); ++i) {
        acc = ctx.add(acc, ctx.scale(conj, m[i]));
        conj = oracle::naive_qth_power(ctx, conj);
      }
      CHECK(ctx.is_zero(acc));
      return true;
    });
  }
}

TEST_CASE("find_primitive_k_normal") {
  auto f8 = make_field(2, 1, 3);
  auto fact8 = group_order_factorization(f8);
  auto a = find_primitive_k_normal(f8, 0, fact8);
  REQUIRE(a.found);
  CHECK(a.certificate->mult_order == 7);
  CHECK(naive_index(f8, *a.witness) == 0);
  CHECK(verify_certificate(f8, *a.witness, *a.certificate, fact8));

  auto b = find_primitive_k_normal(f8, 1, fact8);
  REQUIRE(b.found);
  CHECK(b.certificate->fq_order == P(f8.base_ptr(), {1, 1, 1}));
  CHECK(oracle::naive_order(f8, *b.witness) == 7);

  auto none = find_primitive_k_normal(f8, 3, fact8);
  CHECK_FALSE(none.found);
  CHECK(none.verified_absent);

  auto f81 = make_field(3, 1, 4);
  auto c = find_primitive_k_normal(f81, 2, group_order_factorization(f81));
  CHECK_FALSE(c.found);
  CHECK(c.verified_absent);
  CHECK(c.trials == 80);

  SearchOptions rnd;
  rnd.strategy = Strategy::Random;
  auto d = find_primitive_k_normal(f8, 1, fact8, rnd);
  REQUIRE(d.found);
  CHECK(naive_index(f8, *d.witness) == 1);
  rnd.max_trials = 500;
  CHECK_THROWS_AS(find_primitive_k_normal(f81, 2, group_order_factorization(f81), rnd), BudgetExceeded);

  SearchOptions small;
  small.max_card = 16;
  CHECK_THROWS_AS(find_primitive_k_normal(f81, 0, group_order_factorization(f81), small), BudgetExceeded);
  CHECK_THROWS_AS(find_primitive_k_normal(f8, 0, group_order_factorization(f81)), InvalidArgument);
}

TEST_CASE("via_normal finds only what the exhaustive scan confirms") {
  SearchOptions via;
  via.strategy = Strategy::ViaNormal;
  via.per_divisor = 8;
  for (const auto& ctx : small_fields()) {
    const auto fact = group_order_factorization(ctx);
    for (unsigned k = 0; k <= ctx.degree(); ++k) {
      auto v = find_primitive_k_normal(ctx, k, fact, via);
      auto e = find_primitive_k_normal(ctx, k, fact);
      if (k < ctx.degree()) CHECK_FALSE(v.verified_absent);
      if (v.found) {
        CHECK(e.found);
        CHECK(naive_index(ctx, *v.witness) == k);
        CHECK(verify_certificate(ctx, *v.witness, *v.certificate, fact));
      }
      if (e.found) CHECK(verify_certificate(ctx, *e.witness, *e.certificate, fact));
      CHECK(e.found != e.verified_absent);
    }
  }
}

TEST_CASE("count_nf") {
  auto f8 = make_field(2, 1, 3);
  auto fact = group_order_factorization(f8);
  auto f2 = f8.base_ptr();
  CHECK(count_nf(f8, P(f2, {1, 1}), fact) == 3);
  CHECK(count_nf(f8, Poly::xn_minus_one(f2, 3), fact) == 0);
  for (const auto& ctx : small_fields()) {
    const auto fa = group_order_factorization(ctx);
    const std::uint64_t group = ctx.card_u64() - 1;
    std::uint64_t prim_normal = 0;
    for (std::uint64_t i = 1; i <= group; ++i) {
      auto w = ctx.element(i);
      prim_normal += naive_index(ctx, w) == 0 && oracle::naive_order(ctx, w) == group;
    }
    CHECK(count_nf(ctx, Poly::one(ctx.base_ptr()), fa) == prim_normal);
  }
  CHECK_THROWS_AS(count_nf(f8, P(f2, {1, 0, 1}), fact), InvalidArgument);
  CHECK_THROWS_AS(count_nf(f8, P(f2, {1, 1}), fact, 4), BudgetExceeded);
}

TEST_CASE("brute_force_census") {
  auto a = brute_force_census(make_field(2, 1, 3));
  CHECK(a.counts == std::vector<std::uint64_t>{3, 3, 1, 1});
  CHECK(a.max_order[1] == 7);
  CHECK(a.primitive[3] == 0);
  auto b = brute_force_census(make_field(3, 1, 2));
  CHECK(b.counts == std::vector<std::uint64_t>{4, 4, 1});
  auto c = brute_force_census(make_field(3, 1, 4));
  CHECK(c.max_order[2] == 16);
  CHECK(c.primitive[2] == 0);
  CHECK_THROWS_AS(brute_force_census(make_field(3, 1, 4), 64), BudgetExceeded);

  for (const auto& ctx : small_fields()) {
    const unsigned n = ctx.degree();
    auto r = brute_force_census(ctx);
    std::vector<std::uint64_t> counts(n + 1, 0), max_order(n + 1, 0), prim(n + 1, 0);
    const std::uint64_t group = ctx.card_u64() - 1;
    for (std::uint64_t i = 0; i < ctx.card_u64(); ++i) {
      auto w = ctx.element(i);
      const unsigned k = naive_index(ctx, w);
      ++counts[k];
      if (ctx.is_zero(w)) continue;
      const auto o = oracle::naive_order(ctx, w);
      max_order[k] = std::max(max_order[k], o);
      prim[k] += o == group;
    }
    CHECK(r.counts == counts);
    CHECK(r.max_order == max_order);
    CHECK(r.primitive == prim);
    auto threaded = brute_force_census(ctx, kDefaultMaxCard, 3);
    CHECK(threaded.counts == r.counts);
    CHECK(threaded.max_order == r.max_order);
    CHECK(threaded.primitive == r.primitive);
  }
}

TEST_CASE("strategy names") {
  for (auto s : {Strategy::Random, Strategy::Exhaustive, Strategy::ViaNormal}) CHECK(parse_strategy(to_string(s)) == s);
  CHECK_THROWS_AS(parse_strategy("greedy"), InvalidArgument);
}
