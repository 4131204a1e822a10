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

#include <random>

#include "knormal/cyclotomic.hpp"
#include "knormal/integer.hpp"
#include "oracles.hpp"

using namespace knormal;

namespace {

Poly P(std::uint64_t q, std::vector<Fq> c) { return Poly(base_field(q), std::move(c)); }

const std::vector<std::uint64_t> kSmallQ = {2, 3, 4, 5, 7, 8, 9};

Poly random_poly(const FieldPtr& f, std::mt19937_64& rng, unsigned max_deg) {
  std::vector<Fq> c(rng() % (max_deg + 1) + 1);
  for (auto& x : c) x = static_cast<Fq>(rng() % f->q());
  return Poly(f, std::move(c));
}

PolyFactorization sub_factorization(const PolyFactorization& f, const std::vector<unsigned>& ex) {
  PolyFactorization out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (ex[i]) out.push_back({f[i].base, ex[i]});
  }
  return out;
}

}  // namespace

TEST_CASE("poly arithmetic") {
  CHECK(gcd(P(3, {2, 0, 1}), P(3, {1, 0, 1})) == P(3, {1}));
  const Poly f = P(5, {3, 1, 2});
  CHECK(gcd(f, f) == f.monic());
  CHECK(f.monic().is_monic());
  CHECK(P(2, {1, 1}) * P(2, {1, 1}) == P(2, {1, 0, 1}));
  CHECK(P(3, {1, 2}).eval(1) == 0);
  CHECK(Poly::xn_minus_one(base_field(3), 4) == P(3, {2, 0, 0, 0, 1}));
  CHECK(P(3, {1, 1}).compose_power(3) == P(3, {1, 0, 0, 1}));
  CHECK(P(2, {0, 0}).is_zero());
  CHECK(P(2, {}).degree() == -1);
  CHECK_THROWS_AS(divrem(f, Poly::zero(base_field(5))), InvalidArgument);
  CHECK_THROWS_AS(P(3, {3}), InvalidArgument);
  CHECK_THROWS_AS(P(3, {1}) + P(5, {1}), InvalidArgument);
}

TEST_CASE("divrem and gcd properties") {
  std::mt19937_64 rng(11);
  for (auto q : kSmallQ) {
    auto fld = base_field(q);
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_poly(fld, rng, 9), b = random_poly(fld, rng, 5);
      if (b.is_zero()) continue;
      auto [quot, rem] = divrem(a, b);
      CHECK(quot * b + rem == a);
      CHECK(rem.degree() < b.degree());
      auto g = gcd(a, b);
      CHECK(g.is_monic());
      CHECK(divides(g, a));
      CHECK(divides(g, b));
    }
  }
}

TEST_CASE("poly text format") {
  CHECK(format_poly(P(3, {1, 0, 1})) == "q=3:1,0,1");
  CHECK(format_poly(Poly::zero(base_field(2))) == "q=2:");
  CHECK(parse_poly("q=3:1,0,1") == P(3, {1, 0, 1}));
  CHECK(pretty(P(3, {1, 2, 1})) == "x^2 + 2*x + 1");
  CHECK_THROWS_AS(parse_poly("3:1,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("q=6:1"), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("q=3:1,3"), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("q=3:1,0,"), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("q=3:1,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("q=3:1,x"), InvalidArgument);

  std::mt19937_64 rng(5);
  for (auto q : kSmallQ) {
    for (int trial = 0; trial < 50; ++trial) {
      auto f = random_poly(base_field(q), rng, 12);
      const auto text = format_poly(f);
      CHECK(parse_poly(text) == f);
      CHECK(format_poly(parse_poly(text)) == text);
    }
  }
}

TEST_CASE("factor_xn_minus_1 examples") {
  auto f34 = factor_xn_minus_1(3, 4);
  REQUIRE(f34.size() == 3);
  CHECK(f34[0] == PolyFactor{P(3, {1, 1}), 1});
  CHECK(f34[1] == PolyFactor{P(3, {2, 1}), 1});
  CHECK(f34[2] == PolyFactor{P(3, {1, 0, 1}), 1});

  auto f24 = factor_xn_minus_1(2, 4);
  REQUIRE(f24.size() == 1);
  CHECK(f24[0] == PolyFactor{P(2, {1, 1}), 4});

  auto f23 = factor_xn_minus_1(2, 3);
  REQUIRE(f23.size() == 2);
  CHECK(f23[0] == PolyFactor{P(2, {1, 1}), 1});
  CHECK(f23[1] == PolyFactor{P(2, {1, 1, 1}), 1});

  CHECK(factor_xn_minus_1(4, 3).size() == 3);  // 3 | 4 - 1
  CHECK_THROWS_AS(factor_xn_minus_1(2, 0), InvalidArgument);
}

TEST_CASE("factor_xn_minus_1 invariants") {
  for (auto q : kSmallQ) {
    auto fld = base_field(q);
    for (unsigned n = 1; n <= 40; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      auto f = factor_xn_minus_1(fld, n);
      CHECK(expand(f) == Poly::xn_minus_one(fld, n));
      unsigned total = 0;
      const bool coprime = n % fld->p() != 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(f[i].base.is_monic());
        CHECK(is_irreducible(f[i].base));
        if (i) CHECK(f[i - 1].base < f[i].base);
        total += static_cast<unsigned>(f[i].base.degree()) * f[i].multiplicity;
        CHECK((f[i].multiplicity == 1) == coprime);
      }
      CHECK(total == n);
    }
  }
}

TEST_CASE("factors are irreducible by trial division") {
  for (auto q : {2u, 3u, 4u}) {
    for (unsigned n = 1; n <= 15; ++n) {
      for (const auto& pf : factor_xn_minus_1(q, n)) {
        if (pf.base.degree() <= 8) CHECK(oracle::irreducible_by_trial(pf.base));
      }
    }
  }
}

TEST_CASE("degree_distribution") {
  CHECK(degree_distribution(7, 9) == std::vector<DegreeClass>{{1, 3, 1}, {3, 2, 1}});
  CHECK(degree_distribution(2, 3) == std::vector<DegreeClass>{{1, 1, 1}, {2, 1, 1}});
  CHECK(degree_distribution(2, 4) == std::vector<DegreeClass>{{1, 1, 4}});
  CHECK(degree_distribution(2, 5) == std::vector<DegreeClass>{{1, 1, 1}, {4, 1, 1}});
  CHECK(*degree_distribution_closed_form(7, 9) == degree_distribution(7, 9));
  CHECK_FALSE(degree_distribution_closed_form(3, 8).has_value());  // 8 | n, q = 3 mod 4
  CHECK_FALSE(degree_distribution_closed_form(2, 3).has_value());
}

TEST_CASE("degree_distribution agrees with explicit factors and the closed form") {
  for (auto q : kSmallQ) {
    for (unsigned n = 1; n <= 64; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      const auto dd = degree_distribution(q, n);
      CHECK(dd == degree_distribution(factor_xn_minus_1(q, n)));
      if (auto cf = degree_distribution_closed_form(q, n)) CHECK(*cf == dd);
    }
  }
}

TEST_CASE("phi_q, mu_q, W") {
  const PolyFactorization irr2{{P(2, {1, 1, 1}), 1}};
  const PolyFactorization sq{{P(2, {1, 1}), 2}};
  const auto x3 = factor_xn_minus_1(2, 3);
  CHECK(phi_q(irr2) == 3);
  CHECK(phi_q(sq) == 2);
  CHECK(phi_q(x3) == 3);
  CHECK(oracle::unit_count(P(2, {1, 0, 0, 1})) == 3);
  CHECK(oracle::unit_count(P(2, {1, 0, 1})) == 2);
  CHECK(mu_q(irr2) == -1);
  CHECK(mu_q(sq) == 0);
  CHECK(mu_q(x3) == 1);
  CHECK(mu_q({}) == 1);
  CHECK(phi_q({}) == 1);
  CHECK(squarefree_divisor_count(x3) == 4);
  CHECK(squarefree_divisor_count(factor_xn_minus_1(2, 8)) == 2);
}

TEST_CASE("phi_q matches unit counts on every divisor") {
  for (auto q : {2u, 3u, 4u, 5u}) {
    for (unsigned n = 1; q <= 3 ? n <= 8 : n <= 4; ++n) {
      const auto f = factor_xn_minus_1(q, n);
      for_each_divisor(f, [&](const std::vector<unsigned>& ex, const Poly& d) {
        CHECK(phi_q(sub_factorization(f, ex)) == oracle::unit_count(d));
        return true;
      });
    }
  }
}

TEST_CASE("divisor enumeration matches brute force and sums Phi_q to q^n") {
  for (auto q : kSmallQ) {
    for (unsigned n = 1; n <= 24; ++n) {
      const auto f = factor_xn_minus_1(q, n);
      std::vector<Poly> seen;
      std::vector<unsigned> prev;
      BigInt total = 0;
      for_each_divisor(f, [&](const std::vector<unsigned>& ex, const Poly& d) {
        if (!prev.empty()) CHECK(std::lexicographical_compare(prev.begin(), prev.end(), ex.begin(), ex.end()));
        prev = ex;
        seen.push_back(d);
        total += phi_q(sub_factorization(f, ex));
        return true;
      });
      CHECK(BigInt(seen.size()) == divisor_count(f));
      CHECK(total == ipow(BigInt(q), n));
      if (ipow(BigInt(q), n) <= 4096) {
        auto brute = oracle::monic_divisors_xn1(base_field(q), n);
        std::sort(brute.begin(), brute.end());
        std::sort(seen.begin(), seen.end());
        CHECK(brute == seen);
      }
    }
  }
}
