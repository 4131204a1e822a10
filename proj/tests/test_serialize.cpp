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

#include <sstream>

#include "knormal/serialize.hpp"

using namespace knormal;

namespace {

void check_round_trip(const Json& j) {
  const std::string a = dump(j);
  CHECK(dump(Json::parse(a)) == a);
}

}  // namespace

TEST_CASE("census json") {
  auto j = to_json(enumerator_polynomial(2, 3));
  CHECK(dump(j) == R"({
  "q": 2,
  "n": 3,
  "counts": {
    "N_0": 3,
    "N_1": 3,
    "N_2": 1,
    "N_3": 1
  },
  "practical": true
})");
  check_round_trip(j);
  auto back = census_from_json(Json::parse(dump(j)));
  CHECK(back.coeffs == enumerator_polynomial(2, 3).coeffs);

  auto big = enumerator_polynomial(2, 80);
  auto jb = to_json(big);
  CHECK(jb["counts"]["N_0"].is_string());
  CHECK(jb["counts"]["N_80"].is_number());
  check_round_trip(jb);
  CHECK(census_from_json(jb).coeffs == big.coeffs);
}

TEST_CASE("big integers") {
  CHECK(big_to_json(BigInt(12)) == Json(12));
  CHECK(big_to_json(BigInt(1) << 64) == Json("18446744073709551616"));
  CHECK(big_from_json(Json("18446744073709551616")) == (BigInt(1) << 64));
  CHECK(big_from_json(Json(-3)) == -3);
  CHECK_THROWS_AS(big_from_json(Json(1.5)), InvalidArgument);
}

TEST_CASE("bounds json") {
  auto j = to_json(bounds_report(2, 8, 1));
  CHECK(j["sieve"] == "false");
  CHECK(j["tau"].get<double>() == doctest::Approx(0.0284).epsilon(0.005));
  check_round_trip(j);
  auto u = to_json(bounds_report(2, 127, 0, 16));
  CHECK(u["sieve"] == "unknown");
  CHECK(u["tau"].is_null());
  check_round_trip(u);
}

TEST_CASE("factorization json") {
  auto j = to_json(3, 4, factor_xn_minus_1(3, 4));
  REQUIRE(j["factors"].size() == 3);
  CHECK(j["factors"][2]["poly"] == "q=3:1,0,1");
  CHECK(j["factors"][2]["degree"] == 2);
  check_round_trip(j);
}

TEST_CASE("certificates rebuild their field") {
  for (auto [p, s, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{2, 1, 8}, {3, 2, 3}, {5, 1, 4}}) {
    auto ctx = make_field(p, s, n, kDefaultMaxCard, 1234);
    auto fact = group_order_factorization(ctx);
    auto out = find_primitive_k_normal(ctx, 1, fact);
    REQUIRE(out.found);
    auto j = to_json(ctx, 1, out, Strategy::Exhaustive, 1234);
    check_round_trip(j);
    const auto parsed = Json::parse(dump(j));
    auto rebuilt = field_from_json(parsed["field"]);
    CHECK(rebuilt.modulus() == ctx.modulus());
    CHECK(rebuilt.base() == ctx.base());
    FieldElement w{parsed["witness"].get<std::vector<Fq>>()};
    Certificate cert{parse_poly(parsed["fq_order"].get<std::string>(), rebuilt.base_ptr()),
                     big_from_json(parsed["mult_order"])};
    CHECK(verify_certificate(rebuilt, w, cert, fact));
  }
  auto f81 = make_field(3, 1, 4);
  auto none = find_primitive_k_normal(f81, 2, group_order_factorization(f81));
  auto j = to_json(f81, 2, none, Strategy::Exhaustive, kDefaultSeed);
  CHECK(j["witness"].is_null());
  CHECK(j["verified_absent"] == true);
}

TEST_CASE("survey csv") {
  const std::string csv = survey_csv(2, 4, 1, 3);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == kSurveyHeader);
  std::getline(in, line);
  CHECK(line == kSurveyColumns);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  // q in {2, 3, 4}, n in {1, 2, 3}: 2 + 3 + 4 rows per q
  CHECK(rows.size() == 27);
  CHECK(rows.front() == "2,1,0,1,true,false,,false,");
  CHECK(rows[3].rfind("2,2,1,1,true,", 0) == 0);
  CHECK(survey_csv(2, 4, 1, 3) == csv);
  CHECK_THROWS_AS(survey_csv(5, 4, 1, 2), InvalidArgument);
}
