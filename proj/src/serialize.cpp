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

#include "knormal/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "knormal/integer.hpp"

namespace knormal {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json real(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidArgument("expected an integer");
}

Json to_json(const CensusReport& r) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  Json counts = Json::object();
  for (unsigned k = 0; k <= r.n; ++k) counts["N_" + std::to_string(k)] = big_to_json(r.count_k_normal(k));
  j["counts"] = std::move(counts);
  j["practical"] = r.practical;
  return j;
}

CensusReport census_from_json(const Json& j) {
  CensusReport r;
  r.q = j.at("q").get<std::uint64_t>();
  r.n = j.at("n").get<unsigned>();
  r.coeffs.assign(r.n + 1, 0);
  for (unsigned k = 0; k <= r.n; ++k) r.coeffs[r.n - k] = big_from_json(j.at("counts").at("N_" + std::to_string(k)));
  r.practical = j.at("practical").get<bool>();
  return r;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["k"] = r.k;
  j["sieve"] = to_string(r.sieve_holds);
  j["asymptotic"] = r.asymptotic_holds;
  j["table"] = r.table_holds;
  j["tau"] = r.tau ? real(*r.tau) : Json(nullptr);
  Json m = Json::object();
  for (const auto& [name, v] : r.margins) m[name] = real(v);
  j["margins"] = std::move(m);
  return j;
}

Json to_json(std::uint64_t q, unsigned n, const PolyFactorization& f) {
  Json j;
  j["q"] = q;
  j["n"] = n;
  Json arr = Json::array();
  for (const auto& pf : f) {
    Json e;
    e["poly"] = format_poly(pf.base);
    e["degree"] = pf.base.degree();
    e["multiplicity"] = pf.multiplicity;
    arr.push_back(std::move(e));
  }
  j["factors"] = std::move(arr);
  return j;
}

Json field_json(const FieldCtx& ctx) {
  Json j;
  j["p"] = ctx.base().p();
  j["s"] = ctx.base().s();
  j["q"] = ctx.q();
  j["n"] = ctx.degree();
  j["g"] = ctx.base().modulus();
  j["h"] = format_poly(ctx.modulus());
  return j;
}

FieldCtx field_from_json(const Json& j) {
  auto base = BaseField::with_modulus(j.at("p").get<std::uint64_t>(), j.at("g").get<std::vector<std::uint32_t>>());
  return FieldCtx(parse_poly(j.at("h").get<std::string>(), base));
}

Json to_json(const FieldCtx& ctx, unsigned k, const SearchOutcome& out, Strategy strategy, std::uint64_t seed) {
  Json j;
  j["field"] = field_json(ctx);
  j["k"] = k;
  j["strategy"] = to_string(strategy);
  j["seed"] = seed;
  j["found"] = out.found;
  j["verified_absent"] = out.verified_absent;
  j["trials"] = out.trials;
  j["witness"] = out.witness ? Json(out.witness->coeffs) : Json(nullptr);
  j["fq_order"] = out.certificate ? Json(format_poly(out.certificate->fq_order)) : Json(nullptr);
  j["mult_order"] = out.certificate ? big_to_json(out.certificate->mult_order) : Json(nullptr);
  return j;
}

std::string dump(const Json& j) { return j.dump(2); }

std::string survey_csv(std::uint64_t q_lo, std::uint64_t q_hi, unsigned n_lo, unsigned n_hi, unsigned factor_bits) {
  if (q_lo > q_hi || n_lo > n_hi || n_lo < 1) throw InvalidArgument("survey: empty or invalid range");
  std::ostringstream os;
  os << kSurveyHeader << "\n" << kSurveyColumns << "\n";
  for (std::uint64_t q = std::max<std::uint64_t>(q_lo, 2); q <= q_hi; ++q) {
    if (!prime_power_decompose(q).first) continue;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
      const auto census = enumerator_polynomial(q, n);
      for (unsigned k = 0; k <= n; ++k) {
        const auto b = bounds_report(q, n, k, factor_bits);
        os << q << ',' << n << ',' << k << ',' << to_string(census.count_k_normal(k)) << ','
           << (census.practical ? "true" : "false") << ',' << to_string(b.sieve_holds) << ','
           << (n >= 2 ? (b.asymptotic_holds ? "true" : "false") : "") << ',' << (b.table_holds ? "true" : "false")
           << ',' << (b.tau ? fmt_double(*b.tau) : "") << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace knormal
