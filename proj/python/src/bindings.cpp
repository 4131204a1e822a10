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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knormal/census.hpp"
#include "knormal/construct.hpp"
#include "knormal/integer.hpp"
#include "knormal/serialize.hpp"
#include "knormal/verify.hpp"

namespace py = pybind11;
using namespace knormal;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<Fq> coeffs(const Poly& f) { return f.coeffs(); }

py::dict census(std::uint64_t q, unsigned n) {
  const auto r = enumerator_polynomial(q, n);
  py::list counts;
  for (unsigned k = 0; k <= n; ++k) counts.append(to_py(r.count_k_normal(k)));
  py::dict d;
  d["q"] = q;
  d["n"] = n;
  d["counts"] = counts;
  d["practical"] = r.practical;
  return d;
}

py::list factor(std::uint64_t q, unsigned n) {
  py::list out;
  for (const auto& pf : factor_xn_minus_1(q, n)) out.append(py::make_tuple(coeffs(pf.base), pf.multiplicity));
  return out;
}

py::object search(std::uint64_t q, unsigned n, unsigned k, bool primitive, const std::string& strategy,
                  std::uint64_t seed, std::uint64_t max_card, unsigned factor_bits) {
  const auto pp = PrimePower::from_q(q);
  const auto ctx = make_field(pp.p, pp.s, n, max_card, seed);
  if (k > n) throw InvalidArgument("k must lie in [0, n]");
  const auto fact = group_order_factorization(ctx, factor_bits);
  SearchOptions so;
  so.strategy = parse_strategy(strategy);
  so.seed = seed;
  so.max_card = max_card;
  SearchOutcome res;
  if (primitive) {
    res = find_primitive_k_normal(ctx, k, fact, so);
  } else if (const auto f = divisor_of_degree(ctx.base_ptr(), n, k)) {
    if (so.strategy == Strategy::ViaNormal) so.strategy = Strategy::Exhaustive;
    const auto beta = find_normal(ctx, fact, so);
    const auto a = make_k_normal(ctx, *beta.witness, *f);
    res.found = true;
    res.witness = a;
    res.certificate = certify(ctx, a, fact);
    res.trials = beta.trials;
  } else {
    res.verified_absent = true;
  }
  return json_to_py(to_json(ctx, k, res, so.strategy, seed));
}

py::dict brute_census(std::uint64_t q, unsigned n, std::uint64_t max_card) {
  const auto pp = PrimePower::from_q(q);
  const auto r = brute_force_census(make_field(pp.p, pp.s, n, max_card), max_card);
  py::dict d;
  d["q"] = q;
  d["n"] = n;
  d["counts"] = r.counts;
  d["max_order"] = r.max_order;
  d["primitive"] = r.primitive;
  return d;
}

py::list verify(const std::string& suite, std::uint64_t max_card) {
  VerifyOptions opt;
  opt.max_card = max_card;
  opt.element_card = std::min(opt.element_card, max_card);
  py::list out;
  for (const auto& r : run_suite(parse_suite(suite), opt)) {
    py::dict d;
    d["id"] = r.id;
    d["name"] = r.name;
    d["passed"] = r.passed;
    d["detail"] = r.detail;
    d["seconds"] = r.seconds;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_knormal, m) {
  m.doc() = "k-normal elements of finite field extensions";
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.attr("DEFAULT_MAX_CARD") = kDefaultMaxCard;
  m.attr("DEFAULT_FACTOR_BITS") = kDefaultFactorBits;
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  m.def("factor_xn_minus_1", &factor, py::arg("q"), py::arg("n"),
        "Irreducible factors of x^n - 1 over F_q as (coefficients, multiplicity), constant term first.");
  m.def("census", &census, py::arg("q"), py::arg("n"));
  m.def("count_k_normal", [](std::uint64_t q, unsigned n, unsigned k) { return to_py(count_k_normal(q, n, k)); },
        py::arg("q"), py::arg("n"), py::arg("k"));
  m.def("is_fq_practical", &is_fq_practical, py::arg("q"), py::arg("n"));
  m.def("prime_divisor_condition", &prime_divisor_condition, py::arg("q"), py::arg("n"));

  m.def("bounds", [](std::uint64_t q, unsigned n, unsigned k, unsigned bits) {
    return json_to_py(to_json(bounds_report(q, n, k, bits)));
  }, py::arg("q"), py::arg("n"), py::arg("k"), py::arg("factor_bits") = kDefaultFactorBits);
  m.def("sieve_condition", [](std::uint64_t q, unsigned n, unsigned k, unsigned bits) {
    return to_string(sieve_condition(q, n, k, bits).holds);
  }, py::arg("q"), py::arg("n"), py::arg("k"), py::arg("factor_bits") = kDefaultFactorBits);
  m.def("asymptotic_condition", [](std::uint64_t q, unsigned n, unsigned k) {
    return asymptotic_condition(q, n, k).holds;
  }, py::arg("q"), py::arg("n"), py::arg("k"));
  m.def("table_condition", [](std::uint64_t q, unsigned n, unsigned k) { return table_condition(q, n, k).holds; },
        py::arg("q"), py::arg("n"), py::arg("k"));
  m.def("tau_lower_bound", [](std::uint64_t q, unsigned n, unsigned k) { return tau_lower_bound(q, n, k).tau; },
        py::arg("q"), py::arg("n"), py::arg("k"));

  m.def("divisor_of_degree", [](std::uint64_t q, unsigned n, unsigned k, bool unit) {
    const auto f = divisor_of_degree(q, n, k, unit);
    return f ? std::optional<std::vector<Fq>>(coeffs(*f)) : std::nullopt;
  }, py::arg("q"), py::arg("n"), py::arg("k"), py::arg("require_unit_at_one") = false);
  m.def("practical_divisor", [](std::uint64_t q, unsigned n, unsigned k) {
    return coeffs(practical_divisor(base_field(q), n, k));
  }, py::arg("q"), py::arg("n"), py::arg("k"));
  m.def("constructive_divisor_prime_power", [](std::uint64_t q, std::uint64_t r, unsigned d, unsigned k) {
    return coeffs(constructive_divisor_prime_power(base_field(q), r, d, k));
  }, py::arg("q"), py::arg("r"), py::arg("d"), py::arg("k"));

  m.def("search", &search, py::arg("q"), py::arg("n"), py::arg("k"), py::arg("primitive") = false,
        py::arg("strategy") = "exhaustive", py::arg("seed") = kDefaultSeed, py::arg("max_card") = kDefaultMaxCard,
        py::arg("factor_bits") = kDefaultFactorBits,
        "Finds a (primitive) k-normal element; returns the certificate document.");
  m.def("brute_force_census", &brute_census, py::arg("q"), py::arg("n"), py::arg("max_card") = kDefaultMaxCard);
  m.def("verify", &verify, py::arg("suite") = "all", py::arg("max_card") = std::uint64_t{1} << 18);
  m.def("survey_csv", &survey_csv, py::arg("q_lo"), py::arg("q_hi"), py::arg("n_lo"), py::arg("n_hi"),
        py::arg("factor_bits") = kDefaultFactorBits);
}
