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

// knormal: command-line front end.
//   exit 0 success, 1 suite failure, 2 usage, 3 budget exceeded

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "knormal/census.hpp"
#include "knormal/integer.hpp"
#include "knormal/serialize.hpp"
#include "knormal/verify.hpp"

using namespace knormal;

namespace {

enum Exit { kOk = 0, kSuiteFailure = 1, kUsage = 2, kBudget = 3 };

struct Config {
  std::uint64_t max_card = kDefaultMaxCard;
  unsigned factor_bits = kDefaultFactorBits;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "json";
  std::string out;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) throw InvalidArgument("range must look like A..B, got '" + s + "'");
  try {
    return {std::stoull(s.substr(0, pos)), std::stoull(s.substr(pos + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("range must look like A..B, got '" + s + "'");
  }
}

PrimePower prime_power(std::uint64_t q) { return PrimePower::from_q(q); }

class Output {
 public:
  explicit Output(const Config& cfg) : cfg_(cfg) {}
  void json(const Json& j) { emit(dump(j) + "\n"); }
  void text(const std::string& s) { emit(s); }

 private:
  void emit(const std::string& s) {
    if (cfg_.out.empty()) {
      std::cout << s;
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file '" + cfg_.out + "'");
    f << s;
  }
  const Config& cfg_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

int cmd_factor(const Config& cfg, std::uint64_t q, unsigned n) {
  prime_power(q);
  const auto f = factor_xn_minus_1(q, n);
  Output out(cfg);
  if (cfg.format == "json") {
    out.json(to_json(q, n, f));
  } else {
    std::ostringstream os;
    os << "x^" << n << " - 1 over F_" << q << ":\n";
    for (const auto& pf : f) os << "  (" << pretty(pf.base) << ")^" << pf.multiplicity << "  degree " << pf.base.degree() << "\n";
    out.text(os.str());
  }
  return kOk;
}

int cmd_census(const Config& cfg, std::uint64_t q, unsigned n, std::optional<unsigned> k) {
  prime_power(q);
  if (n < 1) throw InvalidArgument("n must be >= 1");
  const auto r = enumerator_polynomial(q, n);
  Output out(cfg);
  if (k) {
    const BigInt v = count_k_normal(q, n, *k);
    if (cfg.format == "json") {
      Json j;
      j["q"] = q;
      j["n"] = n;
      j["k"] = *k;
      j["N_k"] = big_to_json(v);
      out.json(j);
    } else {
      out.text(to_string(v) + "\n");
    }
    return kOk;
  }
  if (cfg.format == "json") {
    out.json(to_json(r));
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "k,N_k\n";
    for (unsigned i = 0; i <= n; ++i) os << i << ',' << to_string(r.count_k_normal(i)) << '\n';
    out.text(os.str());
  } else {
    std::ostringstream os;
    os << "F_" << q << "^" << n << " over F_" << q << ", practical: " << yes_no(r.practical) << "\n";
    for (unsigned i = 0; i <= n; ++i) os << "  N_" << i << " = " << to_string(r.count_k_normal(i)) << "\n";
    out.text(os.str());
  }
  return kOk;
}

int cmd_practical(const Config& cfg, std::uint64_t q, std::optional<unsigned> n, std::optional<unsigned> upto) {
  prime_power(q);
  if (n.has_value() == upto.has_value()) throw InvalidArgument("give either n or --upto N");
  const unsigned lo = n ? *n : 1, hi = n ? *n : *upto;
  if (lo < 1) throw InvalidArgument("n must be >= 1");
  Json rows = Json::array();
  std::ostringstream os;
  if (cfg.format == "csv") os << "q,n,practical,prime_condition\n";
  for (unsigned m = lo; m <= hi; ++m) {
    const bool prac = is_fq_practical(q, m);
    const std::string cond = m >= 2 ? yes_no(prime_divisor_condition(q, m)) : "";
    Json j;
    j["q"] = q;
    j["n"] = m;
    j["practical"] = prac;
    j["prime_condition"] = m >= 2 ? Json(prime_divisor_condition(q, m)) : Json(nullptr);
    rows.push_back(std::move(j));
    if (cfg.format == "csv") os << q << ',' << m << ',' << yes_no(prac) << ',' << cond << '\n';
    else os << "n=" << m << " practical=" << yes_no(prac) << "\n";
  }
  Output out(cfg);
  if (cfg.format == "json") out.json(n ? rows[0] : rows);
  else out.text(os.str());
  return kOk;
}

int cmd_bounds(const Config& cfg, std::uint64_t q, unsigned n, unsigned k) {
  prime_power(q);
  if (n < 1 || k > n) throw InvalidArgument("need n >= 1 and 0 <= k <= n");
  const auto r = bounds_report(q, n, k, cfg.factor_bits);
  Output out(cfg);
  if (cfg.format == "json") {
    out.json(to_json(r));
  } else {
    std::ostringstream os;
    os << "q=" << q << " n=" << n << " k=" << k << "\n"
       << "  sieve       " << to_string(r.sieve_holds) << "\n"
       << "  asymptotic  " << yes_no(r.asymptotic_holds) << "\n"
       << "  table       " << yes_no(r.table_holds) << "\n"
       << "  tau         " << (r.tau ? std::to_string(*r.tau) : std::string("n/a")) << "\n";
    for (const auto& [name, v] : r.margins) os << "  margin " << name << " = " << v << "\n";
    out.text(os.str());
  }
  return kOk;
}

int cmd_search(const Config& cfg, std::uint64_t q, unsigned n, unsigned k, bool primitive, const std::string& strategy) {
  const auto pp = prime_power(q);
  const auto ctx = make_field(pp.p, pp.s, n, cfg.max_card, cfg.seed);
  if (k > n) throw InvalidArgument("k must lie in [0, n]");
  const auto fact = group_order_factorization(ctx, cfg.factor_bits);
  SearchOptions so;
  so.strategy = parse_strategy(strategy);
  so.seed = cfg.seed;
  so.max_card = cfg.max_card;
  SearchOutcome res;
  if (primitive) {
    res = find_primitive_k_normal(ctx, k, fact, so);
  } else {
    if (so.strategy == Strategy::ViaNormal) so.strategy = Strategy::Exhaustive;
    const auto f = divisor_of_degree(ctx.base_ptr(), n, k);
    if (!f) {
      res.verified_absent = true;
    } else {
      auto beta = find_normal(ctx, fact, so);
      const auto a = make_k_normal(ctx, *beta.witness, *f);
      res.found = true;
      res.witness = a;
      res.certificate = certify(ctx, a, fact);
      res.trials = beta.trials;
    }
  }
  if (res.found && !verify_certificate(ctx, *res.witness, *res.certificate, fact)) {
    throw VerificationError("certificate failed to re-verify");
  }
  Output out(cfg);
  Json j = to_json(ctx, k, res, so.strategy, cfg.seed);
  j["primitive"] = primitive;
  if (cfg.format == "json") {
    out.json(j);
  } else {
    std::ostringstream os;
    os << "F_" << q << "^" << n << " (h = " << pretty(ctx.modulus()) << "), k=" << k << (primitive ? ", primitive" : "")
       << "\n";
    if (res.found) {
      os << "  witness     " << j["witness"].dump() << "\n"
         << "  fq_order    " << pretty(res.certificate->fq_order) << "\n"
         << "  mult_order  " << to_string(res.certificate->mult_order) << "\n";
    } else {
      os << "  " << (res.verified_absent ? "none exists" : "not found") << "\n";
    }
    os << "  trials      " << res.trials << "\n";
    out.text(os.str());
  }
  return kOk;
}

int cmd_verify(const Config& cfg, const std::string& suite, std::optional<std::uint64_t> max_card) {
  VerifyOptions opt;
  if (max_card) {
    opt.max_card = *max_card;
    opt.element_card = std::min(opt.element_card, *max_card);
  }
  opt.factor_bits = cfg.factor_bits;
  bool ok = true;
  Json arr = Json::array();
  const bool json = cfg.format == "json";
  run_suite(parse_suite(suite), opt, [&](const CriterionResult& r) {
    ok = ok && r.passed;
    if (json) {
      Json j;
      j["id"] = r.id;
      j["name"] = r.name;
      j["passed"] = r.passed;
      j["detail"] = r.detail;
      arr.push_back(std::move(j));
    } else {
      std::printf("[%s] %2d %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                  r.detail.c_str());
      std::fflush(stdout);
    }
  });
  if (json) Output(cfg).json(arr);
  return ok ? kOk : kSuiteFailure;
}

int cmd_survey(const Config& cfg, const std::string& qr, const std::string& nr) {
  const auto [qa, qb] = parse_range(qr);
  const auto [na, nb] = parse_range(nr);
  if (nb > 4096) throw InvalidArgument("n range too large");
  Output(cfg).text(survey_csv(qa, qb, static_cast<unsigned>(na), static_cast<unsigned>(nb), cfg.factor_bits));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-normal elements of finite field extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--max-card", cfg.max_card, "largest q^n for exhaustive work")->envname("KNORMAL_MAX_CARD");
  app.add_option("--factor-bits", cfg.factor_bits, "bit budget for factoring q^n - 1")->envname("KNORMAL_FACTOR_BITS");
  app.add_option("--seed", cfg.seed, "seed for moduli and random search")->envname("KNORMAL_SEED");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("-o,--out", cfg.out, "write output to a file");

  std::uint64_t q = 0;
  unsigned n = 0, k = 0;
  std::optional<unsigned> opt_n, opt_k, upto;
  std::optional<std::uint64_t> verify_card;
  bool primitive = false;
  std::string strategy = "exhaustive", suite = "all", qrange, nrange;
  std::function<int()> run;

  auto* f = app.add_subcommand("factor", "factor x^n - 1 over F_q");
  f->add_option("q", q)->required();
  f->add_option("n", n)->required();
  f->callback([&] { run = [&] { return cmd_factor(cfg, q, n); }; });

  auto* c = app.add_subcommand("census", "k-normal counts N_0..N_n");
  c->add_option("q", q)->required();
  c->add_option("n", n)->required();
  c->add_option("--k", opt_k, "report only N_k");
  c->callback([&] { run = [&] { return cmd_census(cfg, q, n, opt_k); }; });

  auto* p = app.add_subcommand("practical", "is n F_q-practical");
  p->add_option("q", q)->required();
  p->add_option("n", opt_n);
  p->add_option("--upto", upto, "one row per n in [1, N]");
  p->callback([&] { run = [&] { return cmd_practical(cfg, q, opt_n, upto); }; });

  auto* b = app.add_subcommand("bounds", "existence inequalities for (q, n, k)");
  b->add_option("q", q)->required();
  b->add_option("n", n)->required();
  b->add_option("k", k)->required();
  b->callback([&] { run = [&] { return cmd_bounds(cfg, q, n, k); }; });

  auto* s = app.add_subcommand("search", "find a (primitive) k-normal element with a certificate");
  s->add_option("q", q)->required();
  s->add_option("n", n)->required();
  s->add_option("k", k)->required();
  s->add_flag("--primitive", primitive, "require a primitive element");
  s->add_option("--strategy", strategy)->check(CLI::IsMember({"random", "exhaustive", "via_normal"}));
  s->callback([&] { run = [&] { return cmd_search(cfg, q, n, k, primitive, strategy); }; });

  auto* v = app.add_subcommand("verify", "run acceptance suites");
  v->add_option("--suite", suite)->check(CLI::IsMember({"all", "census", "bounds", "construct"}));
  v->add_option("--max-card", verify_card, "largest q^n of the census grid");
  v->callback([&] {
    if (cfg.format == "json" && !app.get_option("--format")->count()) cfg.format = "table";
    run = [&] { return cmd_verify(cfg, suite, verify_card); };
  });

  auto* sv = app.add_subcommand("survey", "census and bounds over a grid, as CSV");
  sv->add_option("--q-range", qrange, "A..B")->required();
  sv->add_option("--n-range", nrange, "C..D")->required();
  sv->callback([&] { run = [&] { return cmd_survey(cfg, qrange, nrange); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run();
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded (" << e.budget() << "): " << e.what() << "\n";
    return kBudget;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSuiteFailure;
  }
}
