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

#include "knormal/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "knormal/integer.hpp"

namespace knormal {

namespace {

void require_card(const FieldCtx& ctx, std::uint64_t max_card) {
  if (ctx.card() > max_card) {
    throw BudgetExceeded("max_card", "field of size " + to_string(ctx.card()) + " exceeds max_card " +
                                         std::to_string(max_card));
  }
}

SearchOutcome success(const FieldCtx& ctx, const FieldElement& w, const IntFactorization& fact,
                      std::uint64_t trials) {
  SearchOutcome out;
  out.found = true;
  out.witness = w;
  out.certificate = certify(ctx, w, fact);
  out.trials = trials;
  return out;
}

std::vector<FieldElement> sample_normals(const FieldCtx& ctx, const FqOrderScanner& scan, std::uint64_t want,
                                         const SearchOptions& opt, std::uint64_t& trials) {
  std::vector<FieldElement> out;
  std::mt19937_64 rng(opt.seed);
  while (out.size() < want && trials < opt.max_trials) {
    ++trials;
    auto a = ctx.random(rng);
    if (scan.normality_index(a) == 0) out.push_back(std::move(a));
  }
  if (out.empty()) throw BudgetExceeded("max_trials", "no normal element within max_trials samples");
  return out;
}

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Random: return "random";
    case Strategy::Exhaustive: return "exhaustive";
    case Strategy::ViaNormal: return "via_normal";
  }
  return "exhaustive";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "random") return Strategy::Random;
  if (s == "exhaustive") return Strategy::Exhaustive;
  if (s == "via_normal") return Strategy::ViaNormal;
  throw InvalidArgument("unknown strategy '" + s + "'");
}

Certificate certify(const FieldCtx& ctx, const FieldElement& w, const IntFactorization& fact) {
  Certificate c{fq_order(ctx, w).poly, 0};
  if (!ctx.is_zero(w)) c.mult_order = mult_order(ctx, w, fact);
  return c;
}

bool verify_certificate(const FieldCtx& ctx, const FieldElement& w, const Certificate& cert,
                        const IntFactorization& fact) {
  ctx.check(w);
  if (!(fq_order(ctx, w).poly == cert.fq_order)) return false;
  if (ctx.is_zero(w)) return cert.mult_order == 0;
  if (cert.mult_order <= 0 || !(ctx.pow(w, cert.mult_order) == ctx.one())) return false;
  return mult_order(ctx, w, fact) == cert.mult_order;
}

SearchOutcome find_normal(const FieldCtx& ctx, const SearchOptions& opt) {
  return find_normal(ctx, group_order_factorization(ctx), opt);
}

SearchOutcome find_normal(const FieldCtx& ctx, const IntFactorization& fact, const SearchOptions& opt) {
  const FqOrderScanner scan(ctx);
  std::uint64_t trials = 0;
  if (opt.strategy == Strategy::Exhaustive) {
    // normal elements always exist, so the scan terminates
    for (std::uint64_t i = 0;; ++i) {
      ++trials;
      auto a = ctx.element(i);
      if (scan.normality_index(a) == 0) return success(ctx, a, fact, trials);
    }
  }
  if (opt.strategy != Strategy::Random) throw InvalidArgument("find_normal supports random and exhaustive");
  auto beta = sample_normals(ctx, scan, 1, opt, trials);
  return success(ctx, beta.front(), fact, trials);
}

std::optional<Poly> divisor_of_degree(const FieldPtr& fq, unsigned n, unsigned k, bool require_unit_at_one) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (k > n) return std::nullopt;
  const auto xn1 = factor_xn_minus_1(fq, n);
  const std::size_t m = xn1.size();
  std::vector<unsigned> deg(m), cap(m);
  for (std::size_t i = 0; i < m; ++i) {
    deg[i] = static_cast<unsigned>(xn1[i].base.degree());
    cap[i] = xn1[i].multiplicity;
    if (require_unit_at_one && xn1[i].base.eval(1) == 0) cap[i] = 0;
  }
  // reach[i][s]: factors i.. can contribute total degree s
  std::vector<std::vector<char>> reach(m + 1, std::vector<char>(k + 1, 0));
  reach[m][0] = 1;
  for (std::size_t i = m; i-- > 0;) {
    for (unsigned s = 0; s <= k; ++s) {
      for (unsigned e = 0; e <= cap[i] && e * deg[i] <= s && !reach[i][s]; ++e) reach[i][s] = reach[i + 1][s - e * deg[i]];
    }
  }
  if (!reach[0][k]) return std::nullopt;
  Poly f = Poly::one(fq);
  unsigned rem = k;
  for (std::size_t i = 0; i < m; ++i) {
    unsigned e = 0;
    while (!reach[i + 1][rem - e * deg[i]]) ++e;
    f = f * pow(xn1[i].base, e);
    rem -= e * deg[i];
  }
  return f;
}

std::optional<Poly> divisor_of_degree(std::uint64_t q, unsigned n, unsigned k, bool require_unit_at_one) {
  return divisor_of_degree(base_field(q), n, k, require_unit_at_one);
}

FieldElement make_k_normal(const FieldCtx& ctx, const FieldElement& beta, const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("make_k_normal: f is zero");
  const Poly xn = Poly::xn_minus_one(ctx.base_ptr(), ctx.degree());
  if (!divides(f, xn)) throw InvalidArgument("make_k_normal: f does not divide x^n - 1");
  if (normality_index(ctx, beta) != 0) throw InvalidArgument("make_k_normal: beta is not normal");
  const Poly fm = f.monic();
  auto alpha = apply_q_associate(ctx, fm, beta);
  if (!(fq_order(ctx, alpha).poly == xn / fm)) throw VerificationError("make_k_normal: unexpected F_q-order");
  return alpha;
}

SearchOutcome find_primitive_k_normal(const FieldCtx& ctx, unsigned k, const IntFactorization& fact,
                                      const SearchOptions& opt) {
  const unsigned n = ctx.degree();
  if (k > n) throw InvalidArgument("k must lie in [0, n]");
  if (product(fact) != ctx.card() - 1) throw InvalidArgument("factorization does not match q^n - 1");
  SearchOutcome out;
  if (k == n) {
    // the only n-normal element is 0
    out.verified_absent = true;
    return out;
  }
  const FqOrderScanner scan(ctx);
  switch (opt.strategy) {
    case Strategy::Exhaustive: {
      require_card(ctx, opt.max_card);
      const std::uint64_t card = ctx.card_u64();
      for (std::uint64_t i = 1; i < card; ++i) {
        ++out.trials;
        auto a = ctx.element(i);
        if (scan.normality_index(a) == k && is_primitive(ctx, a, fact)) return success(ctx, a, fact, out.trials);
      }
      out.verified_absent = true;
      return out;
    }
    case Strategy::Random: {
      std::mt19937_64 rng(opt.seed);
      while (out.trials < opt.max_trials) {
        ++out.trials;
        auto a = ctx.random(rng);
        if (ctx.is_zero(a)) continue;
        if (scan.normality_index(a) == k && is_primitive(ctx, a, fact)) return success(ctx, a, fact, out.trials);
      }
      throw BudgetExceeded("max_trials", "no primitive " + std::to_string(k) + "-normal element within max_trials");
    }
    case Strategy::ViaNormal: {
      const auto betas = sample_normals(ctx, scan, opt.per_divisor, opt, out.trials);
      const Poly xn = Poly::xn_minus_one(ctx.base_ptr(), n);
      std::optional<SearchOutcome> hit;
      for_each_divisor(scan.xn_minus_one(), [&](const std::vector<unsigned>&, const Poly& f) {
        if (static_cast<unsigned>(f.degree()) != k) return true;
        for (const auto& beta : betas) {
          ++out.trials;
          auto a = apply_q_associate(ctx, f, beta);
          if (!ctx.is_zero(a) && is_primitive(ctx, a, fact)) {
            hit = success(ctx, a, fact, out.trials);
            return false;
          }
        }
        return true;
      });
      if (hit) return *hit;
      return out;
    }
  }
  return out;
}

std::uint64_t count_nf(const FieldCtx& ctx, const Poly& f, const IntFactorization& fact, std::uint64_t max_card) {
  require_card(ctx, max_card);
  if (!divides(f, Poly::xn_minus_one(ctx.base_ptr(), ctx.degree()))) {
    throw InvalidArgument("count_nf: f does not divide x^n - 1");
  }
  const FqOrderScanner scan(ctx);
  const std::uint64_t card = ctx.card_u64();
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i < card; ++i) {
    auto w = ctx.element(i);
    if (scan.normality_index(w) != 0) continue;
    auto a = apply_q_associate(ctx, f, w);
    if (!ctx.is_zero(a) && is_primitive(ctx, a, fact)) ++count;
  }
  return count;
}

BruteForceCensus brute_force_census(const FieldCtx& ctx, std::uint64_t max_card, unsigned threads) {
  require_card(ctx, max_card);
  const unsigned n = ctx.degree();
  const std::uint64_t card = ctx.card_u64();
  const std::uint64_t group = card - 1;
  const auto fact = group_order_factorization(ctx);

  FieldElement g = ctx.one();
  for (std::uint64_t i = 1; i < card; ++i) {
    g = ctx.element(i);
    if (is_primitive(ctx, g, fact)) break;
  }
  std::vector<std::uint32_t> log(card, 0);
  FieldElement cur = ctx.one();
  for (std::uint64_t e = 0; e < group; ++e) {
    log[ctx.index(cur)] = static_cast<std::uint32_t>(e);
    cur = ctx.mul(cur, g);
  }
  if (!(cur == ctx.one())) throw VerificationError("brute_force_census: generator order mismatch");

  const auto xn1 = factor_xn_minus_1(ctx.base_ptr(), n);
  auto empty = [&] {
    BruteForceCensus r;
    r.q = ctx.q();
    r.n = n;
    r.counts.assign(n + 1, 0);
    r.max_order.assign(n + 1, 0);
    r.primitive.assign(n + 1, 0);
    return r;
  };
  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, BruteForceCensus& r) {
    const FqOrderScanner scan(ctx, xn1);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const unsigned k = scan.normality_index(ctx.element(i));
      ++r.counts[k];
      if (i == 0) continue;  // index 0 is the zero element
      const std::uint64_t ord = group / std::gcd<std::uint64_t, std::uint64_t>(log[i], group);
      r.max_order[k] = std::max(r.max_order[k], ord);
      if (ord == group) ++r.primitive[k];
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(card, 64))));
  std::vector<BruteForceCensus> parts(threads, empty());
  if (threads == 1) {
    scan_range(0, card, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(scan_range, card * t / threads, card * (t + 1) / threads, std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
  }
  BruteForceCensus out = empty();
  for (const auto& p : parts) {
    for (unsigned k = 0; k <= n; ++k) {
      out.counts[k] += p.counts[k];
      out.max_order[k] = std::max(out.max_order[k], p.max_order[k]);
      out.primitive[k] += p.primitive[k];
    }
  }
  return out;
}

}  // namespace knormal
