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

#include "knormal/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "knormal/cyclotomic.hpp"
#include "knormal/integer.hpp"

namespace knormal {

namespace {

// log(q^n - 1) without forming q^n
long double log_qn_minus_1(std::uint64_t q, unsigned n) {
  const long double lq = std::log(static_cast<long double>(q));
  return n * lq + std::log1p(-std::exp(-(n * lq)));
}

std::uint64_t distinct_irreducible_count(std::uint64_t q, unsigned n) {
  std::uint64_t c = 0;
  for (const auto& cls : degree_distribution(q, n)) c += cls.count;
  return c;
}

// Smallest-prime-factor sieve on [0, hi].
std::vector<std::uint32_t> spf_sieve(std::uint64_t hi) {
  std::vector<std::uint32_t> spf(hi + 1, 0);
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= hi; j += i) {
      if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

struct SmallFactors {
  std::vector<std::pair<std::uint64_t, unsigned>> pe;
};

SmallFactors factor_with(const std::vector<std::uint32_t>& spf, std::uint64_t m) {
  SmallFactors f;
  while (m > 1) {
    const std::uint64_t p = spf[m];
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.pe.push_back({p, e});
  }
  return f;
}

void record(EstimateCheck& c, std::uint64_t at, long double lhs, long double rhs) {
  ++c.checked;
  const long double rel = (rhs - lhs) / rhs;
  if (c.checked == 1 || rel < c.worst_relative_margin) {
    c.worst_relative_margin = static_cast<double>(rel);
    c.worst_at = at;
  }
  // a strict inequality inside the tie band is not accepted on floating evidence
  if (!(rel > kTieBand)) {
    if (!c.violations) c.first_violation = at;
    ++c.violations;
  }
}

}  // namespace

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

SieveResult sieve_condition(std::uint64_t q, unsigned n, unsigned k, unsigned factor_bits) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (k > n) throw InvalidArgument("k must lie in [0, n]");
  PrimePower::from_q(q);
  SieveResult r;
  r.w_poly = BigInt(1) << distinct_irreducible_count(q, n);
  try {
    r.w_group = squarefree_divisor_count(factor_q_power_minus_one(q, n, factor_bits));
  } catch (const BudgetExceeded&) {
    r.holds = Tri::Unknown;
    r.margin = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  const BigInt w = *r.w_group * r.w_poly;
  if (2 * k > n) {
    r.holds = Tri::False;  // q^{n/2-k} < 1 <= W W
  } else {
    r.holds = ipow(BigInt(q), n - 2 * k) >= w * w ? Tri::True : Tri::False;
  }
  r.margin = static_cast<double>((0.5L * n - k) * std::log(static_cast<long double>(q)) -
                                 std::log(static_cast<long double>(*r.w_group)) -
                                 std::log(static_cast<long double>(r.w_poly)));
  return r;
}

AsymptoticResult asymptotic_condition(std::uint64_t q, unsigned n, unsigned k) {
  if (n < 2) throw InvalidArgument("asymptotic_condition needs n >= 2");
  if (q < 2) throw InvalidArgument("q must be >= 2");
  const long double lq = std::log(static_cast<long double>(q));
  const long double bound = n * (0.5L - 0.96L / (std::log(static_cast<long double>(n)) + std::log(lq)) -
                                 std::log(2.0L) / lq);
  AsymptoticResult r;
  r.bound = static_cast<double>(bound);
  r.margin = static_cast<double>(bound - k);
  r.holds = bound - k > kTieBand * std::max<long double>(1.0L, std::fabs(bound));
  return r;
}

TableResult table_condition(std::uint64_t q, unsigned n, unsigned k) {
  TableResult r;
  r.k_in_range = 8ULL * k <= n;
  r.inequality = ipow(BigInt(q), n) * BigInt(100000000) >= ipow(BigInt(49), 8) * ipow(BigInt(256), n);
  r.margin = static_cast<double>(n / 8.0L * std::log(static_cast<long double>(q) / 256.0L) - std::log(4.9L));
  r.holds = r.k_in_range && r.inequality;
  return r;
}

TauResult tau_lower_bound(std::uint64_t q, unsigned n, unsigned k) {
  if (n < 2) throw InvalidArgument("tau_lower_bound needs n >= 2");
  if (k < 1 || k > n - 1) throw InvalidArgument("tau_lower_bound needs 1 <= k <= n - 1");
  if (q < 2) throw InvalidArgument("q must be >= 2");
  const long double lq = std::log(static_cast<long double>(q));
  const long double loglog = std::log(log_qn_minus_1(q, n));
  if (!(loglog > 0)) throw InvalidArgument("log log(q^n - 1) is not positive");
  TauResult r;
  const long double log_tau = (static_cast<long double>(k) - n) / q * std::log(4.0L) +
                              (n - static_cast<long double>(k) - 1.1L * n / loglog) * lq;
  r.log_tau = static_cast<double>(log_tau);
  r.tau = static_cast<double>(std::exp(log_tau));
  const long double eps = 1.1L / loglog + std::log(4.0L) / (q * lq);
  r.epsilon = static_cast<double>(eps);
  r.epsilon_form = static_cast<double>(std::exp((n * (1 - eps) - k) * lq));
  return r;
}

BoundsReport bounds_report(std::uint64_t q, unsigned n, unsigned k, unsigned factor_bits) {
  BoundsReport r;
  r.q = q;
  r.n = n;
  r.k = k;
  const auto sieve = sieve_condition(q, n, k, factor_bits);
  r.sieve_holds = sieve.holds;
  if (sieve.holds != Tri::Unknown) r.margins["sieve"] = sieve.margin;
  if (n >= 2) {
    const auto a = asymptotic_condition(q, n, k);
    r.asymptotic_holds = a.holds;
    r.margins["asymptotic"] = a.margin;
  }
  const auto t = table_condition(q, n, k);
  r.table_holds = t.holds;
  r.margins["table"] = t.margin;
  if (n >= 2 && k >= 1 && k <= n - 1) {
    const auto tau = tau_lower_bound(q, n, k);
    r.tau = tau.tau;
    r.margins["log_tau"] = tau.log_tau;
    r.margins["epsilon"] = tau.epsilon;
  }
  return r;
}

bool EstimateReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const EstimateCheck& c) { return c.violations == 0; });
}

EstimateReport estimate_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t divisor_sum_hi,
                              std::uint64_t q_hi, unsigned k_hi) {
  if (hi < lo) throw InvalidArgument("estimate_suite: empty range");
  const auto spf = spf_sieve(std::max(hi, divisor_sum_hi));
  EstimateCheck divisor{"divisor_bound"}, phi_sum{"phi_sum_bound"}, sqfree{"squarefree_log_bound"},
      sqfree4{"squarefree_quartic_bound"}, euler{"euler_power_bound"};

  for (std::uint64_t m = std::max<std::uint64_t>(lo, 1); m <= hi; ++m) {
    const auto fm = factor_with(spf, m);
    // W(m) < 4.9 m^{1/4}  <=>  10^4 W^4 < 49^4 m
    {
      const std::uint64_t w = std::uint64_t{1} << fm.pe.size();
      const std::uint64_t lhs = 10000 * w * w * w * w, rhs = 5764801ULL * m;
      ++sqfree4.checked;
      const double rel = (static_cast<double>(rhs) - static_cast<double>(lhs)) / static_cast<double>(rhs);
      if (sqfree4.checked == 1 || rel < sqfree4.worst_relative_margin) {
        sqfree4.worst_relative_margin = rel;
        sqfree4.worst_at = m;
      }
      if (lhs >= rhs) {
        if (!sqfree4.violations) sqfree4.first_violation = m;
        ++sqfree4.violations;
      }
    }
    if (m < 3) continue;
    const long double lm = std::log(static_cast<long double>(m));
    const long double loglog = std::log(lm);
    std::uint64_t d = 1;
    for (const auto& [p, e] : fm.pe) d *= e + 1;
    record(divisor, m, static_cast<long double>(d), std::exp(1.1L / loglog * lm));
    const auto ft = factor_with(spf, m - 1);
    record(sqfree, m, static_cast<long double>(std::uint64_t{1} << ft.pe.size()), std::exp(0.96L / loglog * lm));
  }

  for (std::uint64_t m = std::max<std::uint64_t>(lo, 3); m <= divisor_sum_hi; ++m) {
    const auto fm = factor_with(spf, m);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> divs{{1, 1}};  // (d, phi(d))
    for (const auto& [p, e] : fm.pe) {
      const std::size_t base = divs.size();
      std::uint64_t pk = 1, phik = 1;
      for (unsigned i = 1; i <= e; ++i) {
        phik = (i == 1) ? p - 1 : phik * p;
        pk *= p;
        for (std::size_t j = 0; j < base; ++j) divs.push_back({divs[j].first * pk, divs[j].second * phik});
      }
    }
    std::sort(divs.begin(), divs.end());
    const long double lm = std::log(static_cast<long double>(m));
    const long double factor = std::exp(1.1L / std::log(lm) * lm);
    // the left side only jumps at divisors, so x = d is the tightest choice
    long double cum = 0;
    for (const auto& [dv, ph] : divs) {
      cum += static_cast<long double>(ph);
      record(phi_sum, m, cum, static_cast<long double>(dv) * factor);
    }
  }

  for (std::uint64_t q = 2; q <= q_hi; ++q) {
    // (q-1)^k >= 4^{-k/q} q^k  <=>  4 (q-1)^q >= q^q, independent of k
    if (q <= 256) {
      const BigInt lhs = 4 * ipow(BigInt(q - 1), static_cast<unsigned>(q));
      const BigInt rhs = ipow(BigInt(q), static_cast<unsigned>(q));
      for (unsigned k = 1; k <= k_hi; ++k) {
        ++euler.checked;
        if (lhs < rhs) {
          if (!euler.violations) euler.first_violation = q;
          ++euler.violations;
        }
      }
      continue;
    }
    const long double lq = std::log(static_cast<long double>(q)), lq1 = std::log(static_cast<long double>(q - 1));
    for (unsigned k = 1; k <= k_hi; ++k) {
      const long double lhs = k * lq1, rhs = k * lq - k * std::log(4.0L) / q;
      ++euler.checked;
      const double rel = static_cast<double>((lhs - rhs) / rhs);
      if (rel < euler.worst_relative_margin || euler.worst_at == 0) {
        euler.worst_relative_margin = rel;
        euler.worst_at = q;
      }
      if (!(rel > kTieBand)) {
        if (!euler.violations) euler.first_violation = q;
        ++euler.violations;
      }
    }
  }

  EstimateReport out;
  out.checks = {divisor, phi_sum, sqfree, sqfree4, euler};
  return out;
}

}  // namespace knormal
