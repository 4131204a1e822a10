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

#include "knormal/census.hpp"

#include <numeric>

#include "knormal/integer.hpp"

namespace knormal {

namespace {

using BigPoly = std::vector<BigInt>;

BigPoly multiply(const BigPoly& a, const BigPoly& b, std::size_t max_deg) {
  BigPoly r(std::min(a.size() + b.size() - 1, max_deg + 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

BigPoly power(BigPoly base, std::uint64_t e, std::size_t max_deg) {
  BigPoly r{1};
  while (e) {
    if (e & 1) r = multiply(r, base, max_deg);
    e >>= 1;
    if (e) base = multiply(base, base, max_deg);
  }
  return r;
}

}  // namespace

const BigInt& CensusReport::count_k_normal(unsigned k) const {
  if (k > n) throw InvalidArgument("k must lie in [0, n]");
  return coeffs[n - k];
}

BigInt CensusReport::total() const { return std::accumulate(coeffs.begin(), coeffs.end(), BigInt(0)); }

CensusReport enumerator_polynomial(std::uint64_t q, unsigned n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  BigPoly acc{1};
  const auto classes = degree_distribution(q, n);
  for (const auto& [d, count, mult] : classes) {
    BigPoly block(d * mult + 1, 0);
    block[0] = 1;
    for (std::uint64_t e = 1; e <= mult; ++e) block[e * d] = phi_q_prime_power(q, d, e);
    acc = multiply(acc, power(block, count, n), n);
  }
  acc.resize(n + 1, 0);
  CensusReport r{q, n, std::move(acc), false};
  r.practical = degrees_cover(classes, n);
  return r;
}

BigInt count_k_normal(std::uint64_t q, unsigned n, unsigned k) {
  if (k > n) throw InvalidArgument("k must lie in [0, n]");
  return enumerator_polynomial(q, n).count_k_normal(k);
}

std::vector<bool> reachable_degrees(const std::vector<DegreeClass>& classes, unsigned n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (const auto& c : classes) {
    const std::uint64_t avail = c.count * c.multiplicity;
    // used[s]: copies of this degree consumed to reach s for the first time
    std::vector<std::uint64_t> used(n + 1, 0);
    for (unsigned s = c.degree; s <= n; ++s) {
      if (!reach[s] && reach[s - c.degree] && used[s - c.degree] < avail) {
        reach[s] = true;
        used[s] = used[s - c.degree] + 1;
      }
    }
  }
  return reach;
}

bool degrees_cover(const std::vector<DegreeClass>& classes, unsigned n) {
  const auto reach = reachable_degrees(classes, n);
  return std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
}

bool is_fq_practical(std::uint64_t q, unsigned n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  return degrees_cover(degree_distribution(q, n), n);
}

bool prime_divisor_condition(std::uint64_t q, unsigned n) {
  if (n < 2) throw InvalidArgument("prime_divisor_condition needs n >= 2");
  const auto pp = PrimePower::from_q(q);
  const std::uint64_t target = pp.p * (q - 1);
  for (auto r : distinct_prime_factors(n)) {
    if (target % r != 0) return false;
  }
  return true;
}

ClosedFormReport closed_form_cross_check(std::uint64_t q, unsigned n) {
  const auto pp = PrimePower::from_q(q);
  ClosedFormReport r;
  const auto [t, u] = split_characteristic(pp.p, n);
  if (u == 1) {
    r.applicable = true;
    r.form = "prime_power";
    r.expected.assign(n + 1, 0);
    r.expected[0] = 1;
    for (unsigned i = 1; i <= n; ++i) r.expected[i] = BigInt(q - 1) * ipow(BigInt(q), i - 1);
  } else if (closed_form_hypotheses(q, n)) {
    r.applicable = true;
    r.form = "split";
    const std::uint64_t m = n / std::gcd<std::uint64_t>(n, q - 1);
    BigPoly acc{1};
    for (auto t_div : divisors(m)) {
      BigPoly block(t_div + 1, 0);
      block[0] = 1;
      block[t_div] = ipow(BigInt(q), static_cast<unsigned>(t_div)) - 1;
      acc = multiply(acc, power(block, euler_phi(t_div) * n / (t_div * m), n), n);
    }
    acc.resize(n + 1, 0);
    r.expected = std::move(acc);
  } else {
    return r;
  }
  r.matches = r.expected == enumerator_polynomial(q, n).coeffs;
  return r;
}

}  // namespace knormal
