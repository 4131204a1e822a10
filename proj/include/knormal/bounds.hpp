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

#ifndef KNORMAL_BOUNDS_HPP
#define KNORMAL_BOUNDS_HPP

// Decision procedures for the existence inequalities. All logarithms are natural.
// Comparisons that involve fractional powers are cleared to integer powers and
// decided exactly; floating point only reports margins.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knormal/common.hpp"

namespace knormal {

enum class Tri { False, True, Unknown };
std::string to_string(Tri t);

/// Relative band inside which a floating-point verdict is not trusted.
inline constexpr double kTieBand = 1e-9;

struct SieveResult {
  Tri holds = Tri::Unknown;
  /// (n/2 - k) log q - log(W(q^n-1) W(x^n-1)); NaN when unknown.
  double margin = 0.0;
  std::optional<BigInt> w_group;  // W(q^n - 1), absent when unknown
  BigInt w_poly;                  // W(x^n - 1)
};

/// q^{n/2-k} >= W(q^n - 1) W(x^n - 1), decided as q^{n-2k} >= (W W)^2.
/// Unknown when q^n - 1 cannot be factored within `factor_bits`.
SieveResult sieve_condition(std::uint64_t q, unsigned n, unsigned k, unsigned factor_bits = kDefaultFactorBits);

struct AsymptoticResult {
  bool holds = false;
  /// n (1/2 - 0.96 / (log n + log log q) - log_q 2)
  double bound = 0.0;
  double margin = 0.0;  // bound - k
};

/// k <= bound, with ties inside kTieBand resolved to false. Requires n >= 2.
AsymptoticResult asymptotic_condition(std::uint64_t q, unsigned n, unsigned k);

struct TableResult {
  bool holds = false;
  bool k_in_range = false;  // k <= n/8
  bool inequality = false;  // (q/256)^{n/8} >= 4.9
  double margin = 0.0;      // (n/8) log(q/256) - log 4.9
};

/// (q/256)^{n/8} >= 4.9 decided as 10^8 q^n >= 49^8 256^n, together with 8k <= n.
TableResult table_condition(std::uint64_t q, unsigned n, unsigned k);

struct TauResult {
  double tau = 0.0;
  double log_tau = 0.0;
  /// 1.1 / log log(q^n - 1) + log 4 / (q log q)
  double epsilon = 0.0;
  /// q^{n(1 - epsilon) - k}, a lower bound for tau
  double epsilon_form = 0.0;
};

/// 4^{(k-n)/q} q^{n - k - 1.1 n / log log(q^n - 1)}. Requires n >= 2,
/// 1 <= k <= n - 1 and log log(q^n - 1) > 0.
TauResult tau_lower_bound(std::uint64_t q, unsigned n, unsigned k);

struct BoundsReport {
  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned k = 0;
  Tri sieve_holds = Tri::Unknown;
  bool asymptotic_holds = false;
  bool table_holds = false;
  std::optional<double> tau;  // absent outside the tau hypotheses
  std::map<std::string, double> margins;
};

BoundsReport bounds_report(std::uint64_t q, unsigned n, unsigned k, unsigned factor_bits = kDefaultFactorBits);

struct EstimateCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t first_violation = 0;
  /// smallest observed (rhs - lhs) / rhs
  double worst_relative_margin = 0.0;
  std::uint64_t worst_at = 0;
};

struct EstimateReport {
  std::vector<EstimateCheck> checks;
  bool ok() const;
};

/// Verifies on [lo, hi]:
///   d(m) < m^{1.1 / log log m}                        (m >= 3)
///   sum_{d | m, d <= x} phi(d) < x m^{1.1/log log m}  (m <= divisor_sum_hi, every x)
///   W(t - 1) < t^{0.96 / log log t}                    (t >= 3)
///   W(m) < 4.9 m^{1/4}
/// and (q - 1)^k >= 4^{-k/q} q^k for 2 <= q <= q_hi, 1 <= k <= k_hi.
EstimateReport estimate_suite(std::uint64_t lo, std::uint64_t hi, std::uint64_t divisor_sum_hi,
                              std::uint64_t q_hi, unsigned k_hi);

}  // namespace knormal

#endif  // KNORMAL_BOUNDS_HPP
