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

#ifndef KNORMAL_SEARCH_HPP
#define KNORMAL_SEARCH_HPP

// Finding normal, k-normal and primitive k-normal elements, and the
// exhaustive scans that serve as ground truth for the counting formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knormal/linearized.hpp"

namespace knormal {

enum class Strategy { Random, Exhaustive, ViaNormal };
std::string to_string(Strategy s);
/// "random", "exhaustive" or "via_normal".
Strategy parse_strategy(const std::string& s);

struct Certificate {
  Poly fq_order;
  /// 0 for the zero element, which has no multiplicative order.
  BigInt mult_order;
};

struct SearchOutcome {
  bool found = false;
  /// Set when an exhaustive scan proved that no element qualifies.
  bool verified_absent = false;
  std::optional<FieldElement> witness;
  std::optional<Certificate> certificate;
  std::uint64_t trials = 0;
};

struct SearchOptions {
  Strategy strategy = Strategy::Exhaustive;
  std::uint64_t seed = kDefaultSeed;
  /// Random sampling cap; exhaustive scans are bounded by max_card instead.
  std::uint64_t max_trials = std::uint64_t{1} << 20;
  /// via_normal: normal elements tried per divisor before moving on.
  std::uint64_t per_divisor = 64;
  std::uint64_t max_card = kDefaultMaxCard;
};

/// Random or Exhaustive. The certificate needs the factorization of q^n - 1;
/// the first overload computes it within the default factoring budget.
SearchOutcome find_normal(const FieldCtx& ctx, const SearchOptions& opt = {});
SearchOutcome find_normal(const FieldCtx& ctx, const IntFactorization& fact, const SearchOptions& opt = {});

/// Monic degree-k divisor of x^n - 1 with the lexicographically smallest
/// exponent vector over the canonically ordered irreducible factors.
/// With require_unit_at_one the factor x - 1 is excluded, so f(1) != 0.
std::optional<Poly> divisor_of_degree(const FieldPtr& fq, unsigned n, unsigned k, bool require_unit_at_one = false);
std::optional<Poly> divisor_of_degree(std::uint64_t q, unsigned n, unsigned k, bool require_unit_at_one = false);

/// f o beta for a normal beta and a divisor f of x^n - 1; the F_q-order of
/// the result is checked to be (x^n - 1) / f.
FieldElement make_k_normal(const FieldCtx& ctx, const FieldElement& beta, const Poly& f);

/// Primitive element with normality index k. Exhaustive scans report
/// verified_absent when none exists; random and via_normal never do.
SearchOutcome find_primitive_k_normal(const FieldCtx& ctx, unsigned k, const IntFactorization& fact,
                                      const SearchOptions& opt = {});

/// Number of normal w with f o w primitive, by a full scan.
std::uint64_t count_nf(const FieldCtx& ctx, const Poly& f, const IntFactorization& fact,
                       std::uint64_t max_card = kDefaultMaxCard);

struct BruteForceCensus {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::vector<std::uint64_t> counts;     // N_k
  std::vector<std::uint64_t> max_order;  // among k-normals, 0 when none are invertible
  std::vector<std::uint64_t> primitive;  // primitive k-normals
};

/// Normality index and multiplicative order of every element. Orders come
/// from a discrete-log table over a primitive element.
BruteForceCensus brute_force_census(const FieldCtx& ctx, std::uint64_t max_card = kDefaultMaxCard,
                                    unsigned threads = 1);

/// Recomputes the F_q-order and the multiplicative order from scratch.
bool verify_certificate(const FieldCtx& ctx, const FieldElement& w, const Certificate& cert,
                        const IntFactorization& fact);

Certificate certify(const FieldCtx& ctx, const FieldElement& w, const IntFactorization& fact);

}  // namespace knormal

#endif  // KNORMAL_SEARCH_HPP
