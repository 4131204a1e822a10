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

#ifndef KNORMAL_SERIALIZE_HPP
#define KNORMAL_SERIALIZE_HPP

// Stable JSON and CSV renderings. Integers beyond 64 bits are emitted as
// decimal strings; keys keep insertion order.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "knormal/bounds.hpp"
#include "knormal/census.hpp"
#include "knormal/search.hpp"

namespace knormal {

using Json = nlohmann::ordered_json;

/// A number when it fits in uint64, a decimal string otherwise.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

/// {"q", "n", "counts": {"N_0": .., ..., "N_n": ..}, "practical"}
Json to_json(const CensusReport& r);
CensusReport census_from_json(const Json& j);

/// {"q", "n", "k", "sieve", "asymptotic", "table", "tau", "margins"}
Json to_json(const BoundsReport& r);

/// {"q", "n", "factors": [{"poly", "degree", "multiplicity"}]}
Json to_json(std::uint64_t q, unsigned n, const PolyFactorization& f);

/// Field description with both moduli, enough to rebuild the context.
Json field_json(const FieldCtx& ctx);
/// Rebuilds the field described by field_json.
FieldCtx field_from_json(const Json& j);

/// {"field", "k", "strategy", "seed", "found", "verified_absent", "trials",
///  "witness", "fq_order", "mult_order"}
Json to_json(const FieldCtx& ctx, unsigned k, const SearchOutcome& out, Strategy strategy, std::uint64_t seed);

/// Parse then dump; a stable document round-trips byte for byte.
std::string dump(const Json& j);

inline constexpr const char* kSurveyHeader = "# knormal-survey v1";
inline constexpr const char* kSurveyColumns = "q,n,k,N_k,practical,sieve,asymptotic,table,tau";

/// One row per (q, n, k) for prime powers q in [q_lo, q_hi] and n in [n_lo, n_hi],
/// sorted by (q, n, k), preceded by the versioned header and column line.
std::string survey_csv(std::uint64_t q_lo, std::uint64_t q_hi, unsigned n_lo, unsigned n_hi,
                       unsigned factor_bits = kDefaultFactorBits);

}  // namespace knormal

#endif  // KNORMAL_SERIALIZE_HPP
