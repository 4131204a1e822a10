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

#ifndef KNORMAL_CYCLOTOMIC_HPP
#define KNORMAL_CYCLOTOMIC_HPP

// Structured factorization of x^n - 1 over F_q through q-cyclotomic cosets,
// and the polynomial multiplicative functions Phi_q, mu_q and W.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "knormal/poly.hpp"

namespace knormal {

struct PolyFactor {
  Poly base;
  unsigned multiplicity = 0;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Monic irreducible bases, pairwise distinct, in canonical Poly order.
using PolyFactorization = std::vector<PolyFactor>;

/// Irreducible factors of a given degree: `count` distinct ones, each
/// appearing with the same `multiplicity` (p^t, where n = p^t u).
struct DegreeClass {
  unsigned degree = 0;
  std::uint64_t count = 0;
  std::uint64_t multiplicity = 0;
  friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
};

/// Orbits of Z/u under multiplication by q, each sorted, ordered by least element.
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t q, std::uint64_t u);

/// Writes n = p^t * u with gcd(p, u) = 1.
std::pair<unsigned, std::uint64_t> split_characteristic(std::uint64_t p, std::uint64_t n);

/// x^n - 1 over `fq`: each irreducible factor of x^u - 1 is the minimal polynomial
/// of zeta^j over a coset, computed in a splitting extension, and carries
/// multiplicity p^t. The product is checked against x^n - 1. Results are memoized.
PolyFactorization factor_xn_minus_1(const FieldPtr& fq, unsigned n);
PolyFactorization factor_xn_minus_1(std::uint64_t q, unsigned n);

Poly expand(const PolyFactorization& f);

/// Degree data of x^n - 1 from coset sizes ord_d(q), d | u, without building factors.
std::vector<DegreeClass> degree_distribution(std::uint64_t q, unsigned n);
std::vector<DegreeClass> degree_distribution(const PolyFactorization& f);

/// True when every prime divisor of n divides q - 1 and (8 | n implies q = 1 mod 4).
bool closed_form_hypotheses(std::uint64_t q, unsigned n);
/// Degree data from the closed form: for t | m = n / gcd(n, q-1), phi(t) n / (t m)
/// factors of degree t. Empty when closed_form_hypotheses fails.
std::optional<std::vector<DegreeClass>> degree_distribution_closed_form(std::uint64_t q, unsigned n);

/// Unit count of F_q[x]/(f^e) for f irreducible of degree d: (q^d - 1) q^{(e-1) d}.
BigInt phi_q_prime_power(std::uint64_t q, unsigned d, std::uint64_t e);
BigInt phi_q(const PolyFactorization& f);
int mu_q(const PolyFactorization& f);
BigInt squarefree_divisor_count(const PolyFactorization& f);
/// Number of monic divisors, prod (mult_i + 1).
BigInt divisor_count(const PolyFactorization& f);

/// Visits every monic divisor prod base_i^{e_i}, exponent vectors in
/// lexicographic order. Stops early if `visit` returns false.
void for_each_divisor(const PolyFactorization& f,
                      const std::function<bool(const std::vector<unsigned>&, const Poly&)>& visit);

}  // namespace knormal

#endif  // KNORMAL_CYCLOTOMIC_HPP
