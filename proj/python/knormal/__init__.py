# Copyright 2026 The knormal Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""k-normal elements of finite field extensions F_{q^n} / F_q.

Polynomials are lists of F_q coefficients, constant term first. For q = p^s,
a coefficient c stands for the element whose base-p digits are its
coordinates in the basis 1, y, ..., y^{s-1} of F_q = F_p[y]/(g).
"""

from ._knormal import (
    DEFAULT_FACTOR_BITS,
    DEFAULT_MAX_CARD,
    DEFAULT_SEED,
    BudgetExceeded,
    asymptotic_condition,
    bounds,
    brute_force_census,
    census,
    constructive_divisor_prime_power,
    count_k_normal,
    divisor_of_degree,
    factor_xn_minus_1,
    is_fq_practical,
    prime_divisor_condition,
    practical_divisor,
    search,
    sieve_condition,
    survey_csv,
    table_condition,
    tau_lower_bound,
    verify,
)

__all__ = [
    "DEFAULT_FACTOR_BITS",
    "DEFAULT_MAX_CARD",
    "DEFAULT_SEED",
    "BudgetExceeded",
    "asymptotic_condition",
    "bounds",
    "brute_force_census",
    "census",
    "constructive_divisor_prime_power",
    "count_k_normal",
    "divisor_of_degree",
    "factor_xn_minus_1",
    "is_fq_practical",
    "prime_divisor_condition",
    "practical_divisor",
    "search",
    "sieve_condition",
    "survey_csv",
    "table_condition",
    "tau_lower_bound",
    "verify",
]
