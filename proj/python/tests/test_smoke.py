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

import math

import pytest

import knormal


def test_census():
    r = knormal.census(2, 3)
    assert r["counts"] == [3, 3, 1, 1]
    assert r["practical"]
    assert knormal.census(5, 4)["counts"] == [256, 256, 96, 16, 1]
    big = knormal.census(2, 80)
    assert sum(big["counts"]) == 2**80
    assert big["counts"][0] > 2**64


def test_count_and_practical():
    assert knormal.count_k_normal(2, 5, 2) == 0
    assert knormal.count_k_normal(3, 2, 1) == 4
    assert not knormal.is_fq_practical(2, 5)
    assert knormal.is_fq_practical(3, 6)
    assert knormal.prime_divisor_condition(5, 10)
    with pytest.raises(ValueError):
        knormal.count_k_normal(2, 3, 4)


def test_factor():
    assert knormal.factor_xn_minus_1(3, 4) == [([1, 1], 1), ([2, 1], 1), ([1, 0, 1], 1)]
    assert knormal.factor_xn_minus_1(2, 4) == [([1, 1], 4)]


def test_bounds():
    assert knormal.sieve_condition(2, 8, 0) == "true"
    assert knormal.sieve_condition(2, 8, 1) == "false"
    assert knormal.sieve_condition(2, 127, 0, factor_bits=16) == "unknown"
    assert knormal.table_condition(567, 16, 2)
    assert not knormal.table_condition(566, 16, 2)
    assert knormal.asymptotic_condition(1024, 100, 0)
    assert math.isclose(knormal.tau_lower_bound(2, 8, 1), 0.0284, rel_tol=5e-3)
    b = knormal.bounds(2, 8, 1)
    assert b["sieve"] == "false" and b["tau"] is not None


def test_divisors():
    assert knormal.divisor_of_degree(3, 4, 2) == [1, 0, 1]
    assert knormal.divisor_of_degree(2, 5, 2) is None
    assert knormal.constructive_divisor_prime_power(5, 2, 2, 2) == [1, 0, 1]
    f = knormal.practical_divisor(3, 6, 4)
    assert len(f) == 5


def test_search():
    cert = knormal.search(2, 3, 1, primitive=True)
    assert cert["found"] and cert["mult_order"] == 7
    assert cert["fq_order"] == "q=2:1,1,1"
    absent = knormal.search(3, 4, 2, primitive=True)
    assert absent["verified_absent"] and not absent["found"]
    with pytest.raises(knormal.BudgetExceeded):
        knormal.search(2, 3, 0, max_card=4)


def test_brute_force_census():
    r = knormal.brute_force_census(3, 4)
    assert r["counts"] == knormal.census(3, 4)["counts"]
    assert r["max_order"][2] == 16
    assert r["primitive"][2] == 0


def test_verify_and_survey():
    results = knormal.verify("census", max_card=1024)
    assert [r["id"] for r in results] == [1, 2, 3]
    assert all(r["passed"] for r in results)
    csv = knormal.survey_csv(2, 3, 1, 2)
    assert csv.splitlines()[0] == "# knormal-survey v1"
