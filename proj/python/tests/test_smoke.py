# Copyright 2026 The ldpfim Authors
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

import ldpfim


def _planted_db():
    return ldpfim.generate_synthetic(
        4000, 10, mean_length=3.0, patterns=[([1, 2, 3], 0.3)], seed=5
    )


def test_exact_top_k_counts_containment():
    rows = [[1, 2], [1, 2], [1]]
    top = ldpfim.exact_top_k(rows, 3)
    assert top == [([1], 3.0), ([2], 2.0), ([1, 2], 2.0)]


def test_noiseless_miner_recovers_exact_top_k():
    rows = _planted_db()
    truth = ldpfim.exact_top_k(rows, 8)
    mined = ldpfim.ldp_fpminer(
        rows, 8, 1.0, seed=3, oracle="exact", enable_cutdown=False,
        pwc=False, cci=False, npb=False, iwc=False,
        height_percentile=1.0, svim_tau=1.0,
    )
    assert ldpfim.ncr(truth, mined) == 1.0
    assert ldpfim.var(truth, mined) < 1e-6


def test_private_miners_are_deterministic():
    rows = _planted_db()
    a = ldpfim.ldp_fpminer(rows, 5, 2.0, seed=11)
    b = ldpfim.ldp_fpminer(rows, 5, 2.0, seed=11)
    assert a == b
    assert len(ldpfim.svsm(rows, 5, 2.0, seed=11)) == 5


def test_oracle_helpers():
    assert ldpfim.optimal_hash_range(math.log(3)) == 4
    assert ldpfim.olh_variance(1.0, math.log(3)) == pytest.approx(4 * 3 / 4)
    assert ldpfim.guessing_probability([0, 2], [0.5, 0.4, 0.3]) == pytest.approx(0.09)


def test_balance_preserves_sum():
    values, dropped = ldpfim.negative_positive_balance([5, -3, 4, -1], seed=1)
    assert sum(values) == 5
    assert min(values) >= 0
    assert dropped == 0


def test_unknown_parameter_rejected():
    with pytest.raises(KeyError):
        ldpfim.ldp_fpminer([[1]], 1, 1.0, bogus=1)
