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

"""Locally differentially private frequent itemset mining."""

from ldpfim._core import (
    exact_top_k,
    generate_synthetic,
    grr_variance,
    guessing_probability,
    ldp_fpminer,
    load_transactions,
    ncr,
    negative_positive_balance,
    olh_variance,
    optimal_hash_range,
    svsm,
    var,
)

__all__ = [
    "exact_top_k",
    "generate_synthetic",
    "grr_variance",
    "guessing_probability",
    "ldp_fpminer",
    "load_transactions",
    "ncr",
    "negative_positive_balance",
    "olh_variance",
    "optimal_hash_range",
    "svsm",
    "var",
]
