# Copyright 2026 The extmatch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Stable matchings with externalities.

Matchings are lists of (man, woman) label pairs; exact values come back as
fractions.Fraction.
"""

from extmatch._core import (
    Error,
    Game,
    GuardError,
    PreconditionError,
    ValidationError,
    check,
    classify_edges,
    fpt_optimistic,
    inclusion_audit,
    knapsack_bruteforce,
    max_weight_assignment,
    reduce_knapsack,
    solve_gs_neutral,
    solve_restricted_pessimistic,
    stable_set,
)

__all__ = [
    "Error",
    "Game",
    "GuardError",
    "PreconditionError",
    "ValidationError",
    "check",
    "classify_edges",
    "fpt_optimistic",
    "inclusion_audit",
    "knapsack_bruteforce",
    "max_weight_assignment",
    "reduce_knapsack",
    "solve_gs_neutral",
    "solve_restricted_pessimistic",
    "stable_set",
]
