# Copyright 2026 The truthful-arch Authors
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

"""Exact-arithmetic architecture selection mechanisms.

Numbers cross the boundary as fractions.Fraction; int, str and float
inputs are accepted wherever a number is expected.
"""

from truthful_arch._core import *  # noqa: F401,F403

__all__ = [
    "Alternative",
    "BenefitProfile",
    "Error",
    "GsScanResult",
    "GsWitness",
    "ManipulationReport",
    "MechanismKind",
    "MechanismOutcome",
    "MechanismSpec",
    "Scenario",
    "Stakeholder",
    "VcgTrace",
    "apply_mechanism",
    "argmax_set",
    "cbam_desirability",
    "cbam_select",
    "contribution_to_benefit",
    "dictator_select",
    "dictatorial_cbam_select",
    "evaluate_rule",
    "format_decimal",
    "gs_scan",
    "load_scenario",
    "parse_decimal",
    "parse_mechanism",
    "parse_scenario",
    "search",
    "search_coalition",
    "search_unilateral",
    "select_report",
    "validate_scenario",
    "vcg_select",
    "verify_truthfulness",
]
