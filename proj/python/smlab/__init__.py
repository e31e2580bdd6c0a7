# Copyright 2026 The smlab Authors.
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

"""Python bindings for the smlab string matching workbench."""

from ._smlab import (
    CapacityError,
    InputError,
    ParameterError,
    build_circuit,
    count_avoiding,
    count_zero_preimages,
    erm_learn,
    min_maxterm_width,
    pac_experiment,
    period_orders,
    shattered_exact_k,
    shattered_multi,
    shattered_set,
    sm,
    tm_family,
    vc_exact,
    verify_circuit,
    verify_protocol,
)

__all__ = [
    "CapacityError",
    "InputError",
    "ParameterError",
    "build_circuit",
    "count_avoiding",
    "count_zero_preimages",
    "erm_learn",
    "min_maxterm_width",
    "pac_experiment",
    "period_orders",
    "shattered_exact_k",
    "shattered_multi",
    "shattered_set",
    "sm",
    "tm_family",
    "vc_exact",
    "verify_circuit",
    "verify_protocol",
]
