# Copyright 2026 The corfl Authors
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

"""Greedy co-selection of image regions over a similarity graph.

The heavy lifting lives in the compiled ``_corfl`` extension; this package
re-exports it.
"""

from ._corfl import (
    Error,
    Objective,
    SelectionResult,
    SimilarityGraph,
    center_bias,
    eval_h_closed,
    eval_h_direct,
    generate_synthetic,
    kernelize,
    kernelize_matrix,
    make_templates,
    pairwise_smooth,
    run_classify,
    run_demo,
    run_select,
    run_synth,
    set_distance,
    sparsify_eps,
    sparsify_knn,
)

__all__ = [
    "Error",
    "Objective",
    "SelectionResult",
    "SimilarityGraph",
    "center_bias",
    "eval_h_closed",
    "eval_h_direct",
    "generate_synthetic",
    "kernelize",
    "kernelize_matrix",
    "make_templates",
    "pairwise_smooth",
    "run_classify",
    "run_demo",
    "run_select",
    "run_synth",
    "set_distance",
    "sparsify_eps",
    "sparsify_knn",
]

__version__ = "0.1.0"
