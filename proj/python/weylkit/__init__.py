# Copyright 2026 The weylkit Authors
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

"""Weyl-Heisenberg operator basis, dilations and Kraus channels on C^d."""

import json

from ._core import (
    DomainError,
    InternalConsistencyError,
    ParseError,
    ShapeError,
    ValidationError,
    apply_channel,
    basis,
    channel_from_dilation,
    channels_equal,
    choi_matrix,
    commutator_in_basis,
    decompose,
    evolve_density,
    evolve_pure,
    is_trace_preserving,
    kraus_from_isometry,
    make_isometry,
    omega,
    partial_trace_env,
    reconstruct,
    verify_json,
    weyl_channel,
    weyl_element,
    weyl_form,
)


def verify(dims, seed=None, include_timing=True):
    """Run the invariant suite and return the report as a dict."""
    kwargs = {"include_timing": include_timing}
    if seed is not None:
        kwargs["seed"] = seed
    return json.loads(verify_json(list(dims), **kwargs))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
