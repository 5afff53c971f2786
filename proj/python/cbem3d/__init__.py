# Copyright 2026 The cbem3d Authors.
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

"""Constant-element boundary element solver for 3D linear elastostatics."""

import numpy as np

from ._cbem3d import (
    BcKind,
    DegenerateElementError,
    DomainError,
    Error,
    IoError,
    MaterialConstants,
    Mesh,
    ParseError,
    SingularityError,
    SingularSystemError,
    ValidationError,
    _solve,
    bar_mesh,
    box_mesh,
    element_influence,
    format_stl,
    kernel_eval,
    material_constants,
    parse_stl,
    read_stl,
    rigid_body_diagnostic,
)

__version__ = "0.1.0"

_KINDS = {
    "d": BcKind.DISPLACEMENT,
    "displacement": BcKind.DISPLACEMENT,
    "t": BcKind.TRACTION,
    "traction": BcKind.TRACTION,
}


def _kind(k):
    if isinstance(k, BcKind):
        return k
    try:
        return _KINDS[str(k).lower()]
    except KeyError:
        raise ValueError(f"unknown boundary condition kind {k!r}") from None


def solve(mesh, kinds, values, E, nu, interior=None, threads=0):
    """Solve the boundary value problem on `mesh`.

    kinds: one of "D"/"T" (or BcKind) per element; values: (n, 3) prescribed
    displacement or traction. Returns a dict with per-element
    "displacement" and "traction" arrays, "interior_displacement" for the
    optional (m, 3) `interior` points, and solver diagnostics.
    """
    values = np.asarray(values, dtype=float).reshape(-1, 3)
    points = [] if interior is None else [np.asarray(p, dtype=float) for p in np.asarray(interior).reshape(-1, 3)]
    return _solve(mesh, [_kind(k) for k in kinds], values, E, nu, points, threads)


__all__ = [
    "BcKind",
    "DegenerateElementError",
    "DomainError",
    "Error",
    "IoError",
    "MaterialConstants",
    "Mesh",
    "ParseError",
    "SingularityError",
    "SingularSystemError",
    "ValidationError",
    "bar_mesh",
    "box_mesh",
    "element_influence",
    "format_stl",
    "kernel_eval",
    "material_constants",
    "parse_stl",
    "read_stl",
    "rigid_body_diagnostic",
    "solve",
]
