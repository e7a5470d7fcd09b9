# Copyright 2026 The Bridgekit Authors
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
"""Symmetry groups of elliptic Montesinos links."""
from __future__ import annotations

import math

from absl import logging

from ..errors import CoverageError, ValidationError
from ..links import MontesinosLink, is_elliptic_montesinos
from ..rationals import Slope
from ..types import SymmetryGroup

Z2 = "Z2"
Z2_Z2 = "Z2⊕Z2"
Z2_D3 = "Z2⊕D3"


def _halves_to_one(link: MontesinosLink) -> tuple[int, list[Slope]]:
    """Rewrites every (2k+1)/2 as 1/2 and moves the k's into b.

    The link only depends on Σβ/α - b, so the returned b and slopes
    describe the same link.
    """
    b = link.b
    rest = []
    for s in link.slopes:
        if s.den == 2:
            b -= (s.num - 1) // 2
        else:
            rest.append(s)
    return b, rest


def _dihedral_case(b: int, alpha: int, beta: int) -> SymmetryGroup:
    m = (1 - b) * alpha + beta
    if math.gcd(m, 2 * alpha) == 1:
        if alpha == 2:
            return SymmetryGroup(Z2_D3, ("psi1", "psi3"), "i-1", m)
        if m != 1 or alpha % 2 == 0:
            return SymmetryGroup(Z2_Z2, ("psi1", "psi2"), "i-1", m)
        return SymmetryGroup(Z2, ("psi1",), "i-1", m)
    if m % 2 == 0 and math.gcd(m, alpha) == 1:
        return SymmetryGroup(Z2_Z2, ("psi1", "psi2"), "i-2", m)
    raise CoverageError(f"m={m} with α={alpha} is outside the case coverage of the symmetry classification")


def elliptic_symmetry_group(link: MontesinosLink) -> SymmetryGroup:
    """Sym(S³, L) of an elliptic Montesinos link with three tangles.

    Args:
        link: An elliptic Montesinos link.

    Returns:
        SymmetryGroup: Name, generating involutions psi1..psi4, the case and m.

    Raises:
        ValidationError: if the link is not an elliptic Montesinos link.
        CoverageError: if the arithmetic falls outside the enumerated cases.
    """
    if not isinstance(link, MontesinosLink):
        raise ValidationError(f"expected a Montesinos link, got {link}")
    if not is_elliptic_montesinos(link):
        raise ValidationError(f"{link} is not elliptic")
    b, rest = _halves_to_one(link)
    dens = tuple(sorted(link.slopes.denominators))
    if dens[:2] == (2, 2):
        # (2, 2, 2) leaves no slope behind; any of the halves plays β/α
        beta, alpha = (rest[0].num, rest[0].den) if rest else (1, 2)
        result = _dihedral_case(b, alpha, beta)
    elif dens == (2, 3, 3):
        m = -6 * b + 3 + 2 * sum(s.num for s in rest)
        if math.gcd(m, 12) == 1 and m != 1:
            result = SymmetryGroup(Z2_Z2, ("psi1", "psi4"), "ii", m)
        else:
            result = SymmetryGroup(Z2, ("psi1",), "ii", m)
    else:
        result = SymmetryGroup(Z2, ("psi1",), "iii")
    logging.debug("%s: Sym = %s (case %s)", link, result.name, result.case)
    return result
