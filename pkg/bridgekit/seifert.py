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
"""Seifert invariants and double branched cover descriptions.

Invariants are written (b; β_1/α_1, ..., β_r/α_r) with Euler number
e = -(b + Σ β_i/α_i). Normalization moves the integer part of every slope
into b, which leaves e unchanged.
"""
from __future__ import annotations

import dataclasses
import enum
from collections.abc import Sequence
from fractions import Fraction

from .errors import ValidationError
from .rationals import Slope, SlopeTuple

FIBER_HORIZONTAL = "fiber<->horizontal"


class Base(str, enum.Enum):
    """Base orbifold of a Seifert fibration."""

    DISK = "D"
    SPHERE = "S2"
    ANNULUS = "A"
    MOBIUS = "Mo"


@dataclasses.dataclass(frozen=True)
class SeifertInvariants:
    """Seifert invariants of a fibered piece.

    Attributes:
        base: The base orbifold.
        b: Integral twist of the section.
        slopes: Exceptional fiber slopes β_i/α_i.
    """

    base: Base
    b: int
    slopes: SlopeTuple

    @property
    def euler_number(self) -> Fraction:
        return -(self.b + self.slopes.total())

    @property
    def is_canonical(self) -> bool:
        return all(0 < s.num < s.den for s in self.slopes)

    def __str__(self) -> str:
        body = ",".join(str(s) for s in self.slopes)
        if self.base is Base.SPHERE or self.b:
            return f"{self.base.value}({self.b};{body})"
        return f"{self.base.value}({body})"


def normalize_seifert(inv: SeifertInvariants) -> SeifertInvariants:
    """Reduces every slope into (0, α), absorbing quotients into b.

    Args:
        inv: Invariants with all α >= 2.

    Returns:
        The canonical invariants; the Euler number is unchanged.
    """
    b = inv.b
    slopes = []
    for s in inv.slopes:
        if s.den < 2:
            raise ValidationError(f"exceptional fiber {s} needs α >= 2")
        q, r = divmod(s.num, s.den)
        b += q
        slopes.append(Slope(r, s.den))
    return SeifertInvariants(inv.base, b, SlopeTuple(tuple(slopes)))


def mirror_seifert(inv: SeifertInvariants) -> SeifertInvariants:
    """Invariants of the orientation reversed manifold."""
    slopes = SlopeTuple(tuple(Slope(-s.num, s.den) for s in inv.slopes))
    return SeifertInvariants(inv.base, -inv.b, slopes)


def _signature(inv: SeifertInvariants) -> tuple[Fraction, tuple[Slope, ...]]:
    canonical = normalize_seifert(inv)
    return canonical.euler_number, tuple(sorted(canonical.slopes))


def same_seifert_space(a: SeifertInvariants, b: SeifertInvariants, orientation_sensitive: bool = True) -> bool:
    """Compares two small Seifert fibered spaces over the sphere.

    Args:
        a: First invariants, sphere base with three slopes.
        b: Second invariants, sphere base with three slopes.
        orientation_sensitive: When False, `b` also matches through its
            mirror image.

    Returns:
        True iff the normalized slope multisets and Euler numbers agree.

    Raises:
        ValidationError: if a base is not the sphere or a fiber count is wrong.
    """
    for inv in (a, b):
        if inv.base is not Base.SPHERE or len(inv.slopes) != 3:
            raise ValidationError(f"expected a sphere base with three fibers, got {inv}")
    if _signature(a) == _signature(b):
        return True
    return not orientation_sensitive and _signature(a) == _signature(mirror_seifert(b))


@dataclasses.dataclass(frozen=True)
class CoverPiece:
    """One Seifert fibered piece of a double branched cover."""

    name: str
    invariants: SeifertInvariants

    def __str__(self) -> str:
        return str(self.invariants)


@dataclasses.dataclass(frozen=True)
class CoverDescription:
    """Double branched cover as Seifert pieces glued along tori.

    Attributes:
        form: Name of the decomposition, e.g. "M4".
        pieces: The Seifert pieces.
        gluings: (i, j, tag) triples; `tag` names how fibers are matched.
    """

    form: str
    pieces: tuple[CoverPiece, ...]
    gluings: tuple[tuple[int, int, str], ...] = ()

    def to_dict(self) -> dict:
        return {
            "form": self.form,
            "pieces": [{"name": p.name, "invariants": str(p)} for p in self.pieces],
            "gluings": [list(g) for g in self.gluings],
        }


def disk_piece(name: str, slopes: Sequence[Slope] | SlopeTuple) -> CoverPiece:
    return CoverPiece(name, SeifertInvariants(Base.DISK, 0, SlopeTuple(tuple(slopes))))
