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
"""Genus 2 Heegaard surfaces of Seifert fibered spaces S²(b; β_1/α_1, β_2/α_2, β_3/α_3).

F(i,j) is the surface obtained from the exceptional fibers i and j. With
t fibers satisfying β ≡ ±1 (mod α): t = 0 gives three surfaces, t = 1 merges
the two surfaces through that fiber, t >= 2 leaves a single surface except
on three families where a second one exists:

    E1(a) = S(-1/(6a); 1/2, (-a)⁻¹/3, 6⁻¹/a)        a >= 7 odd, gcd(a, 3) = 1
    E2(a) = S(-1/(3a); (-1)⁻¹/3, (-a)⁻¹/3, 3⁻¹/a)   a >= 7, gcd(a, 3) = 1
    E3(b) = S(-1/(4b); 1/2, (-b)⁻¹/4, 4⁻¹/b)        b >= 5 odd

where the first entry is the Euler number and x⁻¹/n means the residue of
the inverse of x modulo n over n.
"""
from __future__ import annotations

import math
from fractions import Fraction

from absl import logging

from ..errors import ValidationError
from ..rationals import Slope, SlopeTuple
from ..seifert import Base, SeifertInvariants, normalize_seifert, same_seifert_space
from ..types import HeegaardCount

_PAIRS = ((1, 2), (2, 3), (3, 1))

# family -> denominators with the parameter last
EXCEPTIONAL_SHAPES = {"E1": (2, 3), "E2": (3, 3), "E3": (2, 4)}


def _label(pair: tuple[int, int]) -> str:
    return f"F({pair[0]},{pair[1]})"


def _inverse(x: int, n: int) -> int:
    return pow(x % n, -1, n)


def exceptional_member(family: str, param: int) -> SeifertInvariants | None:
    """Member of an exceptional family, or None when the parameter is not admissible.

    E2(a) has no member when a ≡ 2 (mod 3): the fibers then sum to 1 + x/a with
    3x ≡ 1 (mod a), and b = (1 - 3x)/(3a) - 1 is never an integer.

    Args:
        family: "E1", "E2" or "E3".
        param: The parameter a (E1, E2) or b (E3).

    Returns:
        Sphere based invariants in canonical form, or None.
    """
    if family == "E1":
        if param < 7 or param % 2 == 0 or math.gcd(param, 3) != 1:
            return None
        fracs = [(1, 2), (_inverse(-param, 3), 3), (_inverse(6, param), param)]
        euler = Fraction(-1, 6 * param)
    elif family == "E2":
        if param < 7 or math.gcd(param, 3) != 1:
            return None
        fracs = [(_inverse(-1, 3), 3), (_inverse(-param, 3), 3), (_inverse(3, param), param)]
        euler = Fraction(-1, 3 * param)
    elif family == "E3":
        if param < 5 or param % 2 == 0:
            return None
        fracs = [(1, 2), (_inverse(-param, 4), 4), (_inverse(4, param), param)]
        euler = Fraction(-1, 4 * param)
    else:
        raise ValidationError(f"unknown exceptional family {family!r}")
    slopes = SlopeTuple(tuple(Slope(num, den) for num, den in fracs))
    b = -euler - slopes.total()
    if b.denominator != 1:
        logging.debug("%s(%d): b = %s is not integral, no member", family, param, b)
        return None
    return SeifertInvariants(Base.SPHERE, int(b), slopes)


def match_exceptional(inv: SeifertInvariants) -> str | None:
    """Name of the exceptional family member equal to `inv`, e.g. "E1(7)"."""
    dens = tuple(sorted(inv.slopes.denominators))
    for family, shape in EXCEPTIONAL_SHAPES.items():
        if dens[:2] != shape:
            continue
        member = exceptional_member(family, dens[2])
        if member is not None and same_seifert_space(inv, member, orientation_sensitive=False):
            return f"{family}({dens[2]})"
    return None


def genus2_heegaard_count(inv: SeifertInvariants) -> HeegaardCount:
    """Counts genus 2 Heegaard surfaces up to isotopy.

    Args:
        inv: Sphere based invariants with three exceptional fibers.

    Returns:
        HeegaardCount: The count, surface labels and exceptional match.

    Raises:
        ValidationError: if the base is not the sphere or there are not three fibers.
    """
    if inv.base is not Base.SPHERE or len(inv.slopes) != 3:
        raise ValidationError(f"expected three exceptional fibers over the sphere, got {inv}")
    canonical = normalize_seifert(inv)
    special = [k for k, s in enumerate(canonical.slopes, start=1) if s.num in (1, s.den - 1)]
    logging.debug("%s: fibers with β ≡ ±1: %s", inv, special)
    if not special:
        return HeegaardCount(3, tuple(_label(p) for p in _PAIRS), False)
    if len(special) == 1:
        k = special[0]
        merged = "=".join(_label(p) for p in _PAIRS if k in p)
        alone = next(_label(p) for p in _PAIRS if k not in p)
        return HeegaardCount(2, (alone, merged), False)
    single = "=".join(_label(p) for p in _PAIRS)
    family = match_exceptional(canonical)
    if family is not None:
        return HeegaardCount(2, (single, "exceptional"), True, family)
    return HeegaardCount(1, (single,), False)
