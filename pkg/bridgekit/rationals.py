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
"""Exact slopes, slope tuples and the tuple equivalence used by the census.

Two tuples (s_1, ..., s_r) and (t_1, ..., t_r) are equivalent when the
entries agree modulo the integers, either in order or after reversing one
tuple, and the exact sums agree. Slopes are therefore stored exactly and
only reduced modulo Z inside the entrywise comparison.
"""
from __future__ import annotations

import dataclasses
import math
import re
from collections.abc import Iterator
from fractions import Fraction
from typing import Union

from .errors import LinkSyntaxError, ValidationError

SlopeLike = Union["Slope", str, Fraction, tuple[int, int]]

_SLOPE_RE = re.compile(r"^\s*(-?\d+)\s*/\s*(-?\d+)\s*$")

# fixed scan order for sign pairs
EPSILON_SCAN: tuple[tuple[int, int], ...] = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclasses.dataclass(frozen=True, order=True)
class Slope:
    """A reduced rational β/α.

    Attributes:
        num: The numerator β.
        den: The denominator α, always positive.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1 or math.gcd(abs(self.num), self.den) != 1:
            raise ValidationError(f"{self.num}/{self.den} is not a reduced slope, use slope_normalize()")

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def residue(self) -> Fraction:
        """Representative of the slope modulo Z, in [0, 1)."""
        return self.value % 1

    @classmethod
    def coerce(cls, item: SlopeLike) -> Slope:
        """Builds a slope from a `Slope`, a "p/q" string, a `Fraction` or a pair."""
        if isinstance(item, Slope):
            return item
        if isinstance(item, str):
            return parse_slope(item)
        if isinstance(item, Fraction):
            return cls(item.numerator, item.denominator)
        p, q = item
        return slope_normalize(p, q)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def slope_normalize(p: int, q: int) -> Slope:
    """Reduces p/q to lowest terms with a positive denominator.

    Args:
        p: Numerator.
        q: Denominator, non zero.

    Returns:
        The reduced `Slope`.

    Raises:
        ValidationError: if `q` is zero.
    """
    if q == 0:
        raise ValidationError(f"degenerate slope {p}/{q}")
    value = Fraction(p, q)
    return Slope(value.numerator, value.denominator)


def parse_slope(text: str) -> Slope:
    """Parses the "p/q" text form, e.g. "-2/5"."""
    match = _SLOPE_RE.match(text)
    if match is None:
        raise LinkSyntaxError("expected a slope p/q", text, 0)
    return slope_normalize(int(match.group(1)), int(match.group(2)))


@dataclasses.dataclass(frozen=True)
class SlopeTuple:
    """An ordered, non empty tuple of slopes."""

    entries: tuple[Slope, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValidationError("a slope tuple needs at least one entry")

    @classmethod
    def of(cls, *items: SlopeLike) -> SlopeTuple:
        return cls(tuple(Slope.coerce(item) for item in items))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Slope]:
        return iter(self.entries)

    def __getitem__(self, idx: int) -> Slope:
        return self.entries[idx]

    def reversed(self) -> SlopeTuple:
        return SlopeTuple(self.entries[::-1])

    def total(self) -> Fraction:
        """Exact sum of the entries."""
        return sum((s.value for s in self.entries), Fraction(0))

    def residues(self) -> tuple[Fraction, ...]:
        return tuple(s.residue() for s in self.entries)

    @property
    def denominators(self) -> tuple[int, ...]:
        return tuple(s.den for s in self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(s) for s in self.entries) + ")"


def tuples_equivalent(a: SlopeTuple, b: SlopeTuple) -> bool:
    """Tests the slope-tuple equivalence.

    Args:
        a: First tuple.
        b: Second tuple, same length as `a`.

    Returns:
        True iff the entries agree modulo Z in order or reversed, and the
        exact sums are equal.

    Raises:
        ValidationError: if the lengths differ.
    """
    if len(a) != len(b):
        raise ValidationError(f"cannot compare slope tuples of lengths {len(a)} and {len(b)}")
    if a.total() != b.total():
        return False
    ra = a.residues()
    rb = b.residues()
    return ra == rb or ra == rb[::-1]


def _check_pair(p: SlopeTuple) -> None:
    if len(p) != 2:
        raise ValidationError(f"expected a pair of slopes, got {p}")
    if min(p.denominators) < 2:
        raise ValidationError(f"α must exceed 1 in {p}")


def matches_epsilon_pattern(p: SlopeTuple) -> tuple[int, int] | None:
    """Finds signs (ε, ε') with p equivalent to (ε/α, ε'/α').

    Sign pairs are scanned in the order of `EPSILON_SCAN`; for each pair
    both the given and the reversed denominator assignment are tried.

    Args:
        p: A pair of slopes with denominators above 1.

    Returns:
        The first matching sign pair, or None.
    """
    _check_pair(p)
    d1, d2 = p.denominators
    for eps in EPSILON_SCAN:
        for first, second in ((d1, d2), (d2, d1)):
            target = SlopeTuple((slope_normalize(eps[0], first), slope_normalize(eps[1], second)))
            if tuples_equivalent(p, target):
                return eps
    return None


def half_pattern(n: int) -> SlopeTuple:
    """The pair (1/2, -n/(2n+1))."""
    return SlopeTuple((Slope(1, 2), slope_normalize(-n, 2 * n + 1)))


def matches_half_pattern(p: SlopeTuple) -> int | None:
    """Finds n with p equivalent to (1/2, -n/(2n+1)) and |2n+1| > 1.

    Equivalence forces |2n+1| to be the other denominator α', so the only
    candidates are n = (α'-1)/2 and n = (-α'-1)/2 for each coordinate that
    carries the denominator 2.

    Args:
        p: A pair of slopes with denominators above 1.

    Returns:
        The first matching n, or None.
    """
    _check_pair(p)
    for idx in (0, 1):
        if p[idx].den != 2:
            continue
        other = p[1 - idx].den
        if other % 2 == 0:
            continue
        for n in ((other - 1) // 2, (-other - 1) // 2):
            if abs(2 * n + 1) > 1 and tuples_equivalent(p, half_pattern(n)):
                return n
    return None
