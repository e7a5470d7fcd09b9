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
"""Normal forms in the fundamental group of D(β_1/α_1, β_2/α_2).

The group is ⟨c1, c2, h | [c_j, h], c_j^α_j h^β_j⟩. Since h is central and
c_j^α_j = h^-β_j, every element is uniquely an alternating product of
syllables c_j^e with 0 < e < α_j followed by a power of h. The syllables
are the normal form of the image in the free product Z_α1 * Z_α2.
"""
from __future__ import annotations

import dataclasses
import math
from collections.abc import Iterable, Sequence

from ..errors import ValidationError
from ..rationals import Slope, SlopeTuple
from .words import Letter, format_letters, parse_letters

Syllable = tuple[int, int]

_GENERATORS = {"c1": 1, "c2": 2}


@dataclasses.dataclass(frozen=True)
class SfsGroup:
    """π₁ of the Seifert fibered space D(β_1/α_1, β_2/α_2) over the disk."""

    alpha1: int
    beta1: int
    alpha2: int
    beta2: int

    def __post_init__(self):
        for alpha, beta in ((self.alpha1, self.beta1), (self.alpha2, self.beta2)):
            if alpha < 2:
                raise ValidationError(f"α must exceed 1, got {beta}/{alpha}")
            if math.gcd(alpha, beta) != 1:
                raise ValidationError(f"gcd(α, β) must be 1, got {beta}/{alpha}")

    @classmethod
    def from_pair(cls, pair: SlopeTuple) -> SfsGroup:
        if len(pair) != 2:
            raise ValidationError(f"a Seifert space over the disk needs two fibers, got {pair}")
        s1, s2 = pair
        return cls(s1.den, s1.num, s2.den, s2.num)

    def alpha(self, j: int) -> int:
        return self.alpha1 if j == 1 else self.alpha2

    def beta(self, j: int) -> int:
        return self.beta1 if j == 1 else self.beta2

    def pair(self) -> SlopeTuple:
        return SlopeTuple((Slope(self.beta1, self.alpha1), Slope(self.beta2, self.alpha2)))

    def identity(self) -> SfsWord:
        return SfsWord(self, (), 0)

    def x(self) -> SfsWord:
        """The horizontal loop c1 c2."""
        return normalize(self, [("c1", 1), ("c2", 1)])

    def h(self) -> SfsWord:
        """The regular fiber."""
        return SfsWord(self, (), 1)

    def relators(self) -> list[list[Letter]]:
        return [[(f"c{j}", self.alpha(j)), ("h", self.beta(j))] for j in (1, 2)]

    def __str__(self) -> str:
        return f"D({self.beta1}/{self.alpha1},{self.beta2}/{self.alpha2})"


@dataclasses.dataclass(frozen=True)
class SfsWord:
    """An element of an `SfsGroup` in normal form.

    Attributes:
        group: The ambient group.
        syllables: Alternating (j, e) pairs standing for c_j^e, 0 < e < α_j.
        hpow: Exponent of the trailing central fiber h.
    """

    group: SfsGroup
    syllables: tuple[Syllable, ...]
    hpow: int

    @property
    def is_identity(self) -> bool:
        return not self.syllables and self.hpow == 0

    def letters(self) -> list[Letter]:
        out: list[Letter] = [(f"c{j}", e) for j, e in self.syllables]
        if self.hpow:
            out.append(("h", self.hpow))
        return out

    def __mul__(self, other: SfsWord) -> SfsWord:
        return multiply(self, other)

    def __invert__(self) -> SfsWord:
        return invert(self)

    def __pow__(self, n: int) -> SfsWord:
        base = self if n >= 0 else invert(self)
        result = self.group.identity()
        for _ in range(abs(n)):
            result = multiply(result, base)
        return result

    def __str__(self) -> str:
        return format_letters(self.letters())


def _push(group: SfsGroup, stack: list[Syllable], j: int, exp: int) -> int:
    """Appends c_j^exp to an alternating stack, returning the emitted h exponent."""
    if stack and stack[-1][0] == j:
        exp += stack.pop()[1]
    q, r = divmod(exp, group.alpha(j))
    if r:
        stack.append((j, r))
    return -q * group.beta(j)


def normalize(group: SfsGroup, raw: Iterable[Letter]) -> SfsWord:
    """Brings a raw word over c1, c2, h into normal form.

    h letters commute to the tail. Each c_j exponent m is rewritten as
    m = qα_j + r with 0 <= r < α_j, emitting h^(-qβ_j), and equal neighbours
    merge; the stack keeps merging until no two neighbours share a generator.

    Args:
        group: The ambient group.
        raw: (generator, exponent) letters with generator in c1, c2, h.

    Returns:
        The unique normal form.
    """
    stack: list[Syllable] = []
    hpow = 0
    for gen, exp in raw:
        if gen == "h":
            hpow += exp
        elif gen in _GENERATORS:
            hpow += _push(group, stack, _GENERATORS[gen], exp)
        else:
            raise ValidationError(f"unknown generator {gen!r}, expected c1, c2 or h")
    return SfsWord(group, tuple(stack), hpow)


def parse_word(group: SfsGroup, text: str) -> SfsWord:
    """Parses and normalizes text such as "c1^2 c2^-1 h^3"."""
    return normalize(group, parse_letters(text))


def format_word(w: SfsWord) -> str:
    return format_letters(w.letters())


def _check_same_group(u: SfsWord, v: SfsWord) -> None:
    if u.group != v.group:
        raise ValidationError(f"words live in different groups {u.group} and {v.group}")


def multiply(u: SfsWord, v: SfsWord) -> SfsWord:
    _check_same_group(u, v)
    stack = list(u.syllables)
    hpow = u.hpow + v.hpow
    for j, e in v.syllables:
        hpow += _push(u.group, stack, j, e)
    return SfsWord(u.group, tuple(stack), hpow)


def invert(w: SfsWord) -> SfsWord:
    stack: list[Syllable] = []
    hpow = -w.hpow
    for j, e in reversed(w.syllables):
        hpow += _push(w.group, stack, j, -e)
    return SfsWord(w.group, tuple(stack), hpow)


def is_identity(w: SfsWord) -> bool:
    return w.is_identity


def _cyclic_reduce(group: SfsGroup, syllables: Sequence[Syllable]) -> list[Syllable]:
    seq = list(syllables)
    while len(seq) > 1 and seq[0][0] == seq[-1][0]:
        j, first = seq.pop(0)
        last = seq.pop()[1]
        e = (first + last) % group.alpha(j)
        if e:
            seq.append((j, e))
    return seq


def quotient_conjugate(group: SfsGroup, u: SfsWord, v: SfsWord) -> bool:
    """Decides conjugacy of the images of u and v in Z_α1 * Z_α2.

    Both syllable sequences are cyclically reduced; elements of length at
    most one are conjugate iff equal, longer ones iff they are cyclic
    rotations of each other.
    """
    _check_same_group(u, v)
    cu = _cyclic_reduce(group, u.syllables)
    cv = _cyclic_reduce(group, v.syllables)
    if len(cu) != len(cv):
        return False
    if len(cu) <= 1:
        return cu == cv
    return any(cu[k:] + cu[:k] == cv for k in range(len(cu)))


@dataclasses.dataclass(frozen=True)
class FiberData:
    """An exceptional fiber η = c^γ h^δ with αδ - βγ = 1."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __post_init__(self):
        if self.alpha * self.delta - self.beta * self.gamma != 1:
            raise ValidationError(f"αδ - βγ must be 1 for {self}")


def exceptional_fiber(group: SfsGroup, which: int) -> FiberData:
    """Canonical exceptional fiber of c_which: γ ≡ -β⁻¹ (mod α), 0 < γ < α."""
    if which not in (1, 2):
        raise ValidationError(f"fiber index must be 1 or 2, got {which}")
    alpha, beta = group.alpha(which), group.beta(which)
    gamma = pow(-beta % alpha, -1, alpha)
    delta, rest = divmod(1 + beta * gamma, alpha)
    assert rest == 0
    return FiberData(alpha, beta, gamma, delta)


def eta(group: SfsGroup, which: int) -> SfsWord:
    """The element η_which = c_which^γ h^δ."""
    fiber = exceptional_fiber(group, which)
    return normalize(group, [(f"c{which}", fiber.gamma), ("h", fiber.delta)])


def peripheral_membership(group: SfsGroup, w: SfsWord) -> tuple[int, int] | None:
    """Writes w as (c1 c2)^p h^q when it lies in the boundary subgroup.

    Returns:
        (p, q), or None when the quotient image of w is not a power of c1 c2.
    """
    n = len(w.syllables)
    if n % 2:
        return None
    p = n // 2
    if w.syllables != ((1, 1), (2, 1)) * p:
        if w.syllables != ((2, group.alpha2 - 1), (1, group.alpha1 - 1)) * p:
            return None
        p = -p
    return p, w.hpow - (group.x() ** p).hpow
