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
"""Amalgamated products of two disk Seifert groups over the torus.

The vertex groups are glued along their boundary subgroups ⟨x, h⟩ with
x = c1 c2, by the swap x_1 = h_2 and h_1 = x_2. Hence (c1c2)^p h^q on one
side equals (c1c2)^q h^p on the other.

Words are kept reduced: factors alternate sides and none of them lies in
the edge subgroup. A word without factors may still carry an edge element,
stored in side 1 coordinates.
"""
from __future__ import annotations

import dataclasses
import itertools
from collections.abc import Iterable, Iterator
from typing import TYPE_CHECKING, Union

from absl import logging

from ..errors import ValidationError
from .sfs import SfsGroup, SfsWord, eta, normalize, peripheral_membership
from .words import Letter

if TYPE_CHECKING:
    from ..links import L1Link

Factor = tuple[int, SfsWord]
RawFactor = tuple[int, Union[SfsWord, Iterable[Letter]]]


@dataclasses.dataclass(frozen=True)
class AmalgamGroup:
    """The amalgam of `vertex1` and `vertex2` over the fiber/horizontal swap."""

    vertex1: SfsGroup
    vertex2: SfsGroup

    @classmethod
    def from_link(cls, link: L1Link) -> AmalgamGroup:
        """π₁ of the double branched cover of an L1 link."""
        return cls(SfsGroup.from_pair(link.pair1), SfsGroup.from_pair(link.pair2))

    def vertex(self, side: int) -> SfsGroup:
        if side not in (1, 2):
            raise ValidationError(f"side must be 1 or 2, got {side}")
        return self.vertex1 if side == 1 else self.vertex2

    def identity(self) -> AmalgamWord:
        return AmalgamWord(self, (), (0, 0))

    def edge(self, p: int, q: int, side: int = 1) -> AmalgamWord:
        """The edge element (c1c2)^p h^q read on `side`."""
        return AmalgamWord(self, (), (p, q) if side == 1 else (q, p))

    def factor(self, side: int, word: SfsWord | Iterable[Letter]) -> AmalgamWord:
        return amalgam_reduce(self, [(side, word)])

    def fiber(self, side: int, which: int) -> AmalgamWord:
        """The exceptional fiber η_which of vertex `side` (u_side for 1, v_side for 2)."""
        return self.factor(side, eta(self.vertex(side), which))


def edge_word(group: SfsGroup, p: int, q: int) -> SfsWord:
    return (group.x() ** p) * SfsWord(group, (), q)


@dataclasses.dataclass(frozen=True)
class AmalgamWord:
    """A reduced element of an `AmalgamGroup`.

    Attributes:
        group: The ambient amalgam.
        factors: Alternating (side, vertex element) pairs, none peripheral.
        edge: Leading edge element (p, q) in side 1 coordinates; only non
            trivial when `factors` is empty.
    """

    group: AmalgamGroup
    factors: tuple[Factor, ...]
    edge: tuple[int, int] = (0, 0)

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def is_identity(self) -> bool:
        return not self.factors and self.edge == (0, 0)

    def edge_in(self, side: int) -> tuple[int, int]:
        p, q = self.edge
        return (p, q) if side == 1 else (q, p)

    def raw(self) -> list[Factor]:
        out: list[Factor] = []
        if self.edge != (0, 0):
            out.append((1, edge_word(self.group.vertex1, *self.edge)))
        return out + list(self.factors)

    def __mul__(self, other: AmalgamWord) -> AmalgamWord:
        if self.group != other.group:
            raise ValidationError("words live in different amalgams")
        return amalgam_reduce(self.group, self.raw() + other.raw())

    def __invert__(self) -> AmalgamWord:
        factors = tuple((side, ~word) for side, word in reversed(self.factors))
        return AmalgamWord(self.group, factors, (-self.edge[0], -self.edge[1]))

    def __str__(self) -> str:
        if self.is_identity:
            return "1"
        parts = [f"[{side}: {word}]" for side, word in self.raw()]
        return " ".join(parts)


def commutator(u: AmalgamWord, v: AmalgamWord) -> AmalgamWord:
    return u * v * ~u * ~v


def _across(g: AmalgamGroup, side: int, p: int, q: int) -> Factor:
    other = 2 if side == 1 else 1
    return other, edge_word(g.vertex(other), q, p)


def amalgam_reduce(g: AmalgamGroup, factors: Iterable[RawFactor]) -> AmalgamWord:
    """Reduces a sequence of vertex elements to an alternating normal form.

    Same side neighbours are multiplied together; a factor in the edge
    subgroup, (c1c2)^p h^q, is carried to the other side as (c1c2)^q h^p
    and merged there. Edge elements at the front collect into the leading
    edge element.

    Args:
        g: The amalgam.
        factors: (side, element) pairs; elements may be raw letters.

    Returns:
        The reduced word; its length is the number of surviving factors.
    """
    stack: list[Factor] = []
    lead = (0, 0)
    for side, item in factors:
        vertex = g.vertex(side)
        word = item if isinstance(item, SfsWord) else normalize(vertex, item)
        while not word.is_identity:
            if stack and stack[-1][0] == side:
                word = stack.pop()[1] * word
                continue
            pq = peripheral_membership(g.vertex(side), word)
            if pq is None:
                if not stack and lead != (0, 0):
                    word = edge_word(g.vertex(side), *(lead if side == 1 else lead[::-1])) * word
                    lead = (0, 0)
                stack.append((side, word))
                break
            if not stack:
                p, q = pq if side == 1 else pq[::-1]
                lead = (lead[0] + p, lead[1] + q)
                break
            side, word = _across(g, side, *pq)
    return AmalgamWord(g, tuple(stack), lead)


def cyclic_reduced_length(g: AmalgamGroup, w: AmalgamWord) -> int:
    """Length of a cyclically reduced conjugate of w.

    Odd length words have first and last factor on the same side; conjugating
    by the last factor merges the two. Even lengths are already cyclically
    reduced, so the value is a conjugacy invariant once it is at least 2.
    """
    while w.length >= 3 and w.factors[0][0] == w.factors[-1][0]:
        last = AmalgamWord(g, (w.factors[-1],))
        w = last * w * ~last
    return w.length


def _edges(edge_bound: int) -> list[tuple[int, int]]:
    span = range(-edge_bound, edge_bound + 1)
    return sorted(itertools.product(span, span), key=lambda pq: (abs(pq[0]) + abs(pq[1]), pq))


def _conjugator_candidates(g: AmalgamGroup, u: AmalgamWord, depth: int, edge_bound: int) -> Iterator[AmalgamWord]:
    edges = [g.edge(p, q) for p, q in _edges(edge_bound)]
    yield from edges
    prefix = g.identity()
    for factor in u.factors[:-1]:
        prefix = prefix * AmalgamWord(g, (factor,))
        for e in edges:
            yield e * ~prefix
    alphabet = [
        g.factor(side, [(f"c{j}", e)])
        for side in (1, 2)
        for j in (1, 2)
        for e in range(1, g.vertex(side).alpha(j))
    ]
    for size in range(1, depth + 1):
        for combo in itertools.product(alphabet, repeat=size):
            base = g.identity()
            for item in combo:
                base = base * item
            for e in edges:
                yield e * base


def search_conjugator(
    g: AmalgamGroup, u: AmalgamWord, v: AmalgamWord, depth: int = 1, edge_bound: int = 1
) -> AmalgamWord | None:
    """Looks for x with x u x⁻¹ = v among bounded candidates.

    Candidates are edge elements with |p|, |q| <= edge_bound, those times
    the rotations of u, and products of at most `depth` vertex syllables
    c_j^e times an edge element.

    Returns:
        A verified witness, or None. None only means no witness was found
        inside the bounds.
    """
    target = ~v
    for x in _conjugator_candidates(g, u, depth, edge_bound):
        if (x * u * ~x * target).is_identity:
            logging.debug("conjugator found: %s", x)
            return x
    return None
