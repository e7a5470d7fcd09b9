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
"""Recursive descent parser for the link, Seifert and group grammars.

    link    := "L1(" pair "," pair ")"
             | "L2(" pair "," "(" slope ")" "," pair ")"
             | "L3(" triple "," pair ")"
             | "M(" int ";" slope "," slope "," slope ")"
    seifert := "S2(" int ";" slope "," slope "," slope ")"
    group   := "D(" slope "," slope ")"
    pair    := "(" slope "," slope ")"
    triple  := "(" slope "," slope "," slope ")"
    slope   := int "/" int
    int     := ["-"] digit+

Whitespace is insignificant everywhere.
"""
from __future__ import annotations

import re
from typing import TYPE_CHECKING

from ..errors import LinkSyntaxError
from ..rationals import Slope, SlopeTuple, slope_normalize
from ..seifert import Base, SeifertInvariants
from .l1 import L1Link
from .l2 import L2Link
from .l3 import L3Link
from .montesinos import MontesinosLink

if TYPE_CHECKING:
    from .link import ArborescentLink

_INT_RE = re.compile(r"-?\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def error(self, message: str) -> LinkSyntaxError:
        return LinkSyntaxError(message, self.text, self.pos)

    def peek(self, literal: str) -> bool:
        self._skip()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str) -> None:
        if not self.peek(literal):
            raise self.error(f"expected {literal!r}")
        self.pos += len(literal)

    def integer(self) -> int:
        self._skip()
        match = _INT_RE.match(self.text, self.pos)
        if match is None:
            raise self.error("expected an integer")
        self.pos = match.end()
        return int(match.group())

    def slope(self) -> Slope:
        start = self.pos
        p = self.integer()
        self.expect("/")
        q = self.integer()
        if q == 0:
            self.pos = start
            raise self.error("degenerate slope with zero denominator")
        return slope_normalize(p, q)

    def slopes(self, count: int) -> SlopeTuple:
        entries = [self.slope()]
        for _ in range(count - 1):
            self.expect(",")
            entries.append(self.slope())
        return SlopeTuple(tuple(entries))

    def group(self, count: int) -> SlopeTuple:
        self.expect("(")
        entries = self.slopes(count)
        self.expect(")")
        return entries

    def end(self) -> None:
        self._skip()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")


def parse_link(text: str) -> ArborescentLink:
    """Parses and validates link text such as "L1((1/2,-2/5),(1/3,1/4))".

    Args:
        text: The link text.

    Returns:
        The validated link.

    Raises:
        LinkSyntaxError: if the text does not follow the grammar.
        ValidationError: if a parameter invariant is violated.
    """
    sc = _Scanner(text)
    link: ArborescentLink
    if sc.peek("L1("):
        sc.expect("L1(")
        pair1 = sc.group(2)
        sc.expect(",")
        link = L1Link(pair1, sc.group(2))
    elif sc.peek("L2("):
        sc.expect("L2(")
        pair1 = sc.group(2)
        sc.expect(",")
        middle = sc.group(1)[0]
        sc.expect(",")
        link = L2Link(pair1, middle, sc.group(2))
    elif sc.peek("L3("):
        sc.expect("L3(")
        triple = sc.group(3)
        sc.expect(",")
        link = L3Link(triple, sc.group(2))
    elif sc.peek("M("):
        sc.expect("M(")
        b = sc.integer()
        sc.expect(";")
        link = MontesinosLink(b, sc.slopes(3))
    else:
        raise sc.error("expected one of L1(, L2(, L3(, M(")
    sc.expect(")")
    sc.end()
    return link


def emit_link(link: ArborescentLink) -> str:
    return link.emit()


def parse_seifert(text: str) -> SeifertInvariants:
    """Parses "S2(b; s1, s2, s3)" into sphere based invariants."""
    sc = _Scanner(text)
    sc.expect("S2(")
    b = sc.integer()
    sc.expect(";")
    slopes = sc.slopes(3)
    sc.expect(")")
    sc.end()
    return SeifertInvariants(Base.SPHERE, b, slopes)


def parse_group(text: str) -> SlopeTuple:
    """Parses "D(s1, s2)" into the slope pair of a Seifert space over the disk."""
    sc = _Scanner(text)
    sc.expect("D")
    pair = sc.group(2)
    sc.end()
    return pair
