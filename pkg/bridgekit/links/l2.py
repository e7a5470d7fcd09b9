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
"""Links of the second family: two pairs joined through a 1/α₀ tangle."""
from __future__ import annotations

import dataclasses
from typing import Any

from ..errors import ValidationError
from ..rationals import Slope, SlopeTuple, tuples_equivalent
from ..seifert import FIBER_HORIZONTAL, Base, CoverDescription, CoverPiece, SeifertInvariants, disk_piece
from .link import ArborescentLink, check_denominators, tuple_config

# D(-1/2, 1/2) is the twisted I-bundle over the Klein bottle
KLEIN_PAIR = SlopeTuple.of("-1/2", "1/2")


@dataclasses.dataclass(frozen=True)
class L2Link(ArborescentLink):
    """L2((β_1/α_1, β_1'/α_1'), (1/α₀), (β_2/α_2, β_2'/α_2')) with |α₀| > 1."""

    pair1: SlopeTuple
    middle: Slope
    pair2: SlopeTuple

    family = "L2"

    def __post_init__(self):
        check_denominators(self.pair1, 2, 2, "pair1")
        check_denominators(self.pair2, 2, 2, "pair2")
        if abs(self.middle.num) != 1:
            raise ValidationError(f"middle slope must have the form 1/α₀, got {self.middle}")
        if self.middle.den < 2:
            raise ValidationError(f"|α₀|>1 violated by middle slope {self.middle}")

    @property
    def alpha0(self) -> int:
        return self.middle.num * self.middle.den

    def emit(self) -> str:
        return f"L2({self.pair1},({self.middle}),{self.pair2})"

    def branched_cover(self) -> CoverDescription:
        klein1 = tuples_equivalent(self.pair1, KLEIN_PAIR)
        klein2 = tuples_equivalent(self.pair2, KLEIN_PAIR)
        if klein1 != klein2:
            other = self.pair2 if klein1 else self.pair1
            mobius = CoverPiece("Mo", SeifertInvariants(Base.MOBIUS, 0, SlopeTuple((self.middle,))))
            return CoverDescription("M1-b", (disk_piece("M1", other), mobius), ((0, 1, FIBER_HORIZONTAL),))
        annulus = CoverPiece("A", SeifertInvariants(Base.ANNULUS, 0, SlopeTuple((self.middle,))))
        pieces = (disk_piece("M1", self.pair1), annulus, disk_piece("M2", self.pair2))
        return CoverDescription("M4", pieces, ((0, 1, FIBER_HORIZONTAL), (1, 2, FIBER_HORIZONTAL)))

    def get_config(self) -> dict[str, Any]:
        return {
            "pair1": tuple_config(self.pair1),
            "middle": str(self.middle),
            "pair2": tuple_config(self.pair2),
        }


def is_exceptional_nonsimple(link: L2Link) -> int | None:
    """Detects L2((-1/2,1/2),(1/n),(-1/2,1/2)), which carries a unique sphere S0.

    Args:
        link: A link of the second family.

    Returns:
        n when both pairs are equivalent to (-1/2, 1/2), None otherwise.
    """
    if not isinstance(link, L2Link):
        raise ValidationError(f"expected an L2 link, got {link}")
    if tuples_equivalent(link.pair1, KLEIN_PAIR) and tuples_equivalent(link.pair2, KLEIN_PAIR):
        return link.alpha0
    return None
