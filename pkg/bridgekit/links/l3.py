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
"""Links of the third family: a tangle triple closed by a (1/2, -n/(2n+1)) pair."""
from __future__ import annotations

import dataclasses
from typing import Any

from ..errors import ValidationError
from ..rationals import SlopeTuple, matches_half_pattern
from ..seifert import FIBER_HORIZONTAL, CoverDescription, disk_piece
from .link import ArborescentLink, check_denominators, tuple_config


@dataclasses.dataclass(frozen=True)
class L3Link(ArborescentLink):
    """L3((β_1/α_1, β_2/α_2, β_3/α_3), (1/2, -n/(2n+1))) with |2n+1| > 1."""

    triple: SlopeTuple
    tail: SlopeTuple

    family = "L3"

    def __post_init__(self):
        check_denominators(self.triple, 3, 2, "triple")
        check_denominators(self.tail, 2, 2, "tail")
        if matches_half_pattern(self.tail) is None:
            raise ValidationError(f"tail {self.tail} is not equivalent to (1/2,-n/(2n+1)) with |2n+1|>1")

    @property
    def n(self) -> int:
        n = matches_half_pattern(self.tail)
        assert n is not None
        return n

    def emit(self) -> str:
        return f"L3({self.triple},{self.tail})"

    def branched_cover(self) -> CoverDescription:
        pieces = (disk_piece("M1", self.triple), disk_piece("M2", self.tail))
        return CoverDescription("M2-b", pieces, ((0, 1, FIBER_HORIZONTAL),))

    def get_config(self) -> dict[str, Any]:
        return {"triple": tuple_config(self.triple), "tail": tuple_config(self.tail)}
