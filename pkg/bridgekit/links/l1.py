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
"""Links of the first family: two rational tangle pairs glued fiber to horizontal."""
from __future__ import annotations

import dataclasses
from typing import Any

from ..rationals import SlopeTuple
from ..seifert import FIBER_HORIZONTAL, CoverDescription, disk_piece
from .link import ArborescentLink, check_denominators, tuple_config


@dataclasses.dataclass(frozen=True)
class L1Link(ArborescentLink):
    """L1((β_1/α_1, β_1'/α_1'), (β_2/α_2, β_2'/α_2')) with every α > 1.

    Sphere S3 belongs to `pair1` and S4 to `pair2`; `swapped()` exchanges
    the pairs and therefore the two labels.
    """

    pair1: SlopeTuple
    pair2: SlopeTuple

    family = "L1"

    def __post_init__(self):
        check_denominators(self.pair1, 2, 2, "pair1")
        check_denominators(self.pair2, 2, 2, "pair2")

    def pair(self, k: int) -> SlopeTuple:
        return self.pair1 if k == 1 else self.pair2

    def swapped(self) -> L1Link:
        return L1Link(self.pair2, self.pair1)

    def emit(self) -> str:
        return f"L1({self.pair1},{self.pair2})"

    def branched_cover(self) -> CoverDescription:
        pieces = (disk_piece("M1", self.pair1), disk_piece("M2", self.pair2))
        return CoverDescription("L1", pieces, ((0, 1, FIBER_HORIZONTAL),))

    def get_config(self) -> dict[str, Any]:
        return {"pair1": tuple_config(self.pair1), "pair2": tuple_config(self.pair2)}
