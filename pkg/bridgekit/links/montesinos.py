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
"""Montesinos links with three rational tangles.

`M(b; β_1/α_1, β_2/α_2, β_3/α_3)` stores b as in L(b; ...) where the link
depends on Σβ_i/α_i - b. Its double branched cover is therefore
S²(-b; β_1/α_1, β_2/α_2, β_3/α_3) with e = -(b + Σβ_i/α_i).
"""
from __future__ import annotations

import dataclasses
from typing import Any

from ..errors import ValidationError
from ..rationals import SlopeTuple
from ..seifert import Base, CoverDescription, CoverPiece, SeifertInvariants
from .link import ArborescentLink, check_denominators, tuple_config

SPHERICAL_TRIPLES = ((2, 3, 3), (2, 3, 4), (2, 3, 5))


@dataclasses.dataclass(frozen=True)
class MontesinosLink(ArborescentLink):
    """M(b; β_1/α_1, β_2/α_2, β_3/α_3) with every α >= 2."""

    b: int
    slopes: SlopeTuple

    family = "M"

    def __post_init__(self):
        check_denominators(self.slopes, 3, 2, "Montesinos slopes")

    def emit(self) -> str:
        return f"M({self.b};" + ",".join(str(s) for s in self.slopes) + ")"

    def seifert_invariants(self) -> SeifertInvariants:
        return SeifertInvariants(Base.SPHERE, -self.b, self.slopes)

    def branched_cover(self) -> CoverDescription:
        return CoverDescription("S2", (CoverPiece("M", self.seifert_invariants()),))

    def get_config(self) -> dict[str, Any]:
        return {"b": self.b, "slopes": tuple_config(self.slopes)}


def is_elliptic_montesinos(link: MontesinosLink) -> bool:
    """True iff the denominators form a spherical triple.

    The spherical triples are (2, 2, α) for α >= 2, (2, 3, 3), (2, 3, 4) and
    (2, 3, 5), i.e. exactly those with 1/α_1 + 1/α_2 + 1/α_3 > 1.
    """
    if not isinstance(link, MontesinosLink):
        raise ValidationError(f"expected a Montesinos link, got {link}")
    dens = tuple(sorted(link.slopes.denominators))
    return dens[:2] == (2, 2) or dens in SPHERICAL_TRIPLES
