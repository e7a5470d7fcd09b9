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
"""Core bridgekit types."""
from __future__ import annotations

import dataclasses
import enum
import os
from collections.abc import Mapping
from typing import Any

from .errors import ValidationError

WINDOW_ENV_VAR = "BRIDGEKIT_WINDOW"


@dataclasses.dataclass(frozen=True)
class Window:
    """Search bounds for the (a, b, c, d) word equation.

    Attributes:
        ac: Bound on |a| and |c|.
        bd: Bound on |b| and |d|.

    A negative bound describes an empty window.
    """

    ac: int = 3
    bd: int = 10

    @property
    def is_empty(self) -> bool:
        return self.ac < 0 or self.bd < 0

    def ac_range(self) -> range:
        return range(-self.ac, self.ac + 1)

    def bd_range(self) -> range:
        return range(-self.bd, self.bd + 1)

    def contains_bd(self, value: int) -> bool:
        return abs(value) <= self.bd

    def size(self) -> int:
        if self.is_empty:
            return 0
        return len(self.ac_range()) ** 2 * len(self.bd_range()) ** 2

    @classmethod
    def from_string(cls, text: str) -> Window:
        """Parses "AC,BD", e.g. "3,10"."""
        parts = text.split(",")
        try:
            ac, bd = (int(p) for p in parts)
        except ValueError:
            raise ValidationError(f"window must look like 'AC,BD', got {text!r}")
        return cls(ac, bd)

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> Window:
        """Reads `BRIDGEKIT_WINDOW`, falling back to the defaults."""
        environ = os.environ if environ is None else environ
        text = environ.get(WINDOW_ENV_VAR)
        if not text:
            return cls()
        return cls.from_string(text)

    def __str__(self) -> str:
        return f"{self.ac},{self.bd}"


class SphereLabel(str, enum.Enum):
    """Names of the 3-bridge spheres a link can carry."""

    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    S0_UNIQUE = "S0"
    UNIQUE = "S"
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"

    def __str__(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True)
class SphereCensus:
    """3-bridge spheres of a link, grouped into isotopy classes.

    Attributes:
        link: Canonical text of the link.
        family: Link family name ("L1", "L2", "L3" or "M").
        case: Case of the classification the link falls in, e.g. "a-3".
        spheres: The spheres, in label order.
        classes: Partition of `spheres` into isotopy classes.
        exact: False when the class count is only a conjectured upper bound.
    """

    link: str
    family: str
    case: str
    spheres: tuple[SphereLabel, ...]
    classes: tuple[tuple[SphereLabel, ...], ...]
    exact: bool

    def __post_init__(self):
        flat = [s for block in self.classes for s in block]
        if sorted(flat) != sorted(self.spheres) or len(set(flat)) != len(flat):
            raise ValidationError(f"classes {self.classes} do not partition {self.spheres}")

    @property
    def mu(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict[str, Any]:
        return {
            "link": self.link,
            "family": self.family,
            "case": self.case,
            "spheres": [str(s) for s in self.spheres],
            "classes": [[str(s) for s in block] for block in self.classes],
            "mu": self.mu,
            "exact": self.exact,
        }


@dataclasses.dataclass(frozen=True)
class HeegaardCount:
    """Genus 2 Heegaard surfaces of a small Seifert fibered space.

    Attributes:
        count: Number of surfaces up to isotopy.
        labels: One label per surface; merged surfaces are joined with "=".
        exceptional: True when the manifold is a member of an exceptional family.
        family: Name and parameter of the matched exceptional family, if any.
    """

    count: int
    labels: tuple[str, ...]
    exceptional: bool
    family: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self) | {"labels": list(self.labels)}


@dataclasses.dataclass(frozen=True)
class SymmetryGroup:
    """Symmetry group of an elliptic Montesinos link.

    Attributes:
        name: One of "Z2", "Z2⊕Z2", "Z2⊕D3".
        generators: Generating involutions among psi1..psi4.
        case: Case of the case split that produced the answer.
        m: The integer the case split is decided on, when there is one.
    """

    name: str
    generators: tuple[str, ...]
    case: str
    m: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "generators": list(self.generators), "case": self.case, "m": self.m}

