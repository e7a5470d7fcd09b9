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
"""Free group words and finite presentations.

Words print as space separated letters with caret exponents, for example
"c1^2 c2^-1 h^3"; exponent 1 is omitted and the empty word prints as "1".
"""
from __future__ import annotations

import dataclasses
import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from typing import Any

import numpy as np

from ..errors import LinkSyntaxError, ValidationError

Letter = tuple[str, int]

_TOKEN_RE = re.compile(r"([A-Za-z]+\d*)(?:\^(-?\d+))?")


@dataclasses.dataclass(frozen=True)
class Word:
    """A freely reduced word, stored as (generator, power) syllables."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> Word:
        reduced: list[Letter] = []
        for gen, power in letters:
            if reduced and reduced[-1][0] == gen:
                power += reduced.pop()[1]
            if power:
                reduced.append((gen, power))
        return cls(tuple(reduced))

    @classmethod
    def letter(cls, gen: str, power: int = 1) -> Word:
        return cls.of([(gen, power)])

    def __mul__(self, other: Word) -> Word:
        return Word.of(self.letters + other.letters)

    def __invert__(self) -> Word:
        return Word(tuple((gen, -power) for gen, power in reversed(self.letters)))

    def __pow__(self, n: int) -> Word:
        if n < 0:
            return ~(self ** -n)
        return Word.of(self.letters * n)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        return sum(abs(power) for _, power in self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> set[str]:
        return {gen for gen, _ in self.letters}

    def substitute(self, images: Mapping[str, Word]) -> Word:
        """Replaces every generator by its image."""
        result = Word()
        for gen, power in self.letters:
            result = result * images[gen] ** power
        return result

    def exponent_sums(self, generators: Sequence[str]) -> np.ndarray:
        """Image of the word in the abelianization Z^len(generators)."""
        index = {gen: i for i, gen in enumerate(generators)}
        sums = np.zeros(len(generators), dtype=np.int64)
        for gen, power in self.letters:
            sums[index[gen]] += power
        return sums

    def to_json(self) -> list[list[Any]]:
        return [[gen, power] for gen, power in self.letters]

    def __str__(self) -> str:
        return format_letters(self.letters)


def format_letters(letters: Iterable[Letter]) -> str:
    parts = [gen if power == 1 else f"{gen}^{power}" for gen, power in letters]
    return " ".join(parts) if parts else "1"


def parse_letters(text: str) -> list[Letter]:
    """Parses "c1^2 c2^-1 h^3" into raw letters, without any reduction.

    Raises:
        LinkSyntaxError: on anything that is not a letter with an optional exponent.
    """
    letters: list[Letter] = []
    pos = 0
    stripped = text.strip()
    if stripped == "1":
        return letters
    while pos < len(text):
        if text[pos].isspace() or text[pos] == "*":
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise LinkSyntaxError("expected a generator with an optional ^exponent", text, pos)
        power = int(match.group(2)) if match.group(2) is not None else 1
        letters.append((match.group(1), power))
        pos = match.end()
    return letters


@dataclasses.dataclass(frozen=True)
class Presentation:
    """A finite group presentation.

    Attributes:
        generators: Generator names, in a fixed order.
        relators: Relator words over `generators`.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        known = set(self.generators)
        for relator in self.relators:
            unknown = relator.generators() - known
            if unknown:
                raise ValidationError(f"relator {relator} uses undeclared generators {sorted(unknown)}")

    def exponent_matrix(self) -> np.ndarray:
        """Relator exponent sums, one column per relator."""
        return np.stack([r.exponent_sums(self.generators) for r in self.relators], axis=1)

    def to_json(self) -> dict[str, Any]:
        return {"generators": list(self.generators), "relators": [r.to_json() for r in self.relators]}
