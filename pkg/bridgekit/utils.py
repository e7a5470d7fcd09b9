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
"Various utilities functions for improved quality of life."
from __future__ import annotations

import json
import sys
from collections.abc import Hashable, Iterable, Sequence
from pathlib import Path
from typing import Any, Generic, TypeVar

from termcolor import cprint

T = TypeVar("T", bound=Hashable)

SCHEMA_DIR = Path(__file__).parent / "schemas"


class UnionFind(Generic[T]):
    """Disjoint sets with path compression and union by rank."""

    def __init__(self, items: Iterable[T]):
        self._order = list(items)
        self.parent = {x: x for x in self._order}
        self.rank = {x: 0 for x in self._order}

    def find(self, x: T) -> T:
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x: T, y: T) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def blocks(self) -> list[tuple[T, ...]]:
        """The partition, blocks and members in insertion order."""
        grouped: dict[T, list[T]] = {}
        for x in self._order:
            grouped.setdefault(self.find(x), []).append(x)
        return [tuple(block) for block in grouped.values()]

    def __len__(self) -> int:
        return len({self.find(x) for x in self._order})


def banner(message: str, verbose: int, color: str = "green") -> None:
    "Print a progress header on stderr when `verbose` is set"
    if verbose:
        cprint(f"|-{message}", color, file=sys.stderr)


def sign_label(sign: int) -> str:
    return "+" if sign > 0 else "-"


def format_signs(signs: Sequence[int]) -> str:
    return "(" + ",".join(f"{sign_label(s)}1" for s in signs) + ")"


def load_schema(name: str) -> dict[str, Any]:
    """Loads one of the JSON schemas shipped in `bridgekit/schemas`."""
    with open(SCHEMA_DIR / f"{name}.schema.json") as f:
        return json.load(f)
