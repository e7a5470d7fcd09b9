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
"""Merge graph of the six 3-bridge spheres P1..P6 of a nonelliptic Montesinos link.

Condition (1-k) is β_k ≡ ±1 (mod α_k) and (2-k) is α_k = 2. Each edge of
`MERGE_TABLE` holds when one of its conditions does; non adjacent pairs
merge only through transitive closure. The resulting partition is an upper
bound on the number of isotopy classes.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from absl import logging

from ..errors import CoverageError, ValidationError
from ..links import MontesinosLink, is_elliptic_montesinos
from ..types import SphereLabel
from ..utils import UnionFind

P_LABELS = (SphereLabel.P1, SphereLabel.P2, SphereLabel.P3, SphereLabel.P4, SphereLabel.P5, SphereLabel.P6)

MERGE_TABLE: tuple[tuple[SphereLabel, SphereLabel, tuple[str, ...]], ...] = (
    (SphereLabel.P1, SphereLabel.P2, ("2-1", "2-2")),
    (SphereLabel.P1, SphereLabel.P4, ("1-2",)),
    (SphereLabel.P1, SphereLabel.P6, ("1-1",)),
    (SphereLabel.P2, SphereLabel.P3, ("1-2",)),
    (SphereLabel.P2, SphereLabel.P5, ("1-1",)),
    (SphereLabel.P3, SphereLabel.P4, ("2-2", "2-3")),
    (SphereLabel.P3, SphereLabel.P6, ("1-3",)),
    (SphereLabel.P4, SphereLabel.P5, ("1-3",)),
    (SphereLabel.P5, SphereLabel.P6, ("2-1", "2-3")),
)


def _check_nonelliptic(link: MontesinosLink) -> None:
    if not isinstance(link, MontesinosLink):
        raise ValidationError(f"expected a Montesinos link, got {link}")
    if is_elliptic_montesinos(link):
        raise CoverageError(f"merge table not applicable to the elliptic link {link}")


def merge_conditions(link: MontesinosLink) -> dict[str, bool]:
    """Evaluates (1-k) and (2-k) for k = 1, 2, 3."""
    conditions = {}
    for k, s in enumerate(link.slopes, start=1):
        conditions[f"1-{k}"] = s.num % s.den in (1, s.den - 1)
        conditions[f"2-{k}"] = s.den == 2
    return conditions


def all_merge_signs(link: MontesinosLink) -> tuple[int, ...] | None:
    """Signs ε with b = Σβ_k/α_k - Σε_k/α_k, when every (1-k) holds."""
    if not all(s.num % s.den in (1, s.den - 1) for s in link.slopes):
        return None
    total = link.slopes.total()
    for signs in itertools.product((1, -1), repeat=len(link.slopes)):
        shift = sum((Fraction(e, s.den) for e, s in zip(signs, link.slopes)), Fraction(0))
        if total - shift == link.b:
            return signs
    return None


def montesinos_merge_edges(link: MontesinosLink) -> list[tuple[SphereLabel, SphereLabel]]:
    """Pairs of spheres known to be isotopic.

    Args:
        link: A nonelliptic Montesinos link.

    Returns:
        Sorted, duplicate free edges.

    Raises:
        CoverageError: on elliptic input.
    """
    _check_nonelliptic(link)
    conditions = merge_conditions(link)
    edges = {(p, q) for p, q, needs in MERGE_TABLE if any(conditions[c] for c in needs)}
    signs = all_merge_signs(link)
    if signs is not None:
        logging.debug("%s: all six spheres merge with signs %s", link, signs)
        edges |= {(SphereLabel.P1, p) for p in P_LABELS[1:]}
    return sorted(edges, key=lambda e: (P_LABELS.index(e[0]), P_LABELS.index(e[1])))


def merge_partition(link: MontesinosLink) -> list[tuple[SphereLabel, ...]]:
    """Union-find closure of `montesinos_merge_edges`."""
    uf: UnionFind[SphereLabel] = UnionFind(P_LABELS)
    for p, q in montesinos_merge_edges(link):
        uf.union(p, q)
    return uf.blocks()
