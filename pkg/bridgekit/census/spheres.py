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
"""3-bridge sphere census of the four link families.

An L1 link always carries S1 and S2; S3 exists when pair1 is equivalent to
(1/2, -n/(2n+1)) and S4 when pair2 is. S1 and S2 are isotopic exactly when
one pair is equivalent to (ε/α, ε'/α') (condition a), and no other two
spheres are. The case name combines the letter of that condition with
1: only S3, 2: only S4, 3: both, 4: neither.
"""
from __future__ import annotations

import functools
import math
from typing import TYPE_CHECKING

import pandas as pd
from absl import logging
from tqdm.auto import tqdm

from ..errors import ConsistencyError, ValidationError
from ..groups import AmalgamGroup, AmalgamWord, commutator, search_conjugator
from ..links import (
    ArborescentLink,
    L1Link,
    L2Link,
    L3Link,
    MontesinosLink,
    is_elliptic_montesinos,
    is_exceptional_nonsimple,
)
from ..rationals import SlopeTuple, matches_epsilon_pattern, matches_half_pattern, slope_normalize
from ..types import SphereCensus, SphereLabel
from ..utils import UnionFind, banner
from .montesinos import P_LABELS, merge_partition

if TYPE_CHECKING:
    from collections.abc import Sequence

# μ column of the L1 table
TABLE_MU = {"a-1": 2, "a-2": 2, "a-3": 3, "a-4": 1, "b-1": 3, "b-2": 3, "b-3": 4, "b-4": 2}

_L1_LABELS = {1: SphereLabel.S1, 2: SphereLabel.S2, 3: SphereLabel.S3, 4: SphereLabel.S4}


@functools.lru_cache(maxsize=None)
def pair_profile(pair: SlopeTuple) -> tuple[tuple[int, int] | None, int | None]:
    """(matches_epsilon_pattern, matches_half_pattern) of a pair."""
    return matches_epsilon_pattern(pair), matches_half_pattern(pair)


def _condition_a(link: L1Link) -> bool:
    return pair_profile(link.pair1)[0] is not None or pair_profile(link.pair2)[0] is not None


def l1_case(link: L1Link) -> str:
    """Cell of the L1 table, e.g. "b-3"."""
    letter = "a" if _condition_a(link) else "b"
    half1 = pair_profile(link.pair1)[1] is not None
    half2 = pair_profile(link.pair2)[1] is not None
    digit = {(True, False): 1, (False, True): 2, (True, True): 3, (False, False): 4}[(half1, half2)]
    return f"{letter}-{digit}"


def enumerate_spheres(link: ArborescentLink) -> list[SphereLabel]:
    """The 3-bridge spheres the classification attaches to `link`.

    Args:
        link: A validated link.

    Returns:
        The sphere labels, in label order.
    """
    if isinstance(link, L1Link):
        spheres = [SphereLabel.S1, SphereLabel.S2]
        if pair_profile(link.pair1)[1] is not None:
            spheres.append(SphereLabel.S3)
        if pair_profile(link.pair2)[1] is not None:
            spheres.append(SphereLabel.S4)
        return spheres
    if isinstance(link, L2Link):
        if is_exceptional_nonsimple(link) is not None:
            return [SphereLabel.S0_UNIQUE]
        return [SphereLabel.UNIQUE]
    if isinstance(link, L3Link):
        return [SphereLabel.UNIQUE]
    if isinstance(link, MontesinosLink):
        return [SphereLabel.P1] if is_elliptic_montesinos(link) else list(P_LABELS)
    raise ValidationError(f"unsupported link {link!r}")


def spheres_isotopic_L1(link: L1Link, i: int, j: int) -> bool:
    """Decides whether the spheres S_i and S_j of an L1 link are isotopic.

    Raises:
        ValidationError: if the link does not carry one of the spheres.
    """
    if not isinstance(link, L1Link):
        raise ValidationError(f"expected an L1 link, got {link}")
    possessed = enumerate_spheres(link)
    for k in (i, j):
        if _L1_LABELS.get(k) not in possessed:
            raise ValidationError(f"{link} has no 3-bridge sphere S{k}")
    if i == j:
        return True
    return {i, j} == {1, 2} and _condition_a(link)


def _l1_census(link: L1Link) -> SphereCensus:
    spheres = enumerate_spheres(link)
    index = {label: k for k, label in _L1_LABELS.items()}
    uf: UnionFind[SphereLabel] = UnionFind(spheres)
    for s, t in ((s, t) for s in spheres for t in spheres if index[s] < index[t]):
        if spheres_isotopic_L1(link, index[s], index[t]):
            uf.union(s, t)
    case = l1_case(link)
    result = SphereCensus(link.emit(), link.family, case, tuple(spheres), tuple(uf.blocks()), exact=True)
    if result.mu != TABLE_MU[case]:
        raise ConsistencyError(f"{link}: {result.mu} classes but the table lists {TABLE_MU[case]} for {case}")
    return result


def census(link: ArborescentLink) -> SphereCensus:
    """Counts the isotopy classes of 3-bridge spheres of `link`.

    Args:
        link: A validated link.

    Returns:
        SphereCensus: The spheres, their classes and whether the count is a
        theorem (`exact`) or only the merge-table upper bound.
    """
    if isinstance(link, L1Link):
        result = _l1_census(link)
    elif isinstance(link, MontesinosLink):
        if is_elliptic_montesinos(link):
            result = SphereCensus(link.emit(), link.family, "elliptic", (SphereLabel.P1,), ((SphereLabel.P1,),), True)
        else:
            blocks = tuple(merge_partition(link))
            result = SphereCensus(link.emit(), link.family, "nonelliptic-conjectured", P_LABELS, blocks, False)
    else:
        spheres = tuple(enumerate_spheres(link))
        case = "exceptional-nonsimple" if spheres == (SphereLabel.S0_UNIQUE,) else "generic"
        result = SphereCensus(link.emit(), link.family, case, spheres, (spheres,), True)
    logging.debug("census %s: case %s, mu %d", result.link, result.case, result.mu)
    return result


def commutator_witness(
    link: L1Link, depth: int = 1, edge_bound: int = 1
) -> tuple[str, AmalgamWord] | None:
    """Searches a conjugator from [u2,u1] to the commutator of another splitting.

    u_i and v_i are the exceptional fibers η_1 and η_2 of the i-th vertex.
    The targets are [u2,v1]^±1 and [v2,u1]^±1.

    Returns:
        (target name, witness) for the first target reached, or None when
        nothing is found inside the bounds.
    """
    g = AmalgamGroup.from_link(link)
    u1, v1, u2, v2 = g.fiber(1, 1), g.fiber(1, 2), g.fiber(2, 1), g.fiber(2, 2)
    source = commutator(u2, u1)
    targets = {
        "[u2,v1]": commutator(u2, v1),
        "[v1,u2]": commutator(v1, u2),
        "[v2,u1]": commutator(v2, u1),
        "[u1,v2]": commutator(u1, v2),
    }
    for name, target in targets.items():
        witness = search_conjugator(g, source, target, depth, edge_bound)
        if witness is not None:
            return name, witness
    return None


def l1_pair_grid(alpha_max: int) -> list[SlopeTuple]:
    """Pairs (s, t) with denominators in [2, alpha_max], 0 < s < 1 and -1 < t < 1."""
    firsts = [slope_normalize(b, a) for a in range(2, alpha_max + 1) for b in range(1, a) if math.gcd(a, b) == 1]
    seconds = [slope_normalize(b, a) for a in range(2, alpha_max + 1) for b in range(1 - a, a) if math.gcd(a, b) == 1]
    return [SlopeTuple((s, t)) for s in firsts for t in seconds]


def census_sweep(alpha_max: int = 7, verbose: int = 0, pairs: Sequence[SlopeTuple] | None = None) -> pd.DataFrame:
    """Censuses every L1 link built from two grid pairs.

    Args:
        alpha_max: Largest denominator of the grid.
        verbose: Print a banner and a progress bar when set.
        pairs: Use these pairs instead of `l1_pair_grid(alpha_max)`.

    Returns:
        A DataFrame with columns link, case, mu, exact.
    """
    pairs = l1_pair_grid(alpha_max) if pairs is None else list(pairs)
    banner(f"Sweeping {len(pairs) ** 2} L1 links", verbose)
    rows = []
    for pair1 in tqdm(pairs, desc="pair1", disable=not verbose):
        for pair2 in pairs:
            result = census(L1Link(pair1, pair2))
            rows.append((result.link, result.case, result.mu, result.exact))
    logging.info("swept %d L1 links with alpha_max=%d", len(rows), alpha_max)
    return pd.DataFrame(rows, columns=["link", "case", "mu", "exact"])
