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
"""Solutions of w(a,b,c,d) = {(c1c2)^a h^b} η_1 {(c1c2)^c h^d} ∈ {η_1^±1, η_2^±1}.

h is central, so w(a,b,c,d) only depends on a, c and b + d. Every solution
family is therefore a tuple (a, c, target, b + d); `solution_families`
lists them in closed form and `brute_force_solutions` is an independent
oracle that normalizes every word of a window.
"""
from __future__ import annotations

import dataclasses
import enum
from collections.abc import Iterator

from absl import logging
from tqdm.auto import tqdm

from ..types import Window
from ..utils import banner
from .sfs import SfsGroup, SfsWord, eta, exceptional_fiber, normalize
from .words import Letter


class Target(str, enum.Enum):
    ETA1 = "eta1"
    ETA1_INV = "eta1^-1"
    ETA2 = "eta2"
    ETA2_INV = "eta2^-1"

    def __str__(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True, order=True)
class Solution:
    a: int
    b: int
    c: int
    d: int
    target: Target

    def to_json(self) -> list:
        return [self.a, self.b, self.c, self.d, str(self.target)]


@dataclasses.dataclass(frozen=True)
class Family:
    """Solutions (a, b, c, total - b) for every b.

    Attributes:
        label: Name of the closed form, "i" to "iv", "i*" or "dihedral".
        a: Exponent of the left horizontal loop.
        c: Exponent of the right horizontal loop.
        target: The element w equals.
        total: The value of b + d.
    """

    label: str
    a: int
    c: int
    target: Target
    total: int


def targets(group: SfsGroup) -> dict[Target, SfsWord]:
    eta1 = eta(group, 1)
    eta2 = eta(group, 2)
    return {Target.ETA1: eta1, Target.ETA1_INV: ~eta1, Target.ETA2: eta2, Target.ETA2_INV: ~eta2}


def _x_power(a: int) -> list[Letter]:
    if a >= 0:
        return [("c1", 1), ("c2", 1)] * a
    return [("c2", -1), ("c1", -1)] * -a


def build_w(group: SfsGroup, a: int, b: int, c: int, d: int) -> SfsWord:
    """Normal form of {(c1c2)^a h^b} η_1 {(c1c2)^c h^d}."""
    fiber = exceptional_fiber(group, 1)
    raw = _x_power(a) + [("h", b), ("c1", fiber.gamma), ("h", fiber.delta)] + _x_power(c) + [("h", d)]
    return normalize(group, raw)


def _residue_quotient(beta: int, alpha: int, sign: int) -> int | None:
    """k with β = sign + kα, or None."""
    k, r = divmod(beta - sign, alpha)
    return k if r == 0 else None


def _dihedral_families(group: SfsGroup, window: Window) -> list[Family]:
    # quotient is Z_2 * Z_2: s x^c = x^-c s h^(-ce) with e = β_1 + β_2
    e = group.beta1 + group.beta2
    families = []
    for a in window.ac_range():
        families.append(Family("dihedral", a, a, Target.ETA1, a * e))
        families.append(Family("dihedral", a, a, Target.ETA1_INV, a * e - 1))
        half = (2 * a + 1) * e // 2
        families.append(Family("dihedral", a, a + 1, Target.ETA2, half))
        families.append(Family("dihedral", a, a + 1, Target.ETA2_INV, half - 1))
    return [f for f in families if abs(f.c) <= window.ac]


def solution_families(group: SfsGroup, window: Window | None = None) -> list[Family]:
    """Closed form solution families of the equation.

    Besides the families with (a, c) in {-1, 0, 1}², α_1 = 2 adds
    w(0,b,0,-b-1) = η_1⁻¹, and α_1 = α_2 = 2 (dihedral quotient) has one
    family per a, which is why the window is needed.

    Args:
        group: The group D(β_1/α_1, β_2/α_2).
        window: Bounds used to cut the dihedral families; the default window
            when omitted.

    Returns:
        The families, in a deterministic order.
    """
    window = window or Window()
    a1, b1, a2, b2 = group.alpha1, group.beta1, group.alpha2, group.beta2
    if a1 == 2 and a2 == 2:
        return _dihedral_families(group, window)

    families = [Family("i", 0, 0, Target.ETA1, 0)]
    if a1 == 2:
        families.append(Family("i*", 0, 0, Target.ETA1_INV, -1))

    k_plus = _residue_quotient(b1, a1, 1)
    k_minus = _residue_quotient(b1, a1, -1)
    if a2 == 2:
        if k_plus is not None:
            families.append(Family("ii", 1, 1, Target.ETA1_INV, 2 * k_plus + b2))
        if k_minus is not None:
            families.append(Family("ii", -1, -1, Target.ETA1_INV, -2 * k_minus - b2))
    for sign, target in ((1, Target.ETA2), (-1, Target.ETA2_INV)):
        if k_minus is not None:
            k2 = _residue_quotient(b2, a2, sign)
            if k2 is not None:
                families.append(Family("iii", -1, 0, target, -k_minus - k2))
        if k_plus is not None:
            k2 = _residue_quotient(b2, a2, -sign)
            if k2 is not None:
                families.append(Family("iv", 0, 1, target, k_plus + k2))
    return [f for f in families if abs(f.a) <= window.ac and abs(f.c) <= window.ac]


def predicted_solutions(group: SfsGroup, window: Window) -> set[Solution]:
    """Expands `solution_families` inside the window."""
    if window.is_empty:
        return set()
    solutions = set()
    for family in solution_families(group, window):
        for b in window.bd_range():
            d = family.total - b
            if window.contains_bd(d):
                solutions.add(Solution(family.a, b, family.c, d, family.target))
    return solutions


def _scan(group: SfsGroup, window: Window, verbose: int) -> Iterator[tuple[tuple[int, int, int, int], SfsWord]]:
    if window.is_empty:
        return
    tuples = (
        (a, b, c, d)
        for a in window.ac_range()
        for b in window.bd_range()
        for c in window.ac_range()
        for d in window.bd_range()
    )
    for abcd in tqdm(tuples, total=window.size(), desc=f"Scanning {group}", disable=not verbose):
        yield abcd, build_w(group, *abcd)


def brute_force_solutions(group: SfsGroup, window: Window, verbose: int = 0) -> set[Solution]:
    """Normalizes w(a,b,c,d) over the whole window and keeps every hit.

    Args:
        group: The group D(β_1/α_1, β_2/α_2).
        window: The search window.
        verbose: Print a banner and a progress bar when set.

    Returns:
        All (a, b, c, d, target) with w(a,b,c,d) equal to the target.
    """
    banner(f"Brute forcing {group} over window {window}", verbose)
    lookup = {word: target for target, word in targets(group).items()}
    hits = set()
    for (a, b, c, d), w in _scan(group, window, verbose):
        target = lookup.get(w)
        if target is not None:
            hits.add(Solution(a, b, c, d, target))
    logging.info("brute force over %s window %s: %d solutions", group, window, len(hits))
    return hits


def identity_solutions(group: SfsGroup, window: Window, verbose: int = 0) -> set[tuple[int, int, int, int]]:
    """All (a, b, c, d) in the window with w(a,b,c,d) = 1."""
    return {abcd for abcd, w in _scan(group, window, verbose) if w.is_identity}
