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
"""π-orbifold group of a Montesinos link and the ρ automorphism."""
from __future__ import annotations

import numpy as np
from absl import logging
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from ..errors import ConsistencyError, ValidationError
from ..links import MontesinosLink
from .words import Presentation, Word

FIBER = "f"


def _reflections(link: MontesinosLink) -> list[str]:
    if not isinstance(link, MontesinosLink):
        raise ValidationError(f"expected a Montesinos link, got {link}")
    return [f"c{i}" for i in range(1, len(link.slopes) + 2)]


def orbifold_presentation(link: MontesinosLink) -> Presentation:
    """Presentation of O(L) for L = M(b; β_1/α_1, ..., β_r/α_r).

    ⟨c_1, ..., c_{r+1}, f | c_i², c_i f c_i⁻¹ f, (c_j c_{j+1})^α_j f^β_j, c_1 c_{r+1} f^{-b}⟩

    The closing exponent is -b because the link is stored as L(b; ...),
    which is L(-b'; ...) with b' = -b.
    """
    cs = _reflections(link)
    f = Word.letter(FIBER)
    relators = [Word.letter(c, 2) for c in cs]
    relators += [Word.letter(c) * f * Word.letter(c, -1) * f for c in cs]
    for j, slope in enumerate(link.slopes):
        pair = Word.letter(cs[j]) * Word.letter(cs[j + 1])
        relators.append(pair**slope.den * f**slope.num)
    relators.append(Word.letter(cs[0]) * Word.letter(cs[-1]) * f ** (-link.b))
    return Presentation(tuple(cs) + (FIBER,), tuple(relators))


def rho_automorphism_images(link: MontesinosLink, check: bool = True) -> dict[str, Word]:
    """Images of the generators under the lift of ρ.

    c_1 -> c_1 f, c_j -> (c_1 f)(c_j f)(c_1 f)⁻¹ and f -> (c_1 f) f (c_1 f)⁻¹.

    Args:
        link: A Montesinos link.
        check: Verify that every relator maps into the relator lattice of
            the abelianization.

    Returns:
        Generator name to image word.

    Raises:
        ConsistencyError: if the abelianized check fails.
    """
    cs = _reflections(link)
    f = Word.letter(FIBER)
    c1f = Word.letter(cs[0]) * f
    images = {cs[0]: c1f}
    for c in cs[1:]:
        images[c] = c1f * (Word.letter(c) * f) * ~c1f
    images[FIBER] = c1f * f * ~c1f
    if check:
        check_abelianized_images(orbifold_presentation(link), images)
    return images


def in_lattice(basis: np.ndarray, vector: np.ndarray) -> bool:
    """True iff `vector` is an integer combination of the columns of `basis`."""
    lattice = Matrix(basis.tolist())
    extended = lattice.row_join(Matrix(vector.tolist()))
    return hermite_normal_form(extended) == hermite_normal_form(lattice)


def check_abelianized_images(presentation: Presentation, images: dict[str, Word]) -> None:
    """Checks that every relator image has exponent sums in the relator lattice."""
    basis = presentation.exponent_matrix()
    for relator in presentation.relators:
        image = relator.substitute(images).exponent_sums(presentation.generators)
        if not in_lattice(basis, image):
            raise ConsistencyError(f"presentation/image mismatch: image of {relator} is not in the relator lattice")
    logging.debug("abelianized ρ images verified for %d relators", len(presentation.relators))
