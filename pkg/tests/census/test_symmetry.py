import math

import pytest
from absl.testing import parameterized

from bridgekit.census import elliptic_symmetry_group
from bridgekit.census.symmetry import Z2, Z2_D3, Z2_Z2
from bridgekit.errors import ValidationError
from bridgekit.links import MontesinosLink, parse_link
from bridgekit.rationals import SlopeTuple, slope_normalize


class SymmetryTest(parameterized.TestCase):
    @parameterized.named_parameters(
        ("dihedral_generic", "M(1;1/2,1/2,3/5)", Z2_Z2, ("psi1", "psi2"), "i-1", 3),
        ("three_halves", "M(0;1/2,1/2,1/2)", Z2_D3, ("psi1", "psi3"), "i-1", 3),
        ("dihedral_m_one_odd", "M(0;1/2,1/2,-2/3)", Z2, ("psi1",), "i-1", 1),
        ("dihedral_m_one_even", "M(0;1/2,1/2,-3/4)", Z2_Z2, ("psi1", "psi2"), "i-1", 1),
        ("dihedral_m_even", "M(0;1/2,1/2,1/3)", Z2_Z2, ("psi1", "psi2"), "i-2", 4),
        ("tetrahedral_seven", "M(0;1/2,1/3,1/3)", Z2_Z2, ("psi1", "psi4"), "ii", 7),
        ("tetrahedral_nine", "M(0;1/2,1/3,2/3)", Z2, ("psi1",), "ii", 9),
        ("tetrahedral_one", "M(1;1/2,1/3,1/3)", Z2, ("psi1",), "ii", 1),
        ("tetrahedral_large_half", "M(0;3/2,1/3,1/3)", Z2_Z2, ("psi1", "psi4"), "ii", 13),
        ("octahedral", "M(0;1/2,1/3,1/4)", Z2, ("psi1",), "iii", None),
        ("icosahedral", "M(2;1/2,2/3,3/5)", Z2, ("psi1",), "iii", None),
    )
    def test_examples(self, text, name, generators, case, m):
        result = elliptic_symmetry_group(parse_link(text))
        self.assertEqual(result.name, name)
        self.assertEqual(result.generators, generators)
        self.assertEqual(result.case, case)
        self.assertEqual(result.m, m)

    def test_half_position_does_not_matter(self):
        a = elliptic_symmetry_group(parse_link("M(1;1/2,1/2,3/5)"))
        b = elliptic_symmetry_group(parse_link("M(1;3/5,1/2,1/2)"))
        self.assertEqual(a, b)

    def test_nonelliptic(self):
        with self.assertRaises(ValidationError):
            elliptic_symmetry_group(parse_link("M(0;1/2,1/3,1/7)"))

    def test_wrong_family(self):
        with self.assertRaises(ValidationError):
            elliptic_symmetry_group(parse_link("L1((2/5,2/5),(2/5,2/5))"))


@pytest.mark.parametrize("b", range(-3, 4))
def test_dihedral_grid_is_covered(b):
    for alpha in range(2, 10):
        for beta in range(-2 * alpha, 2 * alpha):
            if math.gcd(alpha, beta) != 1:
                continue
            link = MontesinosLink(b, SlopeTuple.of("1/2", "1/2", slope_normalize(beta, alpha)))
            result = elliptic_symmetry_group(link)
            assert result.case in ("i-1", "i-2")
            assert result.name in (Z2, Z2_Z2, Z2_D3)
