import itertools
from fractions import Fraction

import pytest
from absl.testing import parameterized

from bridgekit import links
from bridgekit.errors import ValidationError
from bridgekit.links import (
    L1Link,
    L2Link,
    L3Link,
    MontesinosLink,
    branched_cover_invariants,
    is_elliptic_montesinos,
    is_exceptional_nonsimple,
    parse_link,
)
from bridgekit.rationals import SlopeTuple
from bridgekit.seifert import FIBER_HORIZONTAL


class EllipticTest(parameterized.TestCase):
    @parameterized.named_parameters(
        ("dihedral", "M(0;1/2,1/2,2/5)", True),
        ("icosahedral", "M(0;1/2,1/3,1/5)", True),
        ("permuted", "M(3;1/3,-1/2,2/3)", True),
        ("hyperbolic", "M(0;2/5,2/5,2/5)", False),
        ("euclidean", "M(0;1/2,1/4,1/4)", False),
    )
    def test_examples(self, text, expected):
        self.assertEqual(is_elliptic_montesinos(parse_link(text)), expected)

    def test_agrees_with_orbifold_characteristic(self):
        for dens in itertools.product(range(2, 13), repeat=3):
            link = MontesinosLink(0, SlopeTuple.of(*(f"1/{a}" for a in dens)))
            spherical = sum(Fraction(1, a) for a in dens) > 1
            self.assertEqual(is_elliptic_montesinos(link), spherical, msg=str(dens))

    def test_rejects_other_families(self):
        with pytest.raises(ValidationError):
            is_elliptic_montesinos(parse_link("L1((1/3,1/4),(1/3,1/4))"))


class ExceptionalNonsimpleTest(parameterized.TestCase):
    @parameterized.named_parameters(
        ("klein", "L2((-1/2,1/2),(1/3),(-1/2,1/2))", 3),
        ("generic", "L2((1/3,1/4),(1/5),(1/3,1/4))", None),
        ("reversed", "L2((1/2,-1/2),(1/3),(-1/2,1/2))", 3),
        ("negative_middle", "L2((-1/2,1/2),(-1/4),(-1/2,1/2))", -4),
        ("one_side", "L2((-1/2,1/2),(1/3),(1/3,1/4))", None),
    )
    def test_examples(self, text, expected):
        self.assertEqual(is_exceptional_nonsimple(parse_link(text)), expected)


def test_l1_cover():
    cover = branched_cover_invariants(parse_link("L1((1/2,-2/5),(1/3,1/4))"))
    assert cover.form == "L1"
    assert [str(p) for p in cover.pieces] == ["D(1/2,-2/5)", "D(1/3,1/4)"]
    assert cover.gluings == ((0, 1, FIBER_HORIZONTAL),)


def test_montesinos_cover():
    cover = parse_link("M(0;1/2,1/3,1/4)").branched_cover()
    assert [str(p) for p in cover.pieces] == ["S2(0;1/2,1/3,1/4)"]
    link = parse_link("M(1;1/2,1/3,1/4)")
    assert link.seifert_invariants().b == -1
    assert link.seifert_invariants().euler_number == -(Fraction(1, 2) + Fraction(1, 3) + Fraction(1, 4) - 1)


def test_l3_cover():
    link = parse_link("L3((1/3,1/4,1/5),(1/2,-2/5))")
    cover = link.branched_cover()
    assert link.n == 2
    assert cover.form == "M2-b"
    assert [str(p) for p in cover.pieces] == ["D(1/3,1/4,1/5)", "D(1/2,-2/5)"]
    assert cover.gluings == ((0, 1, FIBER_HORIZONTAL),)


def test_l2_covers():
    generic = parse_link("L2((1/3,1/4),(1/5),(2/5,2/5))").branched_cover()
    assert generic.form == "M4"
    assert [str(p) for p in generic.pieces] == ["D(1/3,1/4)", "A(1/5)", "D(2/5,2/5)"]
    assert len(generic.gluings) == 2

    klein = parse_link("L2((1/3,1/4),(1/3),(1/2,-1/2))").branched_cover()
    assert klein.form == "M1-b"
    assert [p.name for p in klein.pieces] == ["M1", "Mo"]
    assert str(klein.pieces[0]) == "D(1/3,1/4)"
    assert klein.to_dict()["gluings"] == [[0, 1, FIBER_HORIZONTAL]]


def test_swapped():
    link = parse_link("L1((1/2,-2/5),(1/3,1/4))")
    assert link.swapped().emit() == "L1((1/3,1/4),(1/2,-2/5))"
    assert link.swapped().swapped() == link
    assert link.pair(2) == link.pair2


class RegistryTest(parameterized.TestCase):
    @parameterized.parameters(
        "L1((1/2,-2/5),(1/3,1/4))",
        "L2((-1/2,1/2),(1/3),(-1/2,1/2))",
        "L3((1/3,1/4,1/5),(1/2,-2/5))",
        "M(-1;1/2,1/3,1/5)",
    )
    def test_serialize_round_trip(self, text):
        link = parse_link(text)
        config = links.serialize(link)
        self.assertEqual(config["class_name"], link.family)
        self.assertEqual(links.deserialize(config), link)
        self.assertEqual(links.get(config), link)
        self.assertEqual(links.get(text), link)
        self.assertIs(links.get(link), link)

    def test_serialize_montesinos(self):
        config = links.serialize(parse_link("M(0;1/2,1/3,1/4)"))
        self.assertEqual(config, {"class_name": "M", "config": {"b": 0, "slopes": ["1/2", "1/3", "1/4"]}})

    def test_get_family(self):
        self.assertIs(links.get_family("montesinos"), MontesinosLink)
        self.assertIs(links.get_family("L2"), L2Link)
        self.assertIs(links.get_family("l3link"), L3Link)
        with pytest.raises(ValidationError):
            links.get_family("L4")

    def test_bad_identifier(self):
        with pytest.raises(ValidationError):
            links.get(42)

    def test_bad_config(self):
        with pytest.raises(TypeError):
            L1Link.from_config({"pair1": ["1/2", "1/3"]})

    def test_invalid_config(self):
        with pytest.raises(ValidationError):
            L1Link.from_config({"pair1": ["1/1", "1/3"], "pair2": ["1/2", "1/3"]})
