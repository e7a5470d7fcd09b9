import re

import pytest
from absl.testing import parameterized

from bridgekit.errors import LinkSyntaxError, ValidationError
from bridgekit.links import L1Link, L2Link, L3Link, MontesinosLink, emit_link, parse_group, parse_link, parse_seifert
from bridgekit.rationals import Slope, SlopeTuple
from bridgekit.seifert import Base


class ParseLinkTest(parameterized.TestCase):
    @parameterized.named_parameters(
        ("l1", "L1((1/2,-2/5),(1/2,-2/5))", L1Link),
        ("l2", "L2((1/3,1/4),(1/5),(1/3,1/4))", L2Link),
        ("l3", "L3((1/3,1/4,1/5),(1/2,-2/5))", L3Link),
        ("montesinos", "M(0;1/2,1/3,1/4)", MontesinosLink),
    )
    def test_canonical_round_trip(self, text, cls):
        link = parse_link(text)
        self.assertIsInstance(link, cls)
        self.assertEqual(emit_link(link), text)
        self.assertEqual(parse_link(emit_link(link)), link)

    def test_whitespace_and_reduction(self):
        link = parse_link(" L1(( 2/4 , -4/10 ), (1/3,1/4)) ")
        self.assertEqual(link.emit(), "L1((1/2,-2/5),(1/3,1/4))")
        self.assertEqual(emit_link(parse_link(link.emit())), link.emit())

    def test_montesinos_fields(self):
        link = parse_link("M(0; 1/2, 1/3, 1/4)")
        self.assertEqual(link.b, 0)
        self.assertEqual(link.slopes, SlopeTuple.of("1/2", "1/3", "1/4"))


class ParseErrorTest(parameterized.TestCase):
    def test_middle_denominator(self):
        with pytest.raises(ValidationError, match=re.escape("|α₀|>1 violated")):
            parse_link("L2((1/3,1/4),(1/1),(1/3,1/4))")

    def test_middle_must_be_unit(self):
        with pytest.raises(ValidationError):
            parse_link("L2((1/3,1/4),(2/5),(1/3,1/4))")

    @parameterized.named_parameters(
        ("l1", "L1((1/1,1/2),(1/3,1/4))"),
        ("montesinos", "M(0;1/2,2/1,1/4)"),
    )
    def test_alpha_must_exceed_one(self, text):
        with pytest.raises(ValidationError, match="α must exceed 1"):
            parse_link(text)

    def test_l3_tail_pattern(self):
        with pytest.raises(ValidationError):
            parse_link("L3((1/3,1/4,1/5),(1/3,1/4))")

    def test_missing_comma_position(self):
        with pytest.raises(LinkSyntaxError) as info:
            parse_link("L1((1/2,-2/5),(1/2 -2/5))")
        self.assertEqual(info.value.position, 19)
        self.assertIn("at position 19", str(info.value))

    def test_unknown_family(self):
        with pytest.raises(LinkSyntaxError) as info:
            parse_link("L9((1/2,1/3),(1/2,1/3))")
        self.assertEqual(info.value.position, 0)

    def test_zero_denominator(self):
        with pytest.raises(LinkSyntaxError) as info:
            parse_link("M(0;1/0,1/3,1/4)")
        self.assertEqual(info.value.position, 4)

    def test_trailing_input(self):
        with pytest.raises(LinkSyntaxError, match="trailing"):
            parse_link("M(0;1/2,1/3,1/4) x")

    def test_syntax_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_link("")


def test_parse_seifert():
    inv = parse_seifert("S2(-2; 1/2, 2/3, 6/7)")
    assert inv.base is Base.SPHERE
    assert inv.b == -2
    assert inv.slopes == SlopeTuple.of("1/2", "2/3", "6/7")


def test_parse_seifert_needs_three_fibers():
    with pytest.raises(LinkSyntaxError):
        parse_seifert("S2(0; 1/2, 1/3)")


def test_parse_group():
    assert parse_group("D(1/2, -1/3)") == SlopeTuple((Slope(1, 2), Slope(-1, 3)))
    with pytest.raises(LinkSyntaxError):
        parse_group("D(1/2)")
