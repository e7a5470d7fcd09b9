import numpy as np
import pytest

from bridgekit.errors import LinkSyntaxError, ValidationError
from bridgekit.groups import Presentation, Word
from bridgekit.groups.words import format_letters, parse_letters

a = Word.letter("a")
b = Word.letter("b")


def test_free_reduction():
    assert Word.of([("a", 1), ("a", -1)]).is_identity()
    assert (Word.letter("a", 2) * Word.letter("a", -2)).is_identity()
    assert Word.of([("a", 1), ("b", 0), ("a", 2)]) == Word.letter("a", 3)


def test_powers_and_inverse():
    assert (a * b) ** -2 == Word.of([("b", -1), ("a", -1), ("b", -1), ("a", -1)])
    assert (a * b) ** 0 == Word()
    assert ~(a * b) * (a * b) == Word()
    assert len(Word.of([("a", 2), ("b", -3)])) == 5


def test_substitute():
    w = Word.of([("a", 2), ("b", -1)])
    image = w.substitute({"a": b * Word.letter("c"), "b": a})
    assert str(image) == "b c b c a^-1"


def test_exponent_sums():
    w = Word.of([("a", 2), ("b", -1), ("a", -3)])
    np.testing.assert_array_equal(w.exponent_sums(["a", "b", "c"]), np.array([-1, -1, 0]))


def test_text_form():
    assert parse_letters("c1^2 c2^-1 h^3") == [("c1", 2), ("c2", -1), ("h", 3)]
    assert parse_letters("c1*c2") == [("c1", 1), ("c2", 1)]
    assert parse_letters(" 1 ") == []
    assert format_letters([]) == "1"
    assert str(Word.of([("c1", 2), ("h", -1)])) == "c1^2 h^-1"
    assert Word.of([("f", 1), ("c1", -1)]).to_json() == [["f", 1], ["c1", -1]]


def test_text_form_errors():
    with pytest.raises(LinkSyntaxError) as info:
        parse_letters("c1 $")
    assert info.value.position == 3


def test_presentation_checks_generators():
    with pytest.raises(ValidationError):
        Presentation(("a",), (Word.letter("b"),))


def test_exponent_matrix():
    p = Presentation(("a", "b"), (Word.letter("a", 2), a * b * ~a * ~b, Word.letter("b", 3)))
    np.testing.assert_array_equal(p.exponent_matrix(), np.array([[2, 0, 0], [0, 0, 3]]))
    assert p.to_json()["generators"] == ["a", "b"]
