import pytest
from absl.testing import parameterized

from bridgekit.census import (
    MERGE_TABLE,
    P_LABELS,
    all_merge_signs,
    merge_conditions,
    merge_partition,
    montesinos_merge_edges,
)
from bridgekit.errors import CoverageError, ValidationError
from bridgekit.links import parse_link
from bridgekit.types import SphereLabel

P1, P2, P3, P4, P5, P6 = P_LABELS


def test_table_shape():
    assert len(MERGE_TABLE) == 9
    degree = {p: 0 for p in P_LABELS}
    for p, q, _ in MERGE_TABLE:
        degree[p] += 1
        degree[q] += 1
    assert set(degree.values()) == {3}


def test_conditions():
    conditions = merge_conditions(parse_link("M(0;1/2,-1/3,2/7)"))
    assert conditions == {"1-1": True, "2-1": True, "1-2": True, "2-2": False, "1-3": False, "2-3": False}


class PartitionTest(parameterized.TestCase):
    @parameterized.named_parameters(
        ("single_condition", "M(0;2/5,1/3,2/7)", [(P1, P4), (P2, P3), (P5,), (P6,)]),
        ("half_merges_both_sides", "M(0;1/2,2/5,2/5)", [(P1, P2, P5, P6), (P3,), (P4,)]),
        ("transitive", "M(0;1/2,1/3,2/7)", [P_LABELS]),
        ("none", "M(0;2/5,2/7,3/7)", [(p,) for p in P_LABELS]),
    )
    def test_examples(self, text, blocks):
        self.assertEqual(merge_partition(parse_link(text)), blocks)


def test_edges_sorted():
    edges = montesinos_merge_edges(parse_link("M(0;1/2,1/3,2/7)"))
    assert edges == [(P1, P2), (P1, P4), (P1, P6), (P2, P3), (P2, P5), (P5, P6)]


def test_all_merge_signs():
    assert all_merge_signs(parse_link("M(0;1/2,1/3,1/7)")) == (1, 1, 1)
    assert all_merge_signs(parse_link("M(1;1/2,1/3,1/7)")) == (-1, 1, 1)
    assert all_merge_signs(parse_link("M(5;1/2,1/3,1/7)")) is None
    assert all_merge_signs(parse_link("M(0;1/2,1/3,2/7)")) is None


def test_all_merge_edges_join_everything():
    edges = montesinos_merge_edges(parse_link("M(0;1/2,1/3,1/7)"))
    assert {(P1, p) for p in P_LABELS[1:]} <= set(edges)


def test_elliptic_is_out_of_coverage():
    with pytest.raises(CoverageError):
        montesinos_merge_edges(parse_link("M(0;1/2,1/2,2/5)"))


def test_wrong_family():
    with pytest.raises(ValidationError):
        merge_partition(parse_link("L1((2/5,2/5),(2/5,2/5))"))


def test_labels():
    assert [str(p) for p in P_LABELS] == ["P1", "P2", "P3", "P4", "P5", "P6"]
    assert P1 is SphereLabel.P1
