import pytest
from hypothesis import given
from hypothesis import strategies as st

from rankdual import (
    GroundSet,
    GroundSetError,
    TableBuildError,
    build_rank_table,
    dual,
    table_from_values,
    validate,
)
from rankdual.core import masks_by_cardinality

from conftest import make_table


def test_ground_set_rejects_duplicates():
    with pytest.raises(GroundSetError):
        GroundSet(("a", "b", "a"))


def test_ground_set_rejects_oversize():
    with pytest.raises(GroundSetError):
        GroundSet(tuple(f"e{i}" for i in range(25)))


def test_ground_set_rejects_non_string_labels():
    with pytest.raises(GroundSetError):
        GroundSet(("a", ""))


def test_subset_iteration_visits_every_mask_once():
    ground = GroundSet(("a", "b", "c"))
    masks = [s.bits for s in ground.subsets()]
    assert masks == list(range(8))


def test_subset_labels_and_str():
    ground = GroundSet(("a", "b", "c"))
    s = ground.subset(("a", "c"))
    assert s.labels() == ("a", "c")
    assert str(s) == "{a,c}"
    assert str(ground.empty()) == "{}"
    assert "a" in s and "b" not in s


def test_subset_rejects_unknown_and_duplicate_labels():
    ground = GroundSet(("a", "b"))
    with pytest.raises(GroundSetError):
        ground.subset(("x",))
    with pytest.raises(GroundSetError):
        ground.subset(("a", "a"))


def test_subset_ops_require_same_ground():
    g1 = GroundSet(("a", "b"))
    g2 = GroundSet(("a", "c"))
    with pytest.raises(GroundSetError):
        g1.subset(("a",)).union(g2.subset(("a",)))


@given(st.integers(0, 6), st.data())
def test_subset_algebra_laws(n, data):
    ground = GroundSet(tuple("abcdef"[:n]))
    mask = data.draw(st.integers(0, ground.full_mask))
    s = ground.subset_from_mask(mask)
    assert len(s) + len(s.complement()) == n
    assert s.complement().complement() == s
    assert (s | s.complement()) == ground.full()
    assert (s & s.complement()) == ground.empty()


def test_build_rank_table_demo_entries(demo_table):
    ground = GroundSet(("a", "b", "c"))
    entries = [
        ((), 0), (("a",), 1), (("b",), 0), (("c",), 1),
        (("a", "b"), 2), (("a", "c"), 2), (("b", "c"), 1), (("a", "b", "c"), 3),
    ]
    table = build_rank_table(ground, entries)
    assert table == demo_table
    assert table.rank(("b", "c")) == 1
    assert table.full_rank == 3


def test_build_rank_table_empty_ground():
    ground = GroundSet(())
    table = build_rank_table(ground, [((), 0)])
    assert table.values == (0,)


def test_build_rank_table_missing_entry():
    ground = GroundSet(("a", "b", "c"))
    entries = [((), 0), (("a",), 1), (("b",), 0), (("c",), 1),
               (("a", "b"), 2), (("a", "c"), 2), (("a", "b", "c"), 3)]
    with pytest.raises(TableBuildError, match="missing subset"):
        build_rank_table(ground, entries)


def test_build_rank_table_duplicate_entry():
    ground = GroundSet(("a",))
    with pytest.raises(TableBuildError, match="duplicate subset"):
        build_rank_table(ground, [((), 0), (("a",), 1), (("a",), 0)])


def test_build_rank_table_unknown_label():
    ground = GroundSet(("a",))
    with pytest.raises(GroundSetError):
        build_rank_table(ground, [((), 0), (("z",), 1)])


def test_table_rejects_non_integer_ranks():
    with pytest.raises(TableBuildError):
        make_table("a", [0, 1.5])
    with pytest.raises(TableBuildError):
        make_table("a", [0, True])


def test_validate_demo_all_flags_true(demo_table):
    report = validate(demo_table)
    assert report.normalized
    assert report.subcardinal and report.nonnegative
    assert report.monotone and report.rank_s_maximum
    assert report.witnesses == {}


def test_validate_dual_of_demo(demo_table):
    report = validate(dual(demo_table))
    assert not report.nonnegative
    assert str(report.witnesses["nonnegative"]) == "{a}"
    # any nested drop also breaks monotonicity; the minimal witness starts at {}
    assert not report.monotone
    a, b = report.witnesses["monotone"]
    assert str(a) == "{}" and str(b) == "{a}"
    # the pair ({c}, {a,c}) is another genuine violation of monotonicity
    gd = dual(demo_table)
    assert gd.rank(("c",)) > gd.rank(("a", "c"))


def test_validate_non_normalized():
    # r(empty) = 3 with wild singleton ranks
    table = make_table("ab", [3, -1, 7, 2])
    report = validate(table)
    assert not report.normalized
    assert not report.rank_s_maximum  # r(b) = 7 > r(S) = 2
    assert not report.subcardinal


def test_validate_is_pure(demo_table):
    assert validate(demo_table) == validate(demo_table)


def test_masks_by_cardinality_order():
    assert masks_by_cardinality(3) == (0, 1, 2, 4, 3, 5, 6, 7)
