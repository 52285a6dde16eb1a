import pytest

from rankdual import (
    EnumSpec,
    RankFunctionError,
    SuiteResult,
    all_rooted_graphs,
    all_trees,
    check_greedoid,
    check_matroid,
    enumerate_tables,
    random_monotone_tables,
    random_tables,
    run_suite,
    validate,
)
from rankdual.verify import SUITES, _Recorder, _rooted_tree_shapes


# --- enumeration ----------------------------------------------------------------


def test_enum_spec_validation():
    with pytest.raises(RankFunctionError, match="too large"):
        EnumSpec(5, "greedoid")
    with pytest.raises(RankFunctionError, match="constraint"):
        EnumSpec(2, "lattice")


def test_enumeration_trivial_counts():
    assert len(list(enumerate_tables(EnumSpec(0, "greedoid")))) == 1
    ones = list(enumerate_tables(EnumSpec(1, "greedoid")))
    assert [g.values for g in ones] == [(0, 0), (0, 1)]


def test_enumeration_is_deterministic_and_duplicate_free():
    seen = [g.values for g in enumerate_tables(EnumSpec(3, "greedoid"))]
    assert len(seen) == len(set(seen))
    assert seen == [g.values for g in enumerate_tables(EnumSpec(3, "greedoid"))]
    assert seen == sorted(seen)


def test_enumeration_double_count_cross_check():
    # the pruned enumerators must agree with filtering everything through the
    # witnessed checkers
    for n in (2, 3):
        everything = list(enumerate_tables(EnumSpec(n, "all-normalized-subcardinal-monotone")))
        for g in everything:
            report = validate(g)
            assert report.normalized and report.subcardinal and report.monotone
        greedoids = [g.values for g in everything if check_greedoid(g).passed]
        matroids = [g.values for g in everything if check_matroid(g).passed]
        assert greedoids == [g.values for g in enumerate_tables(EnumSpec(n, "greedoid"))]
        assert matroids == [g.values for g in enumerate_tables(EnumSpec(n, "matroid"))]


def test_recorded_census_numbers():
    # cross-checked against the filter-everything pass (previous test) at
    # n <= 3; the n = 4 numbers are frozen census values
    assert sum(1 for _ in enumerate_tables(EnumSpec(2, "all-normalized-subcardinal-monotone"))) == 9
    assert sum(1 for _ in enumerate_tables(EnumSpec(2, "greedoid"))) == 7
    assert sum(1 for _ in enumerate_tables(EnumSpec(2, "matroid"))) == 5
    assert sum(1 for _ in enumerate_tables(EnumSpec(3, "all-normalized-subcardinal-monotone"))) == 209
    assert sum(1 for _ in enumerate_tables(EnumSpec(3, "greedoid"))) == 64
    assert sum(1 for _ in enumerate_tables(EnumSpec(3, "matroid"))) == 16
    assert sum(1 for _ in enumerate_tables(EnumSpec(4, "matroid"))) == 68
    assert sum(1 for _ in enumerate_tables(EnumSpec(4, "greedoid"))) == 3012


def test_full_antimatroid_enumeration_matches_filter():
    from rankdual import check_antimatroid

    for n in (2, 3):
        expected = [
            g.values
            for g in enumerate_tables(EnumSpec(n, "all-normalized-subcardinal-monotone"))
            if check_antimatroid(g).passed and g.full_rank == n
        ]
        got = [g.values for g in enumerate_tables(EnumSpec(n, "full-antimatroid"))]
        assert got == expected


# --- random corpora ----------------------------------------------------------------


def test_random_tables_deterministic_and_normalized():
    first = [g.values for g in random_tables(40, max_n=5, seed=123)]
    second = [g.values for g in random_tables(40, max_n=5, seed=123)]
    assert first == second
    assert first != [g.values for g in random_tables(40, max_n=5, seed=124)]
    for values in first:
        assert values[0] == 0
        assert all(-3 <= v <= 8 for v in values[1:])


def test_random_tables_require_seed():
    with pytest.raises(RankFunctionError, match="seed"):
        next(random_tables(1))


def test_random_monotone_tables_satisfy_constraints():
    for g in random_monotone_tables(60, max_n=5, seed=9):
        report = validate(g)
        assert report.normalized and report.monotone
        assert report.subcardinal and report.nonnegative


# --- structural censuses -------------------------------------------------------------


def test_tree_census_counts():
    trees = all_trees(8)
    by_edges = {}
    for t in trees:
        by_edges[len(t.edges)] = by_edges.get(len(t.edges), 0) + 1
    assert [by_edges[e] for e in range(9)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]
    assert len(trees) == 95


def test_rooted_tree_shape_counts():
    assert [len(_rooted_tree_shapes(k)) for k in range(1, 8)] == [1, 1, 2, 4, 9, 20, 48]


def test_rooted_graph_census_smoke():
    graphs = list(all_rooted_graphs(3))
    # 8 rooted trees with up to 3 edges plus the triangle rooted 3 ways
    assert len(graphs) == 8 + 3
    for rg in graphs:
        assert rg.root in rg.vertices


# --- suite machinery -----------------------------------------------------------------


def test_unknown_suite():
    with pytest.raises(RankFunctionError, match="unknown suite"):
        run_suite("nonesuch")


def test_randomized_suite_requires_seed():
    with pytest.raises(RankFunctionError, match="seed"):
        run_suite("involution", {"count": 5})


def test_suite_results_are_deterministic():
    a = run_suite("duality_swap", {"count": 40, "seed": 77})
    b = run_suite("duality_swap", {"count": 40, "seed": 77})
    assert (a.suite, a.params, a.instances_checked, a.failures) == (
        b.suite,
        b.params,
        b.instances_checked,
        b.failures,
    )
    assert a.passed


def test_all_suites_pass_at_small_scale():
    params = {
        "involution": {"count": 40, "seed": 3},
        "exchange": {"count": 25, "seed": 3},
        "contract_formula": {"count": 25, "seed": 3},
        "direct_sum_dual": {"count": 25, "seed": 3},
        "recursion_oracle": {"count": 25, "seed": 3},
        "duality_swap": {"count": 40, "seed": 3},
        "polynomiality": {"count": 40, "seed": 3},
        "contract_feasibility": {"n": 2},
        "minor_agreement": {"n": 2},
        "dual_greedoid_axioms": {"n": 3},
        "greedoid_intersection": {"n": 3},
        "root_adjacency": {"max_edges": 3},
        "full_dual_nonpositive": {"n": 3},
        "closure_dual_rank": {"n": 3, "max_tree_edges": 4},
        "convex_zero_dual": {"n": 3, "max_tree_edges": 4},
        "nullity_monotone": {"n": 2, "count": 40, "seed": 3},
        "demimatroid_characterization": {"n": 2, "count": 40, "seed": 3},
        "branching_goldens": {},
        "pruning_goldens": {},
    }
    assert set(params) == set(SUITES)
    for name, p in params.items():
        result = run_suite(name, p)
        assert result.passed, (name, result.failures[:3])
        assert result.instances_checked > 0


def test_parallel_intersection_matches_sequential():
    seq = run_suite("greedoid_intersection", {"n": 3})
    par = run_suite("greedoid_intersection", {"n": 3, "workers": 2})
    assert par.passed and par.instances_checked == seq.instances_checked


def test_recorder_fail_fast_and_cap():
    rec = _Recorder(fail_fast=True)
    assert rec.check(True, "x", "ok")
    assert not rec.check(False, "x", "bad")
    assert rec.aborted and len(rec.failures) == 1

    rec = _Recorder(max_failures=2)
    for i in range(5):
        rec.check(False, f"i{i}", "bad")
    assert rec.instances == 5 and len(rec.failures) == 2


def test_suite_report_rendering():
    result = SuiteResult(
        suite="demo",
        params={"n": 2, "seed": 5},
        instances_checked=3,
        failures=[("inst", "claim", "why")],
        elapsed=1.25,
    )
    report = result.to_report()
    assert "suite: demo" in report
    assert "params: n=2 seed=5" in report
    assert "failure: inst | claim | why" in report
    assert report.endswith("result: fail")
    assert "elapsed" in result.to_report(include_elapsed=True)
