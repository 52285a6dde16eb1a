import json
from pathlib import Path

import pytest

from rankdual import (
    branching_greedoid,
    contract,
    delete,
    demo_rooted_tree,
    dual,
    dump_rank_table,
    parse_document,
)
from rankdual.cli import run_command

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"
TABLE_DOC = str(FIXTURES / "branching_demo_table.json")
GRAPH_DOC = str(FIXTURES / "branching_demo.json")
TREE_DOC = str(FIXTURES / "pruning_demo.json")
UNIFORM_DOC = str(FIXTURES / "uniform_u23.json")


def run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tutte_golden_output(capsys):
    code, out, _ = run(capsys, "tutte", "--in", TABLE_DOC)
    assert code == 0
    assert out.strip() == "t^3*z + t^3 + t^2*z + 2*t^2 + 2*t + 1"


def test_tutte_recursive_matches(capsys):
    _, subset_out, _ = run(capsys, "tutte", "--in", TABLE_DOC)
    code, rec_out, _ = run(capsys, "tutte", "--in", TABLE_DOC, "--method", "recursive", "--pivot", "highest")
    assert code == 0 and rec_out == subset_out


def test_check_matroid_fails_with_witness(capsys):
    code, out, _ = run(capsys, "check", "matroid", "--in", TABLE_DOC)
    assert code == 1
    assert "R1: fail (A={b}, p=a)" in out
    assert out.strip().endswith("overall: fail")


def test_check_greedoid_passes(capsys):
    code, out, _ = run(capsys, "check", "greedoid", "--in", TABLE_DOC)
    assert code == 0
    assert "overall: pass" in out


def test_check_demimatroid_triple_flag(capsys):
    code, out, _ = run(capsys, "check", "demimatroid", "--in", TABLE_DOC, "--s-in", TABLE_DOC)
    assert code == 1
    assert "system: demi-matroid-triple" in out


def test_dual_emits_round_trippable_document(capsys):
    code, out, _ = run(capsys, "dual", "--in", TABLE_DOC)
    assert code == 0
    kind, table = parse_document(out)
    assert kind == "rank-table"
    assert table == dual(branching_greedoid(demo_rooted_tree()))


def test_emit_and_reread_round_trip(tmp_path, capsys):
    g = branching_greedoid(demo_rooted_tree())
    path = tmp_path / "table.json"
    path.write_text(dump_rank_table(g), encoding="utf-8")
    code, out, _ = run(capsys, "delete", "-p", "a", "--in", str(path))
    assert code == 0
    _, table = parse_document(out)
    assert table == delete(g, "a")


def test_contract_and_minor_commands(capsys):
    g = branching_greedoid(demo_rooted_tree())
    code, out, _ = run(capsys, "contract", "-p", "a", "--in", TABLE_DOC)
    assert code == 0
    assert parse_document(out)[1] == contract(g, "a")

    code, out, _ = run(capsys, "minor", "--contract", "a", "--delete", "b", "--in", TABLE_DOC)
    assert code == 0
    assert parse_document(out)[1].values == (0, 1)


def test_sum_command(tmp_path, capsys):
    from rankdual import GroundSet, table_from_values

    single = table_from_values(GroundSet(("q",)), (0, 1))
    path = tmp_path / "single.json"
    path.write_text(dump_rank_table(single), encoding="utf-8")
    code, out, _ = run(capsys, "sum", "--in", TABLE_DOC, "--in", str(path))
    assert code == 0
    assert parse_document(out)[1].ground.labels == ("a", "b", "c", "q")

    code, _, err = run(capsys, "sum", "--in", TABLE_DOC)
    assert code == 2 and "two" in err


def test_closure_command(capsys):
    code, out, _ = run(capsys, "build", "pruning", "--in", TREE_DOC)
    assert code == 0


def test_closure_on_pruning_table(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "pruning", "--in", TREE_DOC)
    path = tmp_path / "pruning.json"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "closure", "--set", "b,e,h", "--in", str(path))
    assert code == 0
    assert out.strip() == "closure: {b,c,d,e,h}"


def test_feasible_command(capsys):
    code, out, _ = run(capsys, "feasible", "--in", TABLE_DOC)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "feasible: {} {a} {c} {a,b} {a,c} {a,b,c}"
    assert lines[1] == "bases: {a,b,c}"
    assert lines[3] == "full: true"
    assert lines[4] == "loops: (none)"


def test_build_branching_matches_fixture_table(capsys):
    code, out, _ = run(capsys, "build", "branching", "--in", GRAPH_DOC)
    assert code == 0
    assert parse_document(out)[1] == branching_greedoid(demo_rooted_tree())


def test_build_uniform(capsys):
    code, out, _ = run(capsys, "build", "uniform", "--in", UNIFORM_DOC)
    assert code == 0
    assert parse_document(out)[1].values == (0, 1, 1, 2, 1, 2, 2, 2)


def test_build_kind_mismatch(capsys):
    code, _, err = run(capsys, "build", "branching", "--in", TREE_DOC)
    assert code == 2 and "expected a rooted-graph" in err


def test_enumerate_command(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--constraint", "greedoid")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8 and lines[-1] == "count: 7"
    assert lines[0] == "ranks: 0 0 0 0"

    code, out, _ = run(capsys, "enumerate", "--n", "2", "--constraint", "greedoid", "--count-only")
    assert out.strip() == "count: 7"


def test_enumerate_rejects_large_n(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "9", "--constraint", "greedoid")
    assert code == 2 and "too large" in err


def test_verify_command(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "duality_swap", "--seed", "11", "--params", "count=25"
    )
    assert code == 0
    assert "suite: duality_swap" in out
    assert "result: pass" in out
    assert "elapsed" not in out

    code, out, _ = run(
        capsys, "verify", "--suite", "branching_goldens", "--timing"
    )
    assert code == 0 and "elapsed" in out


def test_verify_requires_seed_for_randomized_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "involution")
    assert code == 2 and "seed" in err


def test_byte_identical_reruns(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "duality_swap", "--seed", "5", "--params", "count=20")
    _, second, _ = run(capsys, "verify", "--suite", "duality_swap", "--seed", "5", "--params", "count=20")
    assert first == second
    _, a, _ = run(capsys, "tutte", "--in", TABLE_DOC)
    _, b, _ = run(capsys, "tutte", "--in", TABLE_DOC)
    assert a == b


def test_malformed_document_reports_position(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"kind": "rank-table",\n  "ground": [}\n', encoding="utf-8")
    code, _, err = run(capsys, "tutte", "--in", str(path))
    assert code == 2
    assert "line 2" in err


def test_incomplete_rank_table_document(tmp_path, capsys):
    doc = {
        "kind": "rank-table",
        "ground": ["a", "b"],
        "ranks": [
            {"subset": [], "rank": 0},
            {"subset": ["a"], "rank": 1},
            {"subset": ["b"], "rank": 1},
        ],
    }
    path = tmp_path / "partial.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run(capsys, "tutte", "--in", str(path))
    assert code == 2 and "missing subset" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "tutte", "--in", "/nonexistent/table.json")
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        run_command(["tutte"])
    assert info.value.code == 2


def test_document_rejects_duplicate_labels_in_subset():
    from rankdual import DocumentError

    doc = json.dumps(
        {
            "kind": "rank-table",
            "ground": ["a"],
            "ranks": [
                {"subset": [], "rank": 0},
                {"subset": ["a", "a"], "rank": 1},
            ],
        }
    )
    with pytest.raises(DocumentError, match="duplicate"):
        parse_document(doc)


def test_document_rejects_unknown_kind_and_bad_rank():
    from rankdual import DocumentError

    with pytest.raises(DocumentError, match="kind"):
        parse_document('{"kind": "polytope"}')
    doc = json.dumps(
        {
            "kind": "rank-table",
            "ground": ["a"],
            "ranks": [{"subset": [], "rank": 0}, {"subset": ["a"], "rank": True}],
        }
    )
    with pytest.raises(DocumentError, match="integer"):
        parse_document(doc)


def test_uniform_document_validation():
    from rankdual import DocumentError

    with pytest.raises(DocumentError, match="k must be"):
        parse_document('{"kind": "uniform", "labels": ["a"], "k": "two"}')
