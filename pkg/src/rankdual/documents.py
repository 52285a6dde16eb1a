"""JSON document formats for rank tables, rooted graphs, trees, and uniform
matroids.

One object per file, UTF-8. Subsets are written as arrays of labels so the
fixtures stay human-writable; a rank-table document must list every one of
the 2**n subsets exactly once.
"""

from __future__ import annotations

import json

from .core import GroundSet, RankFunctionError, RankTable, build_rank_table
from .structures import RootedGraph, Tree, uniform_matroid

KINDS = ("rank-table", "rooted-graph", "tree", "uniform")


class DocumentError(RankFunctionError):
    """Malformed input document."""


def _require(condition: bool, message: str):
    if not condition:
        raise DocumentError(message)


def _string_list(raw, what: str) -> tuple:
    _require(isinstance(raw, list), f"{what} must be an array")
    for item in raw:
        _require(isinstance(item, str), f"{what} entries must be strings, got {item!r}")
    return tuple(raw)


def parse_document(text: str):
    """Parse a JSON document into ('rank-table' | 'rooted-graph' | 'tree' |
    'uniform', object). Parse errors carry line and column positions."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    _require(isinstance(raw, dict), "document must be a JSON object")
    kind = raw.get("kind")
    _require(kind in KINDS, f"kind must be one of {KINDS}, got {kind!r}")
    if kind == "rank-table":
        return kind, _parse_rank_table(raw)
    if kind == "rooted-graph":
        return kind, _parse_rooted_graph(raw)
    if kind == "tree":
        return kind, _parse_tree(raw)
    return kind, _parse_uniform(raw)


def load_document(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_document(text)
    except DocumentError as exc:
        raise DocumentError(f"{path}: {exc}") from None


def _parse_rank_table(raw: dict) -> RankTable:
    ground = GroundSet(_string_list(raw.get("ground"), "ground"))
    ranks = raw.get("ranks")
    _require(isinstance(ranks, list), "ranks must be an array of {subset, rank} objects")
    entries = []
    for pos, item in enumerate(ranks):
        _require(isinstance(item, dict), f"ranks[{pos}] must be an object")
        _require("subset" in item and "rank" in item, f"ranks[{pos}] needs 'subset' and 'rank'")
        labels = _string_list(item["subset"], f"ranks[{pos}].subset")
        _require(len(set(labels)) == len(labels), f"ranks[{pos}].subset has duplicate labels")
        rank = item["rank"]
        _require(
            isinstance(rank, int) and not isinstance(rank, bool),
            f"ranks[{pos}].rank must be an integer, got {rank!r}",
        )
        entries.append((labels, rank))
    return build_rank_table(ground, entries)


def _parse_edges(raw, what: str) -> tuple:
    _require(isinstance(raw, list), f"{what} must be an array")
    edges = []
    for pos, item in enumerate(raw):
        _require(isinstance(item, dict), f"{what}[{pos}] must be an object")
        _require(
            "label" in item and "ends" in item,
            f"{what}[{pos}] needs 'label' and 'ends'",
        )
        label = item["label"]
        _require(isinstance(label, str), f"{what}[{pos}].label must be a string")
        ends = _string_list(item["ends"], f"{what}[{pos}].ends")
        _require(len(ends) == 2, f"{what}[{pos}].ends must list exactly two vertices")
        edges.append((label, ends[0], ends[1]))
    return tuple(edges)


def _parse_rooted_graph(raw: dict) -> RootedGraph:
    vertices = _string_list(raw.get("vertices"), "vertices")
    root = raw.get("root")
    _require(isinstance(root, str), "root must be a string")
    return RootedGraph(vertices, root, _parse_edges(raw.get("edges"), "edges"))


def _parse_tree(raw: dict) -> Tree:
    vertices = _string_list(raw.get("vertices"), "vertices")
    return Tree(vertices, _parse_edges(raw.get("edges"), "edges"))


def _parse_uniform(raw: dict) -> RankTable:
    labels = _string_list(raw.get("labels"), "labels")
    k = raw.get("k")
    _require(isinstance(k, int) and not isinstance(k, bool), "k must be an integer")
    return uniform_matroid(labels, k)


def rank_table_to_document(g: RankTable) -> dict:
    """Serialize a table with subsets listed in (cardinality, mask) order."""
    order = sorted(range(g.ground.size), key=lambda m: (m.bit_count(), m))
    return {
        "kind": "rank-table",
        "ground": list(g.ground.labels),
        "ranks": [
            {
                "subset": list(g.ground.subset_from_mask(m).labels()),
                "rank": g.values[m],
            }
            for m in order
        ],
    }


def dump_rank_table(g: RankTable) -> str:
    return json.dumps(rank_table_to_document(g), indent=2)
