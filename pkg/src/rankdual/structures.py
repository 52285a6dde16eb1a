"""Rank tables realized from combinatorial structures.

Covers rooted-graph branching greedoids, tree pruning antimatroids, uniform
matroids, convex closure in full antimatroids, and feasible-set-based
greedoid minors. Tables are materialized eagerly; construction is capped at
MAX_MATERIALIZED_N edges to bound the 2**n table size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import FeasibleFamily, check_antimatroid, check_greedoid
from .core import (
    GroundSet,
    RankFunctionError,
    RankTable,
    SubsetRef,
    table_from_values,
)
from .ops import _project

MAX_MATERIALIZED_N = 20


class StructureError(RankFunctionError):
    """Invalid combinatorial structure or unmet structural precondition."""


class ContractionError(RankFunctionError):
    """Feasible-set contraction would not produce a greedoid."""


def _check_edges(vertices, edges):
    seen_labels = set()
    seen_pairs = set()
    vset = set(vertices)
    if len(vset) != len(vertices):
        raise StructureError("duplicate vertex names")
    for label, u, v in edges:
        if label in seen_labels:
            raise StructureError(f"duplicate edge label {label!r}")
        seen_labels.add(label)
        if u == v:
            raise StructureError(f"self-loop edge {label!r} at {u!r}")
        if u not in vset or v not in vset:
            raise StructureError(f"edge {label!r} uses unknown vertex")
        pair = (u, v) if u <= v else (v, u)
        if pair in seen_pairs:
            raise StructureError(f"parallel edge {label!r} between {pair[0]!r} and {pair[1]!r}")
        seen_pairs.add(pair)


def _is_connected(vertices, edges) -> bool:
    if not vertices:
        return False
    index = {name: i for i, name in enumerate(vertices)}
    parent = list(range(len(vertices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, u, v in edges:
        ru, rv = find(index[u]), find(index[v])
        if ru != rv:
            parent[ru] = rv
    root = find(0)
    return all(find(i) == root for i in range(len(vertices)))


@dataclass(frozen=True)
class RootedGraph:
    """A connected simple graph with labeled edges and a distinguished root."""

    vertices: tuple
    root: str
    edges: tuple  # (label, u, v) triples

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.root not in self.vertices:
            raise StructureError(f"root {self.root!r} is not a vertex")
        _check_edges(self.vertices, self.edges)
        if not _is_connected(self.vertices, self.edges):
            raise StructureError("rooted graph must be connected")

    def edge_labels(self) -> tuple:
        return tuple(label for label, _, _ in self.edges)


@dataclass(frozen=True)
class Tree:
    """A connected acyclic graph with labeled edges (no root)."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        _check_edges(self.vertices, self.edges)
        if len(self.edges) != len(self.vertices) - 1:
            raise StructureError(
                f"a tree on {len(self.vertices)} vertices needs "
                f"{len(self.vertices) - 1} edges, got {len(self.edges)}"
            )
        if not _is_connected(self.vertices, self.edges):
            raise StructureError("tree must be connected")

    def edge_labels(self) -> tuple:
        return tuple(label for label, _, _ in self.edges)


def _require_materializable(n: int, max_table_n: int):
    if n > max_table_n:
        raise StructureError(
            f"{n} edges exceed the materialization cap of {max_table_n}"
        )


def branching_greedoid(rg: RootedGraph, max_table_n: int = MAX_MATERIALIZED_N) -> RankTable:
    """Rank of an edge subset A = size of the largest subtree inside A that
    contains the root, i.e. (vertices reachable from the root through A) - 1.
    """
    n = len(rg.edges)
    _require_materializable(n, max_table_n)
    index = {name: i for i, name in enumerate(rg.vertices)}
    adjacency = [[] for _ in rg.vertices]
    for pos, (_, u, v) in enumerate(rg.edges):
        adjacency[index[u]].append((pos, index[v]))
        adjacency[index[v]].append((pos, index[u]))
    root = index[rg.root]

    values = []
    for mask in range(1 << n):
        reached = 1 << root
        stack = [root]
        count = 1
        while stack:
            at = stack.pop()
            for pos, other in adjacency[at]:
                if mask >> pos & 1 and not reached >> other & 1:
                    reached |= 1 << other
                    count += 1
                    stack.append(other)
        values.append(count - 1)
    return table_from_values(GroundSet(rg.edge_labels()), values)


def root_adjacency_test(rg: RootedGraph) -> bool:
    """True iff every non-root vertex shares an edge with the root."""
    adjacent = {rg.root}
    for _, u, v in rg.edges:
        if u == rg.root:
            adjacent.add(v)
        elif v == rg.root:
            adjacent.add(u)
    return adjacent == set(rg.vertices)


def _span_size(adjacency, in_set, degree, edge_count):
    """Size of the minimal subtree containing the given edge set.

    Works on a tree: repeatedly prune leaf edges that are not in the set.
    ``adjacency`` maps vertex index -> list of (edge pos, other vertex).
    """
    degree = list(degree)
    alive = list(in_set)
    size = edge_count
    leaves = [v for v, d in enumerate(degree) if d == 1]
    while leaves:
        v = leaves.pop()
        if degree[v] != 1:
            continue
        for pos, other in adjacency[v]:
            if not alive[pos]:
                continue
            if alive[pos] == 2:
                break  # pendant edge belongs to the set; keep it
            alive[pos] = 0
            size -= 1
            degree[v] -= 1
            degree[other] -= 1
            if degree[other] == 1:
                leaves.append(other)
            break
    return size


def pruning_antimatroid(t: Tree, max_table_n: int = MAX_MATERIALIZED_N) -> RankTable:
    """Edge subset A is feasible iff the remaining edges form a subtree (the
    empty edge set counts). Rank of A = size of its largest feasible subset,
    which equals n minus the size of the minimal subtree containing S - A.
    """
    n = len(t.edges)
    _require_materializable(n, max_table_n)
    index = {name: i for i, name in enumerate(t.vertices)}
    adjacency = [[] for _ in t.vertices]
    for pos, (_, u, v) in enumerate(t.edges):
        adjacency[index[u]].append((pos, index[v]))
        adjacency[index[v]].append((pos, index[u]))

    full = (1 << n) - 1
    values = [0] * (1 << n)
    for mask in range(1 << n):
        keep = full ^ mask
        # 2 marks edges the span must contain, 1 marks prunable edges
        in_set = [2 if keep >> pos & 1 else 1 for pos in range(n)]
        degree = [len(adjacency[v]) for v in range(len(t.vertices))]
        values[mask] = n - _span_size(adjacency, in_set, degree, n)
    return table_from_values(GroundSet(t.edge_labels()), values)


def _convex_masks(g: RankTable) -> list:
    """Masks whose complement is feasible (r(S - C) = |S - C|)."""
    full = g.ground.full_mask
    return [
        c for c in range(full + 1) if g.values[full ^ c] == (full ^ c).bit_count()
    ]


def closure_table(g: RankTable, validated: bool = False) -> list:
    """Convex closure of every subset at once: closure[mask] is the mask of
    the intersection of all convex supersets.

    With ``validated=False`` the table must first pass the antimatroid and
    fullness preconditions; each closure is re-verified to be convex.
    """
    if not validated:
        _require_full_antimatroid(g)
    full = g.ground.full_mask
    convex = _convex_masks(g)
    convex_set = set(convex)
    closures = [full] * (full + 1)
    for c in convex:
        not_c = full ^ c
        for mask in range(full + 1):
            if mask & not_c == 0:
                closures[mask] &= c
    for mask, c in enumerate(closures):
        if c not in convex_set:
            raise StructureError(
                "closure is not convex; the table violates the antimatroid precondition"
            )
    return closures


def _require_full_antimatroid(g: RankTable):
    if g.full_rank != g.n:
        raise StructureError("convex closure requires a full table (r(S) = |S|)")
    report = check_antimatroid(g)
    if not report.passed:
        failed = [name for name, ok in report.verdicts.items() if not ok]
        raise StructureError(f"convex closure requires an antimatroid; failed: {failed}")


def convex_closure(g: RankTable, a: SubsetRef) -> SubsetRef:
    """Smallest convex superset of a (convex = complement feasible).

    The table must be a full antimatroid; the intersection of all convex
    supersets is computed and verified to be convex itself.
    """
    if a.ground != g.ground:
        raise RankFunctionError("subset belongs to a different ground set")
    _require_full_antimatroid(g)
    full = g.ground.full_mask
    acc = full
    convex_set = set()
    for c in _convex_masks(g):
        convex_set.add(c)
        if a.bits & ~c == 0:
            acc &= c
    if acc not in convex_set:
        raise StructureError(
            "closure is not convex; the table violates the antimatroid precondition"
        )
    return SubsetRef(g.ground, acc)


def uniform_matroid(labels, k: int) -> RankTable:
    """r(A) = min(|A|, k)."""
    ground = GroundSet(tuple(labels))
    if not 0 <= k <= ground.n:
        raise StructureError(f"uniform rank {k} out of range for {ground.n} elements")
    values = tuple(min(mask.bit_count(), k) for mask in range(ground.size))
    return table_from_values(ground, values)


def _compress_mask(mask: int, bit: int) -> int:
    low = mask & (bit - 1)
    high = (mask >> 1) & ~(bit - 1)
    return low | high


def greedoid_minor_feasible(g: RankTable, p: str, kind: str) -> FeasibleFamily:
    """Feasible family of a greedoid minor, per the feasible-set definitions:
    F is feasible in G - p iff F is feasible in G; F is feasible in G / p iff
    F | p is feasible in G. Contracting a greedoid loop equals deleting it.

    Contracting p that lies in some feasible set while {p} is infeasible is
    rejected: the result would not be a greedoid.
    """
    if kind not in ("delete", "contract"):
        raise RankFunctionError(f"unknown minor kind {kind!r}")
    report = check_greedoid(g)
    if not report.passed:
        failed = [name for name, ok in report.verdicts.items() if not ok]
        raise StructureError(f"input is not a greedoid; failed: {failed}")
    bit = 1 << g.ground.position(p)
    family = FeasibleFamily.from_table(g)
    new_ground, _ = _project(g.ground, bit)

    if kind == "delete":
        members = frozenset(
            _compress_mask(m, bit) for m in family.members if not m & bit
        )
        return FeasibleFamily(new_ground, members)

    covered = any(m & bit for m in family.members)
    if bit in family.members:
        members = frozenset(
            _compress_mask(m ^ bit, bit) for m in family.members if m & bit
        )
        return FeasibleFamily(new_ground, members)
    if not covered:
        # greedoid loop: contraction coincides with deletion
        members = frozenset(_compress_mask(m, bit) for m in family.members)
        return FeasibleFamily(new_ground, members)
    raise ContractionError(
        f"contraction at {p!r} is not a greedoid: "
        f"{p!r} lies in a feasible set but {{{p}}} is infeasible"
    )


def demo_rooted_tree() -> RootedGraph:
    """Three-edge rooted tree: a chain root-v1-v2 through edges a, b plus a
    leaf edge c at the root. Its branching greedoid is the standard worked
    example used throughout the tests."""
    return RootedGraph(
        vertices=("root", "v1", "v2", "v3"),
        root="root",
        edges=(("a", "root", "v1"), ("b", "v1", "v2"), ("c", "root", "v3")),
    )


def demo_pruning_tree() -> Tree:
    """Ten-edge tree whose pruning antimatroid is the worked example for
    convex closure: a four-edge path into a hub with three branches."""
    return Tree(
        vertices=("u1", "u2", "u3", "u4", "u5", "u6", "w1", "w2", "u9", "u10", "u11"),
        edges=(
            ("a", "u1", "u2"),
            ("b", "u2", "u3"),
            ("c", "u3", "u4"),
            ("d", "u4", "u5"),
            ("e", "u5", "u6"),
            ("f", "w1", "w2"),
            ("g", "u4", "w1"),
            ("h", "u4", "u9"),
            ("i", "w1", "u10"),
            ("j", "u10", "u11"),
        ),
    )
