"""Exhaustive enumeration of small rank tables and named verification suites.

Each suite machine-checks one identity or class statement at desk scale:
exhaustively over all tables up to n = 4 (pruned by subcardinality,
monotonicity, and local semimodularity), over structural censuses (all
trees and connected rooted graphs up to a size bound), or over seeded
random corpora. Suites are deterministic given (name, params, seed).
"""

from __future__ import annotations

import itertools
import os
import random
import time
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .axioms import (
    DemiTriple,
    check_demimatroid_characterization,
    check_demimatroid_triple,
    check_dual_greedoid,
    check_greedoid,
)
from .core import GroundSet, RankFunctionError, RankTable, SubsetRef, table_from_values
from .ops import contract, delete, direct_sum, dual
from .structures import (
    ContractionError,
    RootedGraph,
    Tree,
    branching_greedoid,
    closure_table,
    demo_pruning_tree,
    demo_rooted_tree,
    greedoid_minor_feasible,
    pruning_antimatroid,
    root_adjacency_test,
)
from .tutte import swap_vars, tutte_recursive, tutte_subset

_LABELS = "abcdefghijklmnopqrstuvwx"

MAX_EXHAUSTIVE_N = 4

CONSTRAINTS = (
    "all-normalized-subcardinal-monotone",
    "greedoid",
    "matroid",
    "full-antimatroid",
)


# ---------------------------------------------------------------------------
# fast axiom predicates (no witnesses, early exit); the witnessed checkers in
# axioms.py are the reference implementations and the tests pin agreement
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _lattice(n: int):
    size = 1 << n
    cards = tuple(m.bit_count() for m in range(size))
    steps = tuple(
        (m, m | (1 << p)) for m in range(size) for p in range(n) if not m >> p & 1
    )
    gr3 = tuple(
        (m, m | b1, m | b2, m | b1 | b2)
        for m in range(size)
        for p1 in range(n)
        if not m >> p1 & 1
        for p2 in range(p1 + 1, n)
        if not m >> p2 & 1
        for b1, b2 in ((1 << p1, 1 << p2),)
    )
    semi = tuple(
        (a, b, a & b, a | b)
        for a in range(size)
        for b in range(a + 1, size)
        if a & b != a and a & b != b
    )
    return cards, steps, gr3, semi


def _fast_greedoid(v, n: int) -> bool:
    cards, steps, gr3, _ = _lattice(n)
    if v[0] != 0 or min(v) < 0:
        return False
    if any(v[m] > cards[m] for m in range(len(v))):
        return False
    if any(v[a] > v[b] for a, b in steps):
        return False
    return all(
        not (v[a] == v[a1] == v[a2] != v[a12]) for a, a1, a2, a12 in gr3
    )


def _fast_matroid(v, n: int) -> bool:
    _, steps, _, semi = _lattice(n)
    if v[0] != 0:
        return False
    for a, b in steps:
        if not v[a] <= v[b] <= v[a] + 1:
            return False
    return all(v[ab] + v[uv] <= v[a] + v[b] for a, b, ab, uv in semi)


def _fast_dual_greedoid(v, n: int) -> bool:
    """The starred axioms evaluated directly on the given table."""
    cards, steps, gr3, _ = _lattice(n)
    if v[0] != 0:
        return False
    total = v[(1 << n) - 1]
    if any(x > total for x in v):
        return False
    if any(v[b] > v[a] + 1 for a, b in steps):
        return False
    # local rank decrease, read bottom-up over the same quadruples
    return all(
        not (v[a1] == v[a2] == v[a12] - 1 and v[a] != v[a12] - 2)
        for a, a1, a2, a12 in gr3
    )


def _fast_unit_upper(v, n: int) -> bool:
    _, steps, _, _ = _lattice(n)
    return all(v[b] <= v[a] + 1 for a, b in steps)


def _fast_monotone_nullity(v, n: int) -> bool:
    cards, steps, _, _ = _lattice(n)
    return all(cards[a] - v[a] <= cards[b] - v[b] for a, b in steps)


def _dual_values(v, n: int):
    full = (1 << n) - 1
    total = v[full]
    return tuple(m.bit_count() + v[full ^ m] - total for m in range(full + 1))


def _union_closed(v, n: int) -> bool:
    feas = [m for m in range(1 << n) if v[m] == m.bit_count()]
    fset = set(feas)
    for i, f1 in enumerate(feas):
        for f2 in feas[i + 1 :]:
            if f1 | f2 not in fset:
                return False
    return True


# ---------------------------------------------------------------------------
# exhaustive enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnumSpec:
    """Exhaustive enumeration request: ground size and constraint name."""

    n: int
    constraint: str

    def __post_init__(self):
        if self.constraint not in CONSTRAINTS:
            raise RankFunctionError(
                f"unknown constraint {self.constraint!r}; choose from {CONSTRAINTS}"
            )
        if not 0 <= self.n <= MAX_EXHAUSTIVE_N:
            raise RankFunctionError(
                f"n = {self.n} too large for exhaustive enumeration (max {MAX_EXHAUSTIVE_N})"
            )


@lru_cache(maxsize=None)
def _enum_tables(n: int):
    size = 1 << n
    preds = tuple(
        tuple(m & ~(1 << p) for p in range(n) if m >> p & 1) for m in range(size)
    )
    # local-semimodularity instances that become fully determined at mask m
    gr3_at = [[] for _ in range(size)]
    for m in range(size):
        for p1 in range(n):
            if not m >> p1 & 1:
                continue
            for p2 in range(p1 + 1, n):
                if not m >> p2 & 1:
                    continue
                a = m & ~(1 << p1) & ~(1 << p2)
                gr3_at[m].append((a, a | (1 << p1), a | (1 << p2)))
    return preds, tuple(tuple(x) for x in gr3_at)


def _enumerate_values(n: int, constraint: str, prefix=(), stop=None):
    """DFS over rank assignments in increasing mask order, smallest value
    first, pruned by subcardinality and monotonicity (plus local
    semimodularity and the unit upper bound where the constraint allows).

    With ``stop`` set, yields value prefixes for masks 1..stop instead of
    complete tables (used to partition the search across workers).
    """
    size = 1 << n
    preds, gr3_at = _enum_tables(n)
    prune_gr3 = constraint in ("greedoid", "matroid", "full-antimatroid")
    prune_unit = constraint == "matroid"

    vals = [0] * size
    for i, v in enumerate(prefix):
        vals[i + 1] = v
    start = len(prefix) + 1
    end = size if stop is None else stop + 1

    def emit(v):
        if stop is not None:
            return True
        if constraint == "matroid":
            _, _, _, semi = _lattice(n)
            return all(v[ab] + v[uv] <= v[a] + v[b] for a, b, ab, uv in semi)
        if constraint == "full-antimatroid":
            return v[size - 1] == n and _union_closed(v, n)
        return True

    def rec(m):
        if m == end:
            candidate = tuple(vals[1 : stop + 1]) if stop is not None else tuple(vals)
            if emit(candidate):
                yield candidate
            return
        lo = max((vals[p] for p in preds[m]), default=0)
        hi = m.bit_count()
        if prune_unit and preds[m]:
            hi = min(hi, min(vals[p] for p in preds[m]) + 1)
        triples = gr3_at[m] if prune_gr3 else ()
        for v in range(lo, hi + 1):
            ok = True
            for a, a1, a2 in triples:
                if vals[a] == vals[a1] == vals[a2] != v:
                    ok = False
                    break
            if not ok:
                continue
            vals[m] = v
            yield from rec(m + 1)
        vals[m] = 0

    yield from rec(start)


def enumerate_tables(spec: EnumSpec):
    """Yield every rank table on n labeled elements satisfying the
    constraint, exactly once, in deterministic order."""
    ground = GroundSet(tuple(_LABELS[: spec.n]))
    for values in _enumerate_values(spec.n, spec.constraint):
        yield table_from_values(ground, values)


# ---------------------------------------------------------------------------
# seeded random corpora
# ---------------------------------------------------------------------------


def random_tables(count: int, max_n: int = 6, seed=None, lo: int = -3, hi: int = 8):
    """Seeded stream of tables with r(empty) = 0 and independent uniform
    ranks in [lo, hi] elsewhere. Negative and non-monotone ranks are the
    point: the polynomial identities hold for arbitrary integer tables."""
    if seed is None:
        raise RankFunctionError("random table sampling requires a seed")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, max_n)
        ground = GroundSet(tuple(_LABELS[:n]))
        values = [0] + [rng.randint(lo, hi) for _ in range((1 << n) - 1)]
        yield table_from_values(ground, values)


def random_monotone_tables(count: int, max_n: int = 6, seed=None):
    """Seeded stream of normalized monotone subcardinal tables: each rank is
    uniform between the largest immediate-subset rank and the cardinality."""
    if seed is None:
        raise RankFunctionError("random table sampling requires a seed")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(0, max_n)
        size = 1 << n
        preds, _ = _enum_tables(n)
        values = [0] * size
        for m in range(1, size):
            lo_bound = max((values[p] for p in preds[m]), default=0)
            values[m] = rng.randint(lo_bound, m.bit_count())
        yield table_from_values(GroundSet(tuple(_LABELS[:n])), values)


# ---------------------------------------------------------------------------
# structural censuses
# ---------------------------------------------------------------------------


def all_trees(max_edges: int):
    """All trees with at most max_edges edges, one per isomorphism class.

    Edge labels are letters assigned in sorted endpoint order; vertex names
    are v0, v1, ...
    """
    trees = [Tree(("v0",), ())]
    for order in range(2, max_edges + 2):
        for g in nx.nonisomorphic_trees(order):
            pairs = sorted(tuple(sorted(e)) for e in g.edges())
            edges = tuple(
                (_LABELS[i], f"v{u}", f"v{v}") for i, (u, v) in enumerate(pairs)
            )
            trees.append(Tree(tuple(f"v{i}" for i in range(order)), edges))
    return trees


@lru_cache(maxsize=None)
def _rooted_tree_shapes(nodes: int):
    """Unlabeled rooted trees on the given node count, one per isomorphism
    class, encoded as canonically sorted tuples of child shapes."""
    if nodes == 1:
        return ((),)
    shapes = set()
    # split nodes-1 children nodes into non-increasing part sizes
    def partitions(total, cap):
        if total == 0:
            yield ()
            return
        for part in range(min(total, cap), 0, -1):
            for rest in partitions(total - part, part):
                yield (part,) + rest

    for parts in partitions(nodes - 1, nodes - 1):
        groups = []
        for size, count in sorted(
            ((s, len(list(g))) for s, g in itertools.groupby(parts)), reverse=True
        ):
            groups.append(
                list(itertools.combinations_with_replacement(_rooted_tree_shapes(size), count))
            )
        for combo in itertools.product(*groups):
            children = tuple(sorted(itertools.chain.from_iterable(combo)))
            shapes.add(children)
    return tuple(sorted(shapes))


def _shape_to_rooted_graph(shape) -> RootedGraph:
    vertices = ["v0"]
    edges = []
    queue = [(0, shape)]
    while queue:
        parent, children = queue.pop(0)
        for child in children:
            idx = len(vertices)
            vertices.append(f"v{idx}")
            edges.append((_LABELS[len(edges)], f"v{parent}", f"v{idx}"))
            queue.append((idx, child))
    return RootedGraph(tuple(vertices), "v0", tuple(edges))


def _cyclic_connected_graphs(max_edges: int):
    """All connected simple graphs with a cycle and at most max_edges edges,
    enumerated over labeled vertex sets (isomorphic repeats are harmless for
    exhaustive verification). Yields (vertex_count, edge_pairs)."""
    for v in range(3, max_edges + 1):
        pairs = list(itertools.combinations(range(v), 2))
        for e in range(v, max_edges + 1):
            if e > len(pairs):
                break
            for combo in itertools.combinations(pairs, e):
                covered = 0
                parent = list(range(v))

                def find(x):
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    return x

                for a, b in combo:
                    covered |= (1 << a) | (1 << b)
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[ra] = rb
                if covered != (1 << v) - 1:
                    continue
                root = find(0)
                if any(find(x) != root for x in range(v)):
                    continue
                yield v, combo


def all_rooted_graphs(max_edges: int):
    """All connected simple rooted graphs with at most max_edges edges:
    rooted trees one per isomorphism class, plus every labeled rooted choice
    of the cyclic connected graphs."""
    for nodes in range(1, max_edges + 2):
        for shape in _rooted_tree_shapes(nodes):
            yield _shape_to_rooted_graph(shape)
    for v, combo in _cyclic_connected_graphs(max_edges):
        vertices = tuple(f"v{i}" for i in range(v))
        edges = tuple(
            (_LABELS[i], f"v{a}", f"v{b}") for i, (a, b) in enumerate(combo)
        )
        for root in range(v):
            yield RootedGraph(vertices, f"v{root}", edges)


def _component_rank_rows(vertex_count: int, edge_pairs):
    """Branching ranks for every root at once: rows[root][mask] = size of the
    root's connected component under the mask's edges, minus one."""
    size = 1 << len(edge_pairs)
    rows = [[0] * size for _ in range(vertex_count)]
    for mask in range(size):
        parent = list(range(vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for pos, (a, b) in enumerate(edge_pairs):
            if mask >> pos & 1:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        sizes = [0] * vertex_count
        for x in range(vertex_count):
            sizes[find(x)] += 1
        for root in range(vertex_count):
            rows[root][mask] = sizes[find(root)] - 1
    return rows


# ---------------------------------------------------------------------------
# suite machinery
# ---------------------------------------------------------------------------


@dataclass
class SuiteResult:
    """Outcome of one verification suite run."""

    suite: str
    params: dict
    instances_checked: int
    failures: list
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_report(self, include_elapsed: bool = False) -> str:
        lines = [f"suite: {self.suite}"]
        rendered = " ".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        lines.append(f"params: {rendered}" if rendered else "params:")
        lines.append(f"instances: {self.instances_checked}")
        lines.append(f"failures: {len(self.failures)}")
        for instance, assertion, witness in self.failures:
            lines.append(f"failure: {instance} | {assertion} | {witness}")
        lines.append(f"result: {'pass' if self.passed else 'fail'}")
        if include_elapsed:
            lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)


class _Recorder:
    def __init__(self, fail_fast: bool = False, max_failures: int = 100):
        self.instances = 0
        self.failures = []
        self.fail_fast = fail_fast
        self.max_failures = max_failures
        self.aborted = False

    def check(self, ok: bool, instance: str, assertion: str, witness: str = "") -> bool:
        """Record a check; returns False when the suite should abort."""
        self.instances += 1
        if not ok:
            if len(self.failures) < self.max_failures:
                self.failures.append((instance, assertion, witness))
            if self.fail_fast:
                self.aborted = True
                return False
        return True


def _require_seed(params: dict, suite: str) -> int:
    seed = params.get("seed")
    if seed is None:
        raise RankFunctionError(f"suite {suite!r} is randomized and requires a seed")
    return int(seed)


def _corpus(params: dict, suite: str):
    count = int(params.get("count", 500))
    max_n = int(params.get("max_n", 6))
    lo = int(params.get("lo", -3))
    hi = int(params.get("hi", 8))
    seed = _require_seed(params, suite)
    return list(random_tables(count, max_n=max_n, seed=seed, lo=lo, hi=hi))


def _desc(i: int, g: RankTable) -> str:
    return f"table[{i}] n={g.n} values={g.values}"


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def _suite_involution(params, rec: _Recorder):
    for i, g in enumerate(_corpus(params, "involution")):
        if not rec.check(
            dual(dual(g)) == g, _desc(i, g), "dual(dual(g)) == g", str(dual(dual(g)).values)
        ):
            return


def _suite_exchange(params, rec: _Recorder):
    for i, g in enumerate(_corpus(params, "exchange")):
        gd = dual(g)
        for p in g.ground.labels:
            ok1 = dual(delete(g, p)) == contract(gd, p)
            if not rec.check(ok1, _desc(i, g), f"dual(delete(g,{p})) == contract(dual(g),{p})"):
                return
            ok2 = dual(contract(g, p)) == delete(gd, p)
            if not rec.check(ok2, _desc(i, g), f"dual(contract(g,{p})) == delete(dual(g),{p})"):
                return


def _suite_contract_formula(params, rec: _Recorder):
    for i, g in enumerate(_corpus(params, "contract_formula")):
        for p in g.ground.labels:
            got = contract(g, p)
            via_dual = dual(delete(dual(g), p))
            bit = 1 << g.ground.position(p)
            rp = g.values[bit]
            expected = tuple(
                g.values[m | bit] - rp
                for m in (_expand_masks(g.ground.n, bit))
            )
            ok = got.values == expected and via_dual.values == expected
            if not rec.check(ok, _desc(i, g), f"contract formula at {p}", str(got.values)):
                return


@lru_cache(maxsize=None)
def _expand_masks(n: int, removed_bit: int):
    kept = [1 << p for p in range(n) if (1 << p) != removed_bit]
    out = [0] * (1 << len(kept))
    for m in range(1, 1 << len(kept)):
        low = m & -m
        out[m] = out[m ^ low] | kept[low.bit_length() - 1]
    return tuple(out)


def _suite_direct_sum_dual(params, rec: _Recorder):
    count = int(params.get("count", 250))
    max_n = int(params.get("max_n", 4))
    lo = int(params.get("lo", -3))
    hi = int(params.get("hi", 8))
    seed = _require_seed(params, "direct_sum_dual")
    rng = random.Random(seed)
    for i in range(count):
        n1, n2 = rng.randint(0, max_n), rng.randint(0, max_n)
        g1 = table_from_values(
            GroundSet(tuple(_LABELS[:n1])),
            [0] + [rng.randint(lo, hi) for _ in range((1 << n1) - 1)],
        )
        g2 = table_from_values(
            GroundSet(tuple("pqrstuvw"[:n2])),
            [0] + [rng.randint(lo, hi) for _ in range((1 << n2) - 1)],
        )
        ok = dual(direct_sum(g1, g2)) == direct_sum(dual(g1), dual(g2))
        if not rec.check(ok, f"pair[{i}] n1={n1} n2={n2}", "dual(g1 + g2) == dual(g1) + dual(g2)"):
            return


def _suite_recursion_oracle(params, rec: _Recorder):
    strategies = str(params.get("strategies", "lowest,highest")).split(",")
    for i, g in enumerate(_corpus(params, "recursion_oracle")):
        reference = tutte_subset(g)
        for strategy in strategies:
            ok = tutte_recursive(g, strategy) == reference
            if not rec.check(ok, _desc(i, g), f"recursion({strategy}) == subset expansion"):
                return


def _suite_duality_swap(params, rec: _Recorder):
    for i, g in enumerate(_corpus(params, "duality_swap")):
        ok = tutte_subset(dual(g)) == swap_vars(tutte_subset(g))
        if not rec.check(ok, _desc(i, g), "poly(dual) == swap_vars(poly)"):
            return


def _suite_polynomiality(params, rec: _Recorder):
    from .core import validate

    for i, g in enumerate(_corpus(params, "polynomiality")):
        report = validate(g)
        mins = tutte_subset(g).min_exponents()
        ok = (min(mins) >= 0) == (report.rank_s_maximum and report.subcardinal)
        if not rec.check(
            ok, _desc(i, g), "nonnegative exponents iff rank-S-maximum and subcardinal", str(mins)
        ):
            return


def _enumerated(constraint: str, n_max: int):
    for n in range(n_max + 1):
        ground = GroundSet(tuple(_LABELS[:n]))
        for values in _enumerate_values(n, constraint):
            yield table_from_values(ground, values)


def _suite_contract_feasibility(params, rec: _Recorder):
    n_max = int(params.get("n", 3))
    for idx, g in enumerate(_enumerated("greedoid", n_max)):
        feasible = {m for m in range(g.ground.size) if g.values[m] == m.bit_count()}
        covered = 0
        for m in feasible:
            covered |= m
        for pos, label in enumerate(g.ground.labels):
            bit = 1 << pos
            if not covered & bit:
                continue  # loops are handled by the minor-agreement suite
            singleton_feasible = bit in feasible
            rank_contract = contract(g, label)
            is_greedoid = check_greedoid(rank_contract).passed
            if not rec.check(
                is_greedoid == singleton_feasible,
                f"greedoid[{idx}] values={g.values} p={label}",
                "contraction is a greedoid iff the singleton is feasible",
            ):
                return
            raised = False
            try:
                greedoid_minor_feasible(g, label, "contract")
            except ContractionError:
                raised = True
            if not rec.check(
                raised == (not singleton_feasible),
                f"greedoid[{idx}] values={g.values} p={label}",
                "feasible-set contraction rejects exactly the infeasible covered case",
            ):
                return


def _suite_minor_agreement(params, rec: _Recorder):
    n_max = int(params.get("n", 3))
    for idx, g in enumerate(_enumerated("greedoid", n_max)):
        feasible = {m for m in range(g.ground.size) if g.values[m] == m.bit_count()}
        covered = 0
        for m in feasible:
            covered |= m
        for pos, label in enumerate(g.ground.labels):
            bit = 1 << pos
            fam = greedoid_minor_feasible(g, label, "delete")
            ok = fam.induced_rank_table() == delete(g, label)
            if not rec.check(
                ok,
                f"greedoid[{idx}] values={g.values} p={label}",
                "feasible-set deletion matches rank deletion",
            ):
                return
            if bit in feasible or not covered & bit:
                fam = greedoid_minor_feasible(g, label, "contract")
                ok = fam.induced_rank_table() == contract(g, label)
                if not rec.check(
                    ok,
                    f"greedoid[{idx}] values={g.values} p={label}",
                    "feasible-set contraction matches rank contraction",
                ):
                    return


def _suite_dual_greedoid_axioms(params, rec: _Recorder):
    n_max = int(params.get("n", 4))
    for idx, g in enumerate(_enumerated("greedoid", n_max)):
        report = check_dual_greedoid(dual(g))
        if not rec.check(
            report.passed,
            f"greedoid[{idx}] n={g.n} values={g.values}",
            "dual of a greedoid passes the starred axioms",
            "; ".join(line for line in report.lines() if "fail" in line),
        ):
            return


def _intersection_task(args):
    n, prefix = args
    count = 0
    failures = []
    for v in _enumerate_values(n, "all-normalized-subcardinal-monotone", prefix=prefix):
        count += 1
        greedoid = _fast_greedoid(v, n)
        matroid = _fast_matroid(v, n)
        if (greedoid and _fast_greedoid(_dual_values(v, n), n)) != matroid:
            failures.append(
                (
                    f"n={n} values={v}",
                    "greedoid(r) and greedoid(r*) iff matroid(r)",
                    f"matroid={matroid}",
                )
            )
        if (greedoid and _fast_dual_greedoid(v, n)) != matroid:
            failures.append(
                (
                    f"n={n} values={v}",
                    "greedoid(r) and starred-axioms(r) iff matroid(r)",
                    f"matroid={matroid}",
                )
            )
    return count, failures


def _suite_greedoid_intersection(params, rec: _Recorder):
    n_max = int(params.get("n", 4))
    workers = int(params.get("workers", os.environ.get("RANKDUAL_THREADS", "1")))
    for n in range(n_max + 1):
        tasks = [(n, ())]
        if workers > 1 and n >= 3:
            depth = 3
            tasks = [
                (n, prefix)
                for prefix in _enumerate_values(
                    n, "all-normalized-subcardinal-monotone", stop=depth
                )
            ]
        if workers > 1 and len(tasks) > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_intersection_task, tasks))
        else:
            results = [_intersection_task(t) for t in tasks]
        for count, failures in results:
            rec.instances += count
            for failure in failures:
                if len(rec.failures) < rec.max_failures:
                    rec.failures.append(failure)
                if rec.fail_fast:
                    rec.aborted = True
                    return


def _suite_root_adjacency(params, rec: _Recorder):
    max_edges = int(params.get("max_edges", 6))
    sample_stride = 97  # cross-check every k-th instance against the public op
    instance = 0

    def check_instance(vertex_count, edge_pairs, root, values, graph_desc):
        nonlocal instance
        instance += 1
        n = len(edge_pairs)
        full = (1 << n) - 1
        total = values[full]
        min_dual = 0 if n == 0 else min(
            m.bit_count() + values[full ^ m] - total for m in range(full + 1)
        )
        root_adjacent = all(
            any((a == root and b == x) or (b == root and a == x) for a, b in edge_pairs)
            for x in range(vertex_count)
            if x != root
        )
        ok = (min_dual >= 0) == root_adjacent
        if instance % sample_stride == 0:
            rg = RootedGraph(
                tuple(f"v{i}" for i in range(vertex_count)),
                f"v{root}",
                tuple((_LABELS[i], f"v{a}", f"v{b}") for i, (a, b) in enumerate(edge_pairs)),
            )
            ok = ok and branching_greedoid(rg).values == tuple(values)
            ok = ok and root_adjacency_test(rg) == root_adjacent
        return rec.check(
            ok,
            f"{graph_desc} root=v{root}",
            "dual rank nonnegative iff every vertex is root-adjacent",
            f"min_dual={min_dual} adjacent={root_adjacent}",
        )

    for nodes in range(1, max_edges + 2):
        for shape in _rooted_tree_shapes(nodes):
            rg = _shape_to_rooted_graph(shape)
            index = {name: i for i, name in enumerate(rg.vertices)}
            pairs = tuple((index[u], index[v]) for _, u, v in rg.edges)
            values = branching_greedoid(rg).values
            if not check_instance(len(rg.vertices), pairs, 0, values, f"tree{shape}"):
                return
    for v, combo in _cyclic_connected_graphs(max_edges):
        rows = _component_rank_rows(v, combo)
        for root in range(v):
            if not check_instance(v, combo, root, rows[root], f"cyclic v={v} edges={combo}"):
                return


def _suite_full_dual_nonpositive(params, rec: _Recorder):
    n_max = int(params.get("n", 4))
    for idx, g in enumerate(_enumerated("greedoid", n_max)):
        if g.full_rank != g.n:
            continue
        dv = _dual_values(g.values, g.n)
        if not rec.check(
            max(dv) <= 0,
            f"full-greedoid[{idx}] n={g.n} values={g.values}",
            "dual rank of a full greedoid is nonpositive everywhere",
            f"max={max(dv)}",
        ):
            return


def _closure_corpora(params):
    n_max = int(params.get("n", 4))
    max_tree_edges = int(params.get("max_tree_edges", 8))
    for idx, g in enumerate(_enumerated("full-antimatroid", n_max)):
        yield f"antimatroid[{idx}] n={g.n} values={g.values}", g
    for idx, tree in enumerate(all_trees(max_tree_edges)):
        yield f"pruning-tree[{idx}] edges={len(tree.edges)}", pruning_antimatroid(tree)


def _suite_closure_dual_rank(params, rec: _Recorder):
    for desc, g in _closure_corpora(params):
        closures = closure_table(g)
        dv = _dual_values(g.values, g.n)
        for mask in range(g.ground.size):
            gap = (closures[mask] & ~mask).bit_count()
            if not rec.check(
                dv[mask] == -gap,
                desc,
                "dual rank equals minus the closure gap",
                f"A={SubsetRef(g.ground, mask)} dual={dv[mask]} gap={gap}",
            ):
                return
    # spot value on the bundled ten-edge tree
    g = pruning_antimatroid(demo_pruning_tree())
    a = g.ground.subset(("a", "d", "f"))
    dv = _dual_values(g.values, g.n)
    rec.check(dv[a.bits] == -3, "demo pruning tree", "dual rank of {a,d,f} is -3", str(dv[a.bits]))


def _suite_convex_zero_dual(params, rec: _Recorder):
    for desc, g in _closure_corpora(params):
        dv = _dual_values(g.values, g.n)
        full = g.ground.full_mask
        for mask in range(g.ground.size):
            convex = g.values[full ^ mask] == (full ^ mask).bit_count()
            if not rec.check(
                convex == (dv[mask] == 0),
                desc,
                "convex iff dual rank zero",
                f"C={SubsetRef(g.ground, mask)} convex={convex} dual={dv[mask]}",
            ):
                return


def _monotone_corpus(params, suite):
    n_max = int(params.get("n", 3))
    for idx, g in enumerate(_enumerated("all-normalized-subcardinal-monotone", n_max)):
        yield f"enumerated[{idx}] n={g.n} values={g.values}", g
    count = int(params.get("count", 500))
    max_n = int(params.get("max_n", 6))
    seed = _require_seed(params, suite)
    for idx, g in enumerate(random_monotone_tables(count, max_n=max_n, seed=seed)):
        yield f"sampled[{idx}] n={g.n} values={g.values}", g


def _suite_nullity_monotone(params, rec: _Recorder):
    for desc, g in _monotone_corpus(params, "nullity_monotone"):
        unit = _fast_unit_upper(g.values, g.n)
        nullity = _fast_monotone_nullity(g.values, g.n)
        stretch = all(
            g.values[b] - g.values[a] <= (b & ~a).bit_count()
            for a, b in _nested_pairs(g.n)
        )
        if not rec.check(
            unit == nullity == stretch,
            desc,
            "unit rank increase iff monotone nullity (iff bounded stretch)",
            f"unit={unit} nullity={nullity} stretch={stretch}",
        ):
            return


@lru_cache(maxsize=None)
def _nested_pairs(n: int):
    size = 1 << n
    return tuple((a, b) for b in range(size) for a in range(size) if a & b == a)


def _suite_demimatroid_characterization(params, rec: _Recorder):
    for desc, g in _monotone_corpus(params, "demimatroid_characterization"):
        lhs = check_demimatroid_characterization(g).passed
        rhs = check_demimatroid_triple(DemiTriple(g, dual(g))).passed
        if not rec.check(
            lhs == rhs,
            desc,
            "characterization passes iff (S, r, r*) is a demi triple",
            f"characterization={lhs} triple={rhs}",
        ):
            return


def _suite_branching_goldens(params, rec: _Recorder):
    g = branching_greedoid(demo_rooted_tree())
    sub = g.ground.subset

    rec.check(g.values == (0, 1, 0, 2, 1, 2, 1, 3), "demo rooted tree", "branching ranks", str(g.values))
    gd = dual(g)
    rec.check(gd.values == (0, -1, 0, 0, 0, -1, 0, 0), "demo rooted tree", "dual ranks", str(gd.values))
    rec.check(gd.rank(sub("ac")) == -1, "demo rooted tree", "dual rank of {a,c} is -1")
    rec.check(dual(gd) == g, "demo rooted tree", "dual is an involution")

    rec.check(delete(g, "a").values == (0, 0, 1, 1), "demo rooted tree", "deletion ranks", str(delete(g, "a").values))
    rec.check(contract(g, "a").values == (0, 1, 1, 2), "demo rooted tree", "contraction ranks", str(contract(g, "a").values))

    f = tutte_subset(g)
    rec.check(
        str(f) == "t^3*z + t^3 + t^2*z + 2*t^2 + 2*t + 1",
        "demo rooted tree",
        "canonical polynomial string",
        str(f),
    )
    rec.check(tutte_recursive(g, "lowest") == f, "demo rooted tree", "recursion (lowest pivot)")
    rec.check(tutte_recursive(g, "highest") == f, "demo rooted tree", "recursion (highest pivot)")
    rec.check(tutte_subset(gd) == swap_vars(f), "demo rooted tree", "dual polynomial is the variable swap")

    f_del_a = tutte_subset(delete(g, "a"))
    f_con_a = tutte_subset(contract(g, "a"))
    rec.check(
        f == f_del_a.shift(2, 0) + f_con_a,
        "demo rooted tree",
        "pivot identity at a: f = t^2 f(G-a) + f(G/a)",
    )
    f_del_b = tutte_subset(delete(g, "b"))
    f_con_b = tutte_subset(contract(g, "b"))
    rec.check(
        f == f_del_b.shift(1, 0) + f_con_b.shift(0, 1),
        "demo rooted tree",
        "pivot identity at b: f = t f(G-b) + z f(G/b)",
    )
    rec.check(
        str(f_con_b) == "t^3 + t^2 + t*z^-1 + z^-1",
        "demo rooted tree",
        "contraction polynomial at b",
        str(f_con_b),
    )


def _suite_pruning_goldens(params, rec: _Recorder):
    from .structures import convex_closure

    g = pruning_antimatroid(demo_pruning_tree())
    sub = g.ground.subset
    full = g.ground.full_mask

    rec.check(g.full_rank == 10, "demo pruning tree", "full antimatroid")
    adef = sub(("a", "d", "e", "f"))
    rec.check(g.rank(adef) == 4, "demo pruning tree", "rank of the prunable set {a,d,e,f}", str(g.rank(adef)))
    dv = _dual_values(g.values, g.n)
    rec.check(dv[full ^ adef.bits] == 0, "demo pruning tree", "dual rank of its complement is 0")

    beh = sub(("b", "e", "h"))
    rec.check(g.rank(beh) == 2, "demo pruning tree", "rank of {b,e,h} is 2", str(g.rank(beh)))
    rec.check(
        convex_closure(g, beh) == sub(("b", "c", "d", "e", "h")),
        "demo pruning tree",
        "closure of {b,e,h}",
        str(convex_closure(g, beh)),
    )
    adf = sub(("a", "d", "f"))
    rec.check(
        convex_closure(g, adf) == sub(("a", "b", "c", "d", "f", "g")),
        "demo pruning tree",
        "closure of {a,d,f}",
        str(convex_closure(g, adf)),
    )
    rec.check(g.rank(adf.complement()) == 4, "demo pruning tree", "rank of the complement of {a,d,f}")
    rec.check(dv[adf.bits] == -3, "demo pruning tree", "dual rank of {a,d,f} is -3", str(dv[adf.bits]))


SUITES = {
    "involution": _suite_involution,
    "exchange": _suite_exchange,
    "contract_formula": _suite_contract_formula,
    "direct_sum_dual": _suite_direct_sum_dual,
    "recursion_oracle": _suite_recursion_oracle,
    "duality_swap": _suite_duality_swap,
    "polynomiality": _suite_polynomiality,
    "contract_feasibility": _suite_contract_feasibility,
    "minor_agreement": _suite_minor_agreement,
    "dual_greedoid_axioms": _suite_dual_greedoid_axioms,
    "greedoid_intersection": _suite_greedoid_intersection,
    "root_adjacency": _suite_root_adjacency,
    "full_dual_nonpositive": _suite_full_dual_nonpositive,
    "closure_dual_rank": _suite_closure_dual_rank,
    "convex_zero_dual": _suite_convex_zero_dual,
    "nullity_monotone": _suite_nullity_monotone,
    "demimatroid_characterization": _suite_demimatroid_characterization,
    "branching_goldens": _suite_branching_goldens,
    "pruning_goldens": _suite_pruning_goldens,
}

RANDOMIZED_SUITES = frozenset(
    {
        "involution",
        "exchange",
        "contract_formula",
        "direct_sum_dual",
        "recursion_oracle",
        "duality_swap",
        "polynomiality",
        "nullity_monotone",
        "demimatroid_characterization",
    }
)


def run_suite(name: str, params: dict | None = None) -> SuiteResult:
    """Run a named verification suite. Deterministic given (name, params,
    seed); randomized suites require a seed parameter."""
    if name not in SUITES:
        raise RankFunctionError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    params = dict(params or {})
    if name in RANDOMIZED_SUITES:
        _require_seed(params, name)
    rec = _Recorder(
        fail_fast=bool(params.get("fail_fast", False)),
        max_failures=int(params.get("max_failures", 100)),
    )
    start = time.perf_counter()
    SUITES[name](params, rec)
    elapsed = time.perf_counter() - start
    return SuiteResult(
        suite=name,
        params=params,
        instances_checked=rec.instances,
        failures=rec.failures,
        elapsed=elapsed,
    )
