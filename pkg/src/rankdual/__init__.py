"""Generalized duality for integer rank functions on finite ground sets.

The dual of a table r over a ground set S is r*(A) = |A| + r(S - A) - r(S).
This package provides the dual, deletion, contraction, minors, and direct
sums, a two-variable corank-nullity polynomial with a deletion-contraction
recursion, axiom checkers (matroid, greedoid, dual greedoid, antimatroid,
demi-matroid) with counterexample witnesses, combinatorial constructors
(branching greedoids, pruning antimatroids, uniform matroids, convex
closure), and exhaustive small-instance verification suites.
"""

from .axioms import (
    AxiomReport,
    DemiTriple,
    FeasibleDescriptors,
    FeasibleFamily,
    check_antimatroid,
    check_demimatroid_characterization,
    check_demimatroid_triple,
    check_dual_greedoid,
    check_greedoid,
    check_matroid,
    feasible_descriptors,
)
from .core import (
    GroundSet,
    GroundSetError,
    NormalizationError,
    RankFunctionError,
    RankTable,
    SubsetRef,
    TableBuildError,
    ValidationReport,
    build_rank_table,
    table_from_values,
    validate,
)
from .documents import DocumentError, dump_rank_table, load_document, parse_document
from .ops import MinorSpec, contract, delete, direct_sum, dual, minor
from .structures import (
    ContractionError,
    RootedGraph,
    StructureError,
    Tree,
    branching_greedoid,
    convex_closure,
    demo_pruning_tree,
    demo_rooted_tree,
    greedoid_minor_feasible,
    pruning_antimatroid,
    root_adjacency_test,
    uniform_matroid,
)
from .tutte import LaurentPoly2, swap_vars, tutte_recursive, tutte_subset
from .verify import (
    EnumSpec,
    SuiteResult,
    all_rooted_graphs,
    all_trees,
    enumerate_tables,
    random_monotone_tables,
    random_tables,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "ContractionError",
    "DemiTriple",
    "DocumentError",
    "EnumSpec",
    "FeasibleDescriptors",
    "FeasibleFamily",
    "GroundSet",
    "GroundSetError",
    "LaurentPoly2",
    "MinorSpec",
    "NormalizationError",
    "RankFunctionError",
    "RankTable",
    "RootedGraph",
    "StructureError",
    "SubsetRef",
    "SuiteResult",
    "TableBuildError",
    "Tree",
    "ValidationReport",
    "all_rooted_graphs",
    "all_trees",
    "branching_greedoid",
    "build_rank_table",
    "check_antimatroid",
    "check_demimatroid_characterization",
    "check_demimatroid_triple",
    "check_dual_greedoid",
    "check_greedoid",
    "check_matroid",
    "contract",
    "convex_closure",
    "delete",
    "demo_pruning_tree",
    "demo_rooted_tree",
    "direct_sum",
    "dual",
    "dump_rank_table",
    "enumerate_tables",
    "feasible_descriptors",
    "greedoid_minor_feasible",
    "load_document",
    "minor",
    "parse_document",
    "pruning_antimatroid",
    "random_monotone_tables",
    "random_tables",
    "root_adjacency_test",
    "run_suite",
    "swap_vars",
    "table_from_values",
    "tutte_recursive",
    "tutte_subset",
    "uniform_matroid",
    "validate",
]
