"""Exact Shearer-family membership for probability-labeled chordal graphs."""

from .checker import CheckReport, bound_crosscheck, check_membership
from .chordal import (
    CliqueTree,
    NotChordalError,
    TreeOrder,
    Violation,
    build_clique_tree,
    build_tree_order,
    check_chordal,
    down_neighbors,
    down_set,
    far_set,
    linear_extension,
    maximal_elements,
    mcs_order,
    verify_lefthanded,
)
from .generate import random_chordal
from .graph import GraphError, GraphParseError, LabeledGraph, is_independent, parse_graph, serialize_graph
from .numerics import (
    IntPolynomial,
    RationalFunction,
    format_rational,
    parse_rational,
    poly_arith,
    poly_primitive,
    smallest_root,
)
from .oracle import (
    OracleCapError,
    ShearerReport,
    bfunc,
    canonical_assignment,
    independent_sets,
    shearer_check,
    sigma,
)
from .threshold import (
    ThresholdReport,
    critical_polynomial,
    symbolic_assignment,
    threshold_bisect,
    threshold_report,
)

__version__ = "0.1.0"
