"""Exact arithmetic in the algebra of ball-configuration operators.

Configurations of d labeled balls in n boxes carry a ball-renaming action;
the operators commuting with it have a basis indexed by n x n bipartite
multigraphs with d edges.  This package computes products in that basis by
three independent combinatorial engines and checks them against a dense
matrix oracle.
"""

from .algebra import (
    ENGINE_NAMES,
    AlgebraElement,
    VectorElement,
    apply,
    apply_basis,
    basis_product,
    identity_element,
    multiply,
)
from .combinatorics import (
    DEFAULT_ENUMERATION_CAP,
    Configuration,
    ConfigurationError,
    Params,
    Permutation,
    TooLargeError,
    act_on_configuration,
    act_on_index,
    compositions,
    enumerate_configurations,
    enumerate_multi_indices,
    to_configuration,
    to_multi_index,
)
from .graphs import (
    BipartiteMultigraph,
    canonical_pair,
    diagonal_graph,
    enumerate_graphs,
    graph_count,
    pair_graph,
)
from .oracle import ORACLE_CAP, NotInSpanError, multiply_basis_oracle, operator_matrix
from .structconst import (
    EulerFunction,
    WordMatrix,
    coeff_by_counting,
    enumerate_euler_functions,
    enumerate_word_matrices,
    euler_function_count,
    middle_fillings,
    multiply_basis_counting,
    multiply_basis_euler,
    multiply_basis_mendez,
)
from .verify import CHECK_NAMES, CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "ENGINE_NAMES",
    "AlgebraElement",
    "VectorElement",
    "apply",
    "apply_basis",
    "basis_product",
    "identity_element",
    "multiply",
    "DEFAULT_ENUMERATION_CAP",
    "Configuration",
    "ConfigurationError",
    "Params",
    "Permutation",
    "TooLargeError",
    "act_on_configuration",
    "act_on_index",
    "compositions",
    "enumerate_configurations",
    "enumerate_multi_indices",
    "to_configuration",
    "to_multi_index",
    "BipartiteMultigraph",
    "canonical_pair",
    "diagonal_graph",
    "enumerate_graphs",
    "graph_count",
    "pair_graph",
    "ORACLE_CAP",
    "NotInSpanError",
    "multiply_basis_oracle",
    "operator_matrix",
    "EulerFunction",
    "WordMatrix",
    "coeff_by_counting",
    "enumerate_euler_functions",
    "enumerate_word_matrices",
    "euler_function_count",
    "middle_fillings",
    "multiply_basis_counting",
    "multiply_basis_euler",
    "multiply_basis_mendez",
    "CHECK_NAMES",
    "CheckResult",
    "run_checks",
    "__version__",
]
