"""Dense ground truth: basis operators as explicit 0/1 matrices.

Everything here is brute force on purpose.  Matrices are built entry by
entry from the defining condition, products use exact integer arithmetic
(object-dtype numpy arrays holding plain Python ints), and nothing is shared
with the combinatorial engines beyond the pair-graph dictionary itself.  The
module refuses instances with more than 4096 basis vectors; it exists to
certify the fast paths, not to replace them.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .combinatorics import (
    MultiIndex,
    Params,
    Permutation,
    TooLargeError,
    act_on_index,
    enumerate_multi_indices,
    to_configuration,
    to_multi_index,
)
from .graphs import BipartiteMultigraph, canonical_pair, orbit_representative, pair_graph
from .algebra import AlgebraElement

ORACLE_CAP = 4096


class NotInSpanError(ValueError):
    """A matrix is not a combination of the basis operators."""


def _zeros(size: int) -> np.ndarray:
    return np.zeros((size, size), dtype=object)


@dataclass(eq=False)
class DenseOperator:
    """Square integer matrix acting on basis vectors in multi-index order."""

    n: int
    d: int
    matrix: np.ndarray

    def __matmul__(self, other: "DenseOperator") -> "DenseOperator":
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError(f"shape mismatch: ({self.n},{self.d}) vs ({other.n},{other.d})")
        return DenseOperator(self.n, self.d, self.matrix @ other.matrix)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DenseOperator)
            and (self.n, self.d) == (other.n, other.d)
            and bool((self.matrix == other.matrix).all())
        )

    def copy(self) -> "DenseOperator":
        return DenseOperator(self.n, self.d, self.matrix.copy())


class PairTable:
    """Every basis pair of one shape, keyed by its graph.

    ``positions[g]`` lists the (row, column) pairs whose graph is g, in row
    scan order; the lists partition the full square.  ``graph_at[r][c]`` is
    the interned graph of pair (r, c).
    """

    def __init__(self, p: Params):
        if p.index_count > ORACLE_CAP:
            raise TooLargeError(
                f"instance too large for the dense oracle: {p.index_count} > {ORACLE_CAP} basis vectors"
            )
        self.p = p
        self.indices = enumerate_multi_indices(p, cap=ORACLE_CAP)
        self.index_of = {index: k for k, index in enumerate(self.indices)}
        self.configs = [to_configuration(index, p.n) for index in self.indices]
        interned: dict[BipartiteMultigraph, BipartiteMultigraph] = {}
        positions: dict[BipartiteMultigraph, list[tuple[int, int]]] = {}
        graph_at = []
        for r, a in enumerate(self.configs):
            row = []
            for c, b in enumerate(self.configs):
                g = pair_graph(a, b)
                g = interned.setdefault(g, g)
                positions.setdefault(g, []).append((r, c))
                row.append(g)
            graph_at.append(row)
        self.positions = positions
        self.graph_at = graph_at

    @property
    def size(self) -> int:
        return len(self.indices)


@lru_cache(maxsize=8)
def pair_table(n: int, d: int) -> PairTable:
    return PairTable(Params(n, d))


def operator_matrix(g: BipartiteMultigraph) -> DenseOperator:
    """0/1 matrix of a basis operator: entry (a, b) is 1 exactly when pair_graph(a, b) == g."""
    table = pair_table(g.n, g.d)
    m = _zeros(table.size)
    for r, c in table.positions.get(g, ()):
        m[r, c] = 1
    return DenseOperator(g.n, g.d, m)


def orbit_operator_matrix(g: BipartiteMultigraph) -> DenseOperator:
    """Matrix of the orbit-sum operator on multi-indices for the orbit keyed by g.

    Built directly from orbit keys of index pairs, without the configuration
    table; agreeing entrywise with :func:`operator_matrix` is the standard
    consistency check between the two pictures of the same basis.
    """
    p = Params(g.n, g.d)
    if p.index_count > ORACLE_CAP:
        raise TooLargeError(
            f"instance too large for the dense oracle: {p.index_count} > {ORACLE_CAP} basis vectors"
        )
    indices = enumerate_multi_indices(p, cap=ORACLE_CAP)
    m = _zeros(len(indices))
    for r, x in enumerate(indices):
        for c, y in enumerate(indices):
            if orbit_representative(x, y, g.n) == g:
                m[r, c] = 1
    return DenseOperator(g.n, g.d, m)


def orbit_composition_count(
    g1: BipartiteMultigraph, g2: BipartiteMultigraph, g: BipartiteMultigraph
) -> int:
    """Middle indices z with (x, z) keyed by g1 and (z, y) keyed by g2, at a representative (x, y) of g.

    This is the coefficient of the g orbit operator in the product of the g1
    and g2 orbit operators, read off combinatorially.
    """
    table = pair_table(g.n, g.d)
    a, c = canonical_pair(g)
    x = table.index_of[to_multi_index(a)]
    y = table.index_of[to_multi_index(c)]
    grid = table.graph_at
    return sum(1 for z in range(table.size) if grid[x][z] == g1 and grid[z][y] == g2)


def permutation_matrix(w: Permutation, p: Params) -> DenseOperator:
    """Matrix of the renaming action: the basis vector of index i goes to that of w . i."""
    if w.degree != p.d:
        raise ValueError(f"permutation degree {w.degree} does not match d={p.d}")
    table = pair_table(p.n, p.d)
    m = _zeros(table.size)
    for col, index in enumerate(table.indices):
        m[table.index_of[act_on_index(w, index)], col] = 1
    return DenseOperator(p.n, p.d, m)


def commutes_with_renaming(op: DenseOperator) -> bool:
    """Whether a matrix commutes with every adjacent-transposition matrix.

    Adjacent transpositions generate all renamings, so this is equivalent to
    commuting with the whole action.
    """
    p = Params(op.n, op.d)
    for s in range(1, p.d):
        perm = permutation_matrix(Permutation.transposition(p.d, s, s + 1), p)
        if (op @ perm) != (perm @ op):
            return False
    return True


def check_commutant(g: BipartiteMultigraph) -> bool:
    """Certify that one basis operator commutes with the renaming action."""
    return commutes_with_renaming(operator_matrix(g))


def decompose(op: DenseOperator) -> AlgebraElement:
    """Expand a matrix in the basis operators, or raise :class:`NotInSpanError`.

    The orbit positions partition all entries, so the expansion exists
    exactly when the matrix is constant on each orbit, and the coefficient
    can be read off at any one representative entry.
    """
    table = pair_table(op.n, op.d)
    terms = []
    for g, positions in table.positions.items():
        r0, c0 = positions[0]
        value = op.matrix[r0, c0]
        for r, c in positions[1:]:
            if op.matrix[r, c] != value:
                raise NotInSpanError(
                    f"matrix is not constant on the orbit of {g}: "
                    f"entry {(r0, c0)} is {value} but {(r, c)} is {op.matrix[r, c]}"
                )
        if value:
            terms.append((g, int(value)))
    return AlgebraElement(op.n, op.d, terms)


def multiply_basis_oracle(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> AlgebraElement:
    """Ground-truth product: multiply the dense matrices and expand the result."""
    if (g1.n, g1.d) != (g2.n, g2.d):
        raise ValueError(f"graph shapes differ: ({g1.n},{g1.d}) vs ({g2.n},{g2.d})")
    return decompose(operator_matrix(g1) @ operator_matrix(g2))
