"""Bipartite multigraphs recording how balls move between two configurations.

For configurations a and b of the same shape, :func:`pair_graph` builds the
graph with n vertices in each of two rows and one edge per ball, joining the
ball's box in b (top row) to its box in a (bottom row).  The graph is stored
as an n-by-n multiplicity matrix with

    matrix[i-1][j-1]  =  number of balls lying in box i of a and box j of b,

so rows index the bottom (first-argument) side and columns the top side; row
sums are the content of a, column sums the content of b.  Renaming the balls
never changes the graph, and two pairs give the same graph exactly when one
is a renaming of the other, so the matrix is a complete invariant of the
diagonal renaming orbit of (a, b) and serves as the orbit's canonical key.
The graphs of shape (n, d) are the n-by-n matrices of nonnegative integers
with total sum d; there are C(n*n + d - 1, d) of them.

>>> a = Configuration.from_word("|123|4|")
>>> b = Configuration.from_word("|13|24|")
>>> pair_graph(a, b).matrix
((2, 1), (0, 1))
>>> canonical_pair(BipartiteMultigraph(((2, 1), (1, 0))))[0].word()
'|124|3|'
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .combinatorics import (
    Configuration,
    MultiIndex,
    Params,
    _check_cap,
    compositions,
    to_configuration,
    to_multi_index,
)

EdgeLabel = tuple[int, int]
"""A parallel class of edges, as the pair (top vertex, bottom vertex)."""


class EdgeSlot(NamedTuple):
    """A single edge of a multigraph: its parallel class plus a copy number."""

    top: int
    bottom: int
    copy: int

    @property
    def label(self) -> EdgeLabel:
        return (self.top, self.bottom)


@dataclass(frozen=True)
class BipartiteMultigraph:
    """Two rows of n vertices joined by d edges, as a multiplicity matrix."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        matrix = tuple(tuple(row) for row in self.matrix)
        object.__setattr__(self, "matrix", matrix)
        n = len(matrix)
        if n < 1 or any(len(row) != n for row in matrix):
            raise ValueError(f"multiplicity matrix must be square and nonempty: {matrix!r}")
        for row in matrix:
            for entry in row:
                if not isinstance(entry, int) or entry < 0:
                    raise ValueError(f"multiplicities must be nonnegative integers, got {entry!r}")

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def d(self) -> int:
        return sum(sum(row) for row in self.matrix)

    def top_valencies(self) -> tuple[int, ...]:
        """Edges at each top vertex (column sums); the content of the top configuration."""
        return tuple(sum(row[j] for row in self.matrix) for j in range(self.n))

    def bottom_valencies(self) -> tuple[int, ...]:
        """Edges at each bottom vertex (row sums); the content of the bottom configuration."""
        return tuple(sum(row) for row in self.matrix)

    @property
    def sort_key(self) -> tuple[int, ...]:
        """Flattened matrix; graphs are ordered lexicographically by this key."""
        return tuple(entry for row in self.matrix for entry in row)

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(e) for e in row) + "]" for row in self.matrix) + "]"


def pair_graph(a: Configuration, b: Configuration) -> BipartiteMultigraph:
    """The graph of (a, b): one edge per ball, from its box in b down to its box in a."""
    if (a.n, a.d) != (b.n, b.d):
        raise ValueError(f"configuration shapes differ: ({a.n},{a.d}) vs ({b.n},{b.d})")
    rows = [[0] * a.n for _ in range(a.n)]
    bottom = to_multi_index(a)
    top = to_multi_index(b)
    for i, j in zip(bottom, top):
        rows[i - 1][j - 1] += 1
    return BipartiteMultigraph(tuple(tuple(row) for row in rows))


def orbit_representative(x: MultiIndex, y: MultiIndex, n: int) -> BipartiteMultigraph:
    """Canonical key of the diagonal renaming orbit of the index pair (x, y)."""
    if len(x) != len(y):
        raise ValueError(f"index lengths differ: {len(x)} vs {len(y)}")
    return pair_graph(to_configuration(x, n), to_configuration(y, n))


def diagonal_graph(content: Sequence[int]) -> BipartiteMultigraph:
    """The graph whose only edges join each vertex straight down, with the given counts."""
    n = len(content)
    return BipartiteMultigraph(
        tuple(tuple(content[i] if i == j else 0 for j in range(n)) for i in range(n))
    )


def graph_count(p: Params) -> int:
    """Number of graphs of shape ``p``: C(n*n + d - 1, d)."""
    return math.comb(p.n * p.n + p.d - 1, p.d)


def enumerate_graphs(p: Params, cap: int | None = None) -> list[BipartiteMultigraph]:
    """All graphs of shape ``p``, ordered lexicographically by flattened matrix."""
    _check_cap(graph_count(p), cap, f"the graph set at n={p.n}, d={p.d}")
    out = []
    for flat in compositions(p.d, p.n * p.n):
        rows = tuple(flat[k * p.n : (k + 1) * p.n] for k in range(p.n))
        out.append(BipartiteMultigraph(rows))
    return out


def edge_labels(g: BipartiteMultigraph) -> list[EdgeLabel]:
    """The occupied parallel classes of ``g``, sorted by (top, bottom)."""
    return [
        (top, bottom)
        for top in range(1, g.n + 1)
        for bottom in range(1, g.n + 1)
        if g.matrix[bottom - 1][top - 1] > 0
    ]


def edge_slots(g: BipartiteMultigraph) -> list[EdgeSlot]:
    """All d edges of ``g`` individually, sorted by (top, bottom, copy)."""
    return [
        EdgeSlot(top, bottom, copy)
        for top, bottom in edge_labels(g)
        for copy in range(g.matrix[bottom - 1][top - 1])
    ]


def canonical_configuration(content: Sequence[int]) -> Configuration:
    """The configuration of given content whose balls are numbered box by box."""
    boxes = []
    next_ball = 1
    for size in content:
        boxes.append(tuple(range(next_ball, next_ball + size)))
        next_ball += size
    return Configuration(tuple(boxes))


def canonical_pair(g: BipartiteMultigraph) -> tuple[Configuration, Configuration]:
    """A fixed pair (a, c) with ``pair_graph(a, c) == g``.

    c is the canonical configuration of the top valencies; a sends, within
    each top box, the smallest balls down to the lowest-numbered bottom box.
    Any other pair with graph g is a simultaneous renaming of this one.
    """
    c = canonical_configuration(g.top_valencies())
    bottoms: list[list[int]] = [[] for _ in range(g.n)]
    for j in range(g.n):
        queue = iter(c.boxes[j])
        for i in range(g.n):
            for _ in range(g.matrix[i][j]):
                bottoms[i].append(next(queue))
    a = Configuration(tuple(tuple(sorted(box)) for box in bottoms))
    return a, c
