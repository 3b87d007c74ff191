"""Structure constants of the graph basis, by three independent routes.

The product of two basis operators expands in basis operators with
nonnegative integer coefficients.  The coefficient attached to a graph g
counts middle rows of a three-row diagram: fix any pair (a, c) with
pair_graph(a, c) == g, then count the configurations b with
pair_graph(a, b) == g1 and pair_graph(b, c) == g2.  The count is the same
for every choice of (a, c), and :func:`multiply_basis_counting` performs it
literally with the pair from :func:`canonical_pair`.

Two further routes never touch configurations and work on the edges of g1
and g2 alone.  An *Euler function* is a bijection from the edges of g2 onto
the edges of g1 such that matched edges meet in the middle row: the bottom
vertex of the g2 edge equals the top vertex of the g1 edge.  Splicing each
edge with its partner produces a composed graph, and the graphs arising this
way are exactly the support of the product.  Counting Euler functions
themselves overcounts, because parallel edges are interchangeable; the
correct objects are *word matrices*.  Give each parallel class of each
factor a label; entry (s, t) of the word matrix lists, in ball order, the
ordered pairs (g2 label, g1 label) used by the balls travelling from top
box t to bottom box s.  Word matrices are in bijection with middle
configurations, so their number per composed graph is the structure
constant.  :func:`multiply_basis_euler` reaches that number arithmetically,
by enumerating Euler functions, collapsing them to label pairings and
weighting each pairing by its arrangement count; :func:`multiply_basis_mendez`
instead builds every word matrix explicitly and counts distinct objects.

>>> g1 = BipartiteMultigraph(((2, 1), (0, 1)))
>>> g2 = BipartiteMultigraph(((2, 0), (1, 1)))
>>> print(multiply_basis_counting(g1, g2))
xi[[2,1],[1,0]] + 3*xi[[3,0],[0,1]]
>>> len(enumerate_euler_functions(g1, g2))
4
"""

import itertools
import math
import string
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from .algebra import AlgebraElement, apply_basis
from .combinatorics import Configuration, to_multi_index
from .graphs import (
    BipartiteMultigraph,
    EdgeLabel,
    EdgeSlot,
    canonical_configuration,
    canonical_pair,
    edge_labels,
    edge_slots,
    pair_graph,
)

Pair = tuple[EdgeLabel, EdgeLabel]
"""One recorded ball path: (label of its g2 edge, label of its g1 edge)."""


def _check_same_shape(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> None:
    if (g1.n, g1.d) != (g2.n, g2.d):
        raise ValueError(f"graph shapes differ: ({g1.n},{g1.d}) vs ({g2.n},{g2.d})")


@dataclass(frozen=True)
class EulerFunction:
    """Edge-slot bijection from a right factor onto a left factor.

    ``pairs`` lists (source slot, target slot) sorted by source; each source
    slot's bottom vertex equals its target slot's top vertex, so matched
    edges meet at the middle row of the three-row composition picture.
    """

    pairs: tuple[tuple[EdgeSlot, EdgeSlot], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))
        sources = [e for e, _ in self.pairs]
        targets = [f for _, f in self.pairs]
        if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
            raise ValueError("an Euler function must pair edge slots bijectively")
        for source, target in self.pairs:
            if source.bottom != target.top:
                raise ValueError(f"slots {source} -> {target} do not meet at a middle vertex")

    def __call__(self, slot: EdgeSlot) -> EdgeSlot:
        for source, target in self.pairs:
            if source == slot:
                return target
        raise KeyError(slot)

    def sources(self) -> list[EdgeSlot]:
        return [e for e, _ in self.pairs]

    def targets(self) -> list[EdgeSlot]:
        return sorted(f for _, f in self.pairs)


def _check_fits(g1: BipartiteMultigraph, g2: BipartiteMultigraph, f: EulerFunction) -> None:
    if f.sources() != edge_slots(g2) or f.targets() != edge_slots(g1):
        raise ValueError("Euler function does not fit these graphs")


def enumerate_euler_functions(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> list[EulerFunction]:
    """All Euler functions from the edges of g2 onto the edges of g1.

    None exist unless the bottom valencies of g2 equal the top valencies of
    g1; otherwise the slots at each middle vertex are matched independently,
    so there are prod over v of (valency at v)! functions.
    """
    _check_same_shape(g1, g2)
    if g2.bottom_valencies() != g1.top_valencies():
        return []
    sources: dict[int, list[EdgeSlot]] = {v: [] for v in range(1, g2.n + 1)}
    for slot in edge_slots(g2):
        sources[slot.bottom].append(slot)
    targets: dict[int, list[EdgeSlot]] = {v: [] for v in range(1, g1.n + 1)}
    for slot in edge_slots(g1):
        targets[slot.top].append(slot)
    per_vertex = []
    for v in range(1, g1.n + 1):
        per_vertex.append(
            [tuple(zip(sources[v], arrangement)) for arrangement in itertools.permutations(targets[v])]
        )
    return [
        EulerFunction(tuple(itertools.chain.from_iterable(combo)))
        for combo in itertools.product(*per_vertex)
    ]


def euler_function_count(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> int:
    """Closed form for the number of Euler functions."""
    _check_same_shape(g1, g2)
    if g2.bottom_valencies() != g1.top_valencies():
        return 0
    return math.prod(math.factorial(v) for v in g2.bottom_valencies())


def compose_euler(g1: BipartiteMultigraph, g2: BipartiteMultigraph, f: EulerFunction) -> BipartiteMultigraph:
    """Splice each g2 edge with its g1 partner: top of the former to bottom of the latter."""
    _check_same_shape(g1, g2)
    _check_fits(g1, g2, f)
    rows = [[0] * g1.n for _ in range(g1.n)]
    for source, target in f.pairs:
        rows[target.bottom - 1][source.top - 1] += 1
    return BipartiteMultigraph(tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class WordMatrix:
    """Matrix of label-pair words; entry (s, t) records the balls going from top box t to bottom box s."""

    entries: tuple[tuple[tuple[Pair, ...], ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def graph(self) -> BipartiteMultigraph:
        """Graph of word lengths: one composed edge per recorded ball path."""
        return BipartiteMultigraph(tuple(tuple(len(word) for word in row) for row in self.entries))


def letter_labels(g: BipartiteMultigraph) -> dict[EdgeLabel, str]:
    """Deterministic one-letter names for the parallel classes, in (top, bottom) order."""
    labels = edge_labels(g)
    return {
        label: (string.ascii_lowercase[k] if k < 26 else f"e{k}")
        for k, label in enumerate(labels)
    }


def format_word(word: tuple[Pair, ...], labels2: dict, labels1: dict) -> str:
    """A word as printed text, e.g. ``(a,a)(a,a)(b,b)``; ``-`` when empty."""
    if not word:
        return "-"
    return "".join(f"({labels2[e2]},{labels1[e1]})" for e2, e1 in word)


def format_word_matrix(wm: WordMatrix, g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> str:
    labels1, labels2 = letter_labels(g1), letter_labels(g2)
    return "\n".join(
        " | ".join(format_word(word, labels2, labels1) for word in row) for row in wm.entries
    )


def word_matrix_of(
    g1: BipartiteMultigraph, g2: BipartiteMultigraph, f: EulerFunction, c: Configuration
) -> WordMatrix:
    """Word matrix of one Euler function, with balls put on edge slots canonically.

    The balls in box t of c take the g2 slots with top vertex t in slot order
    (lowest bottom vertex first); each ball then follows f onto a g1 slot and
    lands in that slot's bottom box.
    """
    _check_same_shape(g1, g2)
    _check_fits(g1, g2, f)
    if c.content() != g2.top_valencies():
        raise ValueError(f"content {c.content()} does not match top valencies {g2.top_valencies()}")
    slots_by_top: dict[int, list[EdgeSlot]] = {t: [] for t in range(1, g2.n + 1)}
    for slot in edge_slots(g2):
        slots_by_top[slot.top].append(slot)
    words: list[list[list[Pair]]] = [[[] for _ in range(g1.n)] for _ in range(g1.n)]
    for t in range(1, g2.n + 1):
        for ball, slot in zip(c.boxes[t - 1], slots_by_top[t]):
            target = f(slot)
            words[target.bottom - 1][t - 1].append((slot.label, target.label))
    return WordMatrix(tuple(tuple(tuple(word) for word in row) for row in words))


def word_matrix_of_filling(
    g1: BipartiteMultigraph,
    g2: BipartiteMultigraph,
    a: Configuration,
    b: Configuration,
    c: Configuration,
) -> WordMatrix:
    """Word matrix of one middle configuration in the three-row picture c / b / a."""
    if pair_graph(a, b) != g1 or pair_graph(b, c) != g2:
        raise ValueError("not a middle filling for these graphs")
    top, middle, bottom = to_multi_index(c), to_multi_index(b), to_multi_index(a)
    words: list[list[list[Pair]]] = [[[] for _ in range(g1.n)] for _ in range(g1.n)]
    for ball in range(1, a.d + 1):
        t, v, s = top[ball - 1], middle[ball - 1], bottom[ball - 1]
        words[s - 1][t - 1].append(((t, v), (v, s)))
    return WordMatrix(tuple(tuple(tuple(word) for word in row) for row in words))


def recover_middle(wm: WordMatrix, a: Configuration, c: Configuration) -> Configuration:
    """The middle configuration a word matrix encodes, relative to its outer rows."""
    top, bottom = to_multi_index(c), to_multi_index(a)
    consumed: Counter = Counter()
    boxes: list[list[int]] = [[] for _ in range(c.n)]
    for ball in range(1, c.d + 1):
        s, t = bottom[ball - 1], top[ball - 1]
        label2, _ = wm.entries[s - 1][t - 1][consumed[(s, t)]]
        consumed[(s, t)] += 1
        boxes[label2[1] - 1].append(ball)
    return Configuration(tuple(tuple(box) for box in boxes))


def _bounded_compositions(total: int, bounds: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not bounds:
        if total == 0:
            yield ()
        return
    for head in range(min(total, bounds[0]) + 1):
        for tail in _bounded_compositions(total - head, bounds[1:]):
            yield (head,) + tail


def _tables(row_sums: tuple[int, ...], col_sums: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Nonnegative integer matrices with the given row and column sums."""
    if not row_sums:
        if all(c == 0 for c in col_sums):
            yield ()
        return
    for first in _bounded_compositions(row_sums[0], col_sums):
        reduced = tuple(c - f for c, f in zip(col_sums, first))
        for rest in _tables(row_sums[1:], reduced):
            yield (first,) + rest


def _label_pairings(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> Iterator[dict[Pair, int]]:
    """All ways to pair parallel classes across the middle row, with counts.

    At each middle vertex the g2 classes arriving from above and the g1
    classes leaving below form a small contingency table whose margins are
    the class multiplicities; per-vertex tables combine freely.  Yields
    {(g2 label, g1 label): count} maps, exactly the label-level shadows of
    Euler functions.
    """
    fragment_lists = []
    for v in range(1, g1.n + 1):
        rows = [(label, g2.matrix[label[1] - 1][label[0] - 1]) for label in edge_labels(g2) if label[1] == v]
        cols = [(label, g1.matrix[label[1] - 1][label[0] - 1]) for label in edge_labels(g1) if label[0] == v]
        fragments = []
        for table in _tables(tuple(m for _, m in rows), tuple(m for _, m in cols)):
            fragment = {}
            for (row_label, _), counts in zip(rows, table):
                for (col_label, _), count in zip(cols, counts):
                    if count:
                        fragment[(row_label, col_label)] = count
            fragments.append(fragment)
        fragment_lists.append(fragments)
    for combo in itertools.product(*fragment_lists):
        merged: dict[Pair, int] = {}
        for fragment in combo:
            merged.update(fragment)
        yield merged


def _arrangements(multiset: Counter) -> Iterator[tuple]:
    """Distinct orderings of a multiset, lexicographically."""
    if sum(multiset.values()) == 0:
        yield ()
        return
    for item in sorted(multiset):
        if multiset[item]:
            multiset[item] -= 1
            for tail in _arrangements(multiset):
                yield (item,) + tail
            multiset[item] += 1


def enumerate_word_matrices(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> Iterator[WordMatrix]:
    """Every word matrix of the pair (g1, g2), each exactly once.

    A pairing of parallel classes fixes the multiset of label pairs landing
    in each entry; the entry's word is any arrangement of that multiset,
    chosen independently per entry.
    """
    _check_same_shape(g1, g2)
    n = g1.n
    for pairing in _label_pairings(g1, g2):
        entry_multisets = [[Counter() for _ in range(n)] for _ in range(n)]
        for (label2, label1), count in pairing.items():
            entry_multisets[label1[1] - 1][label2[0] - 1][(label2, label1)] += count
        per_entry = [list(_arrangements(entry_multisets[s][t])) for s in range(n) for t in range(n)]
        for choice in itertools.product(*per_entry):
            yield WordMatrix(tuple(tuple(choice[s * n + t] for t in range(n)) for s in range(n)))


def multiply_basis_mendez(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> AlgebraElement:
    """Product of basis operators by counting distinct word matrices per composed graph."""
    _check_same_shape(g1, g2)
    seen: dict[BipartiteMultigraph, set[WordMatrix]] = {}
    for wm in enumerate_word_matrices(g1, g2):
        seen.setdefault(wm.graph(), set()).add(wm)
    return AlgebraElement(g1.n, g1.d, [(g, len(matrices)) for g, matrices in seen.items()])


def _arrangement_product(pairing_items: tuple, composed: BipartiteMultigraph) -> int:
    """Number of word matrices over one label pairing: a multinomial per entry."""
    entry_counts: dict[tuple[int, int], list[int]] = {}
    for (label2, label1), count in pairing_items:
        entry_counts.setdefault((label1[1], label2[0]), []).append(count)
    total = 1
    for counts in entry_counts.values():
        total *= math.factorial(sum(counts)) // math.prod(math.factorial(c) for c in counts)
    return total


def multiply_basis_euler(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> AlgebraElement:
    """Product via Euler functions: distinct label pairings, weighted by arrangements.

    Euler functions that differ only by shuffling parallel copies collapse to
    the same label pairing once copy numbers are erased; each pairing then
    accounts for one word matrix per choice of entry arrangements.
    """
    _check_same_shape(g1, g2)
    coefficients: dict[BipartiteMultigraph, int] = {}
    seen: dict[BipartiteMultigraph, set[tuple]] = {}
    for f in enumerate_euler_functions(g1, g2):
        pairing = tuple(sorted(Counter((e.label, t.label) for e, t in f.pairs).items()))
        composed = compose_euler(g1, g2, f)
        bucket = seen.setdefault(composed, set())
        if pairing in bucket:
            continue
        bucket.add(pairing)
        coefficients[composed] = coefficients.get(composed, 0) + _arrangement_product(pairing, composed)
    return AlgebraElement(g1.n, g1.d, coefficients)


def middle_fillings(
    g1: BipartiteMultigraph, g2: BipartiteMultigraph, g: BipartiteMultigraph
) -> tuple[Configuration, Configuration, list[Configuration]]:
    """Canonical witnesses: the pair (a, c) for g and every compatible middle configuration."""
    _check_same_shape(g1, g2)
    _check_same_shape(g1, g)
    a, c = canonical_pair(g)
    middles = [b for b in sorted(apply_basis(g2, c), key=to_multi_index) if pair_graph(a, b) == g1]
    return a, c, middles


def coeff_by_counting(g1: BipartiteMultigraph, g2: BipartiteMultigraph, g: BipartiteMultigraph) -> int:
    """One structure constant by direct middle-configuration counting."""
    if g2.bottom_valencies() != g1.top_valencies():
        return 0
    if g.top_valencies() != g2.top_valencies():
        return 0
    if g.bottom_valencies() != g1.bottom_valencies():
        return 0
    return len(middle_fillings(g1, g2, g)[2])


def multiply_basis_counting(g1: BipartiteMultigraph, g2: BipartiteMultigraph) -> AlgebraElement:
    """Product of basis operators by sweeping three-row diagrams over one canonical top row.

    All pairs (a, b) under the canonical c are enumerated; the coefficient of
    a composed graph is read off at that graph's own canonical bottom row,
    which the sweep always visits.  (The middle count is the same at every
    bottom row with the right graph, so reading one row is enough; that
    independence is exercised separately by the tests.)
    """
    _check_same_shape(g1, g2)
    if g2.bottom_valencies() != g1.top_valencies():
        return AlgebraElement.zero(g1.n, g1.d)
    c = canonical_configuration(g2.top_valencies())
    counts: dict[BipartiteMultigraph, int] = {}
    canonical_bottom: dict[BipartiteMultigraph, Configuration] = {}
    for b in apply_basis(g2, c):
        for a in apply_basis(g1, b):
            composed = pair_graph(a, c)
            a0 = canonical_bottom.get(composed)
            if a0 is None:
                a0 = canonical_pair(composed)[0]
                canonical_bottom[composed] = a0
            if a == a0:
                counts[composed] = counts.get(composed, 0) + 1
    return AlgebraElement(g1.n, g1.d, counts)
