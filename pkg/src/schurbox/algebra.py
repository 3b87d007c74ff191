"""Exact linear algebra over configurations and the graph-indexed operator basis.

``VectorElement`` is a finite integer combination of basis vectors e_b, one
per configuration b; ``AlgebraElement`` is a combination of basis operators
xi_g, one per bipartite multigraph g.  A basis operator acts by

    xi_g . e_b  =  sum of e_a over all a with pair_graph(a, b) == g,

that is, by sending the balls of b down the edges of g in every admissible
way; the result is zero unless the top valencies of g equal the content of
b.  These operators commute with ball renaming and span all endomorphisms
that do, so elements here are exactly the equivariant operators on the
configuration module.  Products of basis operators are delegated to the
engines in ``structconst`` (with a dense-matrix route in ``oracle``) and
memoized.

Coefficients are plain unbounded integers.  Operations accept an optional
prime ``mod`` and then reduce into the field with that many elements, using
canonical residues 0..mod-1; nothing is ever rounded or truncated.

>>> g = BipartiteMultigraph(((2, 1), (0, 1)))
>>> b = Configuration.from_word("|12|34|")
>>> sorted(a.word() for a in apply_basis(g, b))
['|123|4|', '|124|3|']
"""

import itertools
from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache

from .combinatorics import Configuration, Params, compositions, to_multi_index
from .graphs import BipartiteMultigraph, diagonal_graph

ENGINE_NAMES = ("counting", "euler", "mendez", "oracle")

_MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin; exact far beyond any modulus this tool will see."""
    if p < 2:
        return False
    if p in _MILLER_RABIN_BASES:
        return True
    if any(p % q == 0 for q in _MILLER_RABIN_BASES):
        return False
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MILLER_RABIN_BASES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def check_modulus(mod: int | None) -> None:
    if mod is not None and (not isinstance(mod, int) or not is_prime(mod)):
        raise ValueError(f"modulus must be prime, got {mod!r}")


def _gather(n, d, items, key_type, shape_of) -> dict:
    acc: dict = {}
    for key, coeff in items:
        if not isinstance(key, key_type):
            raise TypeError(f"expected {key_type.__name__} keys, got {key!r}")
        if shape_of(key) != (n, d):
            raise ValueError(f"shape {shape_of(key)} of {key} does not match ({n},{d})")
        if not isinstance(coeff, int):
            raise TypeError(f"coefficients must be integers, got {coeff!r}")
        acc[key] = acc.get(key, 0) + coeff
    return {key: coeff for key, coeff in acc.items() if coeff != 0}


class VectorElement:
    """Sparse integer combination of configuration basis vectors."""

    __slots__ = ("n", "d", "_terms")

    def __init__(self, n: int, d: int, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.n, self.d = n, d
        self._terms = _gather(n, d, items, Configuration, lambda c: (c.n, c.d))

    @classmethod
    def zero(cls, n: int, d: int) -> "VectorElement":
        return cls(n, d)

    @classmethod
    def basis(cls, config: Configuration) -> "VectorElement":
        return cls(config.n, config.d, [(config, 1)])

    def coefficient(self, config: Configuration) -> int:
        return self._terms.get(config, 0)

    def items(self) -> list[tuple[Configuration, int]]:
        """Terms sorted by the configuration's multi-index."""
        return sorted(self._terms.items(), key=lambda kv: to_multi_index(kv[0]))

    def support(self) -> list[Configuration]:
        return [config for config, _ in self.items()]

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def reduce(self, mod: int | None) -> "VectorElement":
        """Coefficients reduced to canonical residues 0..mod-1, zeros pruned."""
        check_modulus(mod)
        if mod is None:
            return self
        return VectorElement(self.n, self.d, [(k, v % mod) for k, v in self._terms.items()])

    def _check_match(self, other) -> None:
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError(f"shape mismatch: ({self.n},{self.d}) vs ({other.n},{other.d})")

    def __add__(self, other: "VectorElement") -> "VectorElement":
        self._check_match(other)
        return VectorElement(self.n, self.d, list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "VectorElement") -> "VectorElement":
        return self + (-1) * other

    def __neg__(self) -> "VectorElement":
        return (-1) * self

    def __rmul__(self, scalar: int) -> "VectorElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return VectorElement(self.n, self.d, [(k, scalar * v) for k, v in self._terms.items()])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VectorElement)
            and (self.n, self.d) == (other.n, other.d)
            and self._terms == other._terms
        )

    __hash__ = None

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for config, coeff in self.items():
            if coeff == 1:
                parts.append(f"e{config.word()}")
            elif coeff == -1:
                parts.append(f"-e{config.word()}")
            else:
                parts.append(f"{coeff}*e{config.word()}")
        return " + ".join(parts)

    __repr__ = __str__


class AlgebraElement:
    """Sparse integer combination of the graph-indexed basis operators."""

    __slots__ = ("n", "d", "_terms")

    def __init__(self, n: int, d: int, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.n, self.d = n, d
        self._terms = _gather(n, d, items, BipartiteMultigraph, lambda g: (g.n, g.d))

    @classmethod
    def zero(cls, n: int, d: int) -> "AlgebraElement":
        return cls(n, d)

    @classmethod
    def basis(cls, g: BipartiteMultigraph) -> "AlgebraElement":
        return cls(g.n, g.d, [(g, 1)])

    def coefficient(self, g: BipartiteMultigraph) -> int:
        return self._terms.get(g, 0)

    def items(self) -> list[tuple[BipartiteMultigraph, int]]:
        """Terms sorted by the graph's flattened matrix."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key)

    def support(self) -> list[BipartiteMultigraph]:
        return [g for g, _ in self.items()]

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def reduce(self, mod: int | None) -> "AlgebraElement":
        """Coefficients reduced to canonical residues 0..mod-1, zeros pruned."""
        check_modulus(mod)
        if mod is None:
            return self
        return AlgebraElement(self.n, self.d, [(k, v % mod) for k, v in self._terms.items()])

    def _check_match(self, other) -> None:
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError(f"shape mismatch: ({self.n},{self.d}) vs ({other.n},{other.d})")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_match(other)
        return AlgebraElement(self.n, self.d, list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-1) * other

    def __neg__(self) -> "AlgebraElement":
        return (-1) * self

    def __rmul__(self, scalar: int) -> "AlgebraElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return AlgebraElement(self.n, self.d, [(k, scalar * v) for k, v in self._terms.items()])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, int):
            return other * self
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and (self.n, self.d) == (other.n, other.d)
            and self._terms == other._terms
        )

    __hash__ = None

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for g, coeff in self.items():
            if coeff == 1:
                parts.append(f"xi{g}")
            elif coeff == -1:
                parts.append(f"-xi{g}")
            else:
                parts.append(f"{coeff}*xi{g}")
        return " + ".join(parts)

    __repr__ = __str__


def _splits(balls: tuple[int, ...], sizes: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ways of splitting ``balls`` into ordered blocks of the given sizes."""
    if len(sizes) <= 1:
        yield (tuple(balls),) if sizes else ()
        return
    for head in itertools.combinations(balls, sizes[0]):
        taken = set(head)
        rest = tuple(ball for ball in balls if ball not in taken)
        for tail in _splits(rest, sizes[1:]):
            yield (head,) + tail


def apply_basis(g: BipartiteMultigraph, b: Configuration) -> set[Configuration]:
    """All configurations reached by sending each ball of b down an edge of g.

    Each of the d edges carries exactly one ball: the balls in box j of b are
    split among the bottom boxes according to column j of the multiplicity
    matrix.  Equivalently this is the set of all a with pair_graph(a, b) == g.
    Empty when the top valencies of g differ from the content of b.
    """
    if (g.n, g.d) != (b.n, b.d):
        raise ValueError(f"shape mismatch: graph ({g.n},{g.d}) vs configuration ({b.n},{b.d})")
    if g.top_valencies() != b.content():
        return set()
    per_box = []
    for j in range(g.n):
        sizes = tuple(g.matrix[i][j] for i in range(g.n))
        per_box.append(list(_splits(b.boxes[j], sizes)))
    out = set()
    for choice in itertools.product(*per_box):
        boxes = []
        for i in range(g.n):
            merged: list[int] = []
            for blocks in choice:
                merged.extend(blocks[i])
            boxes.append(tuple(sorted(merged)))
        out.add(Configuration(tuple(boxes)))
    return out


def apply(x: AlgebraElement, v: VectorElement, mod: int | None = None) -> VectorElement:
    """Linear extension of the basis action; exact, then reduced if ``mod`` is given."""
    if (x.n, x.d) != (v.n, v.d):
        raise ValueError(f"shape mismatch: ({x.n},{x.d}) vs ({v.n},{v.d})")
    check_modulus(mod)
    pairs = []
    for g, cg in x.items():
        for b, cb in v.items():
            for a in apply_basis(g, b):
                pairs.append((a, cg * cb))
    out = VectorElement(x.n, x.d, pairs)
    return out.reduce(mod) if mod is not None else out


def identity_element(p: Params) -> AlgebraElement:
    """Unit of the algebra: the sum of all diagonal basis operators.

    A diagonal graph fixes every configuration whose content matches its
    diagonal and kills all others, so one diagonal graph per content sums to
    the identity operator.
    """
    return AlgebraElement(p.n, p.d, [(diagonal_graph(c), 1) for c in compositions(p.d, p.n)])


@lru_cache(maxsize=None)
def basis_product(g1: BipartiteMultigraph, g2: BipartiteMultigraph, engine: str = "counting") -> AlgebraElement:
    """Product of two basis operators, memoized per engine."""
    from . import oracle, structconst  # deferred: both modules build on this one

    table = {
        "counting": structconst.multiply_basis_counting,
        "euler": structconst.multiply_basis_euler,
        "mendez": structconst.multiply_basis_mendez,
        "oracle": oracle.multiply_basis_oracle,
    }
    if engine not in table:
        raise ValueError(f"unknown engine {engine!r}; choose one of {ENGINE_NAMES}")
    return table[engine](g1, g2)


def multiply(
    x: AlgebraElement, y: AlgebraElement, engine: str = "counting", mod: int | None = None
) -> AlgebraElement:
    """Product in the algebra, bilinear over memoized basis products."""
    if (x.n, x.d) != (y.n, y.d):
        raise ValueError(f"shape mismatch: ({x.n},{x.d}) vs ({y.n},{y.d})")
    check_modulus(mod)
    pairs = []
    for g1, c1 in x.items():
        for g2, c2 in y.items():
            for g, c in basis_product(g1, g2, engine).items():
                pairs.append((g, c1 * c2 * c))
    out = AlgebraElement(x.n, x.d, pairs)
    return out.reduce(mod) if mod is not None else out
