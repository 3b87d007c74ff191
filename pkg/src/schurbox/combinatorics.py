"""Multi-indices, balls-in-boxes configurations, and the ball-renaming action.

A multi-index of degree d over n boxes is a tuple (i_1, ..., i_d) with every
entry between 1 and n.  Putting ball s into box i_s identifies multi-indices
with configurations of d labelled balls in n labelled boxes, and the two
views are used interchangeably throughout: :func:`to_configuration` and
:func:`to_multi_index` are mutually inverse.

A configuration is written as a word with n+1 ``|`` separators: the word
begins and ends with ``|``, the balls between consecutive separators are the
contents of one box, and within a box the ball labels increase.  With two
boxes and four balls, ``|123|4|`` puts balls 1, 2, 3 in box 1 and ball 4 in
box 2.  Ball labels above 9 do not fit the one-character-per-ball style, so
for ten or more balls the labels inside a box are comma-separated instead;
the parser accepts both shapes.

The symmetric group of degree d acts on multi-indices by place permutation,

    w . (i_1, ..., i_d)  =  (i_w(1), ..., i_w(d)),

equivalently on configurations by renaming the balls; the identification
above intertwines the two actions.

>>> w = Permutation((2, 3, 1))
>>> act_on_index(w, (1, 1, 2))
(1, 2, 1)
>>> to_configuration((1, 1, 1, 2), n=2).word()
'|123|4|'
>>> act_on_configuration(Permutation.transposition(4, 3, 4), Configuration.from_word("|123|4|")).word()
'|124|3|'
"""

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

DEFAULT_ENUMERATION_CAP = 10**6

MultiIndex = tuple[int, ...]


class TooLargeError(ValueError):
    """An exhaustive enumeration would exceed the configured cap."""


class ConfigurationError(ValueError):
    """A configuration word or box family violates the format rules."""


def _check_cap(size: int, cap: int | None, what: str) -> None:
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if size > limit:
        raise TooLargeError(f"instance too large: {what} has {size} elements (cap {limit})")


@dataclass(frozen=True)
class Params:
    """Shape of an instance: ``n`` boxes and ``d`` balls, both at least 1."""

    n: int
    d: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"number of boxes must be a positive integer, got {self.n!r}")
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"number of balls must be a positive integer, got {self.d!r}")

    @property
    def index_count(self) -> int:
        """Number of multi-indices of this shape, n**d."""
        return self.n**self.d


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., d}, stored as its image tuple (w(1), ..., w(d))."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images!r}")

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def transposition(cls, d: int, s: int, t: int) -> "Permutation":
        """The permutation of {1, ..., d} that swaps s and t."""
        images = list(range(1, d + 1))
        images[s - 1], images[t - 1] = t, s
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, s: int) -> int:
        return self.images[s - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # composition convention matching the index action:
        #   (w1 * w2) . index == w1 . (w2 . index)
        return Permutation(act_on_index(self, other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for s, image in enumerate(self.images, start=1):
            images[image - 1] = s
        return Permutation(tuple(images))


def all_permutations(d: int) -> Iterator[Permutation]:
    """All d! permutations of {1, ..., d}, ordered by image tuple."""
    for images in itertools.permutations(range(1, d + 1)):
        yield Permutation(images)


def enumerate_multi_indices(p: Params, cap: int | None = None) -> list[MultiIndex]:
    """All multi-indices of shape ``p`` in lexicographic order.

    This order is the canonical basis order for everything downstream.
    """
    _check_cap(p.index_count, cap, f"the multi-index set at n={p.n}, d={p.d}")
    return list(itertools.product(range(1, p.n + 1), repeat=p.d))


def act_on_index(w: Permutation, index: Sequence[int]) -> MultiIndex:
    """Place permutation: entry s of the result is entry w(s) of ``index``."""
    if w.degree != len(index):
        raise ValueError(
            f"degree mismatch: permutation of 1..{w.degree} cannot act on a length-{len(index)} index"
        )
    return tuple(index[w(s) - 1] for s in range(1, w.degree + 1))


@dataclass(frozen=True)
class Configuration:
    """Balls 1..d distributed over boxes 1..n; each box lists its balls increasingly."""

    boxes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        boxes = tuple(tuple(box) for box in self.boxes)
        object.__setattr__(self, "boxes", boxes)
        if not boxes:
            raise ConfigurationError("a configuration needs at least one box")
        seen: set[int] = set()
        for box in boxes:
            for ball in box:
                if not isinstance(ball, int) or ball < 1:
                    raise ConfigurationError(f"ball labels must be positive integers, got {ball!r}")
                if ball in seen:
                    raise ConfigurationError(f"ball {ball} appears more than once")
                seen.add(ball)
            if any(box[k] >= box[k + 1] for k in range(len(box) - 1)):
                raise ConfigurationError(f"balls within a box must be listed in increasing order: {box!r}")
        missing = set(range(1, len(seen) + 1)) - seen
        if missing:
            raise ConfigurationError(f"ball {min(missing)} is missing (labels must be exactly 1..d)")

    @property
    def n(self) -> int:
        return len(self.boxes)

    @property
    def d(self) -> int:
        return sum(len(box) for box in self.boxes)

    def content(self) -> tuple[int, ...]:
        """Number of balls in each box; invariant under ball renaming."""
        return tuple(len(box) for box in self.boxes)

    def word(self) -> str:
        if self.d <= 9:
            chunks = ["".join(str(ball) for ball in box) for box in self.boxes]
        else:
            chunks = [",".join(str(ball) for ball in box) for box in self.boxes]
        return "|" + "|".join(chunks) + "|"

    @classmethod
    def from_word(cls, word: str, n: int | None = None, d: int | None = None) -> "Configuration":
        """Parse a configuration word; see the module docstring for the format."""
        if len(word) < 2 or not word.startswith("|") or not word.endswith("|"):
            raise ConfigurationError(f"word must begin and end with '|': {word!r}")
        chunks = word[1:-1].split("|")
        if n is not None and len(chunks) != n:
            raise ConfigurationError(f"expected {n + 1} '|' separators, found {len(chunks) + 1}: {word!r}")
        boxes = []
        for chunk in chunks:
            if "," in chunk:
                parts = chunk.split(",")
                if any(not part.isdigit() or int(part) < 1 for part in parts):
                    raise ConfigurationError(f"invalid ball label in box {chunk!r} of {word!r}")
                boxes.append(tuple(int(part) for part in parts))
            else:
                if any(not ch.isdigit() or ch == "0" for ch in chunk):
                    raise ConfigurationError(f"invalid ball label in box {chunk!r} of {word!r}")
                boxes.append(tuple(int(ch) for ch in chunk))
        config = cls(tuple(boxes))
        if d is not None and config.d != d:
            raise ConfigurationError(f"expected {d} balls, found {config.d}: {word!r}")
        return config

    @classmethod
    def from_boxes(cls, boxes) -> "Configuration":
        """Like the constructor, but sorts each box first."""
        return cls(tuple(tuple(sorted(box)) for box in boxes))

    def __str__(self) -> str:
        return self.word()


def to_configuration(index: Sequence[int], n: int) -> Configuration:
    """The configuration with ball s in box ``index[s-1]``."""
    boxes: list[list[int]] = [[] for _ in range(n)]
    for ball, box in enumerate(index, start=1):
        if not isinstance(box, int) or not 1 <= box <= n:
            raise ValueError(f"index entry {box!r} outside 1..{n}")
        boxes[box - 1].append(ball)
    return Configuration(tuple(tuple(box) for box in boxes))


def to_multi_index(config: Configuration) -> MultiIndex:
    """Inverse of :func:`to_configuration`: entry s is the box holding ball s."""
    index = [0] * config.d
    for box_number, box in enumerate(config.boxes, start=1):
        for ball in box:
            index[ball - 1] = box_number
    return tuple(index)


def act_on_configuration(w: Permutation, config: Configuration) -> Configuration:
    """Rename the balls of ``config`` so that box conversion intertwines the actions."""
    return to_configuration(act_on_index(w, to_multi_index(config)), config.n)


def enumerate_configurations(p: Params, cap: int | None = None) -> list[Configuration]:
    """All configurations of shape ``p``, ordered like their multi-indices."""
    return [to_configuration(index, p.n) for index in enumerate_multi_indices(p, cap)]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative integers summing to ``total``, lexicographically."""
    if parts < 1:
        raise ValueError(f"need at least one part, got {parts!r}")
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail
