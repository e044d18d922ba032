"""Preorders on {1, ..., m} and the block languages they constrain.

A preorder is a reflexive, transitive relation.  Here it constrains words of
the shape ``a_1^{n_1} a_2^{n_2} ... a_m^{n_m}``: whenever ``i`` precedes
``j`` in the order, the block lengths must satisfy ``n_i <= n_j``.  This
module provides the relation type itself (with closure-based construction),
the totality and connectivity predicates, enumeration of all total
extensions, and direct membership testing for the constrained language.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ForeignLetterError
from .grammar import Alphabet, Word


def canonical_alphabet(size: int) -> Alphabet:
    """The letters ``a1 ... a<size>`` in index order."""
    return tuple(f"a{i}" for i in range(1, size + 1))


@dataclass(frozen=True)
class Preorder:
    """A reflexive, transitive relation on {1..size}.

    ``relation[i-1][j-1]`` holds exactly when ``i`` precedes ``j``.  The
    constructor rejects matrices that are not reflexive or not transitive;
    use :func:`closure` to build from an arbitrary set of pairs.
    """

    size: int
    relation: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        m = self.size
        if m < 1:
            raise ValueError(f"the index set must be non-empty, got size {m}")
        if len(self.relation) != m or any(len(row) != m for row in self.relation):
            raise ValueError("relation matrix shape does not match the size")
        for i in range(m):
            if not self.relation[i][i]:
                raise ValueError(f"relation is not reflexive: {i + 1} does not precede itself")
        for i in range(m):
            for j in range(m):
                if self.relation[i][j]:
                    for k in range(m):
                        if self.relation[j][k] and not self.relation[i][k]:
                            raise ValueError(
                                "relation is not transitive: "
                                f"{i + 1} before {j + 1} before {k + 1}, "
                                f"but {i + 1} not before {k + 1}"
                            )

    def leq(self, i: int, j: int) -> bool:
        """Whether ``i`` precedes ``j`` (both 1-based)."""
        return self.relation[i - 1][j - 1]

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All related pairs ``(i, j)`` with ``i != j``, in row-major order."""
        for i in range(1, self.size + 1):
            for j in range(1, self.size + 1):
                if i != j and self.leq(i, j):
                    yield (i, j)

    def admits(self, counts: Sequence[int]) -> bool:
        """Whether a block-length vector satisfies every order constraint."""
        if len(counts) != self.size:
            raise ValueError(
                f"expected {self.size} block lengths, got {len(counts)}"
            )
        return all(counts[i - 1] <= counts[j - 1] for i, j in self.pairs())


def closure(size: int, pairs: Iterable[tuple[int, int]] = ()) -> Preorder:
    """The least preorder on {1..size} containing the given pairs."""
    relation = [[i == j for j in range(size)] for i in range(size)]
    for i, j in pairs:
        if not (1 <= i <= size and 1 <= j <= size):
            raise ValueError(f"pair ({i}, {j}) is out of range for size {size}")
        relation[i - 1][j - 1] = True
    for k in range(size):
        for i in range(size):
            if relation[i][k]:
                row_k = relation[k]
                relation[i] = [a or b for a, b in zip(relation[i], row_k)]
    return Preorder(size, tuple(tuple(row) for row in relation))


def discrete(size: int) -> Preorder:
    """The preorder relating nothing beyond reflexivity: no constraints at all."""
    return closure(size)


def chain(size: int) -> Preorder:
    """The total order with ``i + 1`` before ``i``: it forces ``n_1 >= ... >= n_size``."""
    return closure(size, [(i + 1, i) for i in range(1, size)])


def is_total(preorder: Preorder) -> bool:
    """Whether every two indices are comparable."""
    return all(
        preorder.comparable(i, j)
        for i, j in combinations(range(1, preorder.size + 1), 2)
    )


@dataclass(frozen=True)
class ComparabilityGraph:
    """Undirected graph on {1..size} with an edge wherever two indices compare."""

    size: int
    edges: frozenset[tuple[int, int]]


def comparability_graph(preorder: Preorder) -> ComparabilityGraph:
    edges = frozenset(
        (i, j)
        for i, j in combinations(range(1, preorder.size + 1), 2)
        if preorder.comparable(i, j)
    )
    return ComparabilityGraph(preorder.size, edges)


def is_connected(preorder: Preorder) -> bool:
    """Connectivity of the comparability graph; a single index counts as connected."""
    graph = comparability_graph(preorder)
    adjacency: dict[int, set[int]] = {i: set() for i in range(1, graph.size + 1)}
    for i, j in graph.edges:
        adjacency[i].add(j)
        adjacency[j].add(i)
    seen = {1}
    frontier = [1]
    while frontier:
        vertex = frontier.pop()
        for neighbour in adjacency[vertex]:
            if neighbour not in seen:
                seen.add(neighbour)
                frontier.append(neighbour)
    return len(seen) == graph.size


def _ordered_partitions(elements: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ordered set partitions, first block chosen by ascending bitmask."""
    if not elements:
        yield ()
        return
    n = len(elements)
    for mask in range(1, 1 << n):
        block = tuple(elements[b] for b in range(n) if mask >> b & 1)
        rest = tuple(elements[b] for b in range(n) if not mask >> b & 1)
        for tail in _ordered_partitions(rest):
            yield (block,) + tail


def totalisations(preorder: Preorder) -> list[Preorder]:
    """All total preorders extending the given one, in a fixed deterministic order.

    Total preorders correspond to ordered set partitions of the index set
    (the blocks are the equivalence classes, listed from least to greatest),
    so the list is produced by enumerating ordered partitions and keeping the
    ones whose induced order extends the input.
    """
    elements = tuple(range(1, preorder.size + 1))
    out: list[Preorder] = []
    for blocks in _ordered_partitions(elements):
        level: dict[int, int] = {}
        for depth, block in enumerate(blocks):
            for element in block:
                level[element] = depth
        if any(
            preorder.leq(i, j) and level[i] > level[j]
            for i in elements
            for j in elements
        ):
            continue
        relation = tuple(
            tuple(level[i] <= level[j] for j in elements) for i in elements
        )
        out.append(Preorder(preorder.size, relation))
    return out


def block_word(counts: Sequence[int], alphabet: Alphabet | None = None) -> Word:
    """The word ``alphabet[0]^counts[0] ... alphabet[-1]^counts[-1]``."""
    if alphabet is None:
        alphabet = canonical_alphabet(len(counts))
    if len(alphabet) != len(counts):
        raise ValueError(f"{len(counts)} block lengths for {len(alphabet)} letters")
    if any(n < 0 for n in counts):
        raise ValueError("block lengths must be non-negative")
    return tuple(
        letter for letter, n in zip(alphabet, counts) for _ in range(n)
    )


def member(preorder: Preorder, word: Word, alphabet: Alphabet | None = None) -> bool:
    """Direct membership test for the order-constrained block language.

    The word must consist of consecutive blocks in alphabet order (letters are
    mapped to indices by their position in ``alphabet``, which defaults to
    ``a1 ... am``), and the block lengths must satisfy ``n_i <= n_j`` for
    every related pair ``i`` before ``j``.  Letters outside the alphabet
    raise :class:`ForeignLetterError`.
    """
    if alphabet is None:
        alphabet = canonical_alphabet(preorder.size)
    if len(alphabet) != preorder.size:
        raise ValueError(
            f"an alphabet of {len(alphabet)} letters does not fit an order on "
            f"{preorder.size} indices"
        )
    index = {letter: i for i, letter in enumerate(alphabet, start=1)}
    counts = [0] * (preorder.size + 1)
    previous = 0
    for position, letter in enumerate(word):
        i = index.get(letter)
        if i is None:
            raise ForeignLetterError(
                f"letter {letter!r} at position {position} is not in the alphabet"
            )
        if i < previous:
            return False
        counts[i] += 1
        previous = i
    return preorder.admits(counts[1:])
