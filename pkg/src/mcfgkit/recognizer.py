"""Bottom-up chart recognition over span tuples, for non-deleting grammars.

A chart item asserts that a non-terminal derives the tuple of input slices
under its spans.  Terminating rules seed the chart at every place their
constant components occur (the empty component occurs at every position);
non-terminating rules fire whenever all their right-hand side slots can be
filled with existing items such that the patterns read off contiguous input.

Every derived item is justified by a rule and child items, so a derivation
tree for the whole input can be read back from the chart.  For deleting
grammars span reasoning is unsound — deleted components would have to lie
somewhere in the input — so those are rejected up front in favour of the
term-enumeration oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from .derivation import DerivationTree
from .errors import ForeignLetterError, UnsupportedGrammarError
from .grammar import MCFG, NonTerminal, ProductionRule, Variable, Word, is_non_deleting


@dataclass(frozen=True, slots=True)
class Span:
    """A half-open slice ``word[start:end]``; ``start == end`` is the empty slice."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 0 <= self.start <= self.end:
            raise ValueError(f"not a span: ({self.start}, {self.end})")


@dataclass(frozen=True, slots=True)
class Item:
    """A chart fact: ``head`` derives the input slices under ``spans``."""

    head: NonTerminal
    spans: tuple[Span, ...]


_Justification = tuple[ProductionRule, tuple[Item, ...]]


def _check_inputs(grammar: MCFG, word: Word) -> None:
    if not is_non_deleting(grammar):
        raise UnsupportedGrammarError(
            "span-based recognition needs a non-deleting grammar; "
            "use the term-enumeration oracle for deleting grammars"
        )
    letters = set(grammar.alphabet)
    for position, letter in enumerate(word):
        if letter not in letters:
            raise ForeignLetterError(
                f"letter {letter!r} at position {position} is not in the grammar's alphabet"
            )


def _match_pattern(
    pattern: tuple,
    children: tuple[Item, ...],
    word: Word,
    occurrences: Callable[[Word], list[Span]],
) -> list[Span]:
    """Spans the pattern can cover, given fixed child items.

    A pattern containing a variable is pinned: the first variable's span fixes
    the start, every further element must continue exactly where the previous
    one ended, so at most one span results.  A pure-terminal pattern may sit
    at any of its occurrences.
    """
    first_var = next(
        (index for index, item in enumerate(pattern) if isinstance(item, Variable)), None
    )
    if first_var is None:
        return occurrences(tuple(pattern))
    anchor = pattern[first_var]
    anchor_span = children[anchor.child - 1].spans[anchor.component - 1]
    start = anchor_span.start - first_var
    if start < 0:
        return []
    for offset in range(first_var):
        if word[start + offset] != pattern[offset]:
            return []
    position = anchor_span.end
    for item in pattern[first_var + 1 :]:
        if isinstance(item, Variable):
            span = children[item.child - 1].spans[item.component - 1]
            if span.start != position:
                return []
            position = span.end
        else:
            if position >= len(word) or word[position] != item:
                return []
            position += 1
    return [Span(start, position)]


def _instantiate(
    rule: ProductionRule,
    children: tuple[Item, ...],
    word: Word,
    occurrences: Callable[[Word], list[Span]],
) -> Iterable[tuple[Span, ...]]:
    """All span tuples the rule head can get from these children."""
    per_pattern: list[list[Span]] = []
    for pattern in rule.patterns:
        options = _match_pattern(pattern, children, word, occurrences)
        if not options:
            return []
        per_pattern.append(options)
    return product(*per_pattern)


def _saturate(grammar: MCFG, word: Word) -> dict[Item, _Justification]:
    """Close the chart under all rules; each item keeps its first justification."""
    _check_inputs(grammar, word)
    n = len(word)
    occurrence_cache: dict[Word, list[Span]] = {}

    def occurrences(component: Word) -> list[Span]:
        cached = occurrence_cache.get(component)
        if cached is None:
            k = len(component)
            cached = [
                Span(start, start + k)
                for start in range(n - k + 1)
                if word[start : start + k] == component
            ]
            occurrence_cache[component] = cached
        return cached

    chart: dict[Item, _Justification] = {}
    by_head: dict[NonTerminal, list[Item]] = {nt: [] for nt in grammar.nonterminals}
    agenda: deque[Item] = deque()

    def add(item: Item, rule: ProductionRule, children: tuple[Item, ...]) -> None:
        if item not in chart:
            chart[item] = (rule, children)
            by_head[item.head].append(item)
            agenda.append(item)

    incidence: dict[NonTerminal, list[tuple[ProductionRule, int]]] = {}
    for rule in grammar.rules:
        if rule.terminating:
            constant = [tuple(pattern) for pattern in rule.patterns]
            for spans in product(*[occurrences(component) for component in constant]):
                add(Item(rule.lhs, spans), rule, ())
        else:
            for position, nt in enumerate(rule.rhs):
                incidence.setdefault(nt, []).append((rule, position))

    while agenda:
        trigger = agenda.popleft()
        for rule, position in incidence.get(trigger.head, ()):
            pools = [
                [trigger] if slot == position else by_head[nt]
                for slot, nt in enumerate(rule.rhs)
            ]
            if any(not pool for pool in pools):
                continue
            for children in product(*pools):
                for spans in _instantiate(rule, children, word, occurrences):
                    add(Item(rule.lhs, spans), rule, children)
    return chart


def recognize(grammar: MCFG, word: Word) -> bool:
    """Whether the grammar derives the given word from its start symbol."""
    word = tuple(word)
    chart = _saturate(grammar, word)
    return Item(grammar.start, (Span(0, len(word)),)) in chart


def parse(grammar: MCFG, word: Word) -> DerivationTree | None:
    """One derivation tree for the word, or None when it is not derivable.

    Deterministic for fixed inputs: the tree is assembled from each chart
    item's first recorded justification.
    """
    word = tuple(word)
    chart = _saturate(grammar, word)
    goal = Item(grammar.start, (Span(0, len(word)),))
    if goal not in chart:
        return None

    def build(item: Item) -> DerivationTree:
        rule, children = chart[item]
        return DerivationTree(rule, tuple(build(child) for child in children))

    return build(goal)
