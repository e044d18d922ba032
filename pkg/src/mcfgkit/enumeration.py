"""Brute-force language oracles based on bounded term saturation.

:func:`enumerate_terms` computes every derivable term whose combined
component length stays within a budget, by closing the terminating rules
under rule application generation by generation.  For non-deleting grammars
the result is complete: a parent term is never shorter than any of its
children, so nothing outside the budget can contribute to something inside
it.  For deleting grammars the same run is only a lower bound and the result
says so.

On top of that sit :func:`enumerate_language` (the derived words up to a
length bound), :func:`direct_language` (the order-constrained block language,
listed straight from its definition), and :func:`compare_languages` (the
symmetric difference of the two).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .derivation import DerivationTree
from .errors import TermLimitError
from .grammar import MCFG, NonTerminal, ProductionRule, Term, Word, apply_rule, is_non_deleting
from .preorders import Preorder, block_word

DEFAULT_MAX_TERMS = 1_000_000


@dataclass(frozen=True)
class Witness:
    """One recorded way to derive a term: a rule and the child terms it consumed."""

    rule: ProductionRule
    children: tuple[Term, ...]


@dataclass
class TermEnumeration:
    """All terms found within the budget, each with one witness application.

    ``complete`` is True exactly when the grammar is non-deleting, in which
    case the set is the whole bounded term language; otherwise it is a lower
    bound.
    """

    budget: int
    complete: bool
    witnesses: dict[Term, Witness]

    @property
    def terms(self) -> set[Term]:
        return set(self.witnesses)

    def __contains__(self, term: Term) -> bool:
        return term in self.witnesses

    def __iter__(self) -> Iterator[Term]:
        return iter(self.witnesses)

    def __len__(self) -> int:
        return len(self.witnesses)

    def witness_tree(self, term: Term) -> DerivationTree:
        """A derivation tree for a found term, rebuilt from the stored witnesses."""
        witness = self.witnesses[term]
        return DerivationTree(
            witness.rule, tuple(self.witness_tree(child) for child in witness.children)
        )


@dataclass(frozen=True)
class _RulePlan:
    """Precomputed footprint of a rule: fixed letters plus consumed components."""

    rule: ProductionRule
    terminal_count: int
    used: tuple[tuple[int, int], ...]  # 0-based (child, component) pairs

    @classmethod
    def of(cls, rule: ProductionRule) -> "_RulePlan":
        terminal_count = sum(1 for _ in rule.terminals())
        used = tuple((v.child - 1, v.component - 1) for v in rule.variables())
        return cls(rule, terminal_count, used)

    def result_length(self, children: tuple[Term, ...]) -> int:
        return self.terminal_count + sum(
            len(children[child].components[component]) for child, component in self.used
        )


def enumerate_terms(
    grammar: MCFG, budget: int, *, max_terms: int = DEFAULT_MAX_TERMS
) -> TermEnumeration:
    """Saturate the derivable terms with combined component length <= budget.

    Runs generation by generation: a new generation applies every
    non-terminating rule to child combinations using at least one term from
    the previous generation, so each combination is tried once.  Raises
    :class:`TermLimitError` when more than ``max_terms`` terms accumulate.
    """
    if budget < 0:
        raise ValueError(f"the length budget must be non-negative, got {budget}")
    known: dict[Term, Witness] = {}
    frontier: list[Term] = []
    for rule in grammar.rules:
        if rule.terminating:
            term = apply_rule(rule, ())
            if term.total_length() <= budget and term not in known:
                known[term] = Witness(rule, ())
                frontier.append(term)
    plans = [_RulePlan.of(rule) for rule in grammar.rules if not rule.terminating]

    older: dict[NonTerminal, list[Term]] = {nt: [] for nt in grammar.nonterminals}
    current: dict[NonTerminal, list[Term]] = {nt: [] for nt in grammar.nonterminals}
    for term in frontier:
        current[term.head].append(term)

    while frontier:
        fresh: dict[Term, Witness] = {}
        for plan in plans:
            rule = plan.rule
            arity = len(rule.rhs)
            for pivot in range(arity):
                pools: list[list[Term]] = []
                for position, nt in enumerate(rule.rhs):
                    if position < pivot:
                        pools.append(older[nt])
                    elif position == pivot:
                        pools.append(current[nt])
                    else:
                        pools.append(older[nt] + current[nt])
                if any(not pool for pool in pools):
                    continue
                for children in product(*pools):
                    if plan.result_length(children) > budget:
                        continue
                    term = apply_rule(rule, children)
                    if term in known or term in fresh:
                        continue
                    fresh[term] = Witness(rule, children)
                    if len(known) + len(fresh) > max_terms:
                        raise TermLimitError(
                            f"more than {max_terms} terms within budget {budget}; "
                            "raise max_terms to continue"
                        )
        for nt, terms in current.items():
            older[nt].extend(terms)
            current[nt] = []
        frontier = list(fresh)
        for term in frontier:
            current[term.head].append(term)
        known.update(fresh)
    return TermEnumeration(budget, is_non_deleting(grammar), known)


def enumerate_language(
    grammar: MCFG, max_length: int, *, max_terms: int = DEFAULT_MAX_TERMS
) -> set[Word]:
    """All words of length <= max_length derived from the start symbol.

    Complete for non-deleting grammars, a lower bound otherwise (see
    :func:`enumerate_terms`).
    """
    found = enumerate_terms(grammar, max_length, max_terms=max_terms)
    return {
        term.components[0]
        for term in found
        if term.head == grammar.start
    }


def direct_language(preorder: Preorder, max_length: int) -> set[Word]:
    """The order-constrained block language up to a length bound, by definition.

    Iterates over every block-length vector summing to at most ``max_length``
    and keeps the ones the order admits; no grammar is involved, which makes
    this an independent reference for the construction.
    """
    out: set[Word] = set()
    size = preorder.size

    def grow(prefix: list[int], remaining: int) -> None:
        if len(prefix) == size:
            if preorder.admits(prefix):
                out.add(block_word(prefix))
            return
        for n in range(remaining + 1):
            prefix.append(n)
            grow(prefix, remaining - n)
            prefix.pop()

    if max_length < 0:
        raise ValueError(f"the length bound must be non-negative, got {max_length}")
    grow([], max_length)
    return out


@dataclass
class DiffReport:
    """Symmetric difference of a grammar's bounded language and a direct listing."""

    budget: int
    only_in_grammar: tuple[Word, ...]
    only_in_direct: tuple[Word, ...]

    @property
    def agree(self) -> bool:
        return not (self.only_in_grammar or self.only_in_direct)


def compare_languages(
    grammar: MCFG,
    preorder: Preorder,
    max_length: int,
    *,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> DiffReport:
    """Diff the grammar's bounded language against the direct block listing.

    Both sides are truncated at the same length bound, so an empty diff means
    the two languages agree on every word up to that length.
    """
    generated = enumerate_language(grammar, max_length, max_terms=max_terms)
    direct = direct_language(preorder, max_length)
    return DiffReport(
        max_length,
        tuple(sorted(generated - direct)),
        tuple(sorted(direct - generated)),
    )
