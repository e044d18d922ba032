"""Grammar construction for order-constrained block languages.

Given a preorder on {1..m}, :func:`build_grammar` produces a grammar whose
language is exactly the set of words ``a_1^{n_1} ... a_m^{n_m}`` with
``n_i <= n_j`` whenever ``i`` precedes ``j``.  The tuple rank of the result
is always ``ceil(m / 2)``, independent of the order.

The even total case is the heart of the scheme: a single non-terminal of rank
``m / 2`` holds the blocks pairwise (component ``l`` carries the ``a_{2l-1}``
and ``a_{2l}`` blocks), and one incrementing rule per index ``j`` extends, in
a single step, the block of every index that ``j`` precedes — including
``j`` itself.  Because a block can only grow together with all blocks above
it, the count constraints hold by construction.  Odd sizes are handled by
padding with an extra index comparable to nothing and erasing its letter from
the finished rules; non-total orders take a disjoint union of the grammars
for all total extensions behind a fresh start symbol.
"""

from __future__ import annotations

from typing import Sequence

from .grammar import MCFG, NonTerminal, Pattern, ProductionRule, Variable
from .preorders import Preorder, canonical_alphabet, is_total, totalisations


def build_grammar(preorder: Preorder) -> MCFG:
    """A grammar for the block language constrained by the given preorder."""
    if is_total(preorder):
        return _total_grammar(preorder, suffix="")
    copies = [
        _total_grammar(extension, suffix=str(number))
        for number, extension in enumerate(totalisations(preorder), start=1)
    ]
    start = NonTerminal("S0", 1)
    dispatch = tuple(
        ProductionRule(start, ((Variable(1, 1),),), (copy.start,)) for copy in copies
    )
    rules = dispatch + tuple(rule for copy in copies for rule in copy.rules)
    return MCFG.from_rules(rules, start=start, alphabet=canonical_alphabet(preorder.size))


def _total_grammar(preorder: Preorder, suffix: str) -> MCFG:
    """The grammar for a total preorder, via padding when the size is odd."""
    size = preorder.size
    if size % 2 == 0:
        return _even_total_grammar(preorder, suffix)
    padded = _pad_with_isolated_index(preorder)
    oversized = _even_total_grammar(padded, suffix)
    dropped = canonical_alphabet(size + 1)[-1]
    rules = tuple(
        ProductionRule(
            rule.lhs,
            tuple(
                tuple(item for item in pattern if item != dropped)
                for pattern in rule.patterns
            ),
            rule.rhs,
        )
        for rule in oversized.rules
    )
    return MCFG.from_rules(rules, start=oversized.start, alphabet=canonical_alphabet(size))


def _pad_with_isolated_index(preorder: Preorder) -> Preorder:
    """Extend the index set by one element comparable only to itself."""
    m = preorder.size
    relation = tuple(
        tuple(
            preorder.relation[i][j] if i < m and j < m else i == j
            for j in range(m + 1)
        )
        for i in range(m + 1)
    )
    return Preorder(m + 1, relation)


def _even_total_grammar(preorder: Preorder, suffix: str) -> MCFG:
    """The pairwise-block scheme for total preorders of even size."""
    size = preorder.size
    rank = size // 2
    letters = canonical_alphabet(size)
    start = NonTerminal("S" + suffix, 1)
    tuples = NonTerminal("A" + suffix, rank)
    collect = ProductionRule(
        start,
        (tuple(Variable(1, component) for component in range(1, rank + 1)),),
        (tuples,),
    )
    empty = ProductionRule(tuples, ((),) * rank)
    rules: list[ProductionRule] = [collect, empty]
    for j in range(1, size + 1):
        rules.append(ProductionRule(tuples, _increment_patterns(preorder, j, rank), (tuples,)))
    return MCFG.from_rules(tuple(rules), start=start, alphabet=letters)


def _increment_patterns(preorder: Preorder, j: int, rank: int) -> tuple[Pattern, ...]:
    """Patterns of the rule that grows every block whose index ``j`` precedes."""
    letters = canonical_alphabet(preorder.size)
    patterns: list[Pattern] = []
    for component in range(1, rank + 1):
        left = 2 * component - 1
        right = 2 * component
        pattern: list = []
        if preorder.leq(j, left):
            pattern.append(letters[left - 1])
        pattern.append(Variable(1, component))
        if preorder.leq(j, right):
            pattern.append(letters[right - 1])
        patterns.append(tuple(pattern))
    return tuple(patterns)


def increment_rules(preorder: Preorder) -> tuple[ProductionRule, ...]:
    """The incrementing rules of the even total scheme, indexed ``1..size``.

    Only defined for total preorders of even size; entry ``j - 1`` is the
    rule that grows the blocks of all indices ``j`` precedes.
    """
    grammar = _require_even_total(preorder)
    return grammar.rules[2:]


def _require_even_total(preorder: Preorder) -> MCFG:
    if preorder.size % 2 != 0:
        raise ValueError("the pairwise-block scheme needs an even index set")
    if not is_total(preorder):
        raise ValueError("the pairwise-block scheme needs a total preorder")
    return _even_total_grammar(preorder, suffix="")


def witness_derivation(
    preorder: Preorder, counts: Sequence[int]
) -> list[ProductionRule]:
    """A rule sequence deriving the blocks with the given lengths.

    Only defined for total preorders of even size.  Applying the returned
    incrementing rules in list order to the all-empty term produces the term
    whose component ``l`` is ``a_{2l-1}^{n_{2l-1}} a_{2l}^{n_{2l}}``.

    The sequence is found backwards: from a count vector with maximum value
    ``t`` one step leads back to the vector where every count equal to ``t``
    drops to ``t - 1``, and the rule taken is the one for the order-least
    index among those at the maximum (smallest index on ties).
    """
    grammar = _require_even_total(preorder)
    rho = grammar.rules[2:]
    ns = list(counts)
    if len(ns) != preorder.size:
        raise ValueError(f"expected {preorder.size} block lengths, got {len(ns)}")
    if any(n < 0 for n in ns):
        raise ValueError("block lengths must be non-negative")
    if not preorder.admits(ns):
        raise ValueError("the block lengths violate the order constraints")
    sequence: list[ProductionRule] = []
    while any(ns):
        top = max(ns)
        peak = [index for index in range(1, preorder.size + 1) if ns[index - 1] == top]
        j = next(
            index
            for index in peak
            if all(preorder.leq(index, other) for other in peak)
        )
        sequence.append(rho[j - 1])
        ns = [n if n < top else top - 1 for n in ns]
    sequence.reverse()
    return sequence
