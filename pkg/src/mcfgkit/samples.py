"""Small fixed grammars used by the demos and across the test bench."""

from __future__ import annotations

from .grammar import MCFG, NonTerminal, ProductionRule, Variable


def single_letter_pump_grammar() -> MCFG:
    """A normal-form grammar for ``a+`` with one binary combining rule.

    Rules: ``S(x y) <- S(x), T(y)``, ``T(a) <-``, ``S(a) <-``.  Every word
    of two or more letters needs the combining rule, so its derivation trees
    always contain pump sites.
    """
    s = NonTerminal("S", 1)
    t = NonTerminal("T", 1)
    rules = (
        ProductionRule(s, ((Variable(1, 1), Variable(2, 1)),), (s, t)),
        ProductionRule(t, (("a",),)),
        ProductionRule(s, (("a",),)),
    )
    return MCFG.from_rules(rules, start=s)


def balanced_pair_grammar() -> MCFG:
    """A rank-2 normal-form grammar for ``a^n b^n`` (n >= 1).

    The two blocks grow in lockstep inside one rank-2 non-terminal:
    ``S(x y) <- P(x, y)``, ``P(u x, v y) <- P(x, y), L(u), R(v)`` with
    single-letter leaves.  Handy as a genuinely multi-component example.
    """
    s = NonTerminal("S", 1)
    p = NonTerminal("P", 2)
    left = NonTerminal("L", 1)
    right = NonTerminal("R", 1)
    rules = (
        ProductionRule(s, ((Variable(1, 1), Variable(1, 2)),), (p,)),
        ProductionRule(
            p,
            (
                (Variable(2, 1), Variable(1, 1)),
                (Variable(3, 1), Variable(1, 2)),
            ),
            (p, left, right),
        ),
        ProductionRule(p, (("a",), ("b",))),
        ProductionRule(left, (("a",),)),
        ProductionRule(right, (("b",),)),
    )
    return MCFG.from_rules(rules, start=s)


def overgenerating_block_grammar() -> MCFG:
    """A rank-1 grammar that over-generates the decreasing three-block language.

    It derives exactly ``a1^n a2^n a3^m`` with independent ``n`` and ``m``:
    the ``a1``/``a2`` blocks are forced equal by a centre-growing rule, while
    the ``a3`` block grows on its own.  Words with ``m <= n`` satisfy
    ``n1 >= n2 >= n3``, but the grammar also accepts ``m > n``, so pumping
    the ``a3`` part escapes the constrained language.  It contains two
    combining rules, one of them sitting on a repeatable spine.
    """
    s = NonTerminal("S", 1)
    d = NonTerminal("D", 1)
    e = NonTerminal("E", 1)
    t = NonTerminal("T", 1)
    rules = (
        ProductionRule(s, ((Variable(1, 1), Variable(2, 1)),), (d, e)),
        ProductionRule(d, (("a1", Variable(1, 1), "a2"),), (d,)),
        ProductionRule(d, ((),)),
        ProductionRule(e, ((Variable(1, 1), Variable(2, 1)),), (e, t)),
        ProductionRule(e, ((),)),
        ProductionRule(t, (("a3",),)),
    )
    return MCFG.from_rules(rules, start=s, alphabet=("a1", "a2", "a3"))


def deleting_grammar() -> MCFG:
    """A grammar with a component-dropping rule, for exercising the guards.

    ``S(x) <- P(x, y)`` discards the second component of ``P``, which derives
    the pairs ``(a^n, b^n)``.
    """
    s = NonTerminal("S", 1)
    p = NonTerminal("P", 2)
    rules = (
        ProductionRule(s, ((Variable(1, 1),),), (p,)),
        ProductionRule(
            p,
            (("a", Variable(1, 1)), ("b", Variable(1, 2))),
            (p,),
        ),
        ProductionRule(p, ((), ())),
    )
    return MCFG.from_rules(rules, start=s, alphabet=("a", "b"))
