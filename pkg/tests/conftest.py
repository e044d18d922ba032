"""Shared fixtures: the worked two-block grammar and a tree-building helper."""

from __future__ import annotations

import pytest

from mcfgkit import DerivationTree, ProductionRule, build_grammar, chain


@pytest.fixture(scope="session")
def two_block():
    """The grammar for two decreasing blocks (n1 >= n2) with named parts.

    Rule order: collect (S), empty (A), then the incrementing rules rho1
    (adds only a1) and rho2 (adds a1 and a2).
    """
    grammar = build_grammar(chain(2))
    collect, empty, rho1, rho2 = grammar.rules
    return grammar, collect, empty, rho1, rho2


def unary_tree(leaf_rule: ProductionRule, *stack: ProductionRule) -> DerivationTree:
    """Build a chain tree: the leaf rule, then each stacked rule bottom-up."""
    tree = DerivationTree(leaf_rule)
    for rule in stack:
        tree = DerivationTree(rule, (tree,))
    return tree
