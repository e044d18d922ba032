"""Derivation trees: rule-labelled ordered trees and operations on them.

A derivation tree records *how* a term was derived: every node is labelled
with a production rule and has one child per right-hand side entry of that
rule.  Evaluating the tree bottom-up with :func:`mcfgkit.grammar.apply_rule`
yields the derived term; for a tree rooted in the start symbol, concatenating
that term's components gives the derived word.

Nodes are addressed by paths: tuples of 0-based child indices from the root,
``()`` being the root itself.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .errors import LabelMismatchError, RuleApplicationError, TreePathError, TreeStructureError
from .grammar import MCFG, ProductionRule, Term, Word, apply_rule

Path = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class DerivationTree:
    """An immutable ordered tree whose nodes are labelled with production rules."""

    rule: ProductionRule
    children: tuple["DerivationTree", ...] = ()

    def size(self) -> int:
        """Number of nodes."""
        return 1 + sum(child.size() for child in self.children)

    def height(self) -> int:
        """Length of the longest root-to-leaf path, 0 for a single node."""
        return 1 + max((child.height() for child in self.children), default=-1)


def nodes(tree: DerivationTree) -> Iterator[tuple[Path, DerivationTree]]:
    """All nodes with their paths, in document order (parent before children)."""

    def walk(node: DerivationTree, path: Path) -> Iterator[tuple[Path, DerivationTree]]:
        yield path, node
        for index, child in enumerate(node.children):
            yield from walk(child, path + (index,))

    return walk(tree, ())


def subtree_at(tree: DerivationTree, path: Path) -> DerivationTree:
    """The subtree rooted at ``path``; raises :class:`TreePathError` if absent."""
    node = tree
    for depth, index in enumerate(path):
        if not 0 <= index < len(node.children):
            raise TreePathError(
                f"no child {index} under node {tuple(path[:depth])}: "
                f"it has {len(node.children)} children"
            )
        node = node.children[index]
    return node


def term_of(tree: DerivationTree) -> Term:
    """The term the tree derives, by bottom-up rule application.

    Raises :class:`TreeStructureError`, naming the offending node path, when
    some node's children do not fit its rule.
    """

    def build(node: DerivationTree, path: Path) -> Term:
        children = tuple(build(child, path + (i,)) for i, child in enumerate(node.children))
        try:
            return apply_rule(node.rule, children)
        except RuleApplicationError as exc:
            raise TreeStructureError(f"at node {path}: {exc}") from exc

    return build(tree, ())


def yield_of(tree: DerivationTree) -> Word:
    """Concatenation of the derived term's components, first to last.

    For a tree rooted in a start-symbol rule this is the derived word itself.
    """
    return tuple(letter for component in term_of(tree).components for letter in component)


def letter_counts(tree: DerivationTree) -> Counter[str]:
    """How often each letter occurs across the derived term's components."""
    return Counter(term_of(tree).letters())


def validate_tree(tree: DerivationTree, grammar: MCFG) -> tuple[bool, list[str]]:
    """Check the tree against a grammar, reporting every problem found.

    A tree is valid when every node's rule belongs to the grammar, has as many
    children as right-hand side entries, and each child's left-hand side
    matches the entry it stands under.
    """
    problems: list[str] = []
    rules = set(grammar.rules)
    for path, node in nodes(tree):
        if node.rule not in rules:
            problems.append(f"node {path}: rule not in the grammar: {node.rule}")
        if len(node.children) != len(node.rule.rhs):
            problems.append(
                f"node {path}: {len(node.children)} children under a rule with "
                f"{len(node.rule.rhs)} right-hand side entr(y/ies)"
            )
            continue
        for index, (child, nt) in enumerate(zip(node.children, node.rule.rhs)):
            if child.rule.lhs != nt:
                problems.append(
                    f"node {path + (index,)}: derives {child.rule.lhs} where "
                    f"{nt} is required"
                )
    return (not problems, problems)


def substitute_subtree(
    tree: DerivationTree, path: Path, replacement: DerivationTree
) -> DerivationTree:
    """Replace the subtree at ``path`` by ``replacement``, sharing the rest.

    The replacement's root must carry exactly the same rule as the node it
    replaces; this keeps a valid tree valid.  The input trees are never
    mutated.
    """
    target = subtree_at(tree, path)
    if replacement.rule != target.rule:
        raise LabelMismatchError(
            f"replacement root rule differs from the rule at {tuple(path)}: "
            f"[{replacement.rule}] vs [{target.rule}]"
        )

    def rebuild(node: DerivationTree, rest: Path) -> DerivationTree:
        if not rest:
            return replacement
        children = list(node.children)
        children[rest[0]] = rebuild(children[rest[0]], rest[1:])
        return DerivationTree(node.rule, tuple(children))

    return rebuild(tree, tuple(path))


def count_identity_violations(tree: DerivationTree) -> list[str]:
    """Node-wise letter-count conservation check for normal-form grammars.

    At every terminating node the derived term must carry exactly one letter;
    at every non-terminating node its letter counts must equal the sum of the
    children's counts.  Returns one message per violated node.
    """
    problems: list[str] = []
    for path, node in nodes(tree):
        counts = letter_counts(node)
        if node.rule.terminating:
            total = sum(counts.values())
            if total != 1:
                problems.append(
                    f"node {path}: terminating node carries {total} letters instead of one"
                )
        else:
            merged: Counter[str] = Counter()
            for child in node.children:
                merged.update(letter_counts(child))
            if counts != merged:
                problems.append(
                    f"node {path}: counts {dict(counts)} differ from the children's "
                    f"sum {dict(merged)}"
                )
    return problems
