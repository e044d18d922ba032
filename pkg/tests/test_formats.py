import random

import pytest
from hypothesis import given, settings, strategies as st

from mcfgkit import (
    FormatError,
    NonTerminal,
    ProductionRule,
    Variable,
    balanced_pair_grammar,
    build_grammar,
    chain,
    closure,
    deleting_grammar,
    discrete,
    equivalent_grammars,
    overgenerating_block_grammar,
    parse,
    single_letter_pump_grammar,
)
from mcfgkit.formats import (
    format_grammar,
    format_preorder,
    format_tree,
    format_word,
    parse_grammar,
    parse_preorder,
    parse_word,
    tree_as_dict,
)

from _randgrams import random_grammar


def err(callable_, *args):
    with pytest.raises(FormatError) as info:
        callable_(*args)
    return info.value


# --- grammars ---------------------------------------------------------------


def test_parse_a_small_grammar():
    grammar = parse_grammar(
        """
        # letters of a, at least one
        start: S
        S($1.1 $2.1) <- S($1.1), T($2.1)
        T(a) <-
        S(a) <-
        """
    )
    assert equivalent_grammars(grammar, single_letter_pump_grammar())


def test_placeholder_names_only_declare_rank():
    grammar = parse_grammar("P(a $1.1, b $1.2) <- P(x, y)\nP(_, _) <-")
    p = NonTerminal("P", 2)
    assert grammar.rules[0] == ProductionRule(
        p, (("a", Variable(1, 1)), ("b", Variable(1, 2))), (p,)
    )
    assert grammar.rules[1] == ProductionRule(p, ((), ()))


def test_start_defaults_to_the_first_lhs():
    grammar = parse_grammar("T(a) <-\nS($1.1) <- T($1.1)")
    assert grammar.start == NonTerminal("T", 1)


def test_start_header_may_name_an_undefined_symbol():
    grammar = parse_grammar("start: X\nS(a) <-")
    assert grammar.start == NonTerminal("X", 1)


@pytest.mark.parametrize(
    "sample",
    [
        single_letter_pump_grammar,
        balanced_pair_grammar,
        overgenerating_block_grammar,
        deleting_grammar,
        lambda: build_grammar(chain(3)),
        lambda: build_grammar(discrete(2)),
    ],
)
def test_grammars_round_trip(sample):
    grammar = sample()
    assert equivalent_grammars(parse_grammar(format_grammar(grammar)), grammar)


@given(st.integers(0, 10**6))
@settings(deadline=None)
def test_random_grammars_round_trip(seed):
    # the text format cannot declare unused letters, so compare rules and
    # start and only ask the alphabet to survive as a subset
    grammar = random_grammar(random.Random(seed))
    parsed = parse_grammar(format_grammar(grammar))
    assert parsed.rules == grammar.rules
    assert parsed.start == grammar.start
    assert set(parsed.alphabet) <= set(grammar.alphabet)


@pytest.mark.parametrize(
    "text, line, column, needle",
    [
        ("S(a)", 1, 5, "'<-'"),
        ("S(a) <- T(x) <- U(y)", 1, 14, "only once"),
        ("S($1.0) <- T(x)", 1, 3, "1-based"),
        ("S($1x) <- T(x)", 1, 3, "malformed variable"),
        ("S(_ a) <-", 1, 3, "stand alone"),
        ("S(, a) <-", 1, 3, "empty component"),
        ("S(a <- ", 1, 5, "missing ')'"),
        ("S(a) x <- ", 1, 6, "after ')'"),
        ("S($1.1) <- A($2.1)", 1, 14, "does not match its position"),
        ("S($1.1) <- A($1.1", 1, 18, "unbalanced"),
        ("S(a$b) <-", 1, 3, "reserved"),
        ("start: S\nstart: T\nS(a) <-", 2, 1, "duplicate 'start:'"),
        ("start: S(\nS(a) <-", 1, 8, "reserved"),
        ("", 1, 1, "no rules and no start"),
    ],
)
def test_grammar_errors_point_at_the_problem(text, line, column, needle):
    error = err(parse_grammar, text, "g.mcfg")
    assert needle in error.message
    assert (error.filename, error.line, error.column) == ("g.mcfg", line, column)
    assert str(error) == f"g.mcfg:{line}:{column}: {error.message}"


def test_comments_and_blank_lines_are_skipped():
    grammar = parse_grammar("\n  # nothing\nS(a) <-   # a letter\n\n")
    assert len(grammar.rules) == 1


# --- preorders --------------------------------------------------------------


def test_parse_a_chain():
    assert parse_preorder("m: 3\n2 <= 1\n3 <= 2\n") == chain(3)


def test_closure_is_taken_for_the_caller():
    assert parse_preorder("m: 3\n1 <= 2\n2 <= 3\n").leq(1, 3)


@pytest.mark.parametrize(
    "p",
    [chain(1), chain(4), discrete(3), closure(3, [(1, 2), (3, 2)])],
    ids=["chain1", "chain4", "discrete3", "vee"],
)
def test_preorders_round_trip(p):
    assert parse_preorder(format_preorder(p)) == p


@pytest.mark.parametrize(
    "text, line, column, needle",
    [
        ("1 <= 2\n", 1, 1, "after the 'm:' header"),
        ("m: 2\nm: 3\n", 2, 1, "duplicate 'm:'"),
        ("m: x\n", 1, 3, "must be an integer"),
        ("m: 0\n", 1, 3, "must be positive"),
        ("m: 2\n1 < 2\n", 2, 1, "form 'i <= j'"),
        ("m: 2\n1 <= 3\n", 2, 6, "out of range"),
        ("", 1, 1, "missing 'm:'"),
    ],
)
def test_preorder_errors_point_at_the_problem(text, line, column, needle):
    error = err(parse_preorder, text, "p.ord")
    assert needle in error.message
    assert (error.filename, error.line, error.column) == ("p.ord", line, column)


# --- words ------------------------------------------------------------------


def test_words_round_trip():
    for word in ((), ("a",), ("a1", "a1", "a2")):
        assert parse_word(format_word(word)) == word


def test_lone_underscore_is_the_empty_word():
    assert parse_word("  _  ") == ()
    assert format_word(()) == "_"


def test_underscore_must_stand_alone_in_words():
    error = err(parse_word, "a _ b")
    assert error.column == 3


def test_reserved_characters_are_rejected_in_words():
    with pytest.raises(FormatError):
        parse_word("a (b")


# --- trees ------------------------------------------------------------------


def test_tree_rendering():
    grammar = single_letter_pump_grammar()
    tree = parse(grammar, ("a", "a"))
    assert format_tree(tree) == (
        "S($1.1 $2.1) <- S($1.1), T($2.1)\n  S(a) <-\n  T(a) <-"
    )
    assert tree_as_dict(tree) == {
        "rule": "S($1.1 $2.1) <- S($1.1), T($2.1)",
        "children": [
            {"rule": "S(a) <-", "children": []},
            {"rule": "T(a) <-", "children": []},
        ],
    }
