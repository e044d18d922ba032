from itertools import product

import pytest
from hypothesis import given, strategies as st

from mcfgkit import (
    ForeignLetterError,
    Preorder,
    block_word,
    canonical_alphabet,
    chain,
    closure,
    comparability_graph,
    direct_language,
    discrete,
    is_connected,
    is_total,
    member,
    totalisations,
)

ALL_PAIRS_3 = [(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]


def brute_force_totalisations(p: Preorder) -> set[Preorder]:
    """Independent oracle: filter all boolean matrices on [m]."""
    m = p.size
    out = set()
    for bits in product((False, True), repeat=m * m):
        matrix = tuple(tuple(bits[i * m + j] for j in range(m)) for i in range(m))
        if any(not matrix[i][i] for i in range(m)):
            continue
        if any(
            matrix[i][j] and matrix[j][k] and not matrix[i][k]
            for i in range(m)
            for j in range(m)
            for k in range(m)
        ):
            continue
        if any(
            not matrix[i][j] and not matrix[j][i]
            for i in range(m)
            for j in range(m)
        ):
            continue
        if any(
            p.relation[i][j] and not matrix[i][j] for i in range(m) for j in range(m)
        ):
            continue
        out.add(Preorder(m, matrix))
    return out


def test_matrix_must_be_reflexive():
    with pytest.raises(ValueError):
        Preorder(1, ((False,),))


def test_matrix_must_be_transitive():
    rel = (
        (True, True, False),
        (False, True, True),
        (False, False, True),
    )
    with pytest.raises(ValueError):
        Preorder(3, rel)


def test_closure_adds_transitive_pair():
    p = closure(3, [(3, 2), (2, 1)])
    assert p.leq(3, 1)
    assert p == chain(3)


def test_closure_without_pairs_is_discrete():
    p = closure(2)
    assert p == discrete(2)
    assert not p.leq(1, 2) and not p.leq(2, 1)


def test_symmetric_pair_makes_equivalent_indices():
    p = closure(2, [(1, 2), (2, 1)])
    assert p.leq(1, 2) and p.leq(2, 1)
    assert is_total(p)


def test_closure_rejects_out_of_range_pairs():
    with pytest.raises(ValueError):
        closure(2, [(1, 3)])


def test_chain_is_total_and_connected():
    for k in (1, 2, 5):
        p = chain(k)
        assert is_total(p)
        assert is_connected(p)


def test_discrete_two_is_neither_total_nor_connected():
    p = discrete(2)
    assert not is_total(p)
    assert not is_connected(p)


def test_vee_shape_is_connected_but_not_total():
    p = closure(3, [(1, 2), (3, 2)])
    assert not is_total(p)
    assert is_connected(p)
    assert comparability_graph(p).edges == frozenset({(1, 2), (2, 3)})


def test_totalisation_counts_match_brute_force():
    for m in (2, 3):
        found = totalisations(discrete(m))
        oracle = brute_force_totalisations(discrete(m))
        assert len(found) == len(oracle) == {2: 3, 3: 13}[m]
        assert set(found) == oracle


def test_total_preorder_extensions_include_itself():
    p = chain(2)
    found = totalisations(p)
    assert p in found
    assert set(found) == brute_force_totalisations(p)


def test_totalisations_extend_their_input():
    p = closure(3, [(1, 2)])
    for extension in totalisations(p):
        assert is_total(extension)
        for i, j in p.pairs():
            assert extension.leq(i, j)
    assert set(totalisations(p)) == brute_force_totalisations(p)


@pytest.mark.parametrize(
    "word,expected",
    [
        (("a1", "a1", "a2", "a3"), True),
        (("a1", "a2", "a2"), False),
        (("a2", "a1"), False),
        ((), True),
    ],
)
def test_member_on_three_chain(word, expected):
    assert member(chain(3), word) is expected


def test_member_rejects_foreign_letters():
    with pytest.raises(ForeignLetterError):
        member(chain(2), ("a1", "x"))


def test_member_with_custom_alphabet():
    p = chain(2)
    assert member(p, ("x", "x", "y"), alphabet=("x", "y"))
    assert not member(p, ("x", "y", "y"), alphabet=("x", "y"))
    with pytest.raises(ValueError):
        member(p, ("x",), alphabet=("x",))


def test_block_word_builds_blocks():
    assert block_word((2, 0, 1)) == ("a1", "a1", "a3")
    assert block_word((1, 1), alphabet=("x", "y")) == ("x", "y")
    with pytest.raises(ValueError):
        block_word((-1,))


def test_canonical_alphabet():
    assert canonical_alphabet(3) == ("a1", "a2", "a3")


# --- properties -------------------------------------------------------------


def _preorder_from_mask(mask: int) -> Preorder:
    pairs = [pair for bit, pair in enumerate(ALL_PAIRS_3) if mask >> bit & 1]
    return closure(3, pairs)


@given(st.integers(0, 2**6 - 1))
def test_totalisations_agree_with_matrix_filter(mask):
    p = _preorder_from_mask(mask)
    assert set(totalisations(p)) == brute_force_totalisations(p)


@given(st.integers(0, 2**6 - 1), st.integers(0, 5))
def test_member_matches_direct_language(mask, max_len):
    p = _preorder_from_mask(mask)
    language = direct_language(p, max_len)
    for counts in product(range(max_len + 1), repeat=3):
        word = block_word(counts)
        if len(word) > max_len:
            continue
        assert member(p, word) == (word in language)


@given(st.integers(0, 2**6 - 1), st.integers(0, 5))
def test_direct_language_is_union_over_totalisations(mask, max_len):
    p = _preorder_from_mask(mask)
    union = set()
    for extension in totalisations(p):
        union |= direct_language(extension, max_len)
    assert direct_language(p, max_len) == union
