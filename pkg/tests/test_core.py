from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from invgray.core import (
    CodeList,
    CycleForm,
    append_transposition,
    classify_move,
    compose,
    embed,
    extend_fixed,
    extend_tilde,
    format_word,
    from_cycles,
    hamming,
    identity,
    inverse,
    is_involution,
    membership,
    parse_word,
    pretty,
    relabel,
    relabel_list,
    reverse_list,
    signed_perm,
    to_cycles,
)
from invgray.counting import enumerate_involutions


@st.composite
def signed_perms(draw, n=None):
    n = n if n is not None else draw(st.integers(1, 6))
    p = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return tuple(s * x for s, x in zip(signs, p))


@st.composite
def same_rank_pairs(draw, size=2):
    n = draw(st.integers(1, 6))
    return tuple(draw(signed_perms(n)) for _ in range(size))


def w(text):
    return parse_word(text)


def test_parse_and_format_round_trip():
    assert parse_word("-3 2 -1 6 5 4 -7") == (-3, 2, -1, 6, 5, 4, -7)
    assert format_word((-3, 2, -1)) == "-3 2 -1"
    assert pretty((1, -2)) == "1 2̅"


def test_signed_perm_rejects_repeats():
    with pytest.raises(ValueError):
        signed_perm((1, -1))
    with pytest.raises(ValueError):
        parse_word("1 3")


def test_compose_flips_sign_at_position_five():
    flip5 = (1, 2, 3, 4, -5, 6, 7)
    assert compose(w("-3 2 -1 6 5 4 -7"), flip5) == w("-3 2 -1 6 -5 4 -7")


def test_compose_with_adjacent_transposition_swaps_positions():
    assert compose((3, 1, 2), (2, 1, 3)) == (1, 3, 2)


def test_compose_with_type_d_last_generator():
    s7 = (1, 2, 3, 4, 5, -7, -6)
    assert compose(w("-3 2 -1 6 -5 4 -7"), s7) == w("-3 2 -1 6 -5 7 -4")


def test_compose_rank_mismatch():
    with pytest.raises(ValueError):
        compose((1, 2), (1, 2, 3))


def test_inverse_examples():
    assert inverse(identity(4)) == identity(4)
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert compose((2, 3, 1), (3, 1, 2)) == identity(3)


def test_is_involution_examples():
    assert is_involution(identity(3))
    assert is_involution((2, 1, 4, 3))
    assert not is_involution((2, 3, 1, 4))
    assert compose((2, 3, 1, 4), (2, 3, 1, 4)) == (3, 1, 2, 4)


def test_membership_examples():
    assert membership((-1, -2, 3, 4), "D")
    assert not membership((-1, 2, 3, 4), "D")
    assert membership((1, 2, 3, 4), "A")
    assert not membership((-1, 2), "A")
    assert membership((-1, 2), "B")


def test_hamming_examples():
    assert hamming((1, 2, 3, 4), (1, 2, 3, 4)) == 0
    assert hamming((1, 2, 3, 4), (-1, 2, 3, 4)) == 1
    assert hamming((1, 2, 3, 4), (1, 2, 4, 3)) == 2
    with pytest.raises(ValueError):
        hamming((1,), (1, 2))


def test_to_cycles_example():
    c = to_cycles(w("-3 2 -1 6 5 4 -7"))
    assert c.pairs == ((-1, -3), (4, 6))
    assert c.fixed == (2, 5, -7)
    assert str(c) == "(-1 -3)(2)(4 6)(5)(-7)"


def test_identity_cycles_are_all_fixed():
    c = to_cycles(identity(5))
    assert c.pairs == () and c.fixed == (1, 2, 3, 4, 5)


def test_from_cycles_example():
    assert from_cycles([(1, 3), (-2,)], 3) == (3, -2, 1)


@pytest.mark.parametrize("cycles", [[(1, 2), (2, 3)], [(1, -2)], [(1, 2, 3)], [(1, 4)]])
def test_from_cycles_rejects(cycles):
    with pytest.raises(ValueError):
        from_cycles(cycles, 3)


def test_to_cycles_rejects_non_involution():
    with pytest.raises(ValueError):
        to_cycles((2, 3, 1))


@pytest.mark.parametrize("kind,n", [("A", 5), ("B", 4), ("D", 5)])
def test_cycle_round_trip(kind, n):
    for u in enumerate_involutions(kind, n):
        c = to_cycles(u)
        assert isinstance(c, CycleForm)
        assert from_cycles(c) == u


def test_classify_move_examples():
    m = classify_move(w("1 2 3 4 5"), w("1 4 3 2 5"))
    assert (m.kind, m.positions, m.sign_changes) == ("transposition", (2, 4), 0)
    m = classify_move(w("4 2 3 1 5"), w("5 2 3 4 1"))
    assert (m.kind, m.positions, m.sign_changes) == ("rotation", (1, 4, 5), 0)
    m = classify_move(w("-3 2 -1 4"), w("4 2 3 1"))
    assert (m.kind, m.positions, m.sign_changes) == ("rotation", (1, 3, 4), 2)
    assert classify_move(w("1 2"), w("1 2")).kind == "identity"


def test_classify_move_sign_changes():
    m = classify_move((1, 2, 3), (-1, 2, -3))
    assert (m.kind, m.positions, m.sign_changes) == ("sign", (1, 3), 2)
    assert classify_move((1, 2, 3), (-1, -2, -3)).kind == "other"


def test_relabel_examples():
    assert relabel((3, 2, 1), (4, 1, 2)) == (1, 4, 2)
    assert relabel((3, -2, 1), (4, 1, 2)) == (-1, 4, 2)
    assert relabel((2, 1, -3), (1, 2, 3)) == (2, 1, -3)


def test_list_operators():
    L = [(1, 2), (2, 1)]
    assert extend_fixed(L, 3) == [(1, 2, 3), (2, 1, 3)]
    assert append_transposition(L, 3, 4) == [(1, 2, 4, 3), (2, 1, 4, 3)]
    assert append_transposition(L, 3, 4, barred=True) == [(1, 2, -4, -3), (2, 1, -4, -3)]
    assert extend_tilde([(-1, 2, 3)]) == [(-1, 2, 3, -4)]
    assert extend_tilde([(-1, -2, 3)]) == [(-1, -2, 3, 4)]
    assert reverse_list(reverse_list(L)) == L
    assert relabel_list([(2, 1)], (1, 3), 3) == [(3, 2, 1)]


def test_list_operators_reject_collisions():
    with pytest.raises(ValueError):
        extend_fixed([(1, 2)], 2)
    with pytest.raises(ValueError):
        append_transposition([(2, 1, 3)], 1, 3)


def test_codelist_behaves_like_a_sequence():
    c = CodeList("A", 2, ((1, 2), (2, 1)))
    assert len(c) == 2 and c[1] == (2, 1) and list(c) == [(1, 2), (2, 1)]


@given(same_rank_pairs(3))
def test_compose_associative(t):
    a, b, c = t
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(signed_perms())
def test_identity_is_neutral_and_inverse_cancels(u):
    e = identity(len(u))
    assert compose(u, e) == u == compose(e, u)
    assert compose(u, inverse(u)) == e == compose(inverse(u), u)


@given(same_rank_pairs())
def test_inverse_of_product(t):
    u, v = t
    assert inverse(compose(u, v)) == compose(inverse(v), inverse(u))


@given(same_rank_pairs())
def test_classify_move_round_trip(t):
    u, v = t
    assert classify_move(u, v).apply(u) == v


@pytest.mark.parametrize("kind,n", [("B", 3), ("D", 4)])
def test_involutions_are_self_inverse(kind, n):
    for u in enumerate_involutions(kind, n):
        assert inverse(u) == u


def test_hamming_is_a_metric_on_small_ranks():
    for n in range(1, 4):
        words = enumerate_involutions("B", n).words
        for u, v in product(words, repeat=2):
            assert hamming(u, v) == hamming(v, u)
            assert (hamming(u, v) == 0) == (u == v)
            for x in words:
                assert hamming(u, x) <= hamming(u, v) + hamming(v, x)


@pytest.mark.parametrize("n", range(2, 6))
def test_type_d_involutions_are_two_apart(n):
    words = enumerate_involutions("D", n).words
    assert all(hamming(u, v) >= 2 for i, u in enumerate(words) for v in words[i + 1:])


def test_relabeling_preserves_move_classes():
    from invgray.recursive_codes import gcb

    code = gcb(3).words
    for F in permutations((1, 3, 5)):
        for u, v in zip(code, code[1:] + code[:1]):
            a, b = classify_move(u, v), classify_move(embed(u, F, 5), embed(v, F, 5))
            assert (a.kind, a.sign_changes) == (b.kind, b.sign_changes)
