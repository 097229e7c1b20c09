from itertools import permutations, product

import pytest

from invgray.core import compose, identity, membership
from invgray.counting import ENUMERATION_CAP, count, enumerate_involutions, even_odd_excess

A_COUNTS = [1, 1, 2, 4, 10, 26, 76, 232, 764]
B_COUNTS = [1, 2, 6, 20, 76, 312, 1384]
D_COUNTS = [1, 4, 10, 44, 156, 752, 3256]


def brute_force(kind, n):
    """Square every signed permutation; independent of the enumerator."""
    out = []
    for p in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            w = tuple(s * x for s, x in zip(signs, p))
            if membership(w, kind) and compose(w, w) == identity(n):
                out.append(w)
    return sorted(out)


def test_count_values():
    assert [count("A", n) for n in range(9)] == A_COUNTS
    assert [count("B", n) for n in range(7)] == B_COUNTS
    assert [count("D", n) for n in range(1, 8)] == D_COUNTS


def test_count_examples():
    assert count("A", 4) == 10
    assert count("B", 4) == 76
    assert count("D", 4) == 44
    assert count("D", 3) == 10


def test_count_is_exact_for_large_ranks():
    big = count("B", 40)
    assert isinstance(big, int) and big > 2 ** 64
    assert count("B", 41) == 2 * big + 2 * 40 * count("B", 39)


@pytest.mark.parametrize("kind,n", [("A", -1), ("B", -1), ("D", 0), ("C", 3)])
def test_count_out_of_range(kind, n):
    with pytest.raises(ValueError):
        count(kind, n)


def test_enumerate_examples():
    assert enumerate_involutions("A", 3).words == ((1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1))
    assert len(enumerate_involutions("B", 4)) == 76
    assert enumerate_involutions("D", 1).words == ((1,),)


@pytest.mark.parametrize("kind,n", [(k, n) for k in "ABD" for n in range(1, 5)])
def test_enumerate_matches_brute_force(kind, n):
    assert list(enumerate_involutions(kind, n).words) == brute_force(kind, n)


def test_enumerate_sizes_match_counts_within_cap():
    for kind, cap in ENUMERATION_CAP.items():
        for n in range(1 if kind == "D" else 0, cap + 1):
            code = enumerate_involutions(kind, n)
            assert len(code) == count(kind, n), (kind, n)
            assert list(code.words) == sorted(set(code.words))


def test_enumerate_cap():
    with pytest.raises(ValueError):
        enumerate_involutions("A", 9)
    assert len(enumerate_involutions("A", 9, cap=9)) == count("A", 9)


@pytest.mark.parametrize("n", range(1, 7))
def test_type_d_is_even_part_of_type_b(n):
    b = enumerate_involutions("B", n).words
    d = enumerate_involutions("D", n).words
    assert list(d) == [w for w in b if sum(x < 0 for x in w) % 2 == 0]


@pytest.mark.parametrize("n", range(2, 30))
def test_type_d_recursion_uses_type_b(n):
    assert count("D", n + 1) == count("B", n) + 2 * n * count("D", n - 1)


def test_even_odd_excess():
    assert even_odd_excess(2) == 0
    assert even_odd_excess(3) == -2
    for n in range(3, ENUMERATION_CAP["A"] + 1):
        assert abs(even_odd_excess(n)) > 1
