import itertools

import pytest
from hypothesis import given, strategies as st

from sl2tiling import Mat2, is_antiperiodic, is_non_oscillating, is_quiddity, monodromy, sign_changes, solve

MINUS_I = Mat2(-1, 0, 0, -1)


def naive_monodromy(coeffs):
    # plain nested lists, independent of Mat2
    M = [[1, 0], [0, 1]]
    for c in coeffs:
        C = [[c, -1], [1, 0]]
        M = [[sum(C[i][k] * M[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    return Mat2(M[0][0], M[0][1], M[1][0], M[1][1])


def test_solve_width_zero():
    assert solve((1, 1, 1), 0, 1, start=0, length=6).values == (0, 1, 1, 0, -1, -1)


def test_solve_heptagon_row():
    # first nontrivial frieze row appears as a solution
    s = solve((1, 3, 2, 2, 1, 4, 2), 0, 1, start=1, length=8, seed_index=1)
    assert s.values == (0, 1, 2, 3, 1, 1, 1, 0)
    assert s[4] == 3


def test_solve_zero():
    assert set(solve((3, 1, 4), 0, 0, start=-5, length=20).values) == {0}


def test_solve_backward_matches_forward():
    q = (1, 3, 2, 2, 1, 4, 2)
    fwd = solve(q, 5, -2, start=0, length=30)
    back = solve(q, fwd[20], fwd[21], start=0, length=30, seed_index=20)
    assert fwd == back


def test_monodromy_examples():
    assert monodromy((1, 1, 1)) == MINUS_I
    assert monodromy((0, 0)) == MINUS_I
    m = monodromy((2, 2, 2))
    assert m not in (MINUS_I, Mat2.identity())


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=10))
def test_monodromy_matches_naive(coeffs):
    assert monodromy(coeffs) == naive_monodromy(coeffs)


@given(st.lists(st.integers(-4, 6), min_size=2, max_size=9), st.integers(-5, 5), st.integers(-5, 5))
def test_antiperiodic_solutions(coeffs, v0, v1):
    n = len(coeffs)
    s = solve(coeffs, v0, v1, start=0, length=3 * n)
    if is_antiperiodic(coeffs):
        assert all(s[k + n] == -s[k] for k in range(2 * n))


def test_non_oscillating_examples():
    assert is_non_oscillating((1, 1, 1))
    assert is_non_oscillating((1, 3, 2, 2, 1, 4, 2))
    assert not is_non_oscillating((1, 1, 1, 1))
    assert not is_non_oscillating((2, 2, 2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_non_oscillating_means_one_sign_change(n):
    # on every window of length n+1 a nonzero solution changes sign exactly once
    for q in itertools.product(range(0, 4), repeat=n):
        if not is_non_oscillating(q):
            continue
        for v0, v1 in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 3), (-1, 2)]:
            vals = solve(q, v0, v1, start=0, length=4 * n).values
            for k in range(3 * n):
                w = vals[k:k + n + 1]
                if 0 not in w:
                    assert sign_changes(w) == 1, (q, v0, v1, k)


def test_sign_changes_skips_zeros():
    assert sign_changes((1, 0, -1, 0, 2)) == 2
    assert sign_changes((0, 0)) == 0
    assert sign_changes((3, 1, 1)) == 0


def test_is_quiddity_examples():
    assert is_quiddity((1, 1, 1))
    assert is_quiddity((1, 3, 2, 2, 1, 4, 2))
    assert not is_quiddity((2, 2, 2))
    assert is_quiddity((0, 0))
    assert not is_quiddity((1, 1))
