import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from twinvol.numtheory import (
    check_gcd_lcm_inequality,
    check_gcd_triple_inequality,
    egcd,
    euler_phi,
    gcd_of_neighbors,
    is_prime,
    lcm,
    solve_linear_congruence,
)

from oracles import exhaustive_congruence


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_egcd_bezout(a, b):
    g, x, y = egcd(a, b)
    assert g == gcd(a, b)
    assert a * x + b * y == g


def test_congruence_examples():
    # 4k = -2 = 4 (mod 6); exhaustive search gives k in {1, 4}
    sol = solve_linear_congruence(4, -2, 6)
    assert sol.solvable and sol.count == 2
    assert list(sol.solutions) == exhaustive_congruence(4, 4, 6) == [1, 4]

    sol = solve_linear_congruence(0, 0, 5)
    assert sol.solvable and sol.count == 5
    assert list(sol.solutions) == [0, 1, 2, 3, 4]

    sol = solve_linear_congruence(2, 1, 4)
    assert not sol.solvable and sol.count == 0


@pytest.mark.parametrize("n", range(1, 41))
def test_congruence_matches_exhaustive(n):
    for a in range(n):
        for c in range(n):
            sol = solve_linear_congruence(a, c, n)
            expected = exhaustive_congruence(a, c, n)
            assert list(sol.solutions) == expected
            assert sol.count == len(expected)
            assert sol.solvable == bool(expected)
            if expected:
                assert sol.count == gcd(a, n)


def test_congruence_cap_keeps_exact_count():
    sol = solve_linear_congruence(6, 0, 30, cap=10)
    assert sol.solutions is None
    assert sol.count == 6


def test_congruence_rejects_bad_modulus():
    with pytest.raises(ValueError):
        solve_linear_congruence(1, 1, 0)


@pytest.mark.parametrize(
    "x1, x2, lhs, rhs",
    [(4, 6, 10, 14), (5, 5, 10, 10), (3, 7, 10, 22)],
)
def test_gcd_lcm_examples(x1, x2, lhs, rhs):
    assert x1 + x2 == lhs
    assert lcm(x1, x2) + gcd(x1, x2) == rhs
    assert check_gcd_lcm_inequality(x1, x2)


def test_gcd_lcm_equality_iff_divides():
    for x1 in range(1, 61):
        for x2 in range(1, 61):
            tight = x1 + x2 == lcm(x1, x2) + gcd(x1, x2)
            assert tight == (max(x1, x2) % min(x1, x2) == 0)


def test_triple_examples():
    assert gcd(4, 6) + gcd(8, 6) == 4 and 6 + gcd(4, 8) == 10
    assert check_gcd_triple_inequality(4, 6, 8)
    for x in range(1, 50):
        assert gcd(x, x) + gcd(x, x) == x + gcd(x, x)
    assert check_gcd_triple_inequality(2, 9, 4)


def test_triple_instantiation_used_for_dihedral_bound():
    for l in range(3, 101):
        for a in range(2, l):
            assert check_gcd_triple_inequality(a - 1, l, a + 1)
            assert gcd(a - 1, l) + gcd(a + 1, l) <= l + gcd_of_neighbors(a)


@given(st.integers(1, 10**6), st.integers(1, 10**6), st.integers(1, 10**6))
def test_inequalities_hold(x1, x2, x3):
    assert check_gcd_lcm_inequality(x1, x2)
    assert check_gcd_triple_inequality(x1, x2, x3)


def test_inequalities_reject_nonpositive():
    with pytest.raises(ValueError):
        check_gcd_lcm_inequality(0, 3)
    with pytest.raises(ValueError):
        check_gcd_triple_inequality(1, 0, 3)


@pytest.mark.parametrize("x1, expected", [(5, 2), (8, 1), (1, 2)])
def test_gcd_of_neighbors(x1, expected):
    assert gcd_of_neighbors(x1) == expected


def test_gcd_of_neighbors_parity_sample():
    rng = random.Random(7)
    for x in rng.sample(range(1, 10**5), 2000):
        assert gcd_of_neighbors(x) == (2 if x % 2 else 1)


def test_small_helpers():
    assert [euler_phi(n) for n in (1, 4, 6, 7, 12)] == [1, 2, 2, 6, 4]
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert lcm(0, 5) == 0
