import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onepoint.exact import (
    SingularMatrixError,
    col_hnf,
    det_int,
    det_rat,
    ext_gcd,
    identity_rat,
    int_matrix,
    invert_rat,
    mat_mul,
    mat_vec,
    rank_rat,
    rat_matrix,
    row_hnf,
    snf_divisors,
    solve_rat,
    transpose,
)


def cofactor_det(rows):
    # independent route: textbook expansion along the first row
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def square_int_matrices(max_n=4, bound=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )


@given(square_int_matrices())
def test_det_int_matches_cofactor_expansion(rows):
    assert det_int(rows) == cofactor_det(rows)


def test_det_frozen_values():
    assert det_int([[2, 0], [0, 7]]) == 14
    assert det_int([[0, 1], [1, 0]]) == -1
    assert det_int([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0
    assert det_int([]) == 1
    assert det_rat([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == Fraction(1, 6)
    assert det_rat([[Fraction(2, 3)]]) == Fraction(2, 3)


@given(square_int_matrices(max_n=4, bound=6))
def test_det_rat_agrees_with_det_int(rows):
    assert det_rat(rows) == det_int(rows)


def test_int_matrix_rejects_ragged_rows_and_bools():
    with pytest.raises(ValueError):
        int_matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        int_matrix([[True]])


def test_invert_frozen():
    assert invert_rat([[1, 0], [1, 1]]) == (
        (Fraction(1), Fraction(0)),
        (Fraction(-1), Fraction(1)),
    )


@given(square_int_matrices(max_n=4, bound=5))
def test_inverse_multiplies_to_identity(rows):
    if det_int(rows) == 0:
        with pytest.raises(SingularMatrixError):
            invert_rat(rows)
        return
    inv = invert_rat(rows)
    assert mat_mul(rat_matrix(rows), inv) == identity_rat(len(rows))


def test_solve_rat():
    # overdetermined but consistent
    sol = solve_rat([[1, 0], [0, 1], [1, 1]], [2, 3, 5])
    assert sol == (Fraction(2), Fraction(3))
    # inconsistent
    assert solve_rat([[1, 0], [0, 1], [1, 1]], [2, 3, 6]) is None
    # dependent columns
    with pytest.raises(SingularMatrixError):
        solve_rat([[1, 2], [2, 4]], [1, 2])


def test_rank():
    assert rank_rat([[1, 2], [2, 4]]) == 1
    assert rank_rat([[1, 0], [0, 1]]) == 2
    assert rank_rat([[0, 0], [0, 0]]) == 0


@given(st.integers(-400, 400), st.integers(-400, 400))
def test_ext_gcd(a, b):
    g, s, t = ext_gcd(a, b)
    assert g == math.gcd(a, b)
    assert a * s + b * t == g


def test_snf_frozen():
    assert snf_divisors([[2, 0], [0, 3]]) == (1, 6)
    assert snf_divisors([[-3], [3]]) == (3,)
    assert snf_divisors([[0, 0], [0, 0]]) == ()
    assert snf_divisors([[2, 0], [0, 4]]) == (2, 4)
    assert snf_divisors([[-2, 3, 0], [-2, 0, 7]]) == (1, 1)


@given(square_int_matrices(max_n=4, bound=6))
def test_snf_divisor_chain_and_determinant(rows):
    divisors = snf_divisors(rows)
    assert all(d > 0 for d in divisors)
    for a, b in zip(divisors, divisors[1:]):
        assert b % a == 0
    d = det_int(rows)
    if d != 0:
        assert len(divisors) == len(rows)
        assert math.prod(divisors) == abs(d)


@given(square_int_matrices(max_n=3, bound=5))
def test_snf_invariant_under_transpose(rows):
    assert snf_divisors(rows) == snf_divisors(transpose(rows))


def rect_int_matrices(bound=7):
    return st.tuples(st.integers(1, 3), st.integers(1, 3)).flatmap(
        lambda shape: st.lists(
            st.lists(st.integers(-bound, bound), min_size=shape[1], max_size=shape[1]),
            min_size=shape[0],
            max_size=shape[0],
        )
    )


@given(rect_int_matrices())
def test_row_hnf_reproduces_and_is_canonical(rows):
    h, u = row_hnf(rows)
    assert h == mat_mul(u, rows)
    assert abs(det_int(u)) == 1
    # a second pass changes nothing
    again, _ = row_hnf(h)
    assert again == h
    # pivots positive, zeros below, entries above reduced
    n = len(h[0]) if h else 0
    seen = -1
    for row in h:
        cols = [j for j in range(n) if row[j] != 0]
        if not cols:
            continue
        pivot = cols[0]
        assert pivot > seen
        assert row[pivot] > 0
        seen = pivot


@given(rect_int_matrices())
def test_col_hnf_reproduces(rows):
    h, v = col_hnf(rows)
    assert h == mat_mul(rows, v)
    assert abs(det_int(v)) == 1


@given(square_int_matrices(max_n=3, bound=4), st.integers(0, 5))
@settings(max_examples=60)
def test_row_hnf_invariant_under_row_operations(rows, mix):
    # shuffling rows by elementary moves cannot change the normal form
    h, _ = row_hnf(rows)
    mixed = [list(r) for r in rows]
    n = len(mixed)
    for k in range(mix):
        i, j = k % n, (k + 1) % n
        if i != j:
            mixed[i] = [a + b for a, b in zip(mixed[i], mixed[j])]
    h2, _ = row_hnf(mixed)
    assert h == h2


def test_mat_vec():
    assert mat_vec([[1, 2], [3, 4]], [5, 6]) == (17, 39)
