"""Exact linear algebra checked against sympy on random rational matrices."""

from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rational_elements
from g2sub import linalg
from g2sub.algebra import ad

entries = st.integers(-3, 3).map(Fraction)


def matrices(n_min=1, n_max=6):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)
    )


def _sym(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])


def _coeffs(p):
    return [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]


@given(matrices())
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == _sym(m).rank()


@given(matrices())
def test_charpoly_matches_sympy(m):
    x = sympy.Symbol("x")
    assert linalg.charpoly(m) == _coeffs(_sym(m).charpoly(x))


@given(matrices())
def test_minpoly_divides_charpoly_and_annihilates(m):
    p = linalg.minpoly(m)
    assert linalg.is_zero_matrix(linalg.poly_eval_matrix(p, m))
    _, r = linalg.poly_divmod(linalg.charpoly(m), p)
    assert not r


@given(matrices())
def test_nullspace_vectors_are_killed(m):
    for v in linalg.nullspace(m):
        assert not any(linalg.matvec(m, v))
    assert len(linalg.nullspace(m)) == len(m[0]) - linalg.rank(m)


@settings(max_examples=15)
@given(rational_elements())
def test_ad_charpoly_and_rank_match_sympy(x):
    m = linalg.native(ad(x))
    s = _sym(m)
    assert linalg.rank(m) == s.rank()
    assert linalg.charpoly(m) == _coeffs(s.charpoly(sympy.Symbol("t")))


@given(matrices(2, 5))
def test_semisimple_part_commutes_and_is_diagonalizable(m):
    s = linalg.semisimple_part(m)
    assert linalg.matmul(s, m) == linalg.matmul(m, s)
    assert linalg.is_squarefree(linalg.minpoly(s))
    n = linalg.mat_sub(m, s)
    assert linalg.is_zero_matrix(linalg.matpow(n, len(m)))


def test_polynomial_gcd():
    p = linalg.poly_mul([1, 1], [-2, 1])
    q = linalg.poly_mul([1, 1], [3, 1])
    assert linalg.poly_gcd(p, q) == [1, 1]
    assert linalg.squarefree_part(linalg.poly_mul(p, p)) == linalg.poly_monic(p)
