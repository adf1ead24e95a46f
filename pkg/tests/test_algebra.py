from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rational_elements
from g2sub.algebra import (
    BASE_CONSTANTS,
    DIM,
    ad,
    ad_rank,
    bracket,
    cartan,
    count_distinct_eigenvalues,
    exp_ad,
    is_nilpotent_element,
    is_regular_element,
    is_semisimple_element,
    jacobi_failures,
    killing_form,
    rescaling_automorphism,
    root_vector,
    semisimple_part,
    verify_constants_complete,
    weyl_as_automorphism,
)
from g2sub.roots import ALPHA, BETA, ROOTS, reflection
from g2sub.scalars import FieldElement

X = root_vector
H_A, H_B = cartan(1, 0), cartan(0, 1)


def test_brackets_from_table():
    assert bracket(X(BETA), X(ALPHA)) == X((1, 1))
    assert bracket(X(ALPHA), X((2, 1))) == X((3, 1), 3)
    assert bracket(X(ALPHA), X((-1, 0))) == H_A
    assert not bracket(H_A, H_B)


def test_jacobi_on_all_basis_triples():
    assert jacobi_failures() == []


def test_constants_complete():
    rep = verify_constants_complete()
    assert rep.ok and rep.covered == 60


def test_constants_with_deleted_entry():
    base = {k: v for k, v in BASE_CONSTANTS.items() if k != ((0, 1), (1, 0))}
    rep = verify_constants_complete(base)
    assert not rep.ok and len(rep.uncovered) == 4


def test_constants_with_conflict():
    base = dict(BASE_CONSTANTS)
    base[((1, 0), (0, 1))] = 1
    rep = verify_constants_complete(base)
    assert rep.conflicts


def test_ranks_and_killing_form():
    assert ad_rank(X(BETA)) == 6
    assert ad_rank(X(ALPHA)) == 8
    assert all(not c for row in ad(cartan(0, 0)) for c in row)
    assert killing_form(H_A, H_A) == 48
    assert not killing_form(X(ALPHA), X(BETA))
    assert killing_form(X(ALPHA), X((-1, 0)))


def test_element_types():
    assert is_nilpotent_element(X(ALPHA) + X(BETA))
    assert not is_nilpotent_element(H_A)
    assert is_semisimple_element(H_B)
    assert not is_semisimple_element(X(BETA))
    mixed = H_A + X((3, 2))
    assert not is_nilpotent_element(mixed) and not is_semisimple_element(mixed)
    assert semisimple_part(mixed) == H_A


def test_regular_elements():
    generic = cartan(*_h_with_values(1, 10))
    assert count_distinct_eigenvalues(cartan(0, 0)) == 1
    assert count_distinct_eigenvalues(generic) == 13
    assert count_distinct_eigenvalues(X(BETA)) == 1
    assert is_regular_element(generic)
    assert not is_regular_element(H_A)
    assert not is_regular_element(X(ALPHA) + X(BETA))


def _h_with_values(a_val, b_val):
    # alpha(H_a)=2, beta(H_a)=-3, alpha(H_b)=-1, beta(H_b)=2
    det = Fraction(2 * 2 - 3)
    return (Fraction(2 * a_val + b_val) / det, Fraction(3 * a_val + 2 * b_val) / det)


def test_nilpotent_sum_conjugation_identity():
    x = X(BETA) + X((1, 1)) + X((2, 1)) - X((3, 1))
    image = (exp_ad(Fraction(-2, 3), X(ALPHA)) @ exp_ad(1, X((-1, 0))))(x)
    assert image == -X((3, 1))


def test_exp_ad_zero_is_identity():
    e = exp_ad(0, X(ALPHA))
    assert all(e(X(r)) == X(r) for r in ROOTS)


def test_exp_ad_rejects_semisimple():
    with pytest.raises(ValueError):
        exp_ad(1, H_A)


def test_weyl_automorphism_moves_root_lines():
    w = weyl_as_automorphism(ALPHA)
    for r in ROOTS:
        image = w(X(r))
        target = reflection(ALPHA)(r)
        assert image.support() == X(target).support()


@pytest.mark.parametrize("gamma", [ALPHA, BETA, (3, 2), (-2, -1)])
def test_weyl_automorphisms_preserve_brackets(gamma):
    assert weyl_as_automorphism(gamma).preserves_brackets()


@pytest.mark.parametrize("c,root", [(1, ALPHA), (Fraction(-2, 3), BETA), (3, (3, 2)), (Fraction(1, 2), (-1, -1))])
def test_exp_ad_preserves_brackets(c, root):
    assert exp_ad(c, X(root)).preserves_brackets()


def test_rescaling():
    assert rescaling_automorphism(1, 1)(X((3, 2))) == X((3, 2))
    auto = rescaling_automorphism(FieldElement.surd(2), Fraction(3, 5))
    assert auto.preserves_brackets()


@settings(max_examples=25)
@given(rational_elements(), rational_elements(), rational_elements())
def test_bracket_antisymmetry_and_jacobi(x, y, z):
    assert bracket(x, y) == -bracket(y, x)
    jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert not jac


@settings(max_examples=15)
@given(rational_elements(), rational_elements(), st.sampled_from(ROOTS), st.integers(-3, 3))
def test_exp_ad_is_homomorphism_on_samples(x, y, root, c):
    auto = exp_ad(c, X(root))
    assert auto(bracket(x, y)) == bracket(auto(x), auto(y))


@settings(max_examples=20)
@given(rational_elements(), rational_elements())
def test_killing_form_is_invariant(x, y):
    z = X(ALPHA) + H_B
    assert killing_form(bracket(z, x), y) == -killing_form(x, bracket(z, y))
    assert DIM == 14
