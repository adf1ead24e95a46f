from fractions import Fraction

import pytest

from g2sub.algebra import cartan, root_vector
from g2sub.expr import parse_element, parse_elements
from g2sub.reps import (
    Sl2Triple,
    check_direct_sum,
    cyclic_submodule,
    decompose_under_sl2,
    dynkin_index,
    is_invariant,
    joint_weights,
    verify_submodule,
    verify_triple,
)
from g2sub.roots import coroot
from g2sub.scalars import FieldElement
from g2sub.subspace import span

X = root_vector
S2, S6, S10 = (FieldElement.surd(p) for p in (2, 6, 10))

LONG = Sl2Triple(cartan(0, 1), X((0, 1)), X((0, -1)))
SHORT = Sl2Triple(cartan(1, 0), X((1, 0)), X((-1, 0)))
A1_4 = Sl2Triple(coroot((3, 1)) * 2, (X((0, -1)) + X((3, 2))) * S2, (X((0, 1)) + X((-3, -2))) * S2)
A1_28 = Sl2Triple(coroot((9, 5)) * 14, X((1, 0)) * S6 + X((0, 1)) * S10, X((-1, 0)) * S6 + X((0, -1)) * S10)


@pytest.mark.parametrize("t", [LONG, SHORT, A1_4, A1_28])
def test_triples(t):
    assert verify_triple(t).ok


def test_bad_triple_rejected():
    t = Sl2Triple(cartan(0, 1), X((0, 1)), X((0, -1)) * 2)
    assert not verify_triple(t)
    with pytest.raises(ValueError):
        dynkin_index(t)


@pytest.mark.parametrize("t,index", [(LONG, 1), (SHORT, 3), (A1_4, 4), (A1_28, 28)])
def test_dynkin_indices(t, index):
    assert dynkin_index(t) == index


@pytest.mark.parametrize(
    "t,spins",
    [
        (LONG, {0: 3, Fraction(1, 2): 4, 1: 1}),
        (SHORT, {0: 3, 1: 1, Fraction(3, 2): 2}),
        (A1_4, {1: 3, 2: 1}),
        (A1_28, {1: 1, 5: 1}),
    ],
)
def test_spin_multiplicities(t, spins):
    rep = decompose_under_sl2(t)
    assert rep.multiplicities == spins and rep.total_dim_check == 14


def test_long_root_complement():
    gens = [LONG.f, LONG.e_plus, LONG.e_minus]
    trivial = span([coroot((2, 1)), X((2, 1)), X((-2, -1))])
    assert verify_submodule(gens, trivial, 3, trivial=True)
    doublets = [span([X((1, 0)), X((1, 1))]), span([X((3, 1)), X((3, 2))])]
    assert all(verify_submodule(gens, d, 2) for d in doublets)


def test_reducible_space_detected():
    gens = [SHORT.f, SHORT.e_plus, SHORT.e_minus]
    w = span([X((0, 1)), X((1, 1)), X((2, 1)), X((3, 1)), X((3, 2))])
    assert is_invariant(gens, w)
    assert not verify_submodule(gens, w, 5)
    assert cyclic_submodule(gens, X((3, 2))).dim == 1


def test_tensor_weight_grid():
    w = span(parse_elements("X[-3,-1]; X[-2,-1]; X[-1,-1]; X[0,-1]; X[0,1]; X[1,1]; X[2,1]; X[3,1]"))
    weights = joint_weights(w, [coroot((3, 2)), cartan(1, 0)])
    got = sorted(tuple(c.rational() for c in t) for t in weights)
    assert got == sorted((a, b) for a in (-1, 1) for b in (-3, -1, 1, 3))


def test_direct_sum():
    parts = [span([cartan(1, 0), cartan(0, 1)])] + [span([X(r)]) for r in _roots()]
    assert check_direct_sum(parts).ok
    assert not check_direct_sum(parts + [span([X((1, 0))])]).ok


def _roots():
    from g2sub.roots import ROOTS

    return ROOTS


def test_a1_28_weight_vector():
    v = parse_element("s3*s5*X[1,0]-9*X[0,1]")
    from g2sub.algebra import bracket

    image = bracket(A1_28.f, v)
    assert image == v * image.coords[8] / v.coords[8]
