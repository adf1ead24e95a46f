from g2sub.algebra import cartan, root_vector
from g2sub.regular import (
    LType,
    RegularSpec,
    build_regular,
    classify_regular_types,
    counts_by_dimension,
    enumerate_closed_subsets,
    is_semisimple_subalgebra,
    is_solvable_subalgebra,
    radical_and_levi,
    same_class,
    spec_from_roots,
    total_regular_types,
)
from g2sub.roots import FULL_MASK, ROOTS, mask_of
from g2sub.subspace import CARTAN, FULL, is_subalgebra, span

PLUS_MINUS_2AB = [(2, 1), (-2, -1)]


def test_closed_subsets():
    closed = enumerate_closed_subsets()
    assert 0 in closed and FULL_MASK in closed and len(closed) == 168


def test_build_examples():
    nil3 = build_regular(spec_from_roots([(0, 1), (3, 1), (3, 2)], LType.ZERO))
    assert nil3.dim == 3 and is_subalgebra(nil3)
    a1 = build_regular(spec_from_roots(PLUS_MINUS_2AB, LType.FIXED))
    assert a1.dim == 3 and is_semisimple_subalgebra(a1)
    assert build_regular(RegularSpec(0, LType.FULL_H)) == CARTAN


def test_radical_and_levi():
    radical, levi = radical_and_levi(RegularSpec(FULL_MASK, LType.FULL_H))
    assert radical.dim == 0 and levi == FULL
    radical, levi = radical_and_levi(spec_from_roots([(1, 0)], LType.FULL_H))
    assert levi.dim == 0 and radical.dim == 3 and is_solvable_subalgebra(radical)


def test_parabolic_levi_is_short_root_sl2():
    roots = [(1, 0), (-1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
    radical, levi = radical_and_levi(spec_from_roots(roots, LType.FULL_H))
    assert levi == span([cartan(1, 0), root_vector((1, 0)), root_vector((-1, 0))])
    assert radical.dim == 6


def test_census():
    assert counts_by_dimension() == {0: 1, 1: 3, 2: 6, 3: 11, 4: 13, 5: 11, 6: 8, 7: 4, 8: 4, 9: 2, 14: 1}
    assert total_regular_types() == 64


def test_classes_are_weyl_distinct():
    classes = classify_regular_types()
    for i, a in enumerate(classes):
        for b in classes[i + 1 :]:
            assert not same_class(a.canonical_spec, b.canonical_spec)


def test_every_class_builds_a_subalgebra():
    for c in classify_regular_types():
        s = build_regular(c.canonical_spec)
        assert is_subalgebra(s) and s.dim == c.dimension


def test_weyl_images_share_a_class():
    spec = spec_from_roots([(1, 0)], LType.ZERO)
    other = RegularSpec(mask_of([(-1, -1)]), LType.ZERO)
    assert same_class(spec, other)
    assert len(ROOTS) == 12


def test_killing_form_and_root_metric_agree_on_h():
    from g2sub.algebra import killing_form
    from g2sub.regular import orthogonal_complement, root_metric_on_h
    from g2sub.roots import coroot

    hs = [cartan(1, 0), cartan(0, 1), cartan(1, 1)]
    ratios = {killing_form(x, y) / root_metric_on_h(x, y) for x in hs for y in hs if root_metric_on_h(x, y)}
    assert len(ratios) == 1
    for gamma in [(1, 0), (0, 1), (2, 1), (3, 2)]:
        line = span([coroot(gamma)])
        a = orthogonal_complement(line, CARTAN)
        b = orthogonal_complement(line, CARTAN, form=root_metric_on_h)
        assert a == b and a.dim == 1
