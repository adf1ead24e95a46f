"""Regular subalgebras g(Sigma, L) = L + sum of root spaces over a closed Sigma.

Type counting convention (see ``classify_regular_types``): for each Weyl
orbit of closed Sigma, with L_min the span of the coroots of the symmetric
part, the admissible L are grouped as

* dim L_min = 2: L = h only;
* dim L_min = 1: L = L_min and L = h;
* dim L_min = 0: L = 0, a one-parameter family of lines (one type), L = h.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .algebra import AlgElement, cartan, killing_form, root_vector
from .roots import (
    FULL_MASK,
    POSITIVE_MASK,
    coroot,
    inner_product,
    is_closed,
    canonical_mask,
    mask_of,
    roots_of,
    symmetric_part,
    weyl_group,
    weyl_orbit_of_subset,
)
from .subspace import (
    CARTAN,
    ZERO_SPACE,
    Subspace,
    bracket_space,
    derived_series,
    is_subalgebra,
    span,
)


class LType(enum.Enum):
    ZERO = "zero"
    LINE_FAMILY = "line"
    FIXED = "fixed"  # L = L_min, a proper nonzero subspace of h
    FULL_H = "h"


@dataclass(frozen=True)
class RegularSpec:
    sigma: int
    l_type: LType

    @property
    def roots(self) -> list:
        return roots_of(self.sigma)

    @property
    def symmetric(self) -> int:
        return symmetric_part(self.sigma)


@dataclass(frozen=True)
class RegularClass:
    canonical_spec: RegularSpec
    dimension: int
    is_family: bool
    radical_dim: int
    levi_dim: int


def enumerate_closed_subsets() -> list[int]:
    return [m for m in range(FULL_MASK + 1) if is_closed(m)]


def minimal_cartan(sigma: int) -> Subspace:
    """L_min: span of [X_g, X_-g] over the symmetric part of sigma."""
    return span(coroot(r) for r in roots_of(symmetric_part(sigma)))


def l_types_for(sigma: int) -> list[LType]:
    d = minimal_cartan(sigma).dim
    if d == 2:
        return [LType.FULL_H]
    if d == 1:
        return [LType.FIXED, LType.FULL_H]
    return [LType.ZERO, LType.LINE_FAMILY, LType.FULL_H]


def l_dim(spec: RegularSpec) -> int:
    if spec.l_type is LType.ZERO:
        return 0
    if spec.l_type is LType.LINE_FAMILY:
        return 1
    if spec.l_type is LType.FULL_H:
        return 2
    return minimal_cartan(spec.sigma).dim


def representative_l(spec: RegularSpec, sample=None) -> Subspace:
    """A concrete L for the spec; line families use the line through ``sample``."""
    if spec.l_type is LType.ZERO:
        return ZERO_SPACE
    if spec.l_type is LType.FULL_H:
        return CARTAN
    if spec.l_type is LType.FIXED:
        return minimal_cartan(spec.sigma)
    sample = sample if sample is not None else cartan(1, 2)
    return span([sample])


def is_admissible(spec: RegularSpec, l_space: Subspace) -> bool:
    if not CARTAN.contains_space(l_space):
        return False
    if not l_space.contains_space(minimal_cartan(spec.sigma)):
        return False
    return l_space.dim == l_dim(spec)


def build_regular(spec: RegularSpec, l_space: Subspace | None = None) -> Subspace:
    if not is_closed(spec.sigma):
        raise ValueError("sigma is not closed")
    if l_space is None:
        l_space = representative_l(spec)
    if not is_admissible(spec, l_space):
        raise ValueError("L is not admissible for this sigma and L-type")
    return span(list(l_space.basis) + [root_vector(r) for r in spec.roots])


def orthogonal_complement(inner: Subspace, outer: Subspace, form=killing_form) -> Subspace:
    """{x in outer : form(x, y) = 0 for all y in inner}."""
    if not outer.basis:
        return ZERO_SPACE
    if not inner.basis:
        return outer
    matrix = [[form(y, x) for x in outer.basis] for y in inner.basis]
    out = []
    for sol in linalg.nullspace(matrix):
        acc = AlgElement.zero()
        for c, x in zip(sol, outer.basis):
            if c:
                acc = acc + x * c
        out.append(acc)
    return span(out)


def root_metric_on_h(x: AlgElement, y: AlgElement):
    """Metric on h transported from the root inner product via coroots."""
    # H_u, H_v pair to 4(u,v)/((u,u)(v,v)); extend bilinearly in the simple coroots
    ha, hb = (1, 0), (0, 1)
    gram = [
        [
            Fraction(4) * inner_product(u, v) / (inner_product(u, u) * inner_product(v, v))
            for v in (ha, hb)
        ]
        for u in (ha, hb)
    ]
    xs, ys = x.coords[:2], y.coords[:2]
    total = 0
    for i in range(2):
        for j in range(2):
            total = total + xs[i] * ys[j] * gram[i][j]
    return total


def radical_and_levi(spec: RegularSpec, l_space: Subspace | None = None):
    """(radical, Levi factor) of g(Sigma, L)."""
    if l_space is None:
        l_space = representative_l(spec)
    if not is_admissible(spec, l_space):
        raise ValueError("L is not admissible")
    sym = spec.symmetric
    l_min = minimal_cartan(spec.sigma)
    l_tilde = orthogonal_complement(l_min, l_space)
    radical = span(
        list(l_tilde.basis) + [root_vector(r) for r in roots_of(spec.sigma & ~sym)]
    )
    levi = span(list(l_min.basis) + [root_vector(r) for r in roots_of(sym)])
    return radical, levi


def is_semisimple_subalgebra(s: Subspace) -> bool:
    """Perfect with a nondegenerate restricted Killing form."""
    if not s.basis:
        return True
    if not is_subalgebra(s) or bracket_space(s, s).dim != s.dim:
        return False
    gram = [[killing_form(x, y) for y in s.basis] for x in s.basis]
    return linalg.rank(gram) == s.dim


def is_solvable_subalgebra(s: Subspace) -> bool:
    return derived_series(s)[-1].dim == 0


def act_on_spec(w, spec: RegularSpec) -> RegularSpec:
    return RegularSpec(w.act_on_mask(spec.sigma), spec.l_type)


def canonical_spec(spec: RegularSpec) -> RegularSpec:
    return RegularSpec(canonical_mask(spec.sigma), spec.l_type)


@lru_cache(maxsize=None)
def _classes() -> tuple:
    out = []
    seen = set()
    for m in enumerate_closed_subsets():
        key = canonical_mask(m)
        if key in seen:
            continue
        seen.add(key)
        for lt in l_types_for(key):
            spec = RegularSpec(key, lt)
            radical, levi = radical_and_levi(spec)
            out.append(
                RegularClass(
                    canonical_spec=spec,
                    dimension=l_dim(spec) + bin(key).count("1"),
                    is_family=lt is LType.LINE_FAMILY,
                    radical_dim=radical.dim,
                    levi_dim=levi.dim,
                )
            )
    out.sort(key=lambda c: (c.dimension, c.canonical_spec.sigma, c.canonical_spec.l_type.value))
    return tuple(out)


def classify_regular_types() -> list[RegularClass]:
    return list(_classes())


def counts_by_dimension(classes=None) -> dict:
    classes = classify_regular_types() if classes is None else classes
    return dict(sorted(Counter(c.dimension for c in classes).items()))


def total_regular_types() -> int:
    return len(classify_regular_types())


def nonsymmetric_part_positive(sigma: int):
    """A Weyl element moving sigma minus its symmetric part into the positive roots."""
    rest = sigma & ~symmetric_part(sigma)
    for w in weyl_group():
        if w.act_on_mask(rest) & ~POSITIVE_MASK == 0:
            return w
    return None


def spec_from_roots(roots, l_type: LType) -> RegularSpec:
    return RegularSpec(mask_of(roots), l_type)


def same_class(a: RegularSpec, b: RegularSpec) -> bool:
    return a.l_type is b.l_type and b.sigma in weyl_orbit_of_subset(a.sigma)
