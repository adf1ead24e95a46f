"""Subspaces of G2 kept in reduced echelon form, and what to ask of them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .algebra import (
    DIM,
    H_OFFSET,
    AlgElement,
    Automorphism,
    basis_element,
    basis_index,
    bracket,
    is_nilpotent_element,
    semisimple_part,
)
from .roots import POSITIVE_ROOTS
from .scalars import ZERO, fe


@dataclass(frozen=True)
class Subspace:
    """Echelon basis: pivots increasing in basis order, pivot entries 1."""

    basis: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def reduce(self, x: AlgElement) -> AlgElement:
        """Remainder of x after clearing every pivot column of self."""
        coords = list(x.coords)
        for v, p in zip(self.basis, self.pivots):
            c = coords[p]
            if c:
                coords = [a - c * b if b else a for a, b in zip(coords, v.coords)]
        return AlgElement(coords)

    def __contains__(self, x: AlgElement) -> bool:
        return not self.reduce(x)

    def contains_space(self, other: Subspace) -> bool:
        return all(v in self for v in other.basis)

    def __add__(self, other: Subspace) -> Subspace:
        return span(self.basis + other.basis)

    def intersect(self, other: Subspace) -> Subspace:
        # x = sum a_i u_i = sum b_j v_j; solve on the stacked coordinates
        if not self.basis or not other.basis:
            return ZERO_SPACE
        cols = [u.coords for u in self.basis] + [tuple(-c for c in v.coords) for v in other.basis]
        matrix = [[col[i] for col in cols] for i in range(DIM)]
        out = []
        for sol in linalg.nullspace(matrix):
            acc = AlgElement.zero()
            for a, u in zip(sol[: self.dim], self.basis):
                if a:
                    acc = acc + u * fe(a)
            out.append(acc)
        return span(out)

    def pivot_labels(self) -> list[int]:
        return list(self.pivots)

    def transport(self, auto: Automorphism) -> Subspace:
        return span(auto(v) for v in self.basis)


def span(gens) -> Subspace:
    rows = [list(g.coords) for g in gens]
    rows = [r for r in rows if any(r)]
    basis, pivots = linalg.rref(rows, DIM)
    return Subspace(tuple(AlgElement(r) for r in basis), tuple(pivots))


ZERO_SPACE = Subspace((), ())
FULL = span(basis_element(i) for i in range(DIM))
CARTAN = span(basis_element(i) for i in range(H_OFFSET))
NILRADICAL = span(basis_element(basis_index(r)) for r in POSITIVE_ROOTS)
BOREL = CARTAN + NILRADICAL


def bracket_space(a: Subspace, b: Subspace) -> Subspace:
    return span(bracket(x, y) for x in a.basis for y in b.basis)


def is_subalgebra(s: Subspace) -> bool:
    return all(bracket(x, y) in s for x, y in combinations(s.basis, 2))


def generated_subalgebra(gens) -> Subspace:
    s = span(gens)
    while True:
        grown = s + bracket_space(s, s)
        if grown.dim == s.dim:
            return s
        s = grown


def _require_subalgebra(s: Subspace):
    if not is_subalgebra(s):
        raise ValueError("not a subalgebra")


def derived_series(s: Subspace) -> list[Subspace]:
    _require_subalgebra(s)
    out = [s]
    while True:
        nxt = bracket_space(out[-1], out[-1])
        if nxt.dim == out[-1].dim:
            return out
        out.append(nxt)


def lower_central_series(s: Subspace) -> list[Subspace]:
    _require_subalgebra(s)
    out = [s]
    while True:
        nxt = bracket_space(s, out[-1])
        if nxt.dim == out[-1].dim:
            return out
        out.append(nxt)


def _kernel_of(images_per_basis) -> Subspace:
    """Span of x = sum c_k e_k with sum c_k images[k] == 0 (stacked vectors)."""
    rows = len(images_per_basis[0])
    matrix = [[images_per_basis[k][r] for k in range(DIM)] for r in range(rows)]
    matrix = [row for row in matrix if any(row)]
    if not matrix:
        return FULL
    return span(AlgElement(v) for v in linalg.nullspace(matrix))


def normalizer(s: Subspace) -> Subspace:
    """{x : [x, S] in S}: kernel of x -> ([x, s_i] mod S)_i."""
    if not s.basis:
        return FULL
    images = []
    for k in range(DIM):
        e = basis_element(k)
        stacked = []
        for v in s.basis:
            stacked.extend(s.reduce(bracket(e, v)).coords)
        images.append(stacked)
    return _kernel_of(images)


def normalizer_map_rank(s: Subspace) -> int:
    return DIM - normalizer(s).dim


def centralizer(s: Subspace) -> Subspace:
    if not s.basis:
        return FULL
    images = []
    for k in range(DIM):
        e = basis_element(k)
        stacked = []
        for v in s.basis:
            stacked.extend(bracket(e, v).coords)
        images.append(stacked)
    return _kernel_of(images)


def is_regular_form(s: Subspace) -> bool:
    """S is the sum of its intersections with h and the root spaces."""
    for v in s.basis:
        h_part = AlgElement(v.coords[:H_OFFSET] + (ZERO,) * (DIM - H_OFFSET))
        if h_part not in s:
            return False
        for i in range(H_OFFSET, DIM):
            if v.coords[i] and basis_element(i) not in s:
                return False
    return True


def probe_elements(s: Subspace) -> list[AlgElement]:
    """Echelon basis vectors, then pairwise sums."""
    out = list(s.basis)
    out += [x + y for x, y in combinations(s.basis, 2)]
    return out


def contains_nonzero_semisimple(s: Subspace, derived=None) -> bool:
    """Semi-decision: a probe whose semisimple Jordan part is nonzero and in S.

    A True answer is always certified by an explicit semisimple element of S.
    False means no probe produced one; see ``probe_elements``.
    """
    probes = probe_elements(s)
    if derived is not None and derived[-1].dim:
        probes = list(derived[-1].basis) + probes
    for f in probes:
        if is_nilpotent_element(f):
            continue
        fs = semisimple_part(f)
        if fs and fs in s:
            return True
    return False


@dataclass(frozen=True)
class InvariantVector:
    dim: int
    derived_dims: tuple
    lcs_dims: tuple
    normalizer_dim: int
    centralizer_dim: int
    is_solvable: bool
    is_nilpotent_alg: bool
    contains_nonzero_semisimple: bool


def invariant_vector(s: Subspace) -> InvariantVector:
    ds = derived_series(s)
    lcs = lower_central_series(s)
    return InvariantVector(
        dim=s.dim,
        derived_dims=tuple(x.dim for x in ds),
        lcs_dims=tuple(x.dim for x in lcs),
        normalizer_dim=normalizer(s).dim,
        centralizer_dim=centralizer(s).dim,
        is_solvable=ds[-1].dim == 0,
        is_nilpotent_alg=lcs[-1].dim == 0,
        contains_nonzero_semisimple=contains_nonzero_semisimple(s, ds),
    )
