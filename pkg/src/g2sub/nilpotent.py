"""Nilpotent elements and subalgebras of the nilradical n.

Orbits are told apart by rank(ad x): the four nonzero nilpotent orbits have
dimensions 6, 8, 10, 12 and the orbit dimension is the rank of ad.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from . import linalg
from .algebra import (
    DIM,
    H_OFFSET,
    AlgElement,
    ad,
    ad_rank,
    basis_index,
    bracket,
    is_nilpotent_element,
    root_vector,
)
from .roots import ALPHA, BETA, POSITIVE_ROOTS, pairing
from .scalars import fe
from .subspace import (
    BOREL,
    CARTAN,
    NILRADICAL,
    Subspace,
    generated_subalgebra,
    is_regular_form,
    is_subalgebra,
)

# -- orbit labels ----------------------------------------------------------


@dataclass(frozen=True)
class OrbitLabel:
    name: str
    orbit_dim: int


ZERO_ORBIT = OrbitLabel("ZERO", 0)
A1 = OrbitLabel("A1", 6)
A1_TILDE = OrbitLabel("A1_TILDE", 8)
A1_4 = OrbitLabel("A1_4", 10)
A1_28 = OrbitLabel("A1_28", 12)

ORBITS = (ZERO_ORBIT, A1, A1_TILDE, A1_4, A1_28)
ORBIT_BY_DIM = {o.orbit_dim: o for o in ORBITS}
ORBIT_BY_NAME = {o.name: o for o in ORBITS}

# smallest k with ad(x)^k = 0, read off the largest sl2 weight in each orbit
NILPOTENCY_ORDER = {"ZERO": 1, "A1": 3, "A1_TILDE": 4, "A1_4": 5, "A1_28": 11}


class UnexpectedRank(AssertionError):
    """A nilpotent element whose ad-rank is not an orbit dimension."""


def classify_nilpotent(x: AlgElement) -> OrbitLabel:
    if not is_nilpotent_element(x):
        raise ValueError("element is not nilpotent")
    r = ad_rank(x)
    if r not in ORBIT_BY_DIM:
        raise UnexpectedRank(f"nilpotent element with ad-rank {r}")
    return ORBIT_BY_DIM[r]


def ad_power_apply(x: AlgElement, k: int, y: AlgElement) -> AlgElement:
    """ad(x)^k applied to y."""
    for _ in range(k):
        y = bracket(x, y)
    return y


# -- pencils ---------------------------------------------------------------


def _poly_matrix(a, b):
    """Entries a + t*b as coefficient lists."""
    return [[linalg.poly_trim([x, y]) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _poly_matmul(p, q):
    n = len(p)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = []
            for k in range(n):
                if p[i][k] and q[k][j]:
                    acc = linalg.poly_add(acc, linalg.poly_mul(p[i][k], q[k][j]))
            row.append(acc)
        out.append(row)
    return out


def pencil_power_gcd(u: AlgElement, v: AlgElement, k: int) -> list:
    """Monic gcd over all entries of ad(u + t v)^k, as a polynomial in t.

    ``[]`` means the power vanishes identically.
    """
    m = _poly_matrix(linalg.native(ad(u)), linalg.native(ad(v)))
    power = m
    for _ in range(k - 1):
        power = _poly_matmul(power, m)
    g = []
    for row in power:
        for entry in row:
            if entry:
                g = linalg.poly_gcd(g, entry) if g else linalg.poly_monic(entry)
    return g


@dataclass(frozen=True)
class PencilLines:
    """Lines C(u + t v), plus C v, on which ad^k vanishes (counted over C)."""

    finite_roots: int
    at_infinity: bool
    identically: bool

    @property
    def count(self) -> int:
        return self.finite_roots + int(self.at_infinity)


def ad_power_matrix_nonzero(x: AlgElement, k: int) -> bool:
    return not linalg.is_zero_matrix(linalg.matpow(linalg.native(ad(x)), k))


def pencil_orbit_lines(u: AlgElement, v: AlgElement, orbit: OrbitLabel) -> PencilLines:
    """Lines of span(u, v) inside the closure of ``orbit`` but off the smaller orbits.

    The closure of an orbit is cut out by ad^k = 0 with k its nilpotency
    order; lines counted here satisfy that and share no root with the
    vanishing locus of the next smaller order.
    """
    k = NILPOTENCY_ORDER[orbit.name]
    smaller = max((o for o in NILPOTENCY_ORDER.values() if o < k), default=None)
    g = pencil_power_gcd(u, v, k)
    at_inf = not ad_power_matrix_nonzero(v, k)
    if smaller is not None:
        if at_inf and not ad_power_matrix_nonzero(v, smaller):
            at_inf = False
        if g:
            h = pencil_power_gcd(u, v, smaller)
            if h:
                common = linalg.poly_gcd(g, h)
                g = linalg.poly_divmod(g, common)[0] if len(common) > 1 else g
    if not g:
        return PencilLines(0, at_inf, True)
    return PencilLines(len(linalg.squarefree_part(g)) - 1, at_inf, False)


# -- subalgebras of n by pivot shape ---------------------------------------

# positive roots numbered 1..6 in basis order: a, b, a+b, 2a+b, 3a+b, 3a+2b
_POS_COLUMNS = [basis_index(r) for r in POSITIVE_ROOTS]


def _sets(*groups):
    return tuple(frozenset(g) for g in groups)


# (row, admissible pivot sets, alpha-vector must avoid X_beta)
NILRADICAL_SHAPES = (
    (1, _sets(()), False),
    (2, _sets((5, 6)), False),
    (3, _sets((4, 5, 6)), False),
    (4, _sets((3, 4, 5, 6)), False),
    (5, _sets((1, 2, 3, 4, 5, 6)), False),
    (6, _sets((5,), (6,)), False),
    (7, _sets((4,)), False),
    (8, _sets((3,)), False),
    (9, _sets((1,), (2,)), False),
    (10, _sets((4, 5), (4, 6)), False),
    (11, _sets((3, 5, 6)), False),
    (12, _sets((3, 5), (3, 6)), False),
    (13, _sets((1, 5), (1, 6)), True),
    (14, _sets((1, 6), (2, 6)), False),
    (15, _sets((1, 5, 6), (2, 5, 6)), False),
    (16, _sets((2, 4)), False),
    (17, _sets((1, 4, 5, 6), (2, 4, 5, 6)), False),
    (18, _sets((2, 3)), False),
    (19, _sets((1, 3, 4, 5, 6), (2, 3, 4, 5, 6)), False),
    (20, _sets((3, 4, 6)), False),
    (21, _sets((1, 4, 5)), True),
    (22, _sets((2, 4, 6)), False),
    (23, _sets((2, 3, 5, 6)), False),
    (24, _sets((2, 3, 6)), False),
    (25, _sets((2, 3, 4, 6)), False),
)


@dataclass(frozen=True)
class SchemaSignature:
    leading_roots: tuple
    row: int


class SchemaMismatch(AssertionError):
    """A subalgebra of n fitting none of the 25 shapes."""


def leading_positions(s: Subspace) -> tuple:
    """1-based positive-root numbers of the echelon pivots of S inside n."""
    return tuple(_POS_COLUMNS.index(p) + 1 for p in s.pivots)


def _alpha_vector_has_beta(s: Subspace) -> bool:
    col_a, col_b = basis_index(ALPHA), basis_index(BETA)
    for v, p in zip(s.basis, s.pivots):
        if p == col_a:
            return bool(v.coords[col_b])
    return False


def match_table10_schema(s: Subspace) -> SchemaSignature:
    """First row whose shape fits; rows 13 and 14 share the pivot set {1, 6}."""
    if not NILRADICAL.contains_space(s):
        raise ValueError("subspace is not contained in n")
    if not is_subalgebra(s):
        raise ValueError("not a subalgebra")
    pos = frozenset(leading_positions(s))
    has_beta = _alpha_vector_has_beta(s)
    leading = tuple(POSITIVE_ROOTS[i - 1] for i in sorted(pos))
    for row, shapes, no_beta in NILRADICAL_SHAPES:
        if pos in shapes and not (no_beta and has_beta):
            return SchemaSignature(leading, row)
    raise SchemaMismatch(f"no schema for pivots {sorted(pos)} (beta on alpha vector: {has_beta})")


def random_nilradical_subalgebra(rng: random.Random, max_gens: int = 3, coeff: int = 3) -> Subspace:
    """Subalgebra of n generated by a few sparse random integer combinations."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        roots = rng.sample(POSITIVE_ROOTS, rng.randint(1, 3))
        x = AlgElement.zero()
        for r in roots:
            c = rng.choice([c for c in range(-coeff, coeff + 1) if c])
            x = x + root_vector(r, c)
        gens.append(x)
    return generated_subalgebra(gens)


def fuzz_subalgebras(seed: int, count: int) -> list[Subspace]:
    rng = random.Random(seed)
    return [random_nilradical_subalgebra(rng) for _ in range(count)]


# -- shapes inside the Borel subalgebra ------------------------------------


class Branch(enum.Enum):
    INSIDE_N = "inside_n"
    SEMISIMPLE_PLUS_ROOT = "semisimple_plus_root"
    CARTAN_GENERATOR = "cartan"


class ShapeFinding(ValueError):
    """A solvable subalgebra of b whose shape the trichotomy does not cover."""


@dataclass(frozen=True)
class BorelShape:
    branch: Branch
    cartan_part: AlgElement | None = None
    gamma: tuple | None = None
    coefficient: object = None


def root_value(gamma, x: AlgElement):
    """gamma evaluated on the Cartan part of x."""
    a, b = x.coords[0], x.coords[1]
    return a * pairing(ALPHA, gamma) + b * pairing(BETA, gamma)


def cartan_component(x: AlgElement) -> AlgElement:
    return AlgElement(x.coords[:H_OFFSET] + (fe(0),) * (DIM - H_OFFSET))


def borel_shape(s: Subspace) -> BorelShape:
    if not BOREL.contains_space(s):
        raise ValueError("subspace is not contained in the Borel subalgebra")
    n_part = s.intersect(NILRADICAL)
    codim = s.dim - n_part.dim
    if codim == 0:
        return BorelShape(Branch.INSIDE_N)
    if codim > 1:
        raise ShapeFinding(f"S meets n in codimension {codim}")
    in_h = s.intersect(CARTAN)
    if in_h.dim:
        return BorelShape(Branch.CARTAN_GENERATOR, cartan_part=in_h.basis[0])
    f = s.basis[0]  # the H columns come first, so this vector carries the H pivot
    x = cartan_component(f)
    rest = n_part.reduce(f - x)
    for gamma in POSITIVE_ROOTS:
        if root_value(gamma, x):
            continue
        xg = n_part.reduce(root_vector(gamma))
        if not xg:
            continue
        col = next(i for i, c in enumerate(xg.coords) if c)
        lam = rest.coords[col] / xg.coords[col]
        if lam and rest == xg * lam:
            return BorelShape(Branch.SEMISIMPLE_PLUS_ROOT, x, gamma, lam)
    raise ShapeFinding("S/(S meet n) is not spanned by x + c X_gamma with gamma(x) = 0")


def lemma5_branch(s: Subspace) -> Branch:
    return borel_shape(s).branch


# -- nonregular nilpotent subalgebras --------------------------------------


@dataclass
class EntryReport:
    checks: list = field(default_factory=list)  # (name, ok, detail)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c[1]]


def generic_element(s: Subspace) -> AlgElement:
    """Deterministic combination of the echelon basis with coefficients 1, 2, 3, ..."""
    acc = AlgElement.zero()
    for k, v in enumerate(s.basis, start=1):
        acc = acc + v * k
    return acc


def nilpotent_probes(s: Subspace) -> list[AlgElement]:
    out = list(s.basis)
    out += [s.basis[i] + s.basis[j] for i in range(s.dim) for j in range(i + 1, s.dim)]
    if s.dim > 1:
        out.append(generic_element(s))
    return out


def verify_corollary1_entry(s: Subspace, expected_labels=(), generic=None, pencils=()) -> EntryReport:
    """Subalgebra of nilpotents, not in regular form, with the stated orbit labels.

    ``expected_labels`` is a list of (element, OrbitLabel); ``generic`` an
    OrbitLabel for ``generic_element(s)``; each of ``pencils`` is a
    (u, v, OrbitLabel, count) saying how many lines of span(u, v) lie in
    the given orbit.
    """
    from .expr import format_element

    rep = EntryReport()
    rep.add("subalgebra", is_subalgebra(s))
    rep.add("probes_nilpotent", all(is_nilpotent_element(p) for p in nilpotent_probes(s)))
    rep.add("not_regular_form", not is_regular_form(s))
    for x, label in expected_labels:
        in_s = x in s
        got = classify_nilpotent(x) if in_s else None
        rep.add(
            f"label {format_element(x)}",
            in_s and got == label,
            f"expected {label.name}, got {got.name if got else 'element not in S'}",
        )
    if generic is not None:
        got = classify_nilpotent(generic_element(s))
        rep.add("generic_label", got == generic, f"expected {generic.name}, got {got.name}")
    for u, v, label, count in pencils:
        lines = pencil_orbit_lines(u, v, label)
        rep.add(
            f"pencil_lines {label.name}",
            u in s and v in s and not lines.identically and lines.count == count,
            f"expected {count}, got {lines.count}",
        )
    return rep
