"""The 14-dimensional algebra G2 in the Chevalley basis.

Basis order: H_alpha, H_beta, then the 12 root vectors in ``roots.ROOTS``
order.  Every matrix and report in the package uses this order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg
from .roots import (
    ALPHA,
    BETA,
    ROOT_INDEX,
    ROOTS,
    add,
    coroot_coords,
    is_root,
    neg,
    pairing,
)
from .scalars import ONE, ZERO, FieldElement, fe

DIM = 14
H_OFFSET = 2


def basis_index(root) -> int:
    return H_OFFSET + ROOT_INDEX[tuple(root)]


class AlgElement:
    """Immutable vector of 14 FieldElement coordinates."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords):
        coords = tuple(fe(c) for c in coords)
        if len(coords) != DIM:
            raise ValueError(f"expected {DIM} coordinates, got {len(coords)}")
        self.coords = coords
        self._hash = None

    @classmethod
    def zero(cls) -> AlgElement:
        return _ZERO_ELEMENT

    @classmethod
    def basis(cls, i: int) -> AlgElement:
        return cls([ONE if j == i else ZERO for j in range(DIM)])

    @property
    def h(self) -> tuple:
        return self.coords[:H_OFFSET]

    @property
    def x(self) -> dict:
        return {r: self.coords[basis_index(r)] for r in ROOTS}

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coords) if c]

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        return isinstance(other, AlgElement) and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def __add__(self, other):
        return AlgElement([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return AlgElement([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return AlgElement([-a for a in self.coords])

    def __mul__(self, c):
        c = fe(c)
        return AlgElement([a * c for a in self.coords])

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * fe(c).inverse()

    def __repr__(self):
        from .expr import format_element

        return f"AlgElement({format_element(self)!r})"

    def __str__(self):
        from .expr import format_element

        return format_element(self)


_ZERO_ELEMENT = AlgElement([ZERO] * DIM)


def cartan(a, b) -> AlgElement:
    """a*H_alpha + b*H_beta."""
    return AlgElement([fe(a), fe(b)] + [ZERO] * 12)


def root_vector(root, coeff=1) -> AlgElement:
    coords = [ZERO] * DIM
    coords[basis_index(root)] = fe(coeff)
    return AlgElement(coords)


def basis_element(i: int) -> AlgElement:
    return _basis()[i]


@lru_cache(maxsize=None)
def _basis() -> tuple:
    return tuple(AlgElement.basis(i) for i in range(DIM))


def basis_label(i: int) -> str:
    if i == 0:
        return "H[1,0]"
    if i == 1:
        return "H[0,1]"
    a, b = ROOTS[i - H_OFFSET]
    return f"X[{a},{b}]"


# -- structure constants ---------------------------------------------------

A2B = (1, 1)  # alpha + beta
TWO_A_B = (2, 1)
THREE_A_B = (3, 1)
THREE_A_2B = (3, 2)

BASE_CONSTANTS: dict = {
    (BETA, ALPHA): 1,
    (BETA, THREE_A_B): 1,
    (THREE_A_B, neg(THREE_A_2B)): 1,
    (TWO_A_B, neg(THREE_A_B)): 1,
    (TWO_A_B, neg(THREE_A_2B)): 1,
    (neg(THREE_A_2B), A2B): 1,
    (neg(THREE_A_2B), BETA): 1,
    (neg(THREE_A_B), ALPHA): 1,
    (neg(A2B), BETA): 1,
    (A2B, ALPHA): 2,
    (ALPHA, neg(TWO_A_B)): 2,
    (neg(TWO_A_B), A2B): 2,
    (ALPHA, TWO_A_B): 3,
    (ALPHA, neg(A2B)): 3,
    (A2B, TWO_A_B): 3,
}


@dataclass
class ConstantsReport:
    """Outcome of closing a base table under the two symmetry rules."""

    table: dict
    covered: int
    uncovered: list = field(default_factory=list)
    conflicts: list = field(default_factory=list)
    spurious: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.uncovered or self.conflicts or self.spurious)

    def __bool__(self):
        return self.ok


def required_pairs() -> list:
    """Ordered root pairs (mu, nu) whose sum is a root."""
    return [(m, n) for m in ROOTS for n in ROOTS if is_root(add(m, n))]


def close_constants(base: dict) -> ConstantsReport:
    """Apply N(m,n) = -N(n,m) = -N(-m,-n) and check coverage and consistency."""
    table: dict = {}
    conflicts = []
    for (m, n), value in base.items():
        images = {
            (m, n): value,
            (n, m): -value,
            (neg(m), neg(n)): -value,
            (neg(n), neg(m)): value,
        }
        for pair, v in images.items():
            if pair in table and table[pair] != v:
                conflicts.append((pair, table[pair], v))
            table.setdefault(pair, v)
    required = set(required_pairs())
    uncovered = sorted(required - set(table), key=_pair_key)
    spurious = sorted(set(table) - required, key=_pair_key)
    return ConstantsReport(
        table=table,
        covered=len(required & set(table)),
        uncovered=uncovered,
        conflicts=conflicts,
        spurious=spurious,
    )


def _pair_key(pair):
    return (ROOT_INDEX.get(pair[0], -1), ROOT_INDEX.get(pair[1], -1))


def verify_constants_complete(base: dict | None = None) -> ConstantsReport:
    return close_constants(BASE_CONSTANTS if base is None else base)


@lru_cache(maxsize=None)
def structure_constants() -> dict:
    report = close_constants(BASE_CONSTANTS)
    if not report.ok:
        raise AssertionError(f"inconsistent structure constants: {report}")
    return report.table


@lru_cache(maxsize=None)
def _bracket_table() -> tuple:
    """table[i][j] = sparse tuple of (k, Fraction) giving [e_i, e_j]."""
    n_const = structure_constants()
    out = [[() for _ in range(DIM)] for _ in range(DIM)]
    simple_h = (ALPHA, BETA)
    for i in range(DIM):
        for j in range(DIM):
            if i < H_OFFSET and j < H_OFFSET:
                continue
            if i < H_OFFSET:
                nu = ROOTS[j - H_OFFSET]
                out[i][j] = ((j, pairing(simple_h[i], nu)),)
            elif j < H_OFFSET:
                mu = ROOTS[i - H_OFFSET]
                out[i][j] = ((i, -pairing(simple_h[j], mu)),)
            else:
                mu, nu = ROOTS[i - H_OFFSET], ROOTS[j - H_OFFSET]
                s = add(mu, nu)
                if s == (0, 0):
                    ca, cb = coroot_coords(mu)
                    out[i][j] = tuple((k, c) for k, c in ((0, ca), (1, cb)) if c)
                elif is_root(s):
                    out[i][j] = ((basis_index(s), Fraction(n_const[(mu, nu)])),)
    return tuple(tuple(row) for row in out)


def bracket(x: AlgElement, y: AlgElement) -> AlgElement:
    table = _bracket_table()
    acc: dict = {}
    ys = [(j, c) for j, c in enumerate(y.coords) if c]
    for i, a in enumerate(x.coords):
        if not a:
            continue
        row = table[i]
        for j, b in ys:
            ab = None
            for k, c in row[j]:
                if ab is None:
                    ab = a * b
                acc[k] = acc.get(k, ZERO) + ab * c
    return AlgElement([acc.get(k, ZERO) for k in range(DIM)])


def ad(x: AlgElement) -> list:
    """Matrix of bracket(x, .) with columns indexed by the basis."""
    cols = [bracket(x, e).coords for e in _basis()]
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


def apply_matrix(matrix, x: AlgElement) -> AlgElement:
    return AlgElement(linalg.matvec(matrix, x.coords))


def killing_form(x: AlgElement, y: AlgElement) -> FieldElement:
    return fe(linalg.trace(linalg.matmul(ad(x), ad(y))))


# -- element classification ------------------------------------------------


def _ad_native(x):
    return linalg.native(ad(x))


def is_nilpotent_element(x: AlgElement) -> bool:
    return linalg.is_zero_matrix(linalg.matpow(_ad_native(x), DIM))


def is_semisimple_element(x: AlgElement) -> bool:
    return linalg.is_squarefree(linalg.minpoly(_ad_native(x)))


def ad_charpoly(x: AlgElement) -> list:
    return linalg.charpoly(_ad_native(x))


def count_distinct_eigenvalues(x: AlgElement) -> int:
    return linalg.count_distinct_roots(ad_charpoly(x))


def is_regular_element(x: AlgElement) -> bool:
    return count_distinct_eigenvalues(x) == 13


def ad_rank(x: AlgElement) -> int:
    return linalg.rank(_ad_native(x))


def semisimple_part(x: AlgElement) -> AlgElement:
    """Semisimple Jordan part of x, recovered from that of ad(x).

    ad is injective on G2, so the unique y with ad(y) = ad(x)_s is found by a
    linear solve against the columns of ad.
    """
    target = linalg.semisimple_part(_ad_native(x))
    # ad(y) is linear in y: stack the 196 entries of ad(e_k) as columns
    ads = [linalg.native(ad(e)) for e in _basis()]
    system = [[ads[k][i][j] for k in range(DIM)] for i in range(DIM) for j in range(DIM)]
    rhs = [target[i][j] for i in range(DIM) for j in range(DIM)]
    sol = linalg.solve(system, rhs)
    if sol is None:
        raise ArithmeticError("semisimple part of ad(x) is not inner")
    return AlgElement(sol)


# -- automorphisms ---------------------------------------------------------


class Automorphism:
    """Linear map of G2 given by its 14x14 matrix (columns = basis images)."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = [[fe(c) for c in row] for row in matrix]

    @classmethod
    def from_images(cls, images) -> Automorphism:
        return cls([[images[j].coords[i] for j in range(DIM)] for i in range(DIM)])

    @classmethod
    def identity(cls) -> Automorphism:
        return cls(linalg.identity(DIM))

    def __call__(self, x: AlgElement) -> AlgElement:
        return apply_matrix(self.matrix, x)

    def __matmul__(self, other: Automorphism) -> Automorphism:
        return Automorphism(linalg.matmul(self.matrix, other.matrix))

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.matrix == other.matrix

    def image(self, i: int) -> AlgElement:
        return AlgElement([row[i] for row in self.matrix])

    def preserves_brackets(self) -> bool:
        images = [self.image(i) for i in range(DIM)]
        for i in range(DIM):
            for j in range(i + 1, DIM):
                lhs = self(bracket(basis_element(i), basis_element(j)))
                if lhs != bracket(images[i], images[j]):
                    return False
        return True


def exp_ad(c, n: AlgElement) -> Automorphism:
    """exp(c * ad n) for nilpotent n; the series stops at k = 13."""
    c = fe(c)
    if not is_nilpotent_element(n):
        raise ValueError("exp_ad needs a nilpotent argument")
    images = []
    for e in _basis():
        total = e
        term = e
        for k in range(1, DIM):
            term = bracket(n, term)
            if not term:
                break
            total = total + term * (c**k / factorial(k))
        images.append(total)
    return Automorphism.from_images(images)


def weyl_as_automorphism(gamma) -> Automorphism:
    """exp(ad X_g) exp(-ad X_-g) exp(ad X_g): realizes the reflection s_g."""
    gamma = tuple(gamma)
    if not is_root(gamma):
        raise ValueError(f"{gamma} is not a root")
    xg = root_vector(gamma)
    xmg = root_vector(neg(gamma))
    return exp_ad(1, xg) @ exp_ad(-1, xmg) @ exp_ad(1, xg)


def rescaling_automorphism(u, v) -> Automorphism:
    """Fix h and send X_{k alpha + l beta} to u^k v^l X_{k alpha + l beta}."""
    u, v = fe(u), fe(v)
    if not u or not v:
        raise ValueError("rescaling factors must be nonzero")
    diag = [ONE, ONE] + [u ** r[0] * v ** r[1] for r in ROOTS]
    return Automorphism(
        [[diag[i] if i == j else ZERO for j in range(DIM)] for i in range(DIM)]
    )


def jacobi_failures(triples=None) -> list:
    """Basis index triples where the Jacobi identity fails."""
    basis = _basis()
    out = []
    if triples is None:
        triples = ((i, j, k) for i in range(DIM) for j in range(DIM) for k in range(DIM))
    for i, j, k in triples:
        x, y, z = basis[i], basis[j], basis[k]
        s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        if s:
            out.append((i, j, k))
    return out
