"""The G2 root system in (alpha, beta) coordinates.

A root ``(a, b)`` means ``a*alpha + b*beta``; alpha is short, beta is long.
Subsets of roots are 12-bit masks indexed by position in ``ROOTS``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

Root = tuple  # (a, b) integer pair

POSITIVE_ROOTS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))

# Total order: -(3a+2b) < ... < -a < 0 < a < b < a+b < ... < 3a+2b
ROOTS = tuple((-a, -b) for a, b in reversed(POSITIVE_ROOTS)) + POSITIVE_ROOTS
ROOT_INDEX = {r: i for i, r in enumerate(ROOTS)}
ALPHA, BETA = (1, 0), (0, 1)

FULL_MASK = (1 << 12) - 1
POSITIVE_MASK = sum(1 << ROOT_INDEX[r] for r in POSITIVE_ROOTS)

# Gram matrix of the simple roots: (a,a)=1, (b,b)=3, (a,b)=-3/2
_GRAM = ((Fraction(1), Fraction(-3, 2)), (Fraction(-3, 2), Fraction(3)))


def neg(r):
    return (-r[0], -r[1])


def add(r, s):
    return (r[0] + s[0], r[1] + s[1])


def is_root(v) -> bool:
    return tuple(v) in ROOT_INDEX


def inner_product(u, v) -> Fraction:
    return (
        u[0] * v[0] * _GRAM[0][0]
        + (u[0] * v[1] + u[1] * v[0]) * _GRAM[0][1]
        + u[1] * v[1] * _GRAM[1][1]
    )


def pairing(mu, nu) -> Fraction:
    """``2(mu, nu)/(mu, mu)``: the eigenvalue of H_mu on X_nu."""
    return 2 * inner_product(mu, nu) / inner_product(mu, mu)


def is_long(r) -> bool:
    return inner_product(r, r) == 3


def root_order_less(x, y) -> bool:
    return ROOT_INDEX[tuple(x)] < ROOT_INDEX[tuple(y)]


def coroot_coords(v) -> tuple[Fraction, Fraction]:
    """Coefficients (c_a, c_b) with H_v = c_a*H_alpha + c_b*H_beta.

    H_v acts on X_nu by 2(v,nu)/(v,v); matching against the simple coroots
    gives v/(v,v) = c_a*alpha/(alpha,alpha) + c_b*beta/(beta,beta).
    """
    a, b = Fraction(v[0]), Fraction(v[1])
    q = inner_product((a, b), (a, b))
    if q == 0:
        raise ValueError("coroot of the zero vector")
    return a * _GRAM[0][0] / q, b * _GRAM[1][1] / q


def coroot(v):
    """H_v as an algebra element."""
    from .algebra import cartan

    return cartan(*coroot_coords(v))


def perpendicular_root(gamma):
    """The positive root orthogonal to ``gamma``."""
    for r in POSITIVE_ROOTS:
        if inner_product(r, gamma) == 0:
            return r
    raise ValueError(f"no root orthogonal to {gamma}")


# -- subsets ---------------------------------------------------------------


def mask_of(roots) -> int:
    m = 0
    for r in roots:
        m |= 1 << ROOT_INDEX[tuple(r)]
    return m


def roots_of(mask: int) -> list:
    return [r for i, r in enumerate(ROOTS) if mask >> i & 1]


@lru_cache(maxsize=None)
def _sum_table():
    """Pairs (i, j, k) with ROOTS[i] + ROOTS[j] == ROOTS[k], i < j."""
    out = []
    for i, j in product(range(12), repeat=2):
        if i < j:
            s = add(ROOTS[i], ROOTS[j])
            if s in ROOT_INDEX:
                out.append((i, j, ROOT_INDEX[s]))
    return tuple(out)


def is_closed(mask: int) -> bool:
    for i, j, k in _sum_table():
        if mask >> i & 1 and mask >> j & 1 and not mask >> k & 1:
            return False
    return True


def symmetric_part(mask: int) -> int:
    return mask & mask_of(neg(r) for r in roots_of(mask))


# -- Weyl group ------------------------------------------------------------


class WeylElement:
    """2x2 integer matrix acting on (a, b) coordinates of root vectors."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)

    def __call__(self, v):
        (p, q), (r, s) = self.matrix
        return (p * v[0] + q * v[1], r * v[0] + s * v[1])

    def __matmul__(self, other):
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        return WeylElement(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def act_on_mask(self, mask: int) -> int:
        return mask_of(self(r) for r in roots_of(mask))

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"WeylElement({self.matrix})"


IDENTITY = WeylElement(((1, 0), (0, 1)))


def reflection(gamma) -> WeylElement:
    """s_gamma(v) = v - 2(v,gamma)/(gamma,gamma) * gamma."""
    cols = []
    for e in ((1, 0), (0, 1)):
        c = pairing(gamma, e)
        img = (e[0] - c * gamma[0], e[1] - c * gamma[1])
        if img[0].denominator != 1 or img[1].denominator != 1:
            raise ValueError("reflection is not integral on the root lattice")
        cols.append((int(img[0]), int(img[1])))
    return WeylElement(((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1])))


@lru_cache(maxsize=None)
def weyl_group() -> tuple:
    """All 12 elements, generated by the simple reflections (BFS order)."""
    gens = (reflection(ALPHA), reflection(BETA))
    seen = [IDENTITY]
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = g @ w
                if u not in seen:
                    seen.append(u)
                    nxt.append(u)
        frontier = nxt
    return tuple(seen)


def weyl_orbit_of_subset(mask: int) -> frozenset:
    return frozenset(w.act_on_mask(mask) for w in weyl_group())


def canonical_mask(mask: int) -> int:
    """Lexicographically minimal Weyl image, used as an orbit key."""
    return min(weyl_orbit_of_subset(mask))
