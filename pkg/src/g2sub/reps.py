"""sl2-triples in G2 and the adjoint action restricted to subalgebras."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .algebra import AlgElement, ad, bracket
from .subspace import Subspace, span

# weights of ad(f) for an sl2 inside G2 never exceed this in absolute value
_WEIGHT_BOUND = 22


@dataclass(frozen=True)
class Sl2Triple:
    f: AlgElement
    e_plus: AlgElement
    e_minus: AlgElement

    def span(self) -> Subspace:
        return span([self.f, self.e_plus, self.e_minus])


@dataclass(frozen=True)
class TripleCheck:
    failing: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failing

    def __bool__(self):
        return self.ok


def verify_triple(t: Sl2Triple) -> TripleCheck:
    failing = []
    if bracket(t.f, t.e_plus) != t.e_plus * 2:
        failing.append("[f,e+] = 2e+")
    if bracket(t.f, t.e_minus) != t.e_minus * -2:
        failing.append("[f,e-] = -2e-")
    if bracket(t.e_plus, t.e_minus) != t.f:
        failing.append("[e+,e-] = f")
    if not t.f:
        failing.append("f != 0")
    return TripleCheck(tuple(failing))


class NonIntegralWeight(AssertionError):
    """ad(f) has an eigenvalue that is not an integer."""


def ad_weights(f: AlgElement) -> Counter:
    """Eigenvalue multiplicities of ad(f), which must all be integers."""
    p = linalg.charpoly(linalg.native(ad(f)))
    out = Counter()
    for k in range(-_WEIGHT_BOUND, _WEIGHT_BOUND + 1):
        factor = [Fraction(-k), Fraction(1)]
        while True:
            q, r = linalg.poly_divmod(p, factor)
            if r:
                break
            p = q
            out[k] += 1
    if len(p) != 1:
        raise NonIntegralWeight(f"ad(f) has {len(p) - 1} non-integral eigenvalues")
    return out


def _require(t: Sl2Triple):
    check = verify_triple(t)
    if not check:
        raise ValueError(f"not an sl2-triple: {', '.join(check.failing)}")


def dynkin_index(t: Sl2Triple) -> Fraction:
    """Sum of squared ad(f) weights over 16, so the long-root sl2 has index 1."""
    _require(t)
    w = ad_weights(t.f)
    return Fraction(sum(m * k * k for k, m in w.items()), 16)


@dataclass(frozen=True)
class Sl2DecompReport:
    multiplicities: dict  # spin (Fraction) -> number of copies of D_spin
    total_dim_check: int

    def as_text(self) -> str:
        return ", ".join(f"D{s}^{n}" for s, n in sorted(self.multiplicities.items()))


def decompose_under_sl2(t: Sl2Triple) -> Sl2DecompReport:
    """n_s = m_{2s} - m_{2s+2} from the ad(f) weight multiplicities m_k."""
    _require(t)
    m = ad_weights(t.f)
    top = max(m)
    mult = {}
    for k in range(0, top + 1):
        n = m.get(k, 0) - m.get(k + 2, 0)
        if n < 0:
            raise AssertionError(f"negative multiplicity at weight {k}")
        if n:
            mult[Fraction(k, 2)] = n
    total = sum(int(n * (2 * s + 1)) for s, n in mult.items())
    return Sl2DecompReport(mult, total)


# -- submodules ------------------------------------------------------------


def is_invariant(gens, w: Subspace) -> bool:
    return all(bracket(g, v) in w for g in gens for v in w.basis)


def cyclic_submodule(gens, v: AlgElement) -> Subspace:
    s = span([v])
    while True:
        grown = span(list(s.basis) + [bracket(g, x) for g in gens for x in s.basis])
        if grown.dim == s.dim:
            return s
        s = grown


@dataclass(frozen=True)
class SubmoduleCheck:
    failed: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed is None

    def __bool__(self):
        return self.ok


def verify_submodule(gens, w: Subspace, expected_dim: int, trivial: bool = False) -> SubmoduleCheck:
    """Invariance, dimension, then irreducibility (or, if ``trivial``, zero action)."""
    gens = list(gens)
    if w.dim != expected_dim:
        return SubmoduleCheck(f"dimension {w.dim}, expected {expected_dim}")
    if not is_invariant(gens, w):
        return SubmoduleCheck("not invariant")
    if trivial:
        if any(bracket(g, v) for g in gens for v in w.basis):
            return SubmoduleCheck("action is not trivial")
        return SubmoduleCheck()
    for v in w.basis:
        if cyclic_submodule(gens, v).dim != w.dim:
            return SubmoduleCheck("reducible: a basis vector generates a proper submodule")
    return SubmoduleCheck()


def joint_weights(w: Subspace, hs) -> list | None:
    """Sorted eigenvalue tuples of ``hs`` on the echelon basis, or None if not diagonal."""
    out = []
    for v in w.basis:
        col = next(i for i, c in enumerate(v.coords) if c)
        weight = []
        for h in hs:
            image = bracket(h, v)
            c = image.coords[col] / v.coords[col]
            if image != v * c:
                return None
            weight.append(c)
        out.append(tuple(weight))
    return sorted(out, key=lambda t: tuple(x.rational() if x.is_rational() else 0 for x in t))


@dataclass
class DirectSumCheck:
    total_dim: int
    span_dim: int
    overlapping: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.total_dim == 14 and self.span_dim == 14 and not self.overlapping


def check_direct_sum(parts) -> DirectSumCheck:
    parts = list(parts)
    overlapping = [
        (i, j)
        for i in range(len(parts))
        for j in range(i + 1, len(parts))
        if parts[i].intersect(parts[j]).dim
    ]
    whole = span([v for p in parts for v in p.basis])
    return DirectSumCheck(sum(p.dim for p in parts), whole.dim, overlapping)
