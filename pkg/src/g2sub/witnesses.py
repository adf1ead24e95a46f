"""Explicit automorphisms that move specific subalgebras into simpler forms.

Each witness replays a concrete identity exactly and reports PASS, FAIL, or
SKIPPED when the scalars it needs lie outside Q(s2, s3, s5).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .algebra import AlgElement, bracket, cartan, exp_ad, root_vector
from .roots import coroot
from .scalars import FieldElement, fe
from .subspace import Subspace, is_regular_form, is_subalgebra, span

A, B, AB, TAB, T3AB, T3A2B = (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)
NEG_A = (-1, 0)


def X(root, c=1) -> AlgElement:
    return root_vector(root, c)


@dataclass(frozen=True)
class WitnessResult:
    name: str
    status: str  # PASS, FAIL or SKIPPED
    detail: str = ""


def _result(name: str, ok: bool, detail: str = "") -> WitnessResult:
    return WitnessResult(name, "PASS" if ok else "FAIL", detail)


def field_sqrt(q) -> FieldElement | None:
    """A square root of the rational q inside Q(s2, s3, s5), if one exists."""
    q = Fraction(q)
    if q == 0:
        return fe(0)
    if q < 0:
        return None
    for k, mask in ((1, 0), (2, 1), (3, 2), (5, 4), (6, 3), (10, 5), (15, 6), (30, 7)):
        r = q / k
        n, d = isqrt(r.numerator), isqrt(r.denominator)
        if n * n == r.numerator and d * d == r.denominator:
            return FieldElement({mask: Fraction(n, d)})
    return None


def transport(auto, s: Subspace) -> Subspace:
    return span(auto(v) for v in s.basis)


# -- nilpotent reductions --------------------------------------------------


def nilpotent_sum_reduction() -> WitnessResult:
    """exp(-2/3 ad X_a) exp(ad X_-a) sends X_b + X_a+b + X_2a+b - X_3a+b to -X_3a+b."""
    x = X(B) + X(AB) + X(TAB) - X(T3AB)
    image = (exp_ad(Fraction(-2, 3), X(A)) @ exp_ad(1, X(NEG_A)))(x)
    return _result("nilpotent_sum_reduction", image == -X(T3AB), f"image {image}")


def _pencil_image(lam, a1):
    c = (lam + a1 * a1) / ((a1 * a1 - a1) * 2)
    d = (fe(3) * (a1 - c)).inverse()
    g = span([X(B) + X(T3AB) * lam, X(AB) + X(TAB)])
    return transport(exp_ad(d, X(NEG_A)) @ exp_ad(c, X(A)), g)


def _pencil_shape_ok(image: Subspace) -> bool:
    target = span([X(B), X(T3AB)])
    others = [v for v in image.basis if v != X(AB)]
    return image.dim == 2 and X(AB) in image and all(v in target for v in others)


def pencil_quartic(lam, a1):
    return fe(3) * a1**4 + fe(4) * (lam - 1) * a1**3 - fe(6) * lam * a1**2 - lam * lam


def pencil_reductions() -> list[WitnessResult]:
    """Reduce C(X_b + lam X_3a+b) + C(X_a+b + X_2a+b) to C X_a+b + C(b1 X_3a+b + b2 X_b)."""
    out = []
    image = _pencil_image(fe(-1), fe(Fraction(-1, 3)))
    pivots = "(" + ", ".join(sorted(_pivot_names(image))) + ")"
    out.append(_result("pencil lambda=-1", _pencil_shape_ok(image), f"pivots {pivots}"))
    # lam = 2a^3 - 3a^2 +- 2a(a-1) sqrt(a(a-1)) makes a a root of the quartic
    for a in (2, 3, -1, 4, 5, 6, -2):
        root = field_sqrt(a * (a - 1))
        for sign in (1, -1):
            name = f"pencil a1={a} sign={'+' if sign > 0 else '-'}"
            if root is None:
                out.append(WitnessResult(name, "SKIPPED", "sqrt(a(a-1)) outside the field"))
                continue
            a1 = fe(a)
            lam = fe(2 * a**3 - 3 * a**2) + root * (2 * a * (a - 1) * sign)
            if not lam or lam == fe(-1) or pencil_quartic(lam, a1):
                out.append(_result(name, False, "bad sample"))
                continue
            out.append(_result(name, _pencil_shape_ok(_pencil_image(lam, a1)), f"lambda {lam}"))
    return out


def _pivot_names(s: Subspace) -> list[str]:
    from .algebra import basis_label

    return [basis_label(p) for p in s.pivots]


def quartic_reduction(mu, nu, a1) -> bool:
    """exp(c ad X_a)(X_b + mu X_2a+b + nu X_3a+b + a1 (X_a+b + X_3a+b)) == X_b + (a1 - c) X_a+b."""
    mu, nu, a1 = fe(mu), fe(nu), fe(a1)
    c = (nu + mu * a1 + a1) / ((a1 * a1 - mu) * 2)
    x = X(B) + X(TAB) * mu + X(T3AB) * nu + (X(AB) + X(T3AB)) * a1
    return exp_ad(c, X(A))(x) == X(B) + X(AB) * (a1 - c)


def quartic_constraint(mu, nu, a1):
    mu, nu, a1 = fe(mu), fe(nu), fe(a1)
    return (
        a1**4
        + nu * a1**3
        + (fe(3) * mu * mu - fe(6) * mu - 1) / 4 * a1**2
        - nu * (fe(3) * mu + 1) / 2 * a1
        - (mu**3 + nu * nu / 4)
    )


def quartic_samples(limit: int = 6) -> list:
    """(mu, nu, a1) with mu, a1 rational, nu in the field and the quartic satisfied."""
    out = []
    grid = [Fraction(n, d) for d in (1, 2) for n in range(-4, 5)]
    for mu in grid:
        for a in grid:
            if a * a == mu:
                continue
            b = a**3 - (3 * mu + 1) * a / 2
            c = a**4 + (3 * mu * mu - 6 * mu - 1) * a * a / 4 - mu**3
            root = field_sqrt(b * b + c)
            if root is None:
                continue
            for sign in (1, -1):
                nu = fe(2 * b) + root * (2 * sign)
                if sign < 0 and not root:
                    continue
                out.append((mu, nu, a))
                if len(out) >= limit:
                    return out
    return out


def quartic_reductions() -> list[WitnessResult]:
    out = []
    for mu, nu, a in quartic_samples():
        ok = not quartic_constraint(mu, nu, a) and quartic_reduction(mu, nu, a)
        out.append(_result(f"quartic mu={mu} a1={a}", ok, f"nu {nu}"))
    out.append(WitnessResult("quartic mu=-1 nu=0", "SKIPPED", "needs sqrt(-1)"))
    return out


def cubic_reduction(a1) -> bool:
    """exp((1/a1) ad X_-a)(omega) == (1 + a1 lam) X_3a+b with lam = -(1 + a1^3)/a1."""
    a1 = fe(a1)
    lam = -(a1**3 + 1) / a1
    omega = X(B) + X(T3AB) + (X(AB) + X(T3AB) * lam) * a1 + X(TAB) * (a1 * a1)
    return exp_ad(a1.inverse(), X(NEG_A))(omega) == X(T3AB) * (a1 * lam + 1)


def cubic_reductions() -> list[WitnessResult]:
    return [_result(f"cubic a1={a}", cubic_reduction(a)) for a in (1, 2, -1, Fraction(1, 2), 3, -3)]


# -- Levi-type regularizations ---------------------------------------------


def regularize_line(levi: list[AlgElement], gamma, a, b) -> tuple[Subspace, Subspace]:
    """levi + C(a H_gamma + b X_gamma) and its image under exp(b/(2a) ad X_gamma)."""
    a, b = fe(a), fe(b)
    s = span(levi + [coroot(gamma) * a + X(gamma) * b])
    c = b / (a * 2)
    return s, transport(exp_ad(c, X(gamma)), s)


A1_TILDE_GENS = [cartan(1, 0), X(A), X(NEG_A)]
A1_GENS = [cartan(0, 1), X(B), X((0, -1))]
V1_TILDE = [X(B), X(AB), X(TAB), X(T3AB)]
A1_V1_V3 = [X(A), X(AB), X(T3AB), X(T3A2B)]

_SAMPLES = ((1, 1), (2, -3), (Fraction(1, 2), 5), (-1, Fraction(2, 3)))


def levi_regularizations() -> list[WitnessResult]:
    out = []
    cases = (
        ("short-root levi + line", A1_TILDE_GENS, T3A2B, True),
        ("short-root levi + V1~ + line", A1_TILDE_GENS + V1_TILDE, T3A2B, False),
        ("long-root levi + line", A1_GENS, TAB, True),
        ("long-root levi + V1 + V3 + line", A1_GENS + A1_V1_V3, TAB, False),
    )
    for name, levi, gamma, closed in cases:
        for a, b in _SAMPLES:
            s, image = regularize_line(levi, gamma, a, b)
            ok = not is_regular_form(s) and is_regular_form(image) and image.dim == s.dim
            if closed:
                ok = ok and is_subalgebra(s) and is_subalgebra(image)
            out.append(_result(f"{name} a={a} b={b}", ok))
    return out


# -- identities used inside proofs -----------------------------------------


def ad_cubed_identities(a, b, c, d) -> tuple[bool, bool]:
    """ad_x^3 X_-(3a+b) = -6a^3 X_3a+2b and ad_x^3 X_-b = (9abd - 6b^3) X_3a+2b."""
    a, b, c, d = fe(a), fe(b), fe(c), fe(d)
    x = X(TAB) * a + X(AB) * b + X(T3A2B) * c + X(B) * d

    def cube(y):
        return bracket(x, bracket(x, bracket(x, y)))

    first = cube(X((-3, -1))) == X(T3A2B) * (-(a**3) * 6)
    second = cube(X((0, -1))) == X(T3A2B) * (a * b * d * 9 - b**3 * 6)
    return first, second


AD_CUBED_SAMPLES = ((1, 1, 1, 1), (2, -1, 3, 5), (Fraction(1, 2), 3, -2, 1), (-3, 2, 0, 7), (1, 0, 4, -2), (5, 4, 1, Fraction(-1, 3)))


def ad_cubed_witnesses() -> list[WitnessResult]:
    out = []
    for t in AD_CUBED_SAMPLES:
        first, second = ad_cubed_identities(*t)
        out.append(_result("ad-cube (" + ", ".join(map(str, t)) + ")", first and second))
    return out


def all_witnesses() -> list[WitnessResult]:
    return (
        [nilpotent_sum_reduction()]
        + pencil_reductions()
        + quartic_reductions()
        + cubic_reductions()
        + levi_regularizations()
        + ad_cubed_witnesses()
    )
