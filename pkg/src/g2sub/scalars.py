"""Exact arithmetic in the number field Q(sqrt2, sqrt3, sqrt5).

An element is stored as a sparse map from a 3-bit monomial mask to a
``Fraction``.  Bit 0 stands for sqrt2, bit 1 for sqrt3, bit 2 for sqrt5, so
mask ``0b011`` is the monomial sqrt6.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Union

PRIMES = (2, 3, 5)
SURD_TOKENS = ("s2", "s3", "s5")

Rational = Fraction
Scalar = Union[int, Fraction, "FieldElement"]


def _overlap_factor(m1: int, m2: int) -> int:
    common = m1 & m2
    out = 1
    for bit, p in enumerate(PRIMES):
        if common >> bit & 1:
            out *= p
    return out


_FACTOR = [[_overlap_factor(a, b) for b in range(8)] for a in range(8)]


class FieldElement:
    """Immutable element of Q(sqrt2, sqrt3, sqrt5)."""

    __slots__ = ("_t", "_hash")

    def __init__(self, value=0):
        if isinstance(value, FieldElement):
            self._t = value._t
        elif isinstance(value, dict):
            self._t = tuple(
                sorted((m, Fraction(c)) for m, c in value.items() if c != 0)
            )
        else:
            c = Fraction(value)
            self._t = ((0, c),) if c else ()
        self._hash = None

    @classmethod
    def _raw(cls, items):
        obj = cls.__new__(cls)
        obj._t = items
        obj._hash = None
        return obj

    @classmethod
    def surd(cls, p: int, coeff=1) -> FieldElement:
        """``coeff * sqrt(p)`` for p in {1, 2, 3, 5, 6, 10, 15, 30}."""
        mask = 0
        rest = p
        for bit, q in enumerate(PRIMES):
            if rest % q == 0:
                mask |= 1 << bit
                rest //= q
        if rest != 1:
            raise ValueError(f"sqrt({p}) is not a basis monomial")
        return cls({mask: coeff})

    @property
    def coeffs(self) -> tuple:
        """All 8 rational coordinates, indexed by monomial mask."""
        out = [Fraction(0)] * 8
        for m, c in self._t:
            out[m] = c
        return tuple(out)

    def items(self):
        return self._t

    def is_rational(self) -> bool:
        return not self._t or (len(self._t) == 1 and self._t[0][0] == 0)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._t[0][1] if self._t else Fraction(0)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == FieldElement(other)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._t)
        return self._hash

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = FieldElement(other)
        if not other._t:
            return self
        if not self._t:
            return other
        acc = dict(self._t)
        for m, c in other._t:
            acc[m] = acc.get(m, 0) + c
        return FieldElement._raw(tuple(sorted((m, c) for m, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(tuple((m, -c) for m, c in self._t))

    def __sub__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        return self + (-FieldElement(other))

    def __rsub__(self, other):
        return FieldElement(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return FieldElement._raw(tuple((m, c * other) for m, c in self._t))
        if not isinstance(other, FieldElement):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) == 1 and len(b) == 1:
            (m1, c1), (m2, c2) = a[0], b[0]
            return FieldElement._raw(((m1 ^ m2, c1 * c2 * _FACTOR[m1][m2]),))
        acc = {}
        for m1, c1 in a:
            row = _FACTOR[m1]
            for m2, c2 in b:
                m = m1 ^ m2
                acc[m] = acc.get(m, 0) + c1 * c2 * row[m2]
        return FieldElement._raw(tuple(sorted((m, c) for m, c in acc.items() if c)))

    __rmul__ = __mul__

    def conjugate(self, flip: int) -> FieldElement:
        """Galois conjugate negating sqrt(p) for every prime bit in ``flip``."""
        return FieldElement._raw(
            tuple((m, -c if bin(m & flip).count("1") % 2 else c) for m, c in self._t)
        )

    def norm(self) -> Fraction:
        """Product of all 8 Galois conjugates; always rational."""
        prod = reduce(lambda x, y: x * y, (self.conjugate(f) for f in range(8)))
        return prod.rational()

    def inverse(self) -> FieldElement:
        if not self._t:
            raise ZeroDivisionError("inverse of zero field element")
        if self.is_rational():
            return FieldElement(1 / self._t[0][1])
        others = reduce(lambda x, y: x * y, (self.conjugate(f) for f in range(1, 8)))
        n = (self * others).rational()
        return others * (1 / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElement(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"FieldElement({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = FieldElement(0)
ONE = FieldElement(1)
SQRT2 = FieldElement.surd(2)
SQRT3 = FieldElement.surd(3)
SQRT5 = FieldElement.surd(5)


def fe(value) -> FieldElement:
    """Coerce ints, Fractions, strings like ``"3/2"`` or FieldElements."""
    if isinstance(value, FieldElement):
        return value
    if isinstance(value, str):
        return FieldElement(Fraction(value))
    return FieldElement(value)


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return fe(a) + fe(b)


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return fe(a) * fe(b)


def field_inv(a: FieldElement) -> FieldElement:
    return fe(a).inverse()


def _monomial_tokens(mask: int) -> list[str]:
    return [SURD_TOKENS[bit] for bit in range(3) if mask >> bit & 1]


def format_monomial(mask: int, c: Fraction) -> str:
    """Signed text for ``c * sqrt(mask)``, e.g. ``-3/2*s2*s5``."""
    sign = "-" if c < 0 else ""
    c = abs(c)
    parts = [] if (c == 1 and mask) else [str(c)]
    parts += _monomial_tokens(mask)
    return sign + "*".join(parts)


def format_scalar(x: FieldElement) -> str:
    items = fe(x).items()
    if not items:
        return "0"
    out = ""
    for m, c in items:
        text = format_monomial(m, c)
        if out and not text.startswith("-"):
            out += "+"
        out += text
    return out
