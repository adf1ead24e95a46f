"""Text syntax for scalars and algebra elements.

Grammar (whitespace is ignored)::

    element := ['+'|'-'] term (('+'|'-') term)*
    term    := scalar '*' atom | atom | scalar
    atom    := 'X[' int ',' int ']' | 'H[' rat ',' rat ']'
    scalar  := (rat | surd) ('*' surd)*
    rat     := ['-'] digits ['/' digits]
    surd    := 's2' | 's3' | 's5'

``H[a,b]`` is the coroot of the vector a*alpha + b*beta.  A bare scalar term
is only meaningful as the zero element ``0``.

The printer is canonical: ``parse_element(format_element(x)) == x`` and the
text of a canonical string survives a round trip byte for byte.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .algebra import AlgElement, cartan, root_vector
from .roots import ROOTS, coroot_coords, is_root
from .scalars import SURD_TOKENS, FieldElement, fe, format_monomial

LAMBDA_SLOT = "{lambda}"


class ExprError(ValueError):
    """Parse failure carrying the character offset and what was expected."""

    def __init__(self, text: str, pos: int, expected: str):
        self.text, self.pos, self.expected = text, pos, expected
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"at position {pos}: expected {expected}, found {found}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # low-level helpers
    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def startswith(self, s: str) -> bool:
        self._skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.startswith(s):
            raise ExprError(self.text, self.pos, repr(s))
        self.pos += len(s)

    def at_end(self) -> bool:
        self._skip()
        return self.pos >= len(self.text)

    def digits(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExprError(self.text, start, "digit")
        return int(self.text[start : self.pos])

    # grammar
    def integer(self) -> int:
        sign = -1 if self._sign() else 1
        return sign * self.digits()

    def _sign(self) -> bool:
        if self.peek() == "-":
            self.pos += 1
            return True
        return False

    def rat(self) -> Fraction:
        sign = -1 if self._sign() else 1
        num = self.digits()
        den = 1
        if self.peek() == "/":
            self.pos += 1
            den = self.digits()
            if den == 0:
                raise ExprError(self.text, self.pos - 1, "nonzero denominator")
        return sign * Fraction(num, den)

    def surd(self) -> FieldElement | None:
        for bit, tok in enumerate(SURD_TOKENS):
            if self.startswith(tok):
                self.pos += len(tok)
                return FieldElement({1 << bit: 1})
        return None

    def scalar(self) -> FieldElement:
        first = self.surd()
        value = first if first is not None else fe(self.rat())
        while self.startswith("*"):
            save = self.pos
            self.pos += 1
            s = self.surd()
            if s is None:
                self.pos = save
                break
            value = value * s
        return value

    def atom(self) -> AlgElement | None:
        if self.startswith("X["):
            self.pos += 2
            start = self.pos
            a = self.integer()
            self.expect(",")
            b = self.integer()
            self.expect("]")
            if not is_root((a, b)):
                raise ExprError(self.text, start, f"a root, not [{a},{b}]")
            return root_vector((a, b))
        if self.startswith("H["):
            self.pos += 2
            start = self.pos
            a = self.rat()
            self.expect(",")
            b = self.rat()
            self.expect("]")
            if a == 0 and b == 0:
                raise ExprError(self.text, start, "a nonzero vector")
            return cartan(*coroot_coords((a, b)))
        return None

    def term(self) -> AlgElement:
        atom = self.atom()
        if atom is not None:
            return atom
        c = self.scalar()
        if self.startswith("*"):
            self.pos += 1
            atom = self.atom()
            if atom is None:
                raise ExprError(self.text, self.pos, "'X[' or 'H['")
            return atom * c
        if c:
            raise ExprError(self.text, self.pos, "'*' followed by an atom")
        return AlgElement.zero()

    def element(self) -> AlgElement:
        negate = False
        if self.peek() in ("+", "-") and self.peek():
            negate = self.peek() == "-"
            self.pos += 1
        total = self.term()
        if negate:
            total = -total
        while self.peek() in ("+", "-") and self.peek():
            op = self.peek()
            self.pos += 1
            t = self.term()
            total = total + t if op == "+" else total - t
        return total


def parse_scalar(text: str) -> FieldElement:
    p = _Parser(text)
    value = p.scalar()
    if not p.at_end():
        raise ExprError(text, p.pos, "end of scalar")
    return value


def parse_element(text: str, lam=None) -> AlgElement:
    text = substitute_lambda(text, lam)
    p = _Parser(text)
    if p.at_end():
        raise ExprError(text, p.pos, "an element")
    value = p.element()
    if not p.at_end():
        raise ExprError(text, p.pos, "'+', '-' or end of input")
    return value


def parse_elements(text: str, lam=None) -> list[AlgElement]:
    """Semicolon-separated element list; empty text is the empty list."""
    text = substitute_lambda(text, lam)
    out = []
    offset = 0
    for chunk in text.split(";"):
        if chunk.strip():
            try:
                out.append(parse_element(chunk))
            except ExprError as err:
                raise ExprError(text, offset + err.pos, err.expected) from None
        offset += len(chunk) + 1
    return out


def substitute_lambda(text: str, lam) -> str:
    if LAMBDA_SLOT not in text:
        return text
    if lam is None:
        raise ValueError("expression has a {lambda} slot but no value was given")
    return text.replace(LAMBDA_SLOT, format_scalar_token(fe(lam)))


def format_scalar_token(x: FieldElement) -> str:
    """A scalar as a single grammar token (rational values only)."""
    if not x.is_rational():
        raise ValueError("lambda samples must be rational")
    return str(x.rational())


# -- printing --------------------------------------------------------------


def _term(mask: int, c: Fraction, atom: str) -> str:
    if mask == 0 and c == 1:
        return atom
    if mask == 0 and c == -1:
        return "-" + atom
    return format_monomial(mask, c) + "*" + atom


def _cartan_terms(c1: FieldElement, c2: FieldElement) -> list[str]:
    if not c1 and not c2:
        return []
    # H[a,b] has coordinates proportional to (a, 3b)
    if c1 and c2:
        ratio = c2 / c1
        if not ratio.is_rational():
            return [_term(m, c, "H[1,0]") for m, c in c1.items()] + [
                _term(m, c, "H[0,1]") for m, c in c2.items()
            ]
        direction = (Fraction(1), ratio.rational() / 3)
    elif c1:
        direction = (Fraction(1), Fraction(0))
    else:
        direction = (Fraction(0), Fraction(1))
    a, b = _primitive(direction)
    ca, cb = coroot_coords((a, b))
    k = c1 / ca if c1 else c2 / cb
    atom = f"H[{a},{b}]"
    return [_term(m, c, atom) for m, c in k.items()]


def _primitive(v) -> tuple[int, int]:
    den = v[0].denominator * v[1].denominator
    a, b = int(v[0] * den), int(v[1] * den)
    g = gcd(a, b)
    a, b = a // g, b // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return a, b


def format_element(x: AlgElement) -> str:
    terms = _cartan_terms(x.coords[0], x.coords[1])
    for i, r in enumerate(ROOTS):
        c = x.coords[i + 2]
        atom = f"X[{r[0]},{r[1]}]"
        terms += [_term(m, q, atom) for m, q in c.items()]
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def format_elements(xs) -> str:
    return "; ".join(format_element(x) for x in xs)
