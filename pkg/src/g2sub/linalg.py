"""Exact dense linear algebra and univariate polynomials.

Everything here is generic over any exact field scalar supporting ``+ - * /``
and truth-testing for zero: ``Fraction`` and ``FieldElement`` both qualify.
Matrices are lists of rows; polynomials are coefficient lists, lowest degree
first, with no trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import FieldElement, fe

_ONE = Fraction(1)


def native(matrix):
    """Downcast to ``Fraction`` entries when every entry is rational.

    Fraction arithmetic is several times faster than going through
    FieldElement, and most matrices in this package are rational.
    """
    out = []
    for row in matrix:
        new = []
        for x in row:
            if isinstance(x, FieldElement):
                if not x.is_rational():
                    return matrix
                x = x.rational()
            new.append(x)
        out.append(new)
    return out


def lift(x) -> FieldElement:
    return fe(x)


# -- matrices --------------------------------------------------------------


def zeros(n, m=None):
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n):
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def copy(matrix):
    return [list(row) for row in matrix]


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    cols = [[b[r][j] for r in range(k)] for j in range(m)]
    out = []
    for i in range(n):
        row = a[i]
        nz = [(r, x) for r, x in enumerate(row) if x]
        new = []
        for j in range(m):
            col = cols[j]
            acc = 0
            for r, x in nz:
                y = col[r]
                if y:
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def matvec(a, v):
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def is_zero_matrix(a) -> bool:
    return not any(x for row in a for x in row)


def trace(a):
    acc = 0
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(rows, ncols=None):
    """Reduced row echelon form of a list of row vectors.

    Returns ``(basis, pivots)`` with zero rows dropped, pivots normalized to 1
    and pivot columns strictly increasing.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = _ONE / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix, ncols=None):
    """Basis of {x : matrix @ x = 0}, one vector per free column."""
    ncols = len(matrix[0]) if matrix else ncols
    basis, pivots = rref(matrix, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(basis, pivots):
            if row[f]:
                v[p] = -row[f]
        out.append(v)
    return out


def inverse(matrix):
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    basis, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(basis) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in basis]


def solve(matrix, rhs):
    """One solution x of matrix @ x = rhs, or None when inconsistent."""
    n = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    basis, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(basis, pivots):
        x[p] = row[n]
    return x


def matpow(a, k):
    out = identity(len(a))
    base = a
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


# -- polynomials -----------------------------------------------------------


def poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly_trim(
        [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    )


def poly_sub(p, q):
    return poly_add(p, [-c for c in q])


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_divmod(p, q):
    q = poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = poly_trim(p)
    quot = [0] * max(len(r) - len(q) + 1, 0)
    lead_inv = _ONE / q[-1]
    while len(r) >= len(q):
        c = r[-1] * lead_inv
        shift = len(r) - len(q)
        quot[shift] = c
        r = poly_trim([r[i] - (c * q[i - shift] if i >= shift else 0) for i in range(len(r))])
    return poly_trim(quot), r


def poly_monic(p):
    p = poly_trim(p)
    if not p:
        return p
    inv = _ONE / p[-1]
    return [c * inv for c in p]


def poly_gcd(p, q):
    a, b = poly_trim(p), poly_trim(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_lcm(p, q):
    g = poly_gcd(p, q)
    return poly_monic(poly_divmod(poly_mul(p, q), g)[0])


def poly_deriv(p):
    return poly_trim([i * c for i, c in enumerate(p)][1:])


def squarefree_part(p):
    """p / gcd(p, p'), monic; its degree counts the distinct roots of p."""
    g = poly_gcd(p, poly_deriv(p))
    return poly_monic(poly_divmod(p, g)[0])


def is_squarefree(p) -> bool:
    return len(poly_gcd(p, poly_deriv(p))) == 1


def poly_eval_matrix(p, a):
    n = len(a)
    out = zeros(n)
    for c in reversed(p):
        out = matmul(out, a)
        for i in range(n):
            out[i][i] = out[i][i] + c
    return out


# -- spectral data ---------------------------------------------------------


def hessenberg(matrix):
    """Upper Hessenberg form by elementary similarity transforms."""
    h = copy(matrix)
    n = len(h)
    for m in range(1, n - 1):
        if not h[m][m - 1]:
            i = next((i for i in range(m + 1, n) if h[i][m - 1]), None)
            if i is None:
                continue
            h[i], h[m] = h[m], h[i]
            for row in h:
                row[i], row[m] = row[m], row[i]
        inv = _ONE / h[m][m - 1]
        for i in range(m + 1, n):
            u = h[i][m - 1] * inv
            if not u:
                continue
            h[i] = [x - u * y for x, y in zip(h[i], h[m])]
            for row in h:
                row[m] = row[m] + u * row[i]
    return h


def charpoly(matrix):
    """Monic characteristic polynomial det(x*I - A)."""
    h = hessenberg(matrix)
    n = len(h)
    p = [[1]]
    for m in range(1, n + 1):
        pm = poly_mul([-h[m - 1][m - 1], 1], p[m - 1])
        t = 1
        for i in range(m - 1, 0, -1):
            t = t * h[i][i - 1]
            if not t:
                break
            coeff = h[i - 1][m - 1] * t
            if coeff:
                pm = poly_sub(pm, [coeff * c for c in p[i - 1]])
        p.append(pm)
    return p[n] if p[n] else [0] * n + [1]


def minpoly(matrix):
    """Minimal polynomial as the lcm of the Krylov minimal polynomials."""
    n = len(matrix)
    result = [1]
    for j in range(n):
        v = [Fraction(int(i == j)) for i in range(n)]
        result = poly_lcm(result, _krylov_minpoly(matrix, v))
        if len(result) == n + 1:
            break
    return result


def _krylov_minpoly(a, v):
    n = len(a)
    rows = []  # (vector, pivot, combo) with combo a polynomial in A applied to v
    power = list(v)
    k = 0
    while True:
        w = power
        combo = [0] * k + [1]
        for vec, piv, cmb in rows:
            if w[piv]:
                f = w[piv]
                w = [x - f * y for x, y in zip(w, vec)]
                combo = poly_sub(combo, [f * c for c in cmb])
        piv = next((i for i, x in enumerate(w) if x), None)
        if piv is None:
            return poly_monic(combo)
        inv = _ONE / w[piv]
        rows.append(([x * inv for x in w], piv, [c * inv for c in combo]))
        k += 1
        power = matvec(a, power)
        if k > n:
            raise ArithmeticError("Krylov sequence failed to terminate")


def count_distinct_roots(p) -> int:
    return len(squarefree_part(p)) - 1


def semisimple_part(matrix):
    """Semisimple part of the Jordan-Chevalley decomposition.

    Newton iteration S <- S - r(S) r'(S)^{-1} with r the squarefree part of
    the characteristic polynomial; exact and terminating in characteristic 0.
    """
    r = squarefree_part(charpoly(matrix))
    dr = poly_deriv(r)
    s = copy(matrix)
    for _ in range(len(matrix) + 1):
        rs = poly_eval_matrix(r, s)
        if is_zero_matrix(rs):
            return s
        s = mat_sub(s, matmul(rs, inverse(poly_eval_matrix(dr, s))))
    raise ArithmeticError("Newton iteration did not converge")
