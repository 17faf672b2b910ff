"""Small exact linear algebra over Q on lists of Fractions.

Kept deliberately plain: the matrices that show up here are at most a few
dozen entries, and exactness matters more than speed.
"""

from fractions import Fraction
from math import gcd


def frac_vec(v):
    return tuple(Fraction(x) for x in v)


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def rref(rows, ncols):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {x : rows @ x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(rows, rhs, ncols):
    """One solution of rows @ x = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return tuple(x)


def row_basis(vectors, ncols):
    """RREF basis of the span of ``vectors``."""
    return [tuple(r) for r in rref(vectors, ncols)[0]]


def in_span(v, basis, ncols):
    return rank(list(basis) + [v], ncols) == len(basis)


def integerize(v):
    """Scale a rational vector to the primitive integer vector on its ray."""
    v = frac_vec(v)
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)
