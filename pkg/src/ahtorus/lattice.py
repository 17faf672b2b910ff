"""Integer matrices and the exact sequence 0 -> N -> N' -> N'/N -> 0.

A weight matrix ``F`` (n x k, row i = character of coordinate i) embeds the
one-parameter-subgroup lattice N = Z^k into N' = Z^n.  :func:`cokernel_map`
and :func:`section` produce the projection ``P`` onto N'/N and a left
inverse ``s`` of ``F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .errors import DimensionMismatch, RankDeficient, TorsionCokernel, ZeroVector


@dataclass(frozen=True)
class IntMatrix:
    """Row-major matrix of Python ints.

    ``ncols`` is stored explicitly so that 0 x n matrices keep their width.
    """

    rows: tuple
    ncols: int

    @classmethod
    def of(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix: every row needs %d entries" % ncols)
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.of(([int(i == j) for j in range(n)] for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls.of(([0] * ncols for _ in range(nrows)), ncols)

    @classmethod
    def from_sympy(cls, m: Matrix) -> "IntMatrix":
        return cls.of(m.tolist(), m.cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix.of(zip(*self.rows), self.nrows) if self.rows else IntMatrix.zeros(self.ncols, 0)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return IntMatrix.of(([sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows), other.ncols)
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionMismatch(f"cannot apply {self.shape} matrix to a {len(v)}-vector")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def to_sympy(self) -> Matrix:
        return Matrix(self.nrows, self.ncols, [x for r in self.rows for x in r])

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})"


def as_intmatrix(m, ncols: int | None = None) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.of(m, ncols)


def smith_normal_form(A) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, S, V)`` with ``U @ A @ V == S`` in Smith normal form.

    U and V are unimodular; the diagonal of S is non-negative with each entry
    dividing the next.
    """
    A = as_intmatrix(A)
    if A.nrows == 0 or A.ncols == 0:
        return IntMatrix.identity(A.nrows), A, IntMatrix.identity(A.ncols)
    S, U, V = smith_normal_decomp(A.to_sympy(), domain=ZZ)
    U, S, V = IntMatrix.from_sympy(U), IntMatrix.from_sympy(S), IntMatrix.from_sympy(V)
    # normalise signs so the diagonal is non-negative
    flips = [i for i in range(min(S.shape)) if S.rows[i][i] < 0]
    if flips:
        U = IntMatrix.of([[-x for x in r] if i in flips else r for i, r in enumerate(U.rows)], U.ncols)
        S = U @ A @ V
    return U, S, V


def invariant_factors(A) -> tuple[int, ...]:
    _, S, _ = smith_normal_form(A)
    return tuple(S.rows[i][i] for i in range(min(S.shape)))


def _split_weight_matrix(F: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    n, k = F.shape
    U, S, V = smith_normal_form(F)
    d = [S.rows[i][i] for i in range(min(n, k))]
    if len([x for x in d if x != 0]) < k:
        raise RankDeficient(f"weight matrix has rank {len([x for x in d if x])} < {k}")
    if any(x != 1 for x in d):
        raise TorsionCokernel(f"invariant factors {d}: Z^n / F(Z^k) has torsion")
    return U, V


def cokernel_map(F) -> IntMatrix:
    """Surjection ``P: Z^n -> Z^(n-k)`` with ``P @ F == 0``.

    The rows are returned in Hermite normal form, so the result depends only
    on the row lattice, not on how the Smith decomposition was found.
    """
    F = as_intmatrix(F)
    U, _ = _split_weight_matrix(F)
    k = F.ncols
    return hermite_rows(IntMatrix.of(U.rows[k:], F.nrows))


def section(F) -> IntMatrix:
    """A left inverse ``s`` (k x n) of ``F``: ``s @ F == I_k``.

    Deterministic but not canonical; any two sections differ by ``g @ P``.
    """
    F = as_intmatrix(F)
    U, V = _split_weight_matrix(F)
    k = F.ncols
    return V @ IntMatrix.of(U.rows[:k], F.nrows)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ZeroVector("the zero vector has no primitive generator")
    return tuple(int(x) // g for x in v)


def hermite_rows(A) -> IntMatrix:
    """Row-style Hermite normal form with zero rows dropped.

    Pivots are positive; entries above a pivot lie in ``[0, pivot)``.
    """
    A = as_intmatrix(A)
    m = [list(r) for r in A.rows]
    out = []
    col = 0
    while m and col < A.ncols:
        nz = [r for r in m if r[col] != 0]
        if not nz:
            col += 1
            continue
        # Euclid on the column entries
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for j in range(A.ncols):
                    r[j] -= q * piv[j]
            nz = [r for r in nz if r[col] != 0]
        piv = nz[0]
        if piv[col] < 0:
            for j in range(A.ncols):
                piv[j] = -piv[j]
        m = [r for r in m if r is not piv and any(r)]
        for r in out:
            q = r[col] // piv[col]
            for j in range(A.ncols):
                r[j] -= q * piv[j]
        out.append(piv)
        col += 1
    return IntMatrix.of(out, A.ncols)


def same_row_lattice(A, B) -> bool:
    """True iff the integer row spans of A and B coincide."""
    A, B = as_intmatrix(A), as_intmatrix(B)
    if A.ncols != B.ncols:
        return False
    return hermite_rows(A).rows == hermite_rows(B).rows


def is_unimodular(A) -> bool:
    A = as_intmatrix(A)
    return A.nrows == A.ncols and abs(A.to_sympy().det()) == 1


def validate_exact_sequence(F, P, s) -> None:
    """Raise unless (F, P, s) satisfy P F = 0, s F = I and P is onto."""
    F, P, s = as_intmatrix(F), as_intmatrix(P), as_intmatrix(s)
    n, k = F.shape
    if P.shape != (n - k, n) or s.shape != (k, n):
        raise DimensionMismatch(f"expected P {(n - k, n)} and s {(k, n)}, got {P.shape} and {s.shape}")
    if not (P @ F).is_zero():
        raise ValueError("P @ F is not zero")
    if s @ F != IntMatrix.identity(k):
        raise ValueError("s @ F is not the identity")
    if P.nrows and any(d != 1 for d in invariant_factors(P)):
        raise TorsionCokernel("P is not surjective onto Z^(n-k)")
