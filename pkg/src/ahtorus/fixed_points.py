"""Fixed loci of one-parameter subtori.

A point over the divisor Z is fixed by the subtorus with cocharacter l iff
some slice (L + p) cap Delta_Z has positive length, i.e. l lies in the span
of Delta_Z - Delta_Z.  That is a label-level verdict.  To compare with the
ambient linear model we also estimate the dimension of the fixed locus in X
from the faces of the coefficients: a face F with l in its direction space
contributes an orbit stratum of dimension k - dim F over Z, and Z itself
survives in X unless it is contracted for characters normal to F.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .errors import ZeroDirection
from .lattice import as_intmatrix
from .polyhedra import faces, line_slice_positive_length, minkowski_sum, support_min
from .presentation import AHPresentation

FINITE = "Finite"
INFINITE = "Infinite"


@dataclass(frozen=True)
class SubtorusDirection:
    ell: tuple

    def __post_init__(self):
        v = tuple(int(x) for x in self.ell)
        if not any(v):
            raise ZeroDirection("subtorus direction must be nonzero")
        if math.gcd(*v) != 1:
            raise ValueError(f"direction {v} is not primitive")
        object.__setattr__(self, "ell", v)

    @classmethod
    def of(cls, v) -> "SubtorusDirection":
        return v if isinstance(v, cls) else cls(tuple(v))

    def canonical(self) -> "SubtorusDirection":
        """Representative of +-l whose first nonzero entry is positive."""
        first = next(x for x in self.ell if x)
        return self if first > 0 else SubtorusDirection(tuple(-x for x in self.ell))


@dataclass(frozen=True)
class FixedLocusReport:
    direction: SubtorusDirection
    fixed_labels: tuple
    isotropy: dict = field(compare=False)
    fixed_locus_dim: int = 0

    @property
    def has_positive_dim_locus(self) -> bool:
        return self.fixed_locus_dim > 0

    def to_json(self):
        return {
            "direction": list(self.direction.ell),
            "fixed_labels": [str(l) for l in self.fixed_labels],
            "isotropy": {str(l): v for l, v in self.isotropy.items()},
            "fixed_locus_dim": self.fixed_locus_dim,
        }


def _in_direction(face, ell, d) -> bool:
    basis = face.direction_space(d)
    return bool(basis) and la.in_span(ell, basis, d)


def _contracted(pres: AHPresentation, idx: int, u) -> bool:
    """Whether the exceptional curve of term ``idx`` is contracted by Y -> Y_u.

    That happens iff D(u) has degree zero on it, i.e. the piecewise linear
    function with values min<u, Delta> on the rays is linear across it.
    """
    terms = pres.terms
    if idx == 0 or idx == len(terms) - 1:
        return False
    prev, cur, nxt = terms[idx - 1], terms[idx], terms[idx + 1]
    vals = [Fraction(support_min(t.coefficient, u)) for t in (prev, cur, nxt)]
    m = la.solve([list(prev.ray), list(nxt.ray)], [vals[0], vals[2]], 2)
    return m is not None and la.dot(m, cur.ray) == vals[1]


def fixed_locus_dim(pres: AHPresentation, ell) -> int:
    """Largest dimension of an l-fixed stratum of X (0 = only isolated points)."""
    k = pres.rank
    ell = tuple(Fraction(x) for x in ell)
    best = 0
    toric = pres.surface is not None and all(t.ray is not None for t in pres.terms)
    for idx, t in enumerate(pres.terms):
        for face in faces(t.coefficient):
            if not _in_direction(face, ell, k):
                continue
            u = [sum(n[i] for n in face.normals) for i in range(k)] if face.normals else [0] * k
            base = 1
            if toric and t.label.is_exceptional and _contracted(pres, idx, u):
                base = 0
            best = max(best, k - face.dim + base)
    if toric:
        for a, b in zip(pres.terms, pres.terms[1:]):
            for face in faces(minkowski_sum(a.coefficient, b.coefficient)):
                if _in_direction(face, ell, k):
                    best = max(best, k - face.dim)
    return best


def fixed_components(pres: AHPresentation, ell) -> FixedLocusReport:
    """Labels carrying points fixed by the subtorus with cocharacter ``ell``."""
    d = SubtorusDirection.of(ell)
    if len(d.ell) != pres.rank:
        raise ValueError(f"direction has length {len(d.ell)}, lattice rank is {pres.rank}")
    isotropy = {}
    for t in pres.terms:
        isotropy[t.label] = INFINITE if line_slice_positive_length(t.coefficient, d.ell) else FINITE
    fixed = tuple(l for l, v in isotropy.items() if v == INFINITE)
    return FixedLocusReport(d, fixed, isotropy, fixed_locus_dim(pres, d.ell))


def oracle_fixed_points_linear(F, ell) -> frozenset:
    """1-based indices of coordinates not forced to vanish on the fixed locus.

    t acts on x_i by t^<row_i F, l>, so x_i survives iff that pairing is 0.
    """
    F = as_intmatrix(F)
    d = SubtorusDirection.of(ell)
    if len(d.ell) != F.ncols:
        raise ValueError("direction length does not match the number of columns of F")
    return frozenset(i + 1 for i, row in enumerate(F.rows) if sum(a * b for a, b in zip(row, d.ell)) == 0)


def directions(rank: int, height_bound: int) -> list:
    """Primitive directions up to sign with max-norm <= height_bound, lex order."""
    if height_bound < 1:
        raise ValueError("height_bound must be at least 1")
    out = set()
    for v in itertools.product(range(-height_bound, height_bound + 1), repeat=rank):
        if any(v) and math.gcd(*v) == 1:
            out.add(SubtorusDirection(v).canonical().ell)
    return [SubtorusDirection(v) for v in sorted(out)]


def fixed_locus_survey(pres: AHPresentation, height_bound: int) -> list:
    return [fixed_components(pres, d) for d in directions(pres.rank, height_bound)]


def fixed_labels_through_origin(pres: AHPresentation, reports) -> bool:
    """Survey diagnostic: every label fixed by some direction lies over the
    origin of the quotient (all toric labels do; a plane curve must vanish
    at (0, 0))."""
    import sympy

    labels = {l for r in reports for l in r.fixed_labels}
    if pres.base != "plane":
        return True
    u, v = sympy.symbols("u v")
    return all(sympy.sympify(pres.curves[l]).subs({u: 0, v: 0}) == 0 for l in labels if l in pres.curves)
