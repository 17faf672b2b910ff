"""Altmann-Hausen presentations of linear fully hyperbolic torus actions.

Given a weight matrix F (n x k, n - k = 2) the pipeline is::

    F  ->  (P, s)              exact sequence 0 -> Z^k -> Z^n -> Z^2 -> 0
       ->  rays v_i            primitive directions of the columns of P
       ->  fan / surface Y     coarsest fan on those rays
       ->  Delta_v             s({x >= 0 : P x = v})  for each distinct ray v

Coefficients depend on the section s only up to a shift v -> t(v) with t
linear; :func:`shift_equivalent` compares presentations modulo such shifts
and a global sign.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import _linalg as la
from .errors import DimensionMismatch, NotFullyHyperbolic, RankDeficient, StructureMismatch
from .fan2d import SurfaceInfo, coarsest_refinement, surface_info
from .lattice import (
    IntMatrix,
    as_intmatrix,
    cokernel_map,
    primitive,
    section,
    validate_exact_sequence,
)
from .polyhedra import Cone, Polyhedron, linear_image, vertex_enumeration


@dataclass(frozen=True, order=True)
class DivisorLabel:
    """``H1``/``H2`` (strict transforms of the axes), ``E<i>`` (exceptional)
    or a named curve ``{f = 0}`` on a plane base."""

    kind: str  # "H", "E" or "D"
    index: int = 0
    curve: Optional[str] = None

    def __str__(self):
        if self.kind == "D" and self.curve is not None:
            return f"D{self.index}{{{self.curve}=0}}" if self.index else f"{{{self.curve}=0}}"
        return f"{self.kind}{self.index}"

    @property
    def is_exceptional(self) -> bool:
        return self.kind == "E"

    @classmethod
    def parse(cls, text: str) -> "DivisorLabel":
        text = text.strip()
        if text[0] in "HE" and text[1:].isdigit():
            return cls(text[0], int(text[1:]))
        if text.startswith("D") and text[1:].isdigit():
            return cls("D", int(text[1:]))
        raise ValueError(f"unrecognised divisor label {text!r}")


def axis(i: int) -> DivisorLabel:
    return DivisorLabel("H", i)


def exceptional(i: int) -> DivisorLabel:
    return DivisorLabel("E", i)


def named_curve(i: int, f: str) -> DivisorLabel:
    return DivisorLabel("D", i, f)


@dataclass(frozen=True)
class Term:
    label: DivisorLabel
    coefficient: Polyhedron
    ray: Optional[tuple] = None


@dataclass(frozen=True)
class AHPresentation:
    """A pair (Y, D): base surface plus polyhedral coefficients."""

    rank: int
    terms: tuple
    tail: Cone
    surface: Optional[SurfaceInfo] = None
    weights: Optional[IntMatrix] = None
    P: Optional[IntMatrix] = None
    s: Optional[IntMatrix] = None
    base: str = "toric"  # or "plane" for curve-labelled presentations
    curves: dict = field(default_factory=dict, compare=False)

    def term(self, label) -> Term:
        if isinstance(label, str):
            label = DivisorLabel.parse(label)
        for t in self.terms:
            if t.label == label or (t.label.kind == label.kind and t.label.index == label.index):
                return t
        raise KeyError(str(label))

    def by_ray(self) -> dict:
        return {t.ray: t for t in self.terms}

    def formal_sum(self) -> str:
        return " + ".join(f"{t.coefficient!r} (x) {t.label}" for t in self.terms)


def tail_cone_of_weights(F) -> Cone:
    """``s(Q^n_{>=0} cap F(Q))``, which equals ``{y : F y >= 0}``."""
    F = as_intmatrix(F)
    n, k = F.shape
    if la.rank([list(r) for r in F.rows], k) < k:
        raise RankDeficient("weight matrix does not have full column rank")
    cone = vertex_enumeration([], [(row, 0) for row in F.rows], k)
    return Cone(k, cone.rays)


def fully_hyperbolic_check(F) -> bool:
    """True iff no nonzero nonnegative vector lies in the column span of F."""
    return tail_cone_of_weights(F).is_zero


def plane_presentation(rank: int, terms, curves=None) -> AHPresentation:
    """Presentation over A^2 = Spec Q[u, v] with curve labels.

    ``terms`` is a list of ``(label, polyhedron)`` or ``(label, polyhedron,
    ray)``; ``curves`` maps labels to sympy expressions in u, v.
    """
    built = []
    for t in terms:
        label, poly = t[0], t[1]
        ray = tuple(t[2]) if len(t) > 2 and t[2] is not None else None
        built.append(Term(label, poly, ray))
    return AHPresentation(rank=rank, terms=tuple(built), tail=Cone(rank, ()), base="plane", curves=dict(curves or {}))


def ah_presentation(F, P=None, s=None) -> AHPresentation:
    """AH presentation of A^n with the linear action given by ``F``.

    ``P`` and ``s`` may be supplied (e.g. to reproduce a published choice);
    they are validated against ``F``.  Otherwise they are computed from a
    Smith decomposition of ``F``.
    """
    F = as_intmatrix(F)
    n, k = F.shape
    if not fully_hyperbolic_check(F):
        raise NotFullyHyperbolic("the column span of F meets the positive orthant")
    if n - k != 2:
        raise DimensionMismatch(f"expected complexity two (n - k = 2), got n={n}, k={k}")
    P = cokernel_map(F) if P is None else as_intmatrix(P)
    s = section(F) if s is None else as_intmatrix(s)
    validate_exact_sequence(F, P, s)

    fan = coarsest_refinement(P.columns())
    info = surface_info(fan)
    labels = {info.boundary_rays[0]: axis(1), info.boundary_rays[1]: axis(2)}
    for i, r in enumerate(info.exceptional_rays):
        labels[r] = exceptional(i + 1)

    ineqs = [([int(i == j) for j in range(n)], 0) for i in range(n)]
    terms = []
    for ray in fan.rays:
        fibre = vertex_enumeration([(row, b) for row, b in zip(P.rows, ray)], ineqs, n)
        terms.append(Term(labels[ray], linear_image(s, fibre), ray))
    return AHPresentation(rank=k, terms=tuple(terms), tail=Cone(k, ()), surface=info, weights=F, P=P, s=s)


def column_rays(P) -> list:
    P = as_intmatrix(P)
    return [primitive(c) for c in P.columns()]


def _lexmin_translation(a: Polyhedron, b: Polyhedron):
    """Vector t with a == b + t, or None."""
    if a.ambient_dim != b.ambient_dim or len(a.vertices) != len(b.vertices) or a.rays != b.rays:
        return None
    t = tuple(x - y for x, y in zip(a.vertices[0], b.vertices[0]))
    return t if b.translate(t) == a else None


def find_shift(A: AHPresentation, B: AHPresentation):
    """Witness ``(sign, T)`` with ``sign * B_v == A_v + T v`` for all rays v.

    T is a k x 2 integer matrix (list of rows).  Returns None if no such
    witness exists.
    """
    if A.rank != B.rank:
        raise StructureMismatch(f"lattice ranks differ: {A.rank} vs {B.rank}")
    ra, rb = A.by_ray(), B.by_ray()
    if None in ra or None in rb:
        raise StructureMismatch("shift equivalence needs ray data for every term")
    if sorted(ra) != sorted(rb):
        raise StructureMismatch("presentations live on different fans")
    rays = sorted(ra)
    dim = len(rays[0])
    for sign in (1, -1):
        shifts = {}
        for v in rays:
            t = _lexmin_translation(rb[v].coefficient.scale(sign), ra[v].coefficient)
            if t is None:
                break
            shifts[v] = t
        else:
            T = _fit_linear(rays, shifts, A.rank, dim)
            if T is not None:
                return sign, T
    return None


def _fit_linear(rays, shifts, k, dim):
    """Integer k x dim matrix T with T v = shifts[v] for all v, or None."""
    basis = []
    for v in rays:
        if la.rank([list(x) for x in basis] + [list(v)], dim) > len(basis):
            basis.append(v)
    if len(basis) < dim:
        return None
    rows = []
    for i in range(k):
        sol = la.solve([list(v) for v in basis], [shifts[v][i] for v in basis], dim)
        if sol is None or any(Fraction(x).denominator != 1 for x in sol):
            return None
        rows.append([int(x) for x in sol])
    for v in rays:
        if tuple(sum(Fraction(r[j]) * v[j] for j in range(dim)) for r in rows) != tuple(shifts[v]):
            return None
    return rows


def shift_equivalent(A: AHPresentation, B: AHPresentation) -> bool:
    """Equal up to a global sign and a shift linear in the rays."""
    return find_shift(A, B) is not None


def presentation_from_coefficients(rays_to_polys: dict, rank: int, F=None, P=None) -> AHPresentation:
    """Build a toric presentation from explicit coefficients keyed by ray.

    Rays missing from the dict but present in the fan are given the trivial
    coefficient {0}.
    """
    all_rays = list(rays_to_polys)
    if P is not None:
        all_rays += column_rays(P)
    fan = coarsest_refinement(all_rays)
    info = surface_info(fan)
    labels = {info.boundary_rays[0]: axis(1), info.boundary_rays[1]: axis(2)}
    for i, r in enumerate(info.exceptional_rays):
        labels[r] = exceptional(i + 1)
    origin = Polyhedron.point([0] * rank)
    terms = tuple(Term(labels[r], rays_to_polys.get(r, origin), r) for r in fan.rays)
    return AHPresentation(
        rank=rank,
        terms=terms,
        tail=Cone(rank, ()),
        surface=info,
        weights=as_intmatrix(F) if F is not None else None,
        P=as_intmatrix(P) if P is not None else None,
    )
