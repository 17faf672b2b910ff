"""Exact rational polyhedra in V-representation.

A :class:`Polyhedron` is ``conv(vertices) + cone(rays)`` with the vertex and
ray lists always minimal, so two equal sets compare equal as Python values.
H-representations are derived on demand.  Everything runs on
:class:`fractions.Fraction`; conversions between the two representations
go through an exact double description (see ``_dd``), capped at ambient
dimension 16.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _linalg as la
from ._dd import extreme_rays
from .errors import DimensionMismatch, DimensionTooLarge, NotPointed, ZeroDirection

MAX_DIM = 16

# support_min of an unbounded direction; compares below every Fraction
MINUS_INFINITY = float("-inf")


def qvec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class EmptyPolyhedron:
    ambient_dim: int

    is_empty = True

    def __repr__(self):
        return f"EmptyPolyhedron({self.ambient_dim})"


@dataclass(frozen=True)
class Polyhedron:
    """Nonempty pointed rational polyhedron, stored minimally and sorted."""

    ambient_dim: int
    vertices: tuple
    rays: tuple = ()

    is_empty = False

    @classmethod
    def from_generators(cls, vertices, rays=(), ambient_dim: int | None = None) -> "Polyhedron":
        vertices = [qvec(v) for v in vertices]
        rays = [qvec(r) for r in rays]
        if ambient_dim is None:
            if not vertices:
                raise ValueError("need at least one vertex to infer the dimension")
            ambient_dim = len(vertices[0])
        if not vertices:
            raise ValueError("a nonempty polyhedron needs at least one vertex")
        if any(len(x) != ambient_dim for x in vertices + rays):
            raise DimensionMismatch("generators of mixed dimension")
        eqs, ineqs = _h_from_v(vertices, rays, ambient_dim)
        return vertex_enumeration(eqs, ineqs, ambient_dim)

    @classmethod
    def point(cls, p) -> "Polyhedron":
        p = qvec(p)
        return cls(len(p), (p,), ())

    @classmethod
    def segment(cls, a, b) -> "Polyhedron":
        return cls.from_generators([a, b])

    @property
    def is_bounded(self) -> bool:
        return not self.rays

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1 and not self.rays

    def __add__(self, other):
        return minkowski_sum(self, other)

    def translate(self, t) -> "Polyhedron":
        t = qvec(t)
        if len(t) != self.ambient_dim:
            raise DimensionMismatch("translation vector has the wrong length")
        verts = sorted(tuple(a + b for a, b in zip(v, t)) for v in self.vertices)
        return Polyhedron(self.ambient_dim, tuple(verts), self.rays)

    def scale(self, c) -> "Polyhedron":
        """Image under x -> c x for rational c (negative c reflects)."""
        c = Fraction(c)
        if c == 0:
            return Polyhedron.point([0] * self.ambient_dim)
        verts = sorted(tuple(c * x for x in v) for v in self.vertices)
        sign = 1 if c > 0 else -1
        rays = sorted(tuple(sign * x for x in r) for r in self.rays)
        return Polyhedron(self.ambient_dim, tuple(verts), tuple(rays))

    def __neg__(self):
        return self.scale(-1)

    def h_representation(self):
        """``(equalities, inequalities)`` as lists of ``(a, b)``.

        Equalities mean ``<a, x> = b``, inequalities ``<a, x> >= b``; each
        inequality is a facet, scaled to a primitive integer vector.
        """
        return _h_from_v(self.vertices, self.rays, self.ambient_dim)

    def direction_space(self) -> list:
        """RREF basis of span(P - P), the linear part of the affine hull."""
        v0 = self.vertices[0]
        gens = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
        gens += [qvec(r) for r in self.rays]
        return la.row_basis(gens, self.ambient_dim)

    def affine_dim(self) -> int:
        return len(self.direction_space())

    def contains(self, x) -> bool:
        x = qvec(x)
        eqs, ineqs = self.h_representation()
        return all(la.dot(a, x) == b for a, b in eqs) and all(la.dot(a, x) >= b for a, b in ineqs)

    def __repr__(self):
        def fmt(v):
            return "(" + ", ".join(str(x) for x in v) + ")"

        s = "Polyhedron[" + ", ".join(fmt(v) for v in self.vertices)
        if self.rays:
            s += " + cone " + ", ".join(fmt(r) for r in self.rays)
        return s + "]"


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone given by primitive integer generators.

    A cone containing a line lists both directions of a lineality basis.
    """

    ambient_dim: int
    generators: tuple = ()

    @classmethod
    def of(cls, generators, ambient_dim: int | None = None) -> "Cone":
        gens = [qvec(g) for g in generators]
        if ambient_dim is None:
            ambient_dim = len(gens[0])
        return _minimal_cone(gens, ambient_dim)

    def lineality_space(self) -> list:
        eqs, ineqs = _h_from_v([qvec([0] * self.ambient_dim)], self.generators, self.ambient_dim)
        rows = [a for a, _ in eqs] + [a for a, _ in ineqs]
        return la.nullspace(rows, self.ambient_dim)

    @property
    def is_strongly_convex(self) -> bool:
        return not self.lineality_space()

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, x) -> bool:
        eqs, ineqs = _h_from_v([qvec([0] * self.ambient_dim)], self.generators, self.ambient_dim)
        x = qvec(x)
        return all(la.dot(a, x) == 0 for a, _ in eqs) and all(la.dot(a, x) >= 0 for a, _ in ineqs)


def _minimal_cone(gens, dim) -> Cone:
    gens = [g for g in gens if any(g)]
    if not gens:
        return Cone(dim, ())
    origin = qvec([0] * dim)
    eqs, ineqs = _h_from_v([origin], gens, dim)
    lineality = la.nullspace([a for a, _ in eqs] + [a for a, _ in ineqs], dim)
    if not lineality:
        return Cone(dim, vertex_enumeration(eqs, ineqs, dim).rays)
    # split off the lineality space and enumerate the pointed part inside its
    # orthogonal complement
    lin = [la.integerize(v) for v in la.row_basis(lineality, dim)]
    pointed = vertex_enumeration(eqs + [(qvec(v), Fraction(0)) for v in lin], ineqs, dim)
    out = set(pointed.rays)
    for v in lin:
        out.add(v)
        out.add(tuple(-x for x in v))
    return Cone(dim, tuple(sorted(out)))


def vertex_enumeration(equalities, inequalities, ambient_dim: int | None = None):
    """V-representation of ``{x : <a,x> = b for eqs, <c,x> >= d for ineqs}``.

    Returns :class:`EmptyPolyhedron` when infeasible.  Raises
    :class:`NotPointed` if the set contains a line.
    """
    equalities = [(qvec(a), Fraction(b)) for a, b in equalities]
    inequalities = [(qvec(a), Fraction(b)) for a, b in inequalities]
    if ambient_dim is None:
        first = equalities + inequalities
        if not first:
            raise ValueError("cannot infer the dimension of an unconstrained set")
        ambient_dim = len(first[0][0])
    d = ambient_dim
    if d > MAX_DIM:
        raise DimensionTooLarge(f"ambient dimension {d} exceeds {MAX_DIM}")
    if any(len(a) != d for a, _ in equalities + inequalities):
        raise DimensionMismatch("constraint of the wrong length")

    x0 = la.solve([a for a, _ in equalities], [b for _, b in equalities], d) if equalities else qvec([0] * d)
    if x0 is None:
        return EmptyPolyhedron(d)
    basis = la.nullspace([a for a, _ in equalities], d)
    m = len(basis)

    # restrict the inequalities to the affine subspace x = x0 + sum y_j basis_j
    red = []
    for a, b in inequalities:
        a2 = tuple(la.dot(a, w) for w in basis)
        b2 = b - la.dot(a, x0)
        if not any(a2):
            if b2 > 0:
                return EmptyPolyhedron(d)
            continue
        red.append((a2, b2))

    if m == 0:
        return Polyhedron(d, (x0,), ())
    if la.rank([a for a, _ in red], m) < m:
        raise NotPointed("the constraint set contains a line")

    # homogenise: (y, t) with <a, y> - b t >= 0 and t >= 0
    cons = [a + (-b,) for a, b in red] + [(Fraction(0),) * m + (Fraction(1),)]
    hom_rays, _ = extreme_rays(cons, m + 1)

    def lift(y, affine):
        base = x0 if affine else qvec([0] * d)
        return tuple(base[i] + sum((y[j] * basis[j][i] for j in range(m)), Fraction(0)) for i in range(d))

    verts, rays = set(), set()
    for r in hom_rays:
        t = Fraction(r[m])
        if t > 0:
            verts.add(lift(tuple(Fraction(x) / t for x in r[:m]), True))
        else:
            rays.add(la.integerize(lift(r[:m], False)))
    if not verts:
        return EmptyPolyhedron(d)
    return Polyhedron(d, tuple(sorted(verts)), tuple(sorted(rays)))


def _h_from_v(vertices, rays, d):
    """Facets and affine hull of conv(vertices) + cone(rays).

    The facets of the homogenised cone over (v, 1) and (r, 0) are the
    extreme rays of its dual, which double description computes directly.
    """
    gens = sorted(set([tuple(v) + (Fraction(1),) for v in vertices] + [tuple(r) + (Fraction(0),) for r in rays]))
    D = d + 1
    normals, lineality = extreme_rays(gens, D)
    eqs = []
    for e in la.row_basis(lineality, D):
        e = la.integerize(e)
        eqs.append((qvec(e[:d]), Fraction(-e[d])))
    ortho = _orthogonal_basis([qvec(l) for l in lineality])
    eq_basis = la.row_basis([a for a, _ in eqs], d)
    facets = set()
    for a in normals:
        a = qvec(a)
        # canonical representative modulo the lineality space
        for w in ortho:
            c = la.dot(a, w) / la.dot(w, w)
            a = tuple(x - c * y for x, y in zip(a, w))
        if not any(a) or la.in_span(a[:d], eq_basis, d):
            continue  # constant on the affine hull: the face at infinity
        facets.add(la.integerize(a))
    ineqs = [(qvec(a[:d]), Fraction(-a[d])) for a in sorted(facets)]
    return eqs, ineqs


def _orthogonal_basis(vectors):
    out = []
    for v in vectors:
        for w in out:
            c = la.dot(v, w) / la.dot(w, w)
            v = tuple(x - c * y for x, y in zip(v, w))
        if any(v):
            out.append(v)
    return out


def _check_dims(a, b):
    if a != b:
        raise DimensionMismatch(f"dimension {a} vs {b}")


def linear_image(matrix, poly):
    """Image of a polyhedron under an integer (or rational) matrix."""
    rows = [tuple(Fraction(x) for x in r) for r in (matrix.rows if hasattr(matrix, "rows") else matrix)]
    ncols = matrix.ncols if hasattr(matrix, "ncols") else len(rows[0])
    _check_dims(ncols, poly.ambient_dim)
    if poly.is_empty:
        return EmptyPolyhedron(len(rows))
    verts = [tuple(la.dot(r, v) for r in rows) for v in poly.vertices]
    rays = [tuple(la.dot(r, x) for r in rows) for x in poly.rays]
    return Polyhedron.from_generators(verts, [r for r in rays if any(r)], len(rows))


def support_min(poly: Polyhedron, u):
    """min over the polyhedron of <u, x>; ``MINUS_INFINITY`` when unbounded."""
    u = qvec(u)
    _check_dims(len(u), poly.ambient_dim)
    if any(la.dot(u, r) < 0 for r in poly.rays):
        return MINUS_INFINITY
    return min(la.dot(u, v) for v in poly.vertices)


def minkowski_sum(p: Polyhedron, q: Polyhedron):
    _check_dims(p.ambient_dim, q.ambient_dim)
    if p.is_empty or q.is_empty:
        return EmptyPolyhedron(p.ambient_dim)
    verts = {tuple(a + b for a, b in zip(v, w)) for v in p.vertices for w in q.vertices}
    if len(verts) == 1 and not p.rays and not q.rays:
        return Polyhedron(p.ambient_dim, tuple(verts), ())
    return Polyhedron.from_generators(sorted(verts), list(p.rays) + list(q.rays), p.ambient_dim)


def line_slice_positive_length(poly: Polyhedron, direction) -> bool:
    """Whether some line parallel to ``direction`` meets the polyhedron in a
    segment of positive length.

    ``P - P`` is centrally symmetric with 0 in its relative interior, so
    such a chord exists exactly when the direction lies in span(P - P).
    """
    direction = qvec(direction)
    if not any(direction):
        raise ZeroDirection("direction must be nonzero")
    _check_dims(len(direction), poly.ambient_dim)
    if poly.is_empty:
        return False
    return la.in_span(direction, poly.direction_space(), poly.ambient_dim)


def tail_cone(poly: Polyhedron) -> Cone:
    return Cone(poly.ambient_dim, poly.rays)


def dual_cone(cone: Cone) -> Cone:
    """``{u : <u, g> >= 0 for every generator g}``."""
    d = cone.ambient_dim
    if not cone.generators:
        return Cone(d, tuple(sorted({tuple(s * int(i == j) for j in range(d)) for i in range(d) for s in (1, -1)})))
    span = la.row_basis([qvec(g) for g in cone.generators], d)
    perp = la.nullspace(span, d)
    ineqs = [(qvec(g), Fraction(0)) for g in cone.generators]
    eqs = [(qvec(p), Fraction(0)) for p in perp]
    pointed = vertex_enumeration(eqs, ineqs, d)
    out = set(pointed.rays)
    for p in la.row_basis(perp, d):
        p = la.integerize(p)
        out.add(p)
        out.add(tuple(-x for x in p))
    return Cone(d, tuple(sorted(out)))


def relative_interior_nonempty_dim(poly: Polyhedron) -> int:
    """Dimension of the relative interior (= affine dimension)."""
    return poly.affine_dim()


def minimal_subspace(poly: Polyhedron) -> list:
    """Exact basis of span(P - P)."""
    return poly.direction_space()


def subspace_intersection_dim(a: Sequence, b: Sequence, d: int) -> int:
    return len(a) + len(b) - la.rank(list(a) + list(b), d)


@dataclass(frozen=True)
class Face:
    vertices: tuple
    rays: tuple
    dim: int
    normals: tuple  # inner normals of the facets containing the face

    def direction_space(self, d: int) -> list:
        v0 = self.vertices[0]
        gens = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
        gens += [qvec(r) for r in self.rays]
        return la.row_basis(gens, d)


def faces(poly: Polyhedron) -> list:
    """All nonempty faces, largest first."""
    d = poly.ambient_dim
    eqs, ineqs = poly.h_representation()
    tight_v = [frozenset(i for i, v in enumerate(poly.vertices) if la.dot(a, v) == b) for a, b in ineqs]
    tight_r = [frozenset(i for i, r in enumerate(poly.rays) if la.dot(a, qvec(r)) == 0) for a, _ in ineqs]
    whole = (frozenset(range(len(poly.vertices))), frozenset(range(len(poly.rays))))
    found = {whole}
    frontier = [whole]
    while frontier:
        nxt = []
        for vs, rs in frontier:
            for tv, tr in zip(tight_v, tight_r):
                cand = (vs & tv, rs & tr)
                if cand[0] and cand not in found:
                    found.add(cand)
                    nxt.append(cand)
        frontier = nxt
    out = []
    for vs, rs in found:
        verts = tuple(poly.vertices[i] for i in sorted(vs))
        rays = tuple(poly.rays[i] for i in sorted(rs))
        normals = tuple(a for (a, _), tv, tr in zip(ineqs, tight_v, tight_r) if vs <= tv and rs <= tr)
        v0 = verts[0]
        gens = [tuple(x - y for x, y in zip(v, v0)) for v in verts[1:]] + [qvec(r) for r in rays]
        out.append(Face(verts, rays, la.rank(gens, d), normals))
    out.sort(key=lambda f: (-f.dim, f.vertices, f.rays))
    return out
