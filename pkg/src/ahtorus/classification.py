"""Checks on the data (Y, D) of a smooth contractible complexity-two action.

The curve gates (simple normal crossings, mu-invariance, being an affine
line) and the linearization dichotomy: a presentation whose two curve
coefficients are genuine polyhedra comes from a linear action, a rational
non-integral point coefficient encodes a cyclic cover along that curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import sympy
from sympy import Poly, factor_list, gcd, resultant, symbols

from .errors import DimensionMismatch, NotCoprime, NotFullyHyperbolic, ParametrizationMismatch, UnsupportedShape
from .fan2d import cross
from .lattice import as_intmatrix, cokernel_map, primitive
from .polyhedra import minimal_subspace, relative_interior_nonempty_dim, subspace_intersection_dim
from .presentation import AHPresentation, ah_presentation, fully_hyperbolic_check

U, V = symbols("u v")
T, S = symbols("t s")


class _Undecided:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undecided"

    def __bool__(self):
        raise TypeError("Undecided has no truth value")


UNDECIDED = _Undecided()

LINEAR = "Linear"
PRODUCT = "ProductOfComplexityOne"
BICYCLIC = "BiCyclicCover"
CYCLIC = "CyclicCover"
UNDECIDED_OUTCOME = "Undecided"


@dataclass(frozen=True)
class CurveSpec:
    f: sympy.Expr
    parametrization: Optional[tuple] = None

    def __post_init__(self):
        f = sympy.expand(sympy.sympify(self.f))
        if f == 0:
            raise ValueError("curve polynomial must be nonzero")
        object.__setattr__(self, "f", f)
        if self.parametrization is not None:
            p, q = (sympy.expand(sympy.sympify(x)) for x in self.parametrization)
            object.__setattr__(self, "parametrization", (p, q))

    @classmethod
    def parse(cls, f: str, parametrization=None) -> "CurveSpec":
        loc = {"u": U, "v": V, "t": T}
        f = sympy.sympify(f, locals=loc)
        if parametrization is not None:
            parametrization = tuple(sympy.sympify(x, locals=loc) for x in parametrization)
        return cls(f, parametrization)


@dataclass(frozen=True)
class MuAction:
    order: int
    weights: tuple

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("mu must have order >= 1")
        object.__setattr__(self, "weights", tuple(int(w) % self.order for w in self.weights))


@dataclass
class Verdict:
    outcome: str
    evidence: dict = field(default_factory=dict)

    def to_json(self):
        return {"outcome": self.outcome, "evidence": self.evidence}


@dataclass(frozen=True)
class SNCResult:
    points: tuple  # rational (u, v), sorted
    transverse: dict = field(compare=False)
    all_transverse: object = True  # bool or UNDECIDED
    notes: tuple = ()


def _rational_roots(poly, var):
    """(rational roots, whether an irreducible factor of degree > 1 occurs)."""
    roots, irrational = [], False
    if sympy.sympify(poly).free_symbols - {var}:
        raise ValueError("expected a univariate polynomial")
    _, factors = factor_list(poly, var)
    for fac, _ in factors:
        d = Poly(fac, var).degree()
        if d == 1:
            a, b = Poly(fac, var).all_coeffs()
            roots.append(sympy.Rational(-b, a))
        elif d > 1:
            irrational = True
    return sorted(set(roots)), irrational


def _check_coprime(f1, f2):
    if Poly(gcd(f1, f2), U, V).total_degree() > 0:
        raise NotCoprime(f"{f1} and {f2} share a factor")


def snc_check(c1: CurveSpec, c2: CurveSpec) -> SNCResult:
    """Rational common zeros and whether the curves cross transversally there.

    Common zeros come from the resultant in v; irrational ones make the
    verdict Undecided (they are detected but not analysed).
    """
    f1, f2 = c1.f, c2.f
    _check_coprime(f1, f2)
    notes = []
    res = sympy.expand(resultant(f1, f2, V))
    points, irrational = [], False
    if res != 0 and Poly(res, U).degree() > 0:
        us, irr = _rational_roots(res, U)
        irrational |= irr
        for u0 in us:
            g = gcd(f1.subs(U, u0), f2.subs(U, u0))
            if Poly(g, V).degree() <= 0:
                continue
            vs, irr = _rational_roots(g, V)
            irrational |= irr
            points += [(u0, v0) for v0 in vs]
    if irrational:
        notes.append("resultant has irreducible factors of degree > 1")
    points.sort()
    transverse = {}
    for pt in points:
        sub = {U: pt[0], V: pt[1]}
        g1 = [sympy.diff(f1, x).subs(sub) for x in (U, V)]
        g2 = [sympy.diff(f2, x).subs(sub) for x in (U, V)]
        smooth = any(g1) and any(g2)
        transverse[pt] = bool(smooth and g1[0] * g2[1] - g1[1] * g2[0] != 0)
    verdict = all(transverse.values())
    if irrational and verdict:
        verdict = UNDECIDED
    pts = tuple((Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))) for a, b in points)
    return SNCResult(pts, {p: transverse[q] for p, q in zip(pts, points)}, verdict, tuple(notes))


@dataclass(frozen=True)
class MuInvariance:
    invariant: bool
    contains_origin: bool
    character: Optional[int] = None

    def __bool__(self):
        return self.invariant


def mu_invariance_check(c: CurveSpec, mu: MuAction) -> MuInvariance:
    """f is mu-semi-invariant iff a*alpha + b*beta is constant mod k."""
    a, b = mu.weights
    chars = {(a * i + b * j) % mu.order for i, j in Poly(c.f, U, V).monoms()}
    origin = c.f.subs({U: 0, V: 0}) == 0
    return MuInvariance(len(chars) == 1, origin, next(iter(chars)) if len(chars) == 1 else None)


def _deg(expr, var) -> int:
    p = Poly(expr, var)
    return 0 if p.is_zero else p.degree()


def a1_check(c: CurveSpec):
    """Verify a supplied polynomial parametrization t -> (p(t), q(t)).

    Returns True if f(p, q) = 0, the degrees match those of f (so the map is
    birational onto the curve) and the map is injective; False if one of
    the last two fails; Undecided without a parametrization.
    """
    if c.parametrization is None:
        return UNDECIDED
    p, q = c.parametrization
    if sympy.expand(c.f.subs({U: p, V: q}, simultaneous=True)) != 0:
        raise ParametrizationMismatch(f"f(p(t), q(t)) != 0 for f = {c.f}")
    if _deg(p, T) == 0 and _deg(q, T) == 0:
        return False
    if _deg(p, T) != _deg(c.f, V) or _deg(q, T) != _deg(c.f, U):
        return False
    dp = sympy.cancel((p - p.subs(T, S)) / (T - S))
    dq = sympy.cancel((q - q.subs(T, S)) / (T - S))
    g = gcd(sympy.expand(dp), sympy.expand(dq))
    return Poly(g, T, S).total_degree() == 0


def product_split(F):
    """Split of the coordinates by the two ray directions of P.

    Returns ``(I, J)`` as sets of 1-based indices, or None when P has more
    than two ray directions or the two rays do not form a lattice basis.
    """
    F = as_intmatrix(F)
    n, k = F.shape
    if not fully_hyperbolic_check(F):
        raise NotFullyHyperbolic("the column span of F meets the positive orthant")
    if n - k != 2:
        raise DimensionMismatch(f"expected complexity two (n - k = 2), got n={n}, k={k}")
    P = cokernel_map(F)
    dirs = [primitive(c) for c in P.columns()]
    distinct = sorted(set(dirs))
    if len(distinct) != 2 or abs(cross(*distinct)) != 1:
        return None
    blocks = [frozenset(i + 1 for i, d in enumerate(dirs) if d == r) for r in distinct]
    blocks.sort(key=min)
    return tuple(blocks)


def _cover_order(poly) -> int:
    (v,) = poly.vertices
    return math.lcm(*(Fraction(x).denominator for x in v))


def curve_terms(pres: AHPresentation) -> list:
    terms = [t for t in pres.terms if not t.label.is_exceptional]
    if len(terms) != 2:
        raise UnsupportedShape(f"expected two curve terms, found {len(terms)}")
    return terms


def linearization_verdict(pres: AHPresentation) -> Verdict:
    """Linear versus (bi)cyclic cover, from the two curve coefficients.

    A point coefficient with a non-integral vertex of denominator d encodes
    a cyclic cover of order d branched along its curve; an integral point is
    the trivial cover.
    """
    k = pres.rank
    terms = curve_terms(pres)
    evidence = {"terms": {}}
    covers = []
    for t in terms:
        c = t.coefficient
        dim = relative_interior_nonempty_dim(c)
        entry = {"dim": dim}
        if c.is_point:
            order = _cover_order(c)
            entry["cover_order"] = order
            if order > 1:
                covers.append(str(t.label))
        evidence["terms"][str(t.label)] = entry

    if len(covers) == 2:
        evidence["branch"] = "two_points"
        evidence["covers"] = covers
        return Verdict(BICYCLIC, evidence)
    if len(covers) == 1:
        evidence["branch"] = "one_point"
        evidence["covers"] = covers
        return Verdict(CYCLIC, evidence)

    d1, d2 = (relative_interior_nonempty_dim(t.coefficient) for t in terms)
    if d1 >= 1 and d2 >= 1:
        s1, s2 = (minimal_subspace(t.coefficient) for t in terms)
        meet = subspace_intersection_dim(s1, s2, k)
        evidence["S_dims"] = [len(s1), len(s2)]
        evidence["S_intersection_dim"] = meet
        # both alternatives contradict connectedness of the fixed locus,
        # so the curves can be normalized to the coordinate axes
        evidence["branch"] = "case_i" if meet == 0 else "case_ii"
        evidence["excluded"] = "fixed locus would be disconnected" if meet == 0 else "fixed locus would not be an affine line"
    else:
        evidence["branch"] = "integral_points"
    return Verdict(LINEAR, evidence)


def classify(pres: AHPresentation = None, curves=None, mu: MuAction = None, weights=None) -> Verdict:
    """Combine the curve gates with the linearization verdict."""
    gates = {}
    decided = True
    passed = True
    if curves:
        if len(curves) != 2:
            raise UnsupportedShape("classification needs exactly two curves")
        snc = snc_check(*curves)
        gates["snc"] = {
            "points": [[str(a), str(b)] for a, b in snc.points],
            "all_transverse": repr(snc.all_transverse) if snc.all_transverse is UNDECIDED else snc.all_transverse,
        }
        if snc.all_transverse is UNDECIDED:
            decided = False
        elif not snc.all_transverse:
            passed = False
        a1 = [a1_check(c) for c in curves]
        gates["a1"] = [repr(a) if a is UNDECIDED else a for a in a1]
        if any(a is UNDECIDED for a in a1):
            decided = False
        elif not all(a1):
            passed = False
        if mu is not None:
            inv = [mu_invariance_check(c, mu) for c in curves]
            gates["mu"] = [{"invariant": i.invariant, "contains_origin": i.contains_origin} for i in inv]
            if not all(i.invariant and i.contains_origin for i in inv):
                passed = False
    if not passed:
        return Verdict(UNDECIDED_OUTCOME, {"gates": gates, "reason": "curve data violates the structure theorem"})
    if not decided:
        return Verdict(UNDECIDED_OUTCOME, {"gates": gates, "reason": "a gate could not be decided"})
    if weights is not None:
        split = product_split(weights)
        if split is not None:
            return Verdict(PRODUCT, {"gates": gates, "split": [sorted(b) for b in split]})
    if pres is None and weights is not None:
        pres = ah_presentation(weights)
    if pres is None:
        raise UnsupportedShape("nothing to classify: give weights or a presentation")
    verdict = linearization_verdict(pres)
    verdict.evidence["gates"] = gates
    return verdict
