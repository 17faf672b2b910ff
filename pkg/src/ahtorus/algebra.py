"""Evaluating p-divisors and reading off graded pieces of A(Y, D).

For a character u the evaluation D(u) is the Q-divisor sum_Z min<u, Delta_Z> Z.
On a plane base whose divisors are principal primes {f_i = 0} the degree-u
piece is the free module generated by prod f_i^(-floor c_i).  Polynomials
are sympy expressions over Q with the variable order documented on each
function.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import sympy
from sympy import Poly, Symbol, factor_list, gcd, symbols

from .errors import (
    BoundTooSmall,
    NotCoprime,
    NotHomogeneous,
    NotIrreducible,
    UnboundedEvaluation,
    UnsupportedShape,
)
from .lattice import as_intmatrix
from .polyhedra import MINUS_INFINITY, support_min, vertex_enumeration
from .presentation import AHPresentation

U, V = symbols("u v")
BASE_VARS = (U, V)


@dataclass(frozen=True)
class QDivisor:
    coefficients: tuple  # ((label, Fraction), ...) in presentation order

    def __getitem__(self, label):
        for l, c in self.coefficients:
            if l == label or str(l) == str(label):
                return c
        raise KeyError(str(label))

    def as_dict(self) -> dict:
        return dict(self.coefficients)

    def floor(self) -> dict:
        return {l: math.floor(c) for l, c in self.coefficients}

    def __str__(self):
        parts = [f"{c}*{l}" for l, c in self.coefficients if c != 0]
        return " + ".join(parts) if parts else "0"


def evaluate(pres: AHPresentation, u) -> QDivisor:
    """D(u) = sum over terms of min<u, Delta> times the divisor."""
    u = tuple(int(x) for x in u)
    coeffs = []
    for t in pres.terms:
        c = support_min(t.coefficient, u)
        if c == MINUS_INFINITY:
            raise UnboundedEvaluation(f"u={u} is not in the dual of the tail cone (term {t.label})")
        coeffs.append((t.label, Fraction(c)))
    return QDivisor(tuple(coeffs))


@dataclass(frozen=True)
class GradedPiece:
    """A_u = generator * Q[u, v] on a plane base."""

    u: tuple
    exponents: tuple  # ((label, m_i), ...) with m_i = -floor(c_i)
    generator: sympy.Expr
    structure: str = "generator * Q[u,v]"

    def exponent(self, label) -> int:
        for l, m in self.exponents:
            if l == label or str(l) == str(label):
                return m
        raise KeyError(str(label))


def _check_curves(curves: dict):
    polys = {}
    for label, f in curves.items():
        f = sympy.sympify(f)
        _, factors = factor_list(f, *BASE_VARS)
        if len(factors) != 1 or factors[0][1] != 1:
            raise NotIrreducible(f"{f} is not irreducible over Q")
        polys[label] = f
    for (la_, f), (lb, g) in itertools.combinations(polys.items(), 2):
        if Poly(gcd(f, g), *BASE_VARS).total_degree() > 0:
            raise NotCoprime(f"{f} and {g} share a factor")
    return polys


def sections_plane(divisor: QDivisor, curves: dict, u=None) -> GradedPiece:
    """Degree-u piece of a divisor supported on the principal primes ``curves``.

    ``curves`` maps each label of ``divisor`` to an irreducible polynomial in
    u, v; the curves must be pairwise coprime.
    """
    polys = _check_curves({l: curves[l] for l, _ in divisor.coefficients})
    exps = tuple((l, -math.floor(c)) for l, c in divisor.coefficients)
    gen = sympy.Integer(1)
    for l, m in exps:
        gen *= polys[l] ** m
    return GradedPiece(tuple(u) if u is not None else (), exps, gen)


def graded_piece(pres: AHPresentation, u) -> GradedPiece:
    """``sections_plane(evaluate(pres, u))`` for a plane presentation."""
    if pres.base != "plane":
        raise UnsupportedShape("graded_piece needs a plane base with curve labels")
    return sections_plane(evaluate(pres, u), pres.curves, u)


def toric_sections(pres: AHPresentation, u, box: int) -> list:
    """Characters w of the toric base (|w_i| <= box) spanning A_u.

    chi^w is a section of O(D(u)) iff <w, v_rho> >= -floor(D(u)_rho) for
    every ray rho.
    """
    if pres.surface is None:
        raise UnsupportedShape("toric_sections needs a toric base")
    D = evaluate(pres, u)
    bounds = [(t.ray, -math.floor(D[t.label])) for t in pres.terms]
    out = []
    for w in itertools.product(range(-box, box + 1), repeat=2):
        if all(w[0] * r[0] + w[1] * r[1] >= b for r, b in bounds):
            out.append(w)
    return out


def ambient_monomial(pres: AHPresentation, u, w) -> tuple:
    """Exponent vector s^T u + P^T w of the monomial matching chi^w chi^u."""
    s, P = pres.s, pres.P
    n = s.ncols
    return tuple(
        sum(s.rows[i][j] * u[i] for i in range(s.nrows)) + sum(P.rows[i][j] * w[i] for i in range(P.nrows))
        for j in range(n)
    )


@dataclass
class AlgebraPresentation:
    generators: list  # [(name, weight)]
    relations: list  # sympy expressions
    degree_bound: int
    variables: tuple = field(default_factory=tuple)
    realizations: dict = field(default_factory=dict)

    def relation_strings(self) -> list:
        return [str(sympy.expand(r)) for r in self.relations]

    def is_homogeneous(self) -> bool:
        weights = dict(self.generators)
        return all(_relation_weight(r, weights) is not None for r in self.relations)


def _relation_weight(expr, weights: dict):
    """Common M-weight of all monomials (base variables weigh 0), or None."""
    names = [Symbol(n) for n in weights]
    gens = list(BASE_VARS) + names
    p = Poly(sympy.expand(expr), *gens)
    found = None
    k = len(next(iter(weights.values())))
    for mon in p.monoms():
        w = [0] * k
        for e, name in zip(mon[2:], weights):
            for i in range(k):
                w[i] += e * weights[name][i]
        w = tuple(w)
        if found is None:
            found = w
        elif w != found:
            return None
    return found


def _segment_direction(poly):
    """(axis, length) for an axis-parallel lattice segment, else None."""
    if poly.rays or len(poly.vertices) != 2:
        return None
    a, b = poly.vertices
    diff = [y - x for x, y in zip(a, b)]
    nz = [i for i, x in enumerate(diff) if x != 0]
    if len(nz) != 1 or any(x.denominator != 1 for v in (a, b) for x in v):
        return None
    return nz[0], abs(diff[nz[0]])


def presentation_bounded(pres: AHPresentation, weight_bound: int = 2) -> AlgebraPresentation:
    """Generators and relations of A(Y, D) for the two-segment plane shape.

    Supported input: plane base, rank 2, two terms whose coefficients are
    unit lattice segments parallel to the two coordinate axes.  Generators
    x1, x2 (weights e1, -e1) and x3, x4 (weights e2, -e2) are the section
    generators of the corresponding graded pieces; every piece with
    |u_i| <= weight_bound is checked to be generated by their monomials.
    """
    if pres.base != "plane" or pres.rank != 2 or len(pres.terms) != 2:
        raise UnsupportedShape("expected two curve terms over a plane base in rank 2")
    shapes = [_segment_direction(t.coefficient) for t in pres.terms]
    if any(s is None or s[1] != 1 for s in shapes) or {s[0] for s in shapes} != {0, 1}:
        raise UnsupportedShape("coefficients must be unit segments parallel to e1 and e2")
    polys = _check_curves(pres.curves)

    def gen_exps(u):
        D = evaluate(pres, u)
        return {l: -math.floor(c) for l, c in D.coefficients}

    def realize(exps):
        out = sympy.Integer(1)
        for l, m in exps.items():
            out *= polys[l] ** m
        return out

    xs = symbols("x1 x2 x3 x4")
    weights = {"x1": (1, 0), "x2": (-1, 0), "x3": (0, 1), "x4": (0, -1)}
    gen_data = {name: gen_exps(w) for name, w in weights.items()}

    # every A_u in the box must be the product of generator monomials
    for a, b in itertools.product(range(-weight_bound, weight_bound + 1), repeat=2):
        mono = {"x1": max(a, 0), "x2": max(-a, 0), "x3": max(b, 0), "x4": max(-b, 0)}
        prod = {l: 0 for l in polys}
        for name, e in mono.items():
            for l, m in gen_data[name].items():
                prod[l] += e * m
        if prod != gen_exps((a, b)):
            raise UnsupportedShape(f"generator monomials do not span A_u at u={(a, b)}")

    relations = []
    for (p, q) in (("x1", "x2"), ("x3", "x4")):
        exps = {l: gen_data[p][l] + gen_data[q][l] for l in polys}
        if any(m < 0 for m in exps.values()):
            raise UnsupportedShape("product of paired generators is not regular")
        lhs = Symbol(p) * Symbol(q)
        relations.append(sympy.expand(lhs - realize(exps)))
    return AlgebraPresentation(
        generators=list(weights.items()),
        relations=relations,
        degree_bound=weight_bound,
        variables=BASE_VARS + xs,
        realizations={name: realize(e) for name, e in gen_data.items()},
    )


def eliminate(relations, var) -> list:
    """Use a relation of the form ``var - h`` (h free of var) to remove var."""
    var = sympy.sympify(var)
    for i, r in enumerate(relations):
        p = Poly(sympy.expand(r), var)
        if p.degree() == 1 and p.coeff_monomial(var) in (1, -1):
            rest = sympy.expand(r - p.coeff_monomial(var) * var)
            if var in rest.free_symbols:
                continue
            value = -rest / p.coeff_monomial(var)
            return [sympy.expand(s.subs(var, value)) for j, s in enumerate(relations) if j != i]
    raise ValueError(f"no relation is linear in {var} with unit coefficient")


def kernel_cone_rays(F) -> list:
    """Primitive extreme rays of {m >= 0 : F^T m = 0}."""
    F = as_intmatrix(F)
    n, k = F.shape
    cols = F.columns()
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    cone = vertex_enumeration([(c, 0) for c in cols], [(e, 0) for e in eye], n)
    return list(cone.rays)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def invariant_ring_generators(F, total_degree_bound: int) -> list:
    """Hilbert basis of {m in Z^n_{>=0} : F^T m = 0} up to total degree.

    Emits :class:`BoundTooSmall` if an extreme ray of the cone needs a
    larger degree than the bound (the result is then certainly incomplete).
    """
    F = as_intmatrix(F)
    n, k = F.shape
    cols = F.columns()
    rays = kernel_cone_rays(F)
    worst = max((sum(r) for r in rays), default=0)
    if worst > total_degree_bound:
        warnings.warn(
            BoundTooSmall(f"an extreme ray has degree {worst} > bound {total_degree_bound}"),
            stacklevel=2,
        )
    basis = []
    for d in range(1, total_degree_bound + 1):
        for m in _compositions(d, n):
            if any(sum(c[i] * m[i] for i in range(n)) != 0 for c in cols):
                continue
            if any(all(x >= y for x, y in zip(m, b)) for b in basis):
                continue
            basis.append(m)
    return sorted(basis, key=lambda m: (sum(m), tuple(-x for x in m)))


def monomial_weight(F, exponents) -> tuple:
    F = as_intmatrix(F)
    return tuple(sum(F.rows[i][j] * exponents[i] for i in range(F.nrows)) for j in range(F.ncols))


def check_equivariant_hypersurface(F, g, variables=None) -> tuple:
    """Common F-weight of every monomial of g, or :class:`NotHomogeneous`.

    ``variables`` names the ambient coordinates in the row order of F
    (default ``x1..xn``).
    """
    F = as_intmatrix(F)
    n = F.nrows
    if variables is None:
        variables = symbols(" ".join(f"x{i + 1}" for i in range(n)))
    variables = tuple(sympy.sympify(x) if isinstance(x, str) else x for x in variables)
    if len(variables) != n:
        raise ValueError(f"need {n} variable names, got {len(variables)}")
    p = Poly(sympy.sympify(g), *variables)
    if p.is_zero:
        raise ValueError("g must be nonzero")
    weights = {}
    for mon in p.monoms():
        weights.setdefault(monomial_weight(F, mon), []).append(mon)
    if len(weights) == 1:
        return next(iter(weights))
    offending = []
    for w, mons in weights.items():
        for mon in mons:
            term = sympy.Mul(*[x**e for x, e in zip(variables, mon)])
            offending.append((str(term), w))
    raise NotHomogeneous(f"monomials carry {len(weights)} different weights: {offending}", offending)
