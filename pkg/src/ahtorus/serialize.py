"""JSON encoding of matrices, rationals, polyhedra and presentations.

Integers are written as decimal strings and rationals as ``[num, den]``
string pairs, so no value ever passes through a float.  Readers accept
plain JSON integers as well.
"""

from __future__ import annotations

from fractions import Fraction

import sympy
from sympy import Poly

from .lattice import IntMatrix, as_intmatrix
from .polyhedra import Polyhedron
from .presentation import AHPresentation, DivisorLabel, named_curve, plane_presentation, presentation_from_coefficients


def enc_int(x) -> str:
    return str(int(x))


def enc_rat(x) -> list:
    x = Fraction(x)
    return [str(x.numerator), str(x.denominator)]


def dec_int(x) -> int:
    if isinstance(x, bool):
        raise ValueError("booleans are not integers")
    return int(x)


def dec_rat(x) -> Fraction:
    if isinstance(x, list):
        num, den = x
        return Fraction(int(num), int(den))
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(dec_int(x))


def enc_matrix(M) -> list:
    M = as_intmatrix(M)
    return [[enc_int(x) for x in row] for row in M.rows]


def dec_matrix(rows) -> IntMatrix:
    rows = [[dec_int(x) for x in row] for row in rows]
    return IntMatrix.of(rows)


def enc_polyhedron(p: Polyhedron) -> dict:
    return {
        "vertices": [[enc_rat(x) for x in v] for v in p.vertices],
        "rays": [[enc_rat(x) for x in r] for r in p.rays],
    }


def dec_polyhedron(d: dict) -> Polyhedron:
    verts = [[dec_rat(x) for x in v] for v in d["vertices"]]
    rays = [[dec_rat(x) for x in r] for r in d.get("rays", [])]
    return Polyhedron.from_generators(verts, rays)


def enc_polynomial(expr, variables) -> list:
    """Polynomial as a list of ``{exponents, coefficient}`` in lex order."""
    p = Poly(sympy.expand(expr), *variables)
    out = []
    for mon, c in sorted(zip(p.monoms(), p.coeffs()), reverse=True):
        c = sympy.Rational(c)
        out.append({"exponents": [enc_int(e) for e in mon], "coefficient": enc_rat(Fraction(int(c.p), int(c.q)))})
    return out


def dec_polynomial(terms, variables):
    expr = sympy.Integer(0)
    for t in terms:
        c = dec_rat(t["coefficient"])
        mono = sympy.Mul(*[x ** dec_int(e) for x, e in zip(variables, t["exponents"])])
        expr += sympy.Rational(c.numerator, c.denominator) * mono
    return expr


def enc_presentation(pres: AHPresentation) -> dict:
    out = {
        "rank": pres.rank,
        "base": pres.base,
        "terms": [],
        "formal_sum": pres.formal_sum(),
    }
    if pres.surface is not None:
        out["surface"] = pres.surface.to_json()
    for t in pres.terms:
        term = {"label": str(t.label), "polyhedron": enc_polyhedron(t.coefficient)}
        if t.ray is not None:
            term["ray"] = [enc_int(x) for x in t.ray]
        if t.label in pres.curves:
            term["curve"] = str(pres.curves[t.label])
        out["terms"].append(term)
    if pres.P is not None:
        out["P"] = enc_matrix(pres.P)
    if pres.s is not None:
        out["s"] = enc_matrix(pres.s)
    return out


def dec_presentation(d: dict) -> AHPresentation:
    """Presentation from JSON: plane base with curves, or toric base with rays."""
    rank = dec_int(d["rank"])
    base = d.get("base", "plane" if any("curve" in t for t in d["terms"]) else "toric")
    if base == "plane":
        terms, curves = [], {}
        u, v = sympy.symbols("u v")
        d_index = 0
        for t in d["terms"]:
            poly = dec_polyhedron(t["polyhedron"])
            ray = [dec_int(x) for x in t["ray"]] if "ray" in t else None
            if "curve" in t:
                d_index += 1
                label = named_curve(d_index, t["curve"])
                curves[label] = sympy.sympify(t["curve"], locals={"u": u, "v": v})
            else:
                label = DivisorLabel.parse(t["label"])
            terms.append((label, poly, ray))
        return plane_presentation(rank, terms, curves)
    coeffs = {tuple(dec_int(x) for x in t["ray"]): dec_polyhedron(t["polyhedron"]) for t in d["terms"]}
    return presentation_from_coefficients(coeffs, rank)
