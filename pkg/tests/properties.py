"""Randomised properties shared by the property tests and the acceptance run.

``build_suite(n)`` returns named zero-argument callables, each running one
hypothesis property with ``n`` examples.
"""


import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ahtorus.algebra import evaluate
from ahtorus.classification import CurveSpec, snc_check
from ahtorus.errors import NotCoprime, PreconditionError
from ahtorus.lattice import IntMatrix, cokernel_map, section
from ahtorus.polyhedra import Polyhedron, line_slice_positive_length, minkowski_sum, support_min
from ahtorus.presentation import DivisorLabel, ah_presentation, find_shift, plane_presentation
from oracles import lp_slice_positive

small = st.integers(-3, 3)


@st.composite
def weight_matrices(draw, max_n=4):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n - 1))
    return [[draw(small) for _ in range(k)] for _ in range(n)]


@st.composite
def polytopes(draw, dim=None, max_points=4):
    d = dim if dim is not None else draw(st.integers(1, 4))
    count = draw(st.integers(1, max_points if d < 4 else 3))
    pts = [tuple(draw(st.fractions(-3, 3, max_denominator=3)) for _ in range(d)) for _ in range(count)]
    return Polyhedron.from_generators(pts)


@st.composite
def complexity_two_weights(draw):
    n = draw(st.integers(3, 4))
    return [[draw(small) for _ in range(n - 2)] for _ in range(n)]


def vectors(d):
    return st.tuples(*[small] * d)


def check_exact_sequence(F):
    try:
        P, s = cokernel_map(F), section(F)
    except PreconditionError:
        assume(False)
    M = IntMatrix.of(F)
    assert (P @ M).is_zero()
    assert s @ M == IntMatrix.identity(M.ncols)


def check_minkowski_support(data):
    p, q, u = data
    assert support_min(minkowski_sum(p, q), u) == support_min(p, u) + support_min(q, u)


def check_support_concave_homogeneous(data):
    p, u, w, lam = data
    assert support_min(p, tuple(lam * x for x in u)) == lam * support_min(p, u)
    assert support_min(p, tuple(a + b for a, b in zip(u, w))) >= support_min(p, u) + support_min(p, w)


def check_evaluate_superadditive(data):
    polys, u, w = data
    labels = [DivisorLabel("D", i + 1) for i in range(len(polys))]
    pres = plane_presentation(2, list(zip(labels, polys)))
    a, b = evaluate(pres, u), evaluate(pres, w)
    c = evaluate(pres, tuple(x + y for x, y in zip(u, w)))
    for l in labels:
        assert c[l] >= a[l] + b[l]


def check_slice_vs_lp(data):
    p, ell = data
    assume(any(ell))
    assert line_slice_positive_length(p, ell) == lp_slice_positive(p.vertices, ell)


U, V = sympy.symbols("u v")


@st.composite
def plane_polys(draw):
    terms = draw(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(-2, 2)), min_size=1, max_size=3))
    f = sum((c * U**i * V**j for i, j, c in terms), sympy.Integer(0))
    assume(f != 0 and sympy.Poly(f, U, V).total_degree() > 0)
    return f


def check_snc_symmetric(data):
    f1, f2 = data
    try:
        a = snc_check(CurveSpec(f1), CurveSpec(f2))
    except NotCoprime:
        try:
            snc_check(CurveSpec(f2), CurveSpec(f1))
        except NotCoprime:
            return
        raise AssertionError("NotCoprime raised in one order only")
    b = snc_check(CurveSpec(f2), CurveSpec(f1))
    assert a.points == b.points
    assert a.transverse == b.transverse
    assert a.all_transverse is b.all_transverse or a.all_transverse == b.all_transverse


def check_shift_reflexive_and_section_independent(data):
    F, g = data
    try:
        pres = ah_presentation(F)
    except (PreconditionError, ValueError):
        assume(False)
    assert find_shift(pres, pres) == (1, [[0] * 2 for _ in range(pres.rank)])
    P, s = pres.P, pres.s
    G = IntMatrix.of(g[: pres.rank], 2)
    s2 = IntMatrix.of([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(s.rows, (G @ P).rows)], P.ncols)
    other = ah_presentation(F, P, s2)
    witness = find_shift(pres, other)
    assert witness is not None
    assert witness == (1, G.tolist())


def _with_dim(d):
    return st.tuples(polytopes(dim=d), polytopes(dim=d), vectors(d))


PROPERTIES = {
    "exact sequence P.F = 0 and s.F = I": (weight_matrices(), check_exact_sequence),
    "support additivity under Minkowski sum": (
        st.integers(1, 4).flatmap(_with_dim),
        check_minkowski_support,
    ),
    "support_min concave and homogeneous": (
        st.integers(1, 4).flatmap(lambda d: st.tuples(polytopes(dim=d), vectors(d), vectors(d), st.integers(0, 4))),
        check_support_concave_homogeneous,
    ),
    "evaluate superadditive": (
        st.tuples(st.lists(polytopes(dim=2), min_size=1, max_size=3), vectors(2), vectors(2)),
        check_evaluate_superadditive,
    ),
    "line slice vs LP oracle": (
        st.integers(1, 4).flatmap(lambda d: st.tuples(polytopes(dim=d), vectors(d))),
        check_slice_vs_lp,
    ),
    "snc_check symmetric": (st.tuples(plane_polys(), plane_polys()), check_snc_symmetric),
    "shift equivalence reflexive, presentation section-independent": (
        st.tuples(complexity_two_weights(), st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2)),
        check_shift_reflexive_and_section_independent,
    ),
}


def build_suite(max_examples):
    suite = {}
    for name, (strategy, check) in PROPERTIES.items():
        test = settings(max_examples=max_examples, deadline=None, database=None)(given(strategy)(check))
        suite[name] = test
    return suite
