"""Independent brute-force oracles used to freeze and cross-check values.

Nothing here calls into the double description code: vertices come from
sweeping all basic solutions, slices from a floating LP, invariants from a
box enumeration.
"""

import itertools
from fractions import Fraction
from math import gcd

import sympy


def basic_solution_vertices(equalities, inequalities, dim):
    """Vertices of a bounded polyhedron by trying every choice of tight rows."""
    eqs = [([Fraction(x) for x in a], Fraction(b)) for a, b in equalities]
    ineqs = [([Fraction(x) for x in a], Fraction(b)) for a, b in inequalities]
    found = set()
    for chosen in itertools.combinations(range(len(ineqs)), max(0, dim - len(eqs))):
        rows = [a for a, _ in eqs] + [ineqs[i][0] for i in chosen]
        rhs = [b for _, b in eqs] + [ineqs[i][1] for i in chosen]
        M = sympy.Matrix(rows)
        if M.rank() < dim:
            continue
        sol, params = M.gauss_jordan_solve(sympy.Matrix(rhs))
        if params.shape[0]:
            continue
        x = [Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in sol]
        if all(sum(ai * xi for ai, xi in zip(a, x)) == b for a, b in eqs) and all(
            sum(ai * xi for ai, xi in zip(a, x)) >= b for a, b in ineqs
        ):
            found.add(tuple(x))
    return sorted(found)


def lp_slice_positive(vertices, direction, tol=1e-9):
    """Max t with x, x + t*l both in conv(vertices), solved as a float LP."""
    import numpy as np
    from scipy.optimize import linprog

    V = np.array([[float(x) for x in v] for v in vertices])
    m, d = V.shape
    # variables: a (m), b (m), t ; maximise t
    c = np.zeros(2 * m + 1)
    c[-1] = -1.0
    A_eq = np.zeros((d + 2, 2 * m + 1))
    b_eq = np.zeros(d + 2)
    A_eq[:d, :m] = -V.T
    A_eq[:d, m : 2 * m] = V.T
    A_eq[:d, -1] = -np.array([float(x) for x in direction])
    A_eq[d, :m] = 1
    A_eq[d + 1, m : 2 * m] = 1
    b_eq[d] = b_eq[d + 1] = 1
    bounds = [(0, None)] * (2 * m) + [(0, 10.0)]
    res = linprog(c, A_eq=A_eq, b_eq=b_eq, bounds=bounds, method="highs")
    return res.status == 0 and -res.fun > tol


def monomials_of_weight(F, u, degree_bound):
    """All m >= 0 with F^T m = u and |m| <= degree_bound."""
    n, k = len(F), len(F[0])
    out = []
    for m in itertools.product(range(degree_bound + 1), repeat=n):
        if sum(m) > degree_bound:
            continue
        if all(sum(F[i][j] * m[i] for i in range(n)) == u[j] for j in range(k)):
            out.append(m)
    return out


def brute_hilbert_basis(F, box):
    """Irreducible elements of {m in [0, box]^n : F^T m = 0}."""
    kernel = [m for m in monomials_of_weight(F, [0] * len(F[0]), box * len(F)) if any(m) and max(m) <= box]
    ks = set(kernel)
    irreducible = []
    for m in kernel:
        smaller = [x for x in ks if x != m and all(a <= b for a, b in zip(x, m))]
        if not any(tuple(b - a for a, b in zip(x, m)) in ks for x in smaller):
            irreducible.append(m)
    return sorted(irreducible)


def determinantal_invariant_factors(A):
    """Invariant factors as ratios of gcds of k x k minors."""
    M = sympy.Matrix(A)
    r, c = M.shape
    d = [1]
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                g = gcd(g, int(M.extract(list(rows), list(cols)).det()))
        if g == 0:
            break
        d.append(g)
    return [d[i] // d[i - 1] for i in range(1, len(d))]


def grid_common_zeros(f1, f2, u, v, radius=3, denominators=(1, 2)):
    """Common zeros of f1, f2 with coordinates p/q, |p/q| <= radius."""
    vals = sorted({Fraction(p, q) for q in denominators for p in range(-radius * q, radius * q + 1)})
    out = []
    for a in vals:
        for b in vals:
            sub = {u: sympy.Rational(a.numerator, a.denominator), v: sympy.Rational(b.numerator, b.denominator)}
            if f1.subs(sub) == 0 and f2.subs(sub) == 0:
                out.append((a, b))
    return out


def kernel_vector_count(F, u, box):
    return len(monomials_of_weight(F, u, box))
