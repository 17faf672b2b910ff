"""Double description: extreme rays of {x : A x >= 0} over Q.

Constraints are added one at a time (Motzkin et al.); adjacency of rays is
decided combinatorially from their sets of tight constraints.
"""

from fractions import Fraction

from . import _linalg as la


def _scale(v):
    return tuple(Fraction(x) for x in la.integerize(v))


def extreme_rays(constraints, dim):
    """Return ``(rays, lineality)`` for the cone ``{x : <a, x> >= 0}``.

    ``rays`` are primitive integer directions of the extreme rays of the
    pointed part; ``lineality`` is a basis of the largest linear subspace
    inside the cone.  With lineality present the rays are only determined
    modulo that subspace.
    """
    constraints = [tuple(Fraction(x) for x in a) for a in constraints]
    lin = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    rays = []  # list of (vector, frozenset of tight constraint indices)
    for idx, a in enumerate(constraints):
        if not any(a):
            continue
        hit = next((l for l in lin if la.dot(a, l) != 0), None)
        if hit is not None:
            s = la.dot(a, hit)
            if s < 0:
                hit = tuple(-x for x in hit)
                s = -s
            new_lin = []
            for l in lin:
                if l is hit or l == tuple(-x for x in hit):
                    continue
                c = la.dot(a, l) / s
                new_lin.append(_scale(tuple(x - c * y for x, y in zip(l, hit))))
            new_rays = []
            for r, z in rays:
                c = la.dot(a, r) / s
                new_rays.append((_scale(tuple(x - c * y for x, y in zip(r, hit))), z | {idx}))
            new_rays.append((_scale(hit), frozenset(i for i in range(idx) if la.dot(constraints[i], hit) == 0)))
            lin = [l for l in new_lin if any(l)]
            rays = new_rays
            continue

        pos, zero, neg = [], [], []
        for r, z in rays:
            v = la.dot(a, r)
            (pos if v > 0 else neg if v < 0 else zero).append((r, z, v))
        if not neg:
            rays = [(r, z | {idx}) if v == 0 else (r, z) for r, z, v in pos + zero]
            continue
        need = dim - len(lin) - 2
        kept = [(r, z) for r, z, _ in pos] + [(r, z | {idx}) for r, z, _ in zero]
        everyone = pos + zero + neg
        for i, (p, zp, vp) in enumerate(pos):
            for j, (q, zq, vq) in enumerate(neg, start=len(pos) + len(zero)):
                common = zp & zq
                if len(common) < need:
                    continue
                if any(common <= z for t, (_, z, _) in enumerate(everyone) if t != i and t != j):
                    continue
                r = tuple(vp * y - vq * x for x, y in zip(p, q))
                kept.append((_scale(r), common | {idx}))
        rays = kept
    seen = {}
    for r, _ in rays:
        seen.setdefault(la.integerize(r), None)
    return list(seen), [la.integerize(l) for l in lin]
