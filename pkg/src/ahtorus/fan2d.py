"""Two-dimensional fans: the toric surface Y of a complexity-two linear action.

Rays are ordered counterclockwise by exact cross products.  The two extreme
rays are the strict transforms H1, H2 of the images of the coordinate axes
of A^2 // mu; every interior ray is an exceptional divisor of the blow-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .errors import FewerThanTwoRays, NotStronglyConvex
from .lattice import primitive


def cross(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True)
class Fan2D:
    rays: tuple  # primitive, counterclockwise

    @property
    def cones(self) -> tuple:
        return tuple(zip(self.rays, self.rays[1:]))

    def to_json(self):
        return {"rays": [list(r) for r in self.rays]}


@dataclass(frozen=True)
class SurfaceInfo:
    fan: Fan2D
    quotient_order: int
    boundary_rays: tuple
    exceptional_rays: tuple
    cone_dets: tuple

    @property
    def is_affine_plane(self) -> bool:
        return not self.exceptional_rays and self.quotient_order == 1

    def describe(self) -> str:
        base = "A^2" if self.quotient_order == 1 else f"A^2 // mu_{self.quotient_order}"
        m = len(self.exceptional_rays)
        if m == 0:
            return base
        return f"{base} blown up ({m} exceptional divisor{'s' if m > 1 else ''})"

    def to_json(self):
        return {
            "rays": [list(r) for r in self.fan.rays],
            "quotient_order": self.quotient_order,
            "boundary": {"H1": list(self.boundary_rays[0]), "H2": list(self.boundary_rays[1])},
            "exceptional": {f"E{i + 1}": list(r) for i, r in enumerate(self.exceptional_rays)},
            "cone_dets": list(self.cone_dets),
            "description": self.describe(),
        }


def coarsest_refinement(rays) -> Fan2D:
    """Fan whose rays are the distinct directions of ``rays``.

    The input rays must lie in a strongly convex cone (angular span < pi).
    """
    distinct = sorted({primitive(r) for r in rays})
    if len(distinct) < 2:
        raise FewerThanTwoRays(f"need two distinct ray directions, got {len(distinct)}")
    starts = [r for r in distinct if all(cross(r, x) >= 0 and not (cross(r, x) == 0 and x != r) for x in distinct)]
    if not starts:
        raise NotStronglyConvex("rays do not lie in a strongly convex cone")
    ordered = sorted(distinct, key=cmp_to_key(lambda a, b: -cross(a, b)))
    if ordered[0] != starts[0] or cross(ordered[0], ordered[-1]) <= 0:
        raise NotStronglyConvex("rays span an angle of at least pi")
    return Fan2D(tuple(ordered))


def surface_info(fan: Fan2D) -> SurfaceInfo:
    rays = fan.rays
    h1, h2 = rays[0], rays[-1]
    return SurfaceInfo(
        fan=fan,
        quotient_order=abs(cross(h1, h2)),
        boundary_rays=(h1, h2),
        exceptional_rays=tuple(rays[1:-1]),
        cone_dets=tuple(abs(cross(a, b)) for a, b in fan.cones),
    )
