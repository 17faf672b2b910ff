"""Built-in jobs reproducing the worked examples.

Matrices are transcribed as displayed.  Families indexed by n accept a
name of the form ``example-3ii(6)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import NotFound

EX10_F = [[1, 0], [-1, 0], [0, 1], [0, -1]]
EX10_P = [[1, 1, 0, 0], [0, 0, 1, 1]]
EX10_S = [[1, 0, 0, 0], [0, 0, 1, 0]]
EX12_F = [[1, 1], [1, 1], [-1, 0], [0, -1]]
EX12_P = [[1, 0, 1, 1], [0, 1, 1, 1]]
EX12B_F = [[1, 1], [-1, -1], [-1, 0], [0, -1]]
EX12B_P = [[1, 1, 0, 0], [1, 0, 1, 1]]
EX13_F = [[6, 0], [-6, 2], [0, -1], [3, 0], [2, 0]]
EX13_P = [[1, 1, 2, 0, 0], [0, 1, 2, 2, 0], [0, 1, 2, 0, 3]]
EX13_VARS = ["x", "y1", "y2", "z", "t"]
EX15_G = "x + x**2*y1*y2**2 + z**2 + t**3"


def example_3ii(n: int):
    """F with two rows of ones over -I_(n-2), and its displayed P."""
    k = n - 2
    F = [[1] * k, [1] * k] + [[-int(i == j) for j in range(k)] for i in range(k)]
    P = [[1, 0] + [1] * k, [0, 1] + [1] * k]
    return F, P


def example_3iii(n: int):
    """First row (n-2, n-3, ..., 1), second row ones, then -I_(n-2)."""
    k = n - 2
    top = list(range(k, 0, -1))
    F = [top, [1] * k] + [[-int(i == j) for j in range(k)] for i in range(k)]
    P = [[1, 0] + top, [0, 1] + [1] * k]
    return F, P


def _segment(a, b):
    return {"vertices": [a, b], "rays": []}


def _example_11(f2: str) -> dict:
    return {
        "presentation": {
            "rank": 2,
            "base": "plane",
            "terms": [
                {"label": "D1", "curve": "u", "polyhedron": _segment([-1, 0], [0, 0])},
                {"label": "D2", "curve": f2, "polyhedron": _segment([0, -1], [0, 0])},
            ],
        },
        "weight_bound": 3,
        "curves": [{"f": "u", "param": ["0", "t"]}, {"f": f2, "param": ["t", "0"] if f2 == "v" else ["-t-t**2", "t"]}],
    }


@dataclass(frozen=True)
class JobSpec:
    kind: str
    payload: dict = field(default_factory=dict)
    name: str = ""
    summary: str = ""

    def to_json(self):
        return {"kind": self.kind, "payload": self.payload}


def _fixed():
    return {
        "example-3i": JobSpec("present", {"weights": EX10_F, "P": EX10_P}, "example-3i",
                              "hyperbolic action on A^4 with quotient A^2"),
        "example-10": JobSpec("present", {"weights": EX10_F, "P": EX10_P, "s": EX10_S}, "example-10",
                              "product of two hyperbolic planes"),
        "example-11-linear": JobSpec("present", _example_11("v"), "example-11-linear",
                                     "curves u = 0 and v = 0: the linear model"),
        "example-11-curves": JobSpec("present", _example_11("u + v + v**2"), "example-11-curves",
                                     "curves u = 0 and u + v + v^2 = 0 meeting twice"),
        "example-12": JobSpec("present", {"weights": EX12_F, "P": EX12_P}, "example-12",
                              "quotient A^2 blown up once, single exceptional term"),
        "example-12b": JobSpec("present", {"weights": EX12B_F, "P": EX12B_P}, "example-12b",
                               "quotient A^2 blown up once, one curve term and one exceptional term"),
        "example-13": JobSpec("invariants", {"weights": EX13_F, "P": EX13_P, "bound": 6, "variables": EX13_VARS},
                              "example-13", "rank-two action on A^5 with quotient A^3"),
        "example-15-hypersurface": JobSpec(
            "invariants",
            {"weights": EX13_F, "P": EX13_P, "bound": 6, "variables": EX13_VARS,
             "hypersurface": EX15_G},
            "example-15-hypersurface",
            "the hypersurface x + x^2 y1 y2^2 + z^2 + t^3 = 0 in A^5",
        ),
    }


FAMILIES = {"example-3ii": (example_3ii, 4), "example-3iii": (example_3iii, 4)}


def builtin_examples() -> list:
    out = list(_fixed().values())
    for name, (fn, n) in FAMILIES.items():
        out.append(_family(name, n))
    return sorted(out, key=lambda j: j.name)


def _family(name, n):
    fn, _ = FAMILIES[name]
    if n < 4:
        raise NotFound(f"{name} needs n >= 4")
    F, P = fn(n)
    return JobSpec("present", {"weights": F, "P": P}, f"{name}({n})", f"family member n = {n}")


def lookup(name: str, n: int | None = None) -> JobSpec:
    fixed = _fixed()
    if name in fixed:
        return fixed[name]
    m = re.fullmatch(r"(example-3iii?)(?:\((\d+)\))?", name)
    if m and m.group(1) in FAMILIES:
        size = int(m.group(2)) if m.group(2) else (n if n is not None else FAMILIES[m.group(1)][1])
        return _family(m.group(1), size)
    raise NotFound(f"no built-in example named {name!r}")
