"""Command line front end: JSON jobs in, JSON reports out.

Exit codes: 0 success, 2 schema error, 3 precondition error, 4 undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from importlib import resources

import jsonschema
import sympy

from . import algebra, classification, examples, fixed_points
from . import serialize as ser
from .errors import AHError, PreconditionError, SchemaError, UndecidedError
from .lattice import as_intmatrix, cokernel_map, same_row_lattice
from .presentation import ah_presentation

EXIT_OK, EXIT_SCHEMA, EXIT_PRECONDITION, EXIT_UNDECIDED = 0, 2, 3, 4


def load_schema(name: str) -> dict:
    return json.loads(resources.files("ahtorus").joinpath("schema", name).read_text())


def validate_job(job) -> None:
    validator = jsonschema.Draft202012Validator(load_schema("job.schema.json"))
    errors = sorted(validator.iter_errors(job), key=lambda e: list(e.absolute_path))
    if errors:
        # report the deepest error, which is usually the most specific one
        err = max(errors, key=lambda e: len(e.absolute_path))
        pointer = "/" + "/".join(str(p) for p in err.absolute_path)
        raise SchemaError(err.message, pointer)


@dataclass
class Report:
    kind: str
    ok: bool
    exit_code: int
    result: object = None
    error: dict = None
    name: str = ""
    text: str = ""

    def to_json(self) -> dict:
        out = {"kind": self.kind, "ok": self.ok, "exit_code": self.exit_code}
        if self.name:
            out["name"] = self.name
        if self.ok:
            out["result"] = self.result
        else:
            out["error"] = self.error
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


@dataclass
class _Out:
    result: dict
    lines: list = field(default_factory=list)
    exit_code: int = EXIT_OK


def _sympify(text, names, pointer):
    try:
        return sympy.sympify(text, locals={n: sympy.Symbol(n) for n in names})
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise SchemaError(f"cannot parse polynomial {text!r}: {exc}", pointer) from None


def _source(payload):
    if "presentation" in payload:
        try:
            return ser.dec_presentation(payload["presentation"])
        except (sympy.SympifyError, SyntaxError) as exc:
            raise SchemaError(str(exc), "/payload/presentation") from None
    F = ser.dec_matrix(payload["weights"])
    P = ser.dec_matrix(payload["P"]) if "P" in payload else None
    s = ser.dec_matrix(payload["s"]) if "s" in payload else None
    return ah_presentation(F, P, s)


def _term_lines(pres):
    lines = []
    for t in pres.terms:
        where = f" ray {t.ray}" if t.ray is not None else ""
        curve = f" curve {pres.curves[t.label]}" if t.label in pres.curves else ""
        lines.append(f"  {t.label}:{where}{curve}  Delta = {t.coefficient!r}")
    return lines


def _present(payload) -> _Out:
    pres = _source(payload)
    result = {"presentation": ser.enc_presentation(pres)}
    lines = []
    if pres.surface is not None:
        lines.append(f"Y = {pres.surface.describe()}")
    lines += ["D = sum of:"] + _term_lines(pres)
    if "weights" in payload:
        F = as_intmatrix(ser.dec_matrix(payload["weights"]))
        hnf = cokernel_map(F)
        result["weights"] = ser.enc_matrix(F)
        result["P_hnf"] = ser.enc_matrix(hnf)
        if "P" in payload:
            match = same_row_lattice(hnf, ser.dec_matrix(payload["P"]))
            result["P_matches_given"] = match
            lines.append(f"given P spans the computed row lattice: {match}")
    if pres.base == "plane" and len(pres.terms) == 2 and pres.rank == 2:
        bound = ser.dec_int(payload.get("weight_bound", 2))
        alg = algebra.presentation_bounded(pres, bound)
        variables = alg.variables
        rels = {
            "generators": [{"name": n, "weight": [ser.enc_int(x) for x in w]} for n, w in alg.generators],
            "relations": [ser.enc_polynomial(r, variables) for r in alg.relations],
            "relations_text": alg.relation_strings(),
            "variables": [str(v) for v in variables],
            "degree_bound": alg.degree_bound,
        }
        lines.append("A = Q[u,v,x1,x2,x3,x4] / (" + ", ".join(alg.relation_strings()) + ")")
        try:
            reduced = algebra.eliminate(alg.relations, algebra.U)
        except ValueError:
            reduced = None
        if reduced is not None:
            rels["after_eliminating_u"] = [str(r) for r in reduced]
            lines.append("eliminating u: (" + ", ".join(str(r) for r in reduced) + ")")
        result["algebra"] = rels
    return _Out(result, lines)


def _evaluate(payload) -> _Out:
    pres = _source(payload)
    u = tuple(ser.dec_int(x) for x in payload["u"])
    if len(u) != pres.rank:
        raise PreconditionError(f"u has length {len(u)}, lattice rank is {pres.rank}")
    D = algebra.evaluate(pres, u)
    result = {"u": [ser.enc_int(x) for x in u], "coefficients": {str(l): ser.enc_rat(c) for l, c in D.coefficients}}
    lines = [f"D({','.join(map(str, u))}) = {D}"]
    if pres.base == "plane":
        piece = algebra.graded_piece(pres, u)
        result["generator"] = str(piece.generator)
        lines.append(f"A_u = ({piece.generator}) * Q[u,v]")
    return _Out(result, lines)


def _fixed_points(payload) -> _Out:
    pres = _source(payload)
    height = ser.dec_int(payload["height"])
    reports = fixed_points.fixed_locus_survey(pres, height)
    out = []
    lines = []
    F = ser.dec_matrix(payload["weights"]) if "weights" in payload else None
    for r in reports:
        entry = r.to_json()
        entry["direction"] = [ser.enc_int(x) for x in r.direction.ell]
        if F is not None:
            entry["linear_oracle_survivors"] = sorted(fixed_points.oracle_fixed_points_linear(F, r.direction))
        out.append(entry)
        labels = ", ".join(str(l) for l in r.fixed_labels) or "none"
        lines.append(f"l = {r.direction.ell}: fixed labels {labels}; fixed locus dim {r.fixed_locus_dim}")
    diag = fixed_points.fixed_labels_through_origin(pres, reports)
    lines.append(f"all fixed labels lie over the quotient origin: {diag}")
    return _Out({"height": height, "reports": out, "fixed_labels_over_origin": diag}, lines)


def _invariants(payload) -> _Out:
    F = ser.dec_matrix(payload["weights"])
    bound = ser.dec_int(payload["bound"])
    names = payload.get("variables") or [f"x{i + 1}" for i in range(F.nrows)]
    if len(names) != F.nrows:
        raise SchemaError(f"need {F.nrows} variable names", "/payload/variables")
    xs = sympy.symbols(names)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        gens = algebra.invariant_ring_generators(F, bound)
    monos = [str(sympy.Mul(*[x**e for x, e in zip(xs, m)])) for m in gens]
    result = {
        "weights": ser.enc_matrix(F),
        "bound": bound,
        "variables": list(names),
        "generators": [[ser.enc_int(e) for e in m] for m in gens],
        "monomials": monos,
        "warnings": [str(w.message) for w in caught],
    }
    lines = ["invariant monomials: " + ", ".join(monos)]
    lines += [f"warning: {w}" for w in result["warnings"]]
    if "P" in payload:
        P = ser.dec_matrix(payload["P"])
        zero = (P @ F).is_zero()
        result["P_times_F_is_zero"] = zero
        lines.append(f"P.F = 0: {zero}")
    if "hypersurface" in payload:
        g = _sympify(payload["hypersurface"], names, "/payload/hypersurface")
        w = algebra.check_equivariant_hypersurface(F, g, xs)
        result["hypersurface"] = {"polynomial": str(g), "terms": ser.enc_polynomial(g, xs), "weight": [ser.enc_int(x) for x in w]}
        lines.append(f"{g} is homogeneous of weight {w}")
    return _Out(result, lines)


def _classify(payload) -> _Out:
    pres = _source(payload)
    curves = None
    if payload.get("curves"):
        curves = []
        for i, c in enumerate(payload["curves"]):
            f = _sympify(c["f"], ["u", "v"], f"/payload/curves/{i}/f")
            param = None
            if "param" in c:
                param = tuple(_sympify(p, ["t"], f"/payload/curves/{i}/param") for p in c["param"])
            curves.append(classification.CurveSpec(f.subs({sympy.Symbol("u"): classification.U, sympy.Symbol("v"): classification.V}),
                                                   param))
    mu = None
    if "mu" in payload:
        mu = classification.MuAction(ser.dec_int(payload["mu"]["k"]), tuple(ser.dec_int(w) for w in payload["mu"]["weights"]))
    weights = payload.get("weights")
    verdict = classification.classify(pres, curves, mu, ser.dec_matrix(weights) if weights else None)
    code = EXIT_UNDECIDED if verdict.outcome == classification.UNDECIDED_OUTCOME else EXIT_OK
    return _Out(verdict.to_json(), [f"verdict: {verdict.outcome}", f"evidence: {json.dumps(verdict.evidence, sort_keys=True)}"], code)


HANDLERS = {
    "present": _present,
    "evaluate": _evaluate,
    "fixed-points": _fixed_points,
    "invariants": _invariants,
    "classify": _classify,
}


def _error(kind, exc, name="") -> Report:
    if isinstance(exc, SchemaError):
        family, code = "schema", EXIT_SCHEMA
    elif isinstance(exc, UndecidedError):
        family, code = "undecided", EXIT_UNDECIDED
    else:
        family, code = "precondition", EXIT_PRECONDITION
    err = {"family": family, "type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, SchemaError):
        err["pointer"] = exc.pointer
    if getattr(exc, "offending", None):
        err["offending"] = [[m, [str(x) for x in w]] for m, w in exc.offending]
    return Report(kind, False, code, error=err, name=name, text=f"error ({family}): {type(exc).__name__}: {exc}")


def run(job) -> Report:
    """Validate and execute one job document."""
    kind = job.get("kind", "?") if isinstance(job, dict) else "?"
    name = ""
    try:
        validate_job(job)
        payload = job["payload"]
        if kind == "example":
            spec = examples.lookup(payload["name"], payload.get("n"))
            name, kind = spec.name, spec.kind
            payload = spec.payload
        out = HANDLERS[kind](payload)
    except (AHError, ValueError) as exc:
        if not isinstance(exc, AHError):
            exc = PreconditionError(str(exc))
        return _error(kind, exc, name)
    text = "\n".join(([f"[{name}]"] if name else []) + out.lines)
    return Report(kind, True, out.exit_code, result=out.result, name=name, text=text)


def _read_input(path):
    if path and path != "-":
        with open(path) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", "") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ahtorus", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="job or payload JSON file (default: stdin)")
    common.add_argument("--quiet", "-q", action="store_true", help="suppress the report on stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("present", parents=[common], help="AH presentation from weights or a presentation")
    p = sub.add_parser("evaluate", parents=[common], help="evaluate D(u)")
    p.add_argument("--u", required=True, help='character, e.g. "1,0"')
    p = sub.add_parser("fixed-points", parents=[common], help="fixed loci of one-parameter subtori")
    p.add_argument("--height", type=int, required=True)
    p = sub.add_parser("invariants", parents=[common], help="invariant monomials of the weights")
    p.add_argument("--bound", type=int, required=True)
    sub.add_parser("classify", parents=[common], help="curve gates and linearization verdict")
    p = sub.add_parser("example", parents=[common], help="run a built-in example")
    p.add_argument("--name", help="example name; omit to list them")
    p.add_argument("--n", type=int, help="size for the example-3ii/3iii families")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    kind = args.command
    try:
        if kind == "example":
            if not args.name:
                listing = [{"name": j.name, "kind": j.kind, "summary": j.summary} for j in examples.builtin_examples()]
                print(json.dumps(listing, indent=2, sort_keys=True))
                return EXIT_OK
            payload = {"name": args.name}
            if args.n is not None:
                payload["n"] = args.n
        else:
            doc = _read_input(args.input)
            payload = doc.get("payload", doc) if isinstance(doc, dict) and "kind" in doc else doc
            if not isinstance(payload, dict):
                raise SchemaError("payload must be a JSON object", "/payload")
            payload = dict(payload)
            if kind == "evaluate":
                try:
                    payload["u"] = [int(x) for x in args.u.split(",")]
                except ValueError:
                    raise SchemaError(f"--u expects comma separated integers, got {args.u!r}", "/payload/u") from None
            elif kind == "fixed-points":
                payload["height"] = args.height
            elif kind == "invariants":
                payload["bound"] = args.bound
        report = run({"kind": kind, "payload": payload})
    except SchemaError as exc:
        report = _error(kind, exc)
    print(report.dumps())
    if not args.quiet and report.text:
        print(report.text, file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
