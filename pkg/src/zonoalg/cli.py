"""Command-line front end: one configuration in, one JSON report out.

    zonoalg hilbert central k4.json
    echo '{"matrix": [[1,0,1],[0,1,-1]]}' | zonoalg verify prop-1.1

Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from . import geometry, matroid, parking, spaces, verify
from .matroid import ExternalFrame, GroundSet
from .poly import render

KIND_ARGS = ("central", "external", "internal")
IDEALS = {
    "i": ("igens", 0),
    "i+": ("igens", 1),
    "i-": ("igens", -1),
    "j": ("jgens", "central"),
    "j+": ("jgens", "external"),
    "j-": ("jgens", "internal"),
}
VERIFY = (
    "prop-1.1",
    "thm-3.8",
    "thm-3.9",
    "thm-4.8",
    "thm-4.9",
    "thm-4.10",
    "thm-4.11",
    "thm-5.9",
    "thm-5.10",
    "conj-6.1",
    "ehrhart",
)
SUBCOMMANDS = {
    "analyze": None,
    "hilbert": KIND_ARGS,
    "basis": KIND_ARGS,
    "ideal-gens": tuple(IDEALS),
    "kernel": tuple(IDEALS),
    "zonotope": ("points", "interior", "volume"),
    "arrangement": ("vertices", "v+", "v-"),
    "least": None,
    "parking": ("external", "internal", "match"),
    "verify": VERIFY,
}
OK_STATUS = {"ok", "pass", "not-applicable", "equal", "strict-subspace"}
_INT53 = 1 << 53


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class JobSpec:
    matrix: tuple | None = None  # rows; the columns are the vectors of X
    order: tuple | None = None
    b0: tuple | str | None = None  # rows of a matrix, or "general"
    seed: int = 0
    command: str = ""
    degcap: int | None = None
    points: tuple | None = None
    n: int | None = None

    def groundset(self) -> GroundSet:
        if self.matrix is None:
            raise ParseError("field 'matrix' is required for this command")
        X = GroundSet.from_rows(self.matrix)
        if self.order is not None:
            X = X.permuted(self.order)
        return X

    def frame(self, X: GroundSet) -> ExternalFrame:
        if self.b0 is None:
            return ExternalFrame.standard(X)
        if self.b0 == "general":
            return ExternalFrame.general_position(X)
        try:
            return ExternalFrame(X, tuple(zip(*self.b0)))
        except ValueError as exc:
            raise ParseError(f"field 'b0': {exc}") from exc


# -- parsing and rendering ---------------------------------------------


def parse_rational(v, where: str = "value") -> Fraction:
    if isinstance(v, bool):
        raise ParseError(f"{where}: booleans are not numbers")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except ValueError:
            pass
    raise ParseError(f"{where}: expected an integer or a 'p/q' string, got {v!r}")


def _int_matrix(m, field: str) -> tuple:
    if not isinstance(m, list) or not m or not all(isinstance(r, list) for r in m):
        raise ParseError(f"field '{field}': expected a non-empty list of rows")
    width = len(m[0])
    out = []
    for i, r in enumerate(m):
        if len(r) != width:
            raise ParseError(f"field '{field}': row {i} has {len(r)} entries, expected {width}")
        row = []
        for j, v in enumerate(r):
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError(f"field '{field}': entry ({i},{j}) = {v!r} is not an integer")
            row.append(v)
        out.append(tuple(row))
    return tuple(out)


def _opt_int(obj: dict, key: str):
    v = obj.get(key)
    if v is not None and (isinstance(v, bool) or not isinstance(v, int)):
        raise ParseError(f"field '{key}': expected an integer, got {v!r}")
    return v


def _parse_whitespace(text: str) -> JobSpec:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise ParseError("empty input")
    return _validated(JobSpec(matrix=_int_matrix(rows, "matrix")))


def parse_input(text: str) -> JobSpec:
    """A JSON object or a whitespace-separated integer matrix (one row per line)."""
    if not text.strip():
        raise ParseError("empty input")
    if not text.lstrip().startswith("{"):
        return _parse_whitespace(text)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}") from exc
    known = {"matrix", "order", "b0", "seed", "command", "degcap", "points", "n"}
    extra = set(obj) - known
    if extra:
        raise ParseError(f"unknown field(s): {', '.join(sorted(extra))}")
    matrix = _int_matrix(obj["matrix"], "matrix") if obj.get("matrix") is not None else None
    order = obj.get("order")
    if order is not None:
        if not isinstance(order, list) or not all(isinstance(i, int) for i in order):
            raise ParseError("field 'order': expected a list of column indices")
        order = tuple(order)
    b0 = obj.get("b0")
    if b0 is not None and b0 != "general":
        b0 = _int_matrix(b0, "b0")
    points = obj.get("points")
    if points is not None:
        if not isinstance(points, list) or not all(isinstance(p, list) for p in points):
            raise ParseError("field 'points': expected a list of points")
        points = tuple(
            tuple(parse_rational(v, f"field 'points'[{i}]") for v in p) for i, p in enumerate(points)
        )
    command = obj.get("command", "")
    if not isinstance(command, str):
        raise ParseError("field 'command': expected a string")
    spec = JobSpec(
        matrix=matrix,
        order=order,
        b0=b0,
        seed=_opt_int(obj, "seed") or 0,
        command=command,
        degcap=_opt_int(obj, "degcap"),
        points=points,
        n=_opt_int(obj, "n"),
    )
    return _validated(spec)


def _validated(spec: JobSpec) -> JobSpec:
    """Raises RankDeficient / ZeroColumn / ParseError for invalid configurations."""
    if spec.matrix is not None:
        X = GroundSet.from_rows(spec.matrix)
        if spec.order is not None and sorted(spec.order) != list(range(X.N)):
            raise ParseError(f"field 'order': not a permutation of 0..{X.N - 1}")
        if isinstance(spec.b0, tuple):
            spec.frame(X)
    return spec


def render_jobspec(spec: JobSpec) -> str:
    obj = {}
    if spec.matrix is not None:
        obj["matrix"] = [list(r) for r in spec.matrix]
    if spec.order is not None:
        obj["order"] = list(spec.order)
    if spec.b0 is not None:
        obj["b0"] = spec.b0 if spec.b0 == "general" else [list(r) for r in spec.b0]
    obj["seed"] = spec.seed
    if spec.command:
        obj["command"] = spec.command
    if spec.degcap is not None:
        obj["degcap"] = spec.degcap
    if spec.points is not None:
        obj["points"] = [[jsonable(v) for v in p] for p in spec.points]
    if spec.n is not None:
        obj["n"] = spec.n
    return json.dumps(obj, sort_keys=True)


def jsonable(v):
    """Lossless JSON form: small integers as numbers, everything else rational as 'p/q'."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, Fraction):
        if v.denominator == 1:
            v = v.numerator
        else:
            return f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return v if abs(v) < _INT53 else str(v)
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    raise TypeError(f"cannot serialize {type(v).__name__}")


# -- commands ----------------------------------------------------------


def _analyze(spec, sub):
    X = spec.groundset()
    X.check_size()
    E = matroid.ehrhart(X)
    return {
        "n": X.n,
        "N": X.N,
        "columns": [list(c) for c in X.columns],
        "bases": len(matroid.bases(X)),
        "independents": len(matroid.independents(X)),
        "internalBases": len(matroid.internal_bases(X)),
        "externalBases": len(matroid.external_bases(X, spec.frame(X))),
        "unimodular": matroid.is_unimodular(X),
        "volume": geometry.volume(X),
        "ehrhart": list(E.coefficients),
        "facets": [{"normal": list(H.normal), "m": H.m} for H in matroid.facet_hyperplanes(X)],
        "hilbert": {k: spaces.hilbert(X, k) for k in KIND_ARGS},
    }


def _hilbert(spec, kind):
    X = spec.groundset()
    X.check_size()
    h = spaces.hilbert(X, kind)
    return {"kind": kind, "h": h, "dim": sum(h)}


def _basis(spec, kind):
    X = spec.groundset()
    X.check_size()
    if kind == "internal":
        items = [
            {"basis": list(t.basis), "Q": render(t.Q), "poly": render(t.poly), "replaced": list(t.W)}
            for t in spaces.tilde_q_basis(X)
        ]
    else:
        items = [
            {"set": list(B), "X(B)": list(matroid.xset(X, B)), "poly": render(q)}
            for B, q in spaces.q_basis(X, kind)
        ]
    return {"kind": kind, "size": len(items), "basis": items}


def _ideal(spec, which):
    X = spec.groundset()
    X.check_size()
    fn, arg = IDEALS[which]
    if fn == "igens":
        return spaces.igens(X, arg)
    return spaces.jgens(X, arg, spec.frame(X))


def _ideal_gens(spec, which):
    gens = _ideal(spec, which)
    out = {"ideal": gens.kind, "generators": [render(g) for g in gens.gens]}
    if gens.sets:
        out["sets"] = [list(Y) for Y in gens.sets]
    return out


def _kernel(spec, which):
    X = spec.groundset()
    gens = _ideal(spec, which)
    degcap = spec.degcap if spec.degcap is not None else X.N + 1
    K = spaces.kernel(gens, degcap)
    return {
        "ideal": gens.kind,
        "degcap": degcap,
        "hilbert": K.hilbert(),
        "dim": K.dim,
        "basis": [render(p) for p in K.polys()],
    }


def _zonotope(spec, which):
    X = spec.groundset()
    if which == "volume":
        return {"volume": geometry.volume(X), "unimodular": matroid.is_unimodular(X)}
    pts = geometry.lattice_points(X, closed=(which == "points"))
    return {"closed": which == "points", "count": len(pts), "points": [list(p) for p in pts]}


def _arrangement(spec, which):
    X = spec.groundset()
    X.check_size()
    if which == "v+":
        frame = spec.frame(X)
        A = geometry.generic_lambda(frame.combined, spec.seed)
        fam = matroid.external_bases(X, frame)
    else:
        A = geometry.generic_lambda(X, spec.seed)
        fam = matroid.internal_bases(X) if which == "v-" else matroid.bases(X)
    return {
        "seed": spec.seed,
        "lambdaSeed": A.seed,
        "lambda": list(A.lam),
        "count": len(fam),
        "vertices": [{"basis": list(B), "point": list(A.vertex_of[B])} for B in fam],
    }


def _least(spec, sub):
    if not spec.points:
        raise ParseError("field 'points' is required for 'least'")
    dims = {len(p) for p in spec.points}
    if len(dims) != 1:
        raise ParseError("field 'points': points have different dimensions")
    try:
        L = geometry.least_space(spec.points, spec.degcap)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return {"points": len(spec.points), "hilbert": L.hilbert(), "basis": [render(p) for p in L.polys()]}


def _parking(spec, which):
    n = spec.n
    if n is None:
        if spec.matrix is None:
            raise ParseError("field 'n' is required for 'parking'")
        n = len(spec.matrix)
    if n < 1:
        raise ParseError("field 'n' must be positive")
    if which == "match":
        rep = parking.parking_basis_match(n)
        rep["status"] = "pass" if rep["success"] else "fail"
        return rep
    fns = parking.external_parking(n) if which == "external" else parking.internal_parking(n)
    degrees = {}
    for r in fns:
        degrees[sum(r)] = degrees.get(sum(r), 0) + 1
    top = max(degrees, default=-1)
    return {
        "n": n,
        "kind": which,
        "count": len(fns),
        "degreeCounts": [degrees.get(d, 0) for d in range(top + 1)],
        "functions": [list(r) for r in fns],
    }


def _verify(spec, which):
    X = spec.groundset()
    X.check_size()
    if which == "prop-1.1":
        return verify.prop_1_1(X)
    if which in ("thm-3.8", "thm-4.8", "thm-5.9"):
        kind = {"thm-3.8": "central", "thm-4.8": "external", "thm-5.9": "internal"}[which]
        rep = verify.main_theorem(X, kind, spec.frame(X), spec.seed)
        rep["seed"] = spec.seed
        return rep
    if which in ("thm-3.9", "thm-4.9", "thm-5.10"):
        kind = {"thm-3.9": "central", "thm-4.9": "external", "thm-5.10": "internal"}[which]
        rep = verify.interpolation_theorem(X, kind, spec.seed)
        rep["seed"] = spec.seed
        return rep
    if which == "thm-4.10":
        return verify.thm_4_10(X)
    if which == "thm-4.11":
        return verify.thm_4_11(X)
    if which == "conj-6.1":
        return verify.conj_6_1(X)
    return verify.ehrhart_check(X)


HANDLERS = {
    "analyze": _analyze,
    "hilbert": _hilbert,
    "basis": _basis,
    "ideal-gens": _ideal_gens,
    "kernel": _kernel,
    "zonotope": _zonotope,
    "arrangement": _arrangement,
    "least": _least,
    "parking": _parking,
    "verify": _verify,
}


def run(command: str, spec: JobSpec, sub: str | None = None) -> tuple:
    """Returns ``(report, exit_code)``."""
    if command not in HANDLERS:
        raise ParseError(f"unknown command {command!r}")
    choices = SUBCOMMANDS[command]
    if choices is not None:
        if sub is None and command == "kernel":
            sub = "i"
        if sub not in choices:
            raise ParseError(f"'{command}' needs one of: {', '.join(choices)}")
    report = HANDLERS[command](spec, sub)
    report.setdefault("status", "ok")
    report = {"command": command if sub is None else f"{command} {sub}", **report}
    code = 0 if report["status"] in OK_STATUS else 1
    return jsonable(report), code


# -- text output -------------------------------------------------------


def to_text(report: dict, indent: str = "") -> str:
    lines = []
    for k, v in report.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(to_text(v, indent + "  "))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}:")
            for item in v:
                lines.append(indent + "  - " + ", ".join(f"{a}={json.dumps(b)}" for a, b in item.items()))
        else:
            lines.append(f"{indent}{k}: {v if isinstance(v, str) else json.dumps(v)}")
    return "\n".join(lines)


# -- argument handling -------------------------------------------------


def _parse_order(s: str) -> tuple:
    try:
        return tuple(int(tok) for tok in s.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"--order: {exc}") from exc


def _parse_b0(s: str):
    if s.strip() == "general":
        return "general"
    try:
        rows = [[int(tok) for tok in r.replace(",", " ").split()] for r in s.split(";")]
    except ValueError as exc:
        raise ParseError(f"--b0: {exc}") from exc
    return _int_matrix(rows, "b0")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zonoalg", description="Zonotopal algebra of an integer vector configuration.")
    p.add_argument("command", choices=sorted(HANDLERS))
    p.add_argument("args", nargs="*", help="subcommand and/or input file (default: stdin)")
    p.add_argument("--degcap", type=int, help="top degree for kernel/least computations")
    p.add_argument("--order", help="column order as a permutation, e.g. '2,0,1'")
    p.add_argument("--b0", help="appended basis as matrix rows ('1,0;0,1') or 'general'")
    p.add_argument("--seed", type=int, help="seed for generic offsets / shifts")
    p.add_argument("--n", type=int, help="number of non-root vertices (parking)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    return p


def _read_spec(args, sub_choices) -> tuple:
    rest = list(args.args)
    sub = None
    if sub_choices is not None and rest and rest[0] in sub_choices:
        sub = rest.pop(0)
    if len(rest) > 1:
        raise ParseError(f"unexpected arguments: {' '.join(rest[1:])}")
    if rest:
        try:
            with open(rest[0], encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(str(exc)) from exc
    elif args.command == "parking" and args.n is not None:
        text = "{}"
    else:
        text = sys.stdin.read()
    spec = parse_input(text)
    updates = {"command": args.command if sub is None else f"{args.command} {sub}"}
    if args.degcap is not None:
        updates["degcap"] = args.degcap
    if args.order is not None:
        updates["order"] = _parse_order(args.order)
    if args.b0 is not None:
        updates["b0"] = _parse_b0(args.b0)
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.n is not None:
        updates["n"] = args.n
    return sub, _validated(replace(spec, **updates))


INPUT_ERRORS = (
    ParseError,
    matroid.RankDeficient,
    matroid.ZeroColumn,
    matroid.GroundSetTooLarge,
    ValueError,
)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        sub, spec = _read_spec(args, SUBCOMMANDS[args.command])
        report, code = run(args.command, spec, sub)
    except INPUT_ERRORS as exc:
        report = {"command": args.command, "status": "error", "error": f"{type(exc).__name__}: {exc}"}
        print(report["error"], file=sys.stderr)
        code = 2
    if args.format == "text":
        print(to_text(report))
    else:
        print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
