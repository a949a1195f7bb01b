"""Command-line front end: spectra, verification runs, and mesh dumps.

Domains are given either as a canonical name or as a path to a JSON file.

Canonical names:
    square-mixed            unit square, Dirichlet top/bottom, F = vertical sides
    square-one-dirichlet    unit square, Dirichlet bottom side only
    square-dirichlet        unit square, Dirichlet everywhere (F empty)
    square-neumann          unit square, F = whole boundary
    half-disk               unit upper half disk, F = arc, Dirichlet diameter
    disk                    unit disk, F = whole circle
    hyperbolic-disk:R       geodesic disk of radius R, curvature -1

Domain file schema (JSON object):
    type        "polygon" | "half_disk" | "disk" | "hyperbolic_disk"
    vertices    [[x, y], ...]   polygon only; edge i joins vertex i to i+1 mod N
    conditions  one string per edge/segment: "neumann" | "dirichlet" |
                "steklov" | "robin"; curved domains order segments
                (arc, diameter) for the half disk and (circle) for disks
    radius / R  positive number, curved domains only
    point       [x, y], optional default base point

Exit codes: 0 success (all rows hold), 1 verification failure, 2 input
error, 3 numerical failure.  Output is deterministic JSON (floats printed
with 17 significant digits, which round-trips doubles exactly) or CSV; the
wall clock is only included when --timing is passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass, field

from . import closed_form, fem, geometry, inequalities, rellich
from .errors import BracketError, DomainError, NumericalError

SCHEMA_VERSION = 1

_PROBLEM_ALIASES = {
    "nd": "neumann_dirichlet",
    "neumann-dirichlet": "neumann_dirichlet",
    "neumann_dirichlet": "neumann_dirichlet",
    "sd": "steklov_dirichlet",
    "steklov": "steklov_dirichlet",
    "steklov-dirichlet": "steklov_dirichlet",
    "steklov_dirichlet": "steklov_dirichlet",
    "robin": "robin_dirichlet",
    "robin-dirichlet": "robin_dirichlet",
    "robin_dirichlet": "robin_dirichlet",
    "dirichlet": "dirichlet",
    "neumann": "neumann",
}

_CHECKS = ("ks", "robin", "rellich", "christianson", "hadamard", "weyl")


# ---------------------------------------------------------------------------
# Domain ingestion
# ---------------------------------------------------------------------------

def canonical_domain(name: str):
    """Resolve a canonical domain name; returns (DomainSpec, default point)."""
    if name == "square-mixed":
        return geometry.square_mixed(), (0.5, 0.5)
    if name == "square-one-dirichlet":
        return geometry.square_one_dirichlet(), (0.5, 0.5)
    if name == "square-dirichlet":
        return geometry.square_dirichlet(), (0.5, 0.5)
    if name == "square-neumann":
        return geometry.square_neumann(), (0.5, 0.5)
    if name == "half-disk":
        return geometry.half_disk(), (0.0, 0.0)
    if name == "disk":
        return geometry.disk(), (0.0, 0.0)
    if name.startswith("hyperbolic-disk:"):
        try:
            R = float(name.split(":", 1)[1])
        except ValueError as exc:
            raise DomainError(f"bad hyperbolic-disk radius in {name!r}") from exc
        return geometry.hyperbolic_disk(R), (0.0, 0.0)
    raise DomainError(f"unknown canonical domain {name!r}")


def domain_to_dict(domain: geometry.DomainSpec, point=None) -> dict:
    out = {"type": domain.kind, "conditions": list(domain.conditions)}
    if domain.kind == "polygon":
        out["vertices"] = [[x, y] for x, y in domain.vertices]
    elif domain.kind == "hyperbolic_disk":
        out["R"] = domain.radius
    else:
        out["radius"] = domain.radius
    if point is not None:
        out["point"] = [point[0], point[1]]
    return out


def domain_from_dict(data: dict):
    if not isinstance(data, dict) or "type" not in data:
        raise DomainError("domain file must be a JSON object with a 'type' key")
    kind = data["type"]
    conditions = tuple(data.get("conditions", ()))
    if kind == "polygon":
        domain = geometry.DomainSpec(
            kind="polygon",
            vertices=tuple((float(x), float(y)) for x, y in data.get("vertices", ())),
            conditions=conditions,
        )
    elif kind in ("half_disk", "disk"):
        domain = geometry.DomainSpec(
            kind=kind, radius=float(data.get("radius", 0.0)), conditions=conditions
        )
    elif kind == "hyperbolic_disk":
        domain = geometry.DomainSpec(
            kind=kind,
            radius=float(data.get("R", data.get("radius", 0.0))),
            conditions=conditions,
        )
    else:
        raise DomainError(f"unknown domain type {kind!r}")
    point = tuple(map(float, data["point"])) if "point" in data else None
    return domain, point


def load_domain(arg: str):
    """A canonical name, or a path to a JSON domain file."""
    try:
        return canonical_domain(arg)
    except DomainError:
        pass
    try:
        with open(arg, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError as exc:
        raise DomainError(
            f"{arg!r} is neither a canonical domain name nor a readable file"
        ) from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON in domain file {arg!r}: {exc}") from exc
    return domain_from_dict(data)


# ---------------------------------------------------------------------------
# Reports and serialization
# ---------------------------------------------------------------------------

@dataclass
class RunReport:
    command: str
    inputs: dict
    rows: list
    tolerances: dict = field(default_factory=dict)
    passed: bool = True
    wall_clock_s: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "rows": self.rows,
            "tolerances": self.tolerances,
            "pass": self.passed,
        }
        if timing:
            out["wall_clock_s"] = self.wall_clock_s
        return out


def _format_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return f"{x:.17g}"


def format_json(obj, indent: int = 0) -> str:
    """JSON with floats at 17 significant digits (exact double round-trip)."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f'{pad}  {json.dumps(str(k))}: {format_json(v, indent + 1)}'
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}  {format_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def format_csv(rows: list) -> str:
    if not rows:
        return ""
    fields = []
    for row in rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        flat = {}
        for k in fields:
            v = row.get(k, "")
            if isinstance(v, float):
                v = _format_float(v)
            elif isinstance(v, (list, tuple)):
                v = "|".join(str(x) for x in v)
            flat[k] = v
        writer.writerow(flat)
    return buf.getvalue()


def _label_json(label) -> list:
    return [x for x in label]


def _emit(report: RunReport, args) -> None:
    if args.format == "csv":
        sys.stdout.write(format_csv(report.rows))
    else:
        sys.stdout.write(format_json(report.to_dict(timing=args.timing)) + "\n")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _resolve_method(raw: str) -> str:
    if raw in ("closed-form", "closed_form"):
        return "closed_form"
    if raw == "fem":
        return "fem"
    raise DomainError(f"unknown method {raw!r} (use closed-form or fem)")


def cmd_spectrum(args) -> RunReport:
    if args.problem not in _PROBLEM_ALIASES:
        raise DomainError(
            f"unknown problem {args.problem!r}; use one of {sorted(set(_PROBLEM_ALIASES))}"
        )
    problem = _PROBLEM_ALIASES[args.problem]
    method = _resolve_method(args.method)
    domain, _ = load_domain(args.domain)
    if problem == "robin_dirichlet" and args.alpha is None:
        raise DomainError("robin spectra need --alpha")
    if method == "closed_form":
        seq = closed_form.closed_form_spectrum(domain, problem, args.count, args.alpha)
    else:
        if args.h is None:
            raise DomainError("--method fem needs --h")
        seq = fem.fem_spectrum(domain, problem, args.count, args.h, args.alpha)
    rows = [
        {
            "k": e.k,
            "value": e.value,
            "label": _label_json(e.label),
            "provenance": seq.provenance,
        }
        for e in seq.entries
    ]
    inputs = {
        "domain": args.domain,
        "problem": problem,
        "method": method,
        "count": args.count,
        "alpha": args.alpha,
        "h": args.h,
    }
    return RunReport("spectrum", inputs, rows)


def _verify_ks_rows(domain, point, args, method):
    reports = inequalities.verify_ks(
        domain, point, count=args.count, method=method, h=args.h,
        kappa=-1.0 if domain.kind == "hyperbolic_disk" else 0.0, tol=args.tol,
    )
    return [r.to_dict() for r in reports]


def _verify_robin_rows(domain, args, method):
    if args.alpha is None or args.alpha <= 0:
        raise DomainError("the Robin comparison needs --alpha > 0")
    reports = inequalities.verify_robin_on_domain(
        domain, args.alpha, count=args.count, method=method, h=args.h, tol=args.tol
    )
    rows = [r.to_dict() for r in reports]
    if method == "closed_form" and domain.kind == "half_disk":
        rows += [
            r.to_dict()
            for r in inequalities.robin_derivative_reports(
                args.count, domain.radius, args.tol or 1e-10
            )
        ]
    return rows


def _verify_rellich_rows(domain, point, args):
    tol = args.tol if args.tol is not None else 1e-8
    seq = closed_form.closed_form_spectrum(domain, "neumann_dirichlet", args.count)
    rows = []
    for entry in seq.entries:
        func = closed_form.eigenfunction("neumann_dirichlet", domain, entry.label)
        ints = rellich.boundary_integrals(func, p=point, order=args.quad)
        rep = rellich.rellich_residual(func.eigenvalue, ints)
        rows.append(
            {
                "k": entry.k,
                "label": _label_json(entry.label),
                "eigenvalue": rep.eigenvalue,
                "lhs": rep.lhs,
                "rhs": rep.rhs,
                "residual": rep.residual,
                "holds": rep.residual <= tol,
                "tolerance": tol,
                "provenance": "closed_form",
            }
        )
    return rows


def _verify_christianson_rows(domain, point, args):
    tol = args.tol if args.tol is not None else 1e-8
    seq = closed_form.closed_form_spectrum(domain, "neumann_dirichlet", args.count)
    rows = []
    for entry in seq.entries:
        func = closed_form.eigenfunction("neumann_dirichlet", domain, entry.label)
        rep = rellich.rellich_christianson(domain, point, func, order=args.quad)
        rows.append(
            {
                "k": entry.k,
                "label": _label_json(entry.label),
                "eigenvalue": rep.eigenvalue,
                "lhs": rep.lhs,
                "rhs": rep.rhs,
                "residual": rep.residual,
                "holds": rep.residual <= tol,
                "tolerance": tol,
                "base_point": list(rep.base_point),
                "provenance": "closed_form",
            }
        )
    return rows


def _verify_hadamard_rows(domain, args, method):
    rep = rellich.hadamard_scaling_check(
        domain, args.k, method=method, h=args.h
    )
    row = rep.to_dict()
    row["holds"] = rep.holds
    return [row]


def _verify_weyl_rows(domain, args, method):
    if method != "closed_form":
        raise DomainError("the Weyl check runs on closed-form spectra")
    kind = "steklov" if args.problem in (None, "sd", "steklov") else "neumann"
    problem = "steklov_dirichlet" if kind == "steklov" else "neumann"
    count = max(args.count, 200)
    seq = closed_form.closed_form_spectrum(domain, problem, count)
    rep = inequalities.weyl_check(seq, domain, kind, tol=args.tol)
    return [{**rep.to_dict(), "holds": rep.holds}]


def cmd_verify(args) -> RunReport:
    if args.check not in _CHECKS:
        raise DomainError(f"unknown check {args.check!r}; use one of {_CHECKS}")
    method = _resolve_method(args.method)
    domain, file_point = load_domain(args.domain)
    point = args.point if args.point is not None else (file_point or (0.0, 0.0))
    if args.check == "ks":
        rows = _verify_ks_rows(domain, point, args, method)
    elif args.check == "robin":
        rows = _verify_robin_rows(domain, args, method)
    elif args.check == "rellich":
        rows = _verify_rellich_rows(domain, point, args)
    elif args.check == "christianson":
        rows = _verify_christianson_rows(domain, point, args)
    elif args.check == "hadamard":
        rows = _verify_hadamard_rows(domain, args, method)
    else:
        rows = _verify_weyl_rows(domain, args, method)
    passed = all(bool(r.get("holds", False)) for r in rows)
    inputs = {
        "domain": args.domain,
        "check": args.check,
        "method": method,
        "count": args.count,
        "alpha": args.alpha,
        "h": args.h,
        "point": list(point),
        "k": args.k,
        "quad": args.quad,
    }
    tolerances = {"tol": args.tol}
    return RunReport("verify", inputs, rows, tolerances, passed)


def cmd_mesh(args) -> RunReport:
    domain, _ = load_domain(args.domain)
    if args.h is None:
        raise DomainError("mesh command needs --h")
    mesh = fem.triangulate(domain, args.h)
    text = mesh.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    inputs = {"domain": args.domain, "h": args.h, "out": args.out}
    return RunReport("mesh", inputs, [])


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _point_arg(text: str):
    try:
        x, y = text.split(",")
        return (float(x), float(y))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedspec",
        description="Mixed-boundary Laplace spectra and verification of "
        "eigenvalue bounds and boundary identities.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("domain", help="canonical domain name or JSON domain file")
        p.add_argument("--count", type=int, default=10)
        p.add_argument("--method", default="closed-form", help="closed-form | fem")
        p.add_argument("--h", type=float, default=None, help="mesh size for fem")
        p.add_argument("--alpha", type=float, default=None, help="Robin parameter")
        p.add_argument("--quad", type=int, default=32, help="Gauss points per edge")
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--point", type=_point_arg, default=None, help="base point x,y")
        p.add_argument("--timing", action="store_true", help="include wall clock in JSON")

    sp = sub.add_parser("spectrum", help="print an eigenvalue table")
    common(sp)
    sp.add_argument("problem", help="nd | sd | robin | dirichlet | neumann")
    sp.set_defaults(k=1)

    vp = sub.add_parser("verify", help="verify a bound or identity")
    common(vp)
    vp.add_argument("check", help=" | ".join(_CHECKS))
    vp.add_argument("--k", type=int, default=1, help="eigenvalue index (hadamard)")
    vp.add_argument(
        "--problem", default=None, help="weyl check: steklov (default) or neumann"
    )

    mp = sub.add_parser("mesh", help="dump a triangulation as plain text")
    common(mp)
    mp.add_argument("--out", default=None, help="output path (default stdout)")
    mp.set_defaults(k=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        if args.subcommand == "spectrum":
            report = cmd_spectrum(args)
        elif args.subcommand == "verify":
            report = cmd_verify(args)
        else:
            report = cmd_mesh(args)
    except DomainError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, BracketError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    report.wall_clock_s = time.perf_counter() - started
    if args.subcommand != "mesh":
        _emit(report, args)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
