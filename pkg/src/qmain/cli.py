"""Command-line interface.

Exit codes: 0 success, 1 usage/parse error, 2 disconnected input,
3 theorem violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import enumeration as enum_mod
from .errors import InvalidParameter, NotConnected, ParseError, QMainError, TheoremViolation
from .exact import main_count_exact
from .families import FamilySpec, build, identify
from .formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graph import Graph, is_connected, is_regular
from .spectra import main_eigenvalues, theorem5_residual
from .walks import ClassifyFailure, linear_certificate, parabolic_certificate

EXIT_OK, EXIT_USAGE, EXIT_DISCONNECTED, EXIT_VIOLATION = 0, 1, 2, 3


def _num(x: float) -> float:
    return float(f"{x:.12g}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _detect_format(path: Path, text: str) -> str:
    if path.suffix == ".g6":
        return "g6"
    if path.suffix == ".el":
        return "el"
    first = next((ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    return "el" if len(first.split()) == 2 else "g6"


def load_graph(source: str, fmt: str | None = None) -> Graph:
    """Read a graph from a file path, or treat ``source`` as inline graph6."""
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="ascii", errors="replace")
        fmt = fmt or _detect_format(path, text)
        if fmt == "el":
            return parse_edge_list(text)
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty graph6 file", 0)
        return parse_graph6(lines[0].strip())
    if fmt == "el":
        return parse_edge_list(source)
    return parse_graph6(source)


def _certificate_json(cert) -> dict:
    if isinstance(cert, ClassifyFailure):
        out = {"failure": cert.reason}
        if cert.candidate is not None:
            out["candidate"] = [str(x) for x in cert.candidate]
        if cert.vertex is not None:
            out["vertex"] = cert.vertex
            out["residual"] = cert.residual
        return out
    return {"a": cert.a, "b": cert.b}


def analyze(g: Graph) -> dict:
    if not is_connected(g):
        raise NotConnected("input graph is disconnected")
    mains = main_eigenvalues(g)
    exact = main_count_exact(g)
    residual = None
    if len(mains) >= 2:
        residual = _num(theorem5_residual(g, mains[0][0], mains[1][0]))
    fam = identify(g)
    return {
        "graph6": write_graph6(g),
        "n": g.n,
        "m": g.m,
        "regular": is_regular(g),
        "mainCountExact": exact,
        "mainEigenvalues": [
            {"value": _num(v), "multiplicity": k, "mainAngle": _num(ang)} for v, k, ang in mains
        ],
        "parabolic": _certificate_json(parabolic_certificate(g)),
        "linear": _certificate_json(linear_certificate(g)),
        "theorem5Residual": residual,
        "family": str(fam) if fam is not None else "Unknown",
    }


def cmd_analyze(args) -> int:
    if args.family:
        g = build(FamilySpec.parse(args.family))
    elif args.input:
        g = load_graph(args.input, args.format)
    else:
        raise InvalidParameter("analyze needs an input or --family")
    sys.stdout.write(_dump(analyze(g)))
    return EXIT_OK


def cmd_family(args) -> int:
    g = build(FamilySpec.parse(args.spec))
    line = write_graph6(g) + "\n"
    if args.out:
        Path(args.out).write_text(line, encoding="ascii")
    else:
        sys.stdout.write(line)
    # keep stdout pure graph6 when it carries the graph
    print(f"n={g.n} m={g.m}", file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    harness = enum_mod.verify_theorem7 if args.cls == enum_mod.TREES else enum_mod.verify_theorem10
    reports = harness(args.max_n, workers=args.workers)
    if args.json:
        Path(args.json).write_text(enum_mod.reports_to_json(reports), encoding="utf-8")
    for r in reports:
        names = ", ".join(e.family for e in r.two_main) or "-"
        print(f"n={r.n:2d} total={r.total:5d} two-main: {names}")
    print(f"OK: {args.cls} 3..{args.max_n}")
    return EXIT_OK


def cmd_census(args) -> int:
    reports = enum_mod.census(args.cls, args.max_n, args.method, workers=args.workers)
    if args.csv:
        Path(args.csv).write_text(enum_mod.census_csv(args.cls, args.max_n), encoding="utf-8")
    if args.json:
        Path(args.json).write_text(enum_mod.reports_to_json(reports), encoding="utf-8")
    print("n,total,histogram")
    for r in reports:
        hist = " ".join(f"{k}:{v}" for k, v in r.bucket_histogram().items())
        print(f"{r.n},{r.total},{hist}")
    return EXIT_OK


def cmd_convert(args) -> int:
    g = load_graph(args.input, args.format)
    text = write_graph6(g) + "\n" if args.to == "g6" else write_edge_list(g)
    if args.output:
        Path(args.output).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qmain", description="Main signless Laplacian eigenvalues of graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify one graph and print JSON")
    p.add_argument("input", nargs="?", help="graph file (.g6/.el) or inline graph6")
    p.add_argument("--family", help="build the graph from a family spec such as star:6")
    p.add_argument("--format", choices=["g6", "el"])
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="write a named family member as graph6")
    p.add_argument("spec")
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    for name, func, helptext in (
        ("verify", cmd_verify, "check the tree or unicyclic classification by enumeration"),
        ("census", cmd_census, "histogram of main-eigenvalue counts per order"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--class", dest="cls", choices=list(enum_mod.CLASSES), required=True)
        p.add_argument("--max-n", type=int, required=True)
        p.add_argument("--json")
        p.add_argument("--workers", type=int, default=1)
        if name == "census":
            p.add_argument("--method", choices=list(enum_mod.METHODS), default=enum_mod.EXACT)
            p.add_argument("--csv")
        p.set_defaults(func=func)

    p = sub.add_parser("convert", help="convert between graph6 and edge-list")
    p.add_argument("input")
    p.add_argument("output", nargs="?")
    p.add_argument("--to", choices=["g6", "el"], required=True)
    p.add_argument("--format", choices=["g6", "el"])
    p.set_defaults(func=cmd_convert)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except NotConnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (QMainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
