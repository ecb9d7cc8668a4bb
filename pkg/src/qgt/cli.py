"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails (the report
says which, with a witness), 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from . import io as qio
from .braid import BraidWord, burau, equal_braids
from .errors import ParseError, QGTError
from .gtrel import DEFAULT_MAX_DEGREE, GTElement, check_all, solve_relations
from .hgt import check_b4, solve_b4
from .hopf import check_coquasitriangular, check_hopf, check_quasitriangular, drinfeld_double, hopf_pairing_report
from .ihara import check_b5, ihara_bracket
from .lie import embed_lie, lie_bracket, project_lie
from .report import FAILS, HOLDS, Report
from .trialgebra import check_biquasitriangular, check_quadraalgebra, check_trialgebra

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(QGTError):
    pass


@dataclass
class RunReport:
    command: list[str]
    reports: list[Report] = field(default_factory=list)
    output: list[str] = field(default_factory=list)
    seed: int | None = None
    elapsed: float = 0.0
    exit_status: int = EXIT_OK
    error: str | None = None

    def single(self, name: str, ok: bool, witness=None, detail: str = "") -> None:
        r = Report(name)
        r.add(name, HOLDS if ok else FAILS, witness, detail)
        self.reports.append(r)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "seed": self.seed,
            "reports": [r.to_dict() for r in self.reports],
            "output": self.output,
            "elapsed_seconds": round(self.elapsed, 6),
            "exit_status": self.exit_status,
            "error": self.error,
        }

    def text(self) -> str:
        lines = ["$ qgt " + " ".join(self.command)]
        for r in self.reports:
            lines.extend(r.lines())
        lines.extend(self.output)
        if self.error:
            lines.append(f"error: {self.error}")
        lines.append(f"time: {self.elapsed:.3f}s")
        lines.append(f"exit: {self.exit_status}")
        return "\n".join(lines)


def _fraction(text: str) -> Fraction:
    try:
        return qio.parse_scalar(text.strip(), "--lambda")
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


def _load(path: str, kind: str):
    doc = qio.load(path)
    if doc.kind != kind:
        raise UsageError(f"{path}: expected a {kind!r} document, got {doc.kind!r}")
    return doc


def _degree(args, n: int) -> int:
    cap = args.max_degree
    if cap is not None and n > cap:
        raise UsageError(f"degree {n} exceeds --max-degree {cap}")
    return n


def _truncated(s, n: int, path: str):
    if n > s.truncation:
        raise UsageError(f"{path}: requested degree {n} exceeds stored truncation {s.truncation}")
    return s.truncate(n)


# subcommands


def cmd_check(args, run: RunReport) -> None:
    doc = _load(args.file, args.kind)
    p, extras = doc.payload, doc.extras
    if args.kind == "hopf":
        run.reports.append(check_hopf(p))
        if "r_matrix" in extras:
            run.reports.append(check_quasitriangular(p, extras["r_matrix"]))
        if "coquasi_form" in extras:
            run.reports.append(check_coquasitriangular(p, extras["coquasi_form"]))
        if "pairing" in extras:
            run.reports.append(hopf_pairing_report(p, extras["pairing"]))
    elif args.kind == "trialgebra":
        if all(k in extras for k in ("r_dot", "r_star", "pairing")):
            run.reports.append(check_biquasitriangular(p, extras["r_dot"], extras["r_star"], extras["pairing"]))
        else:
            run.reports.append(check_trialgebra(p))
    else:
        run.reports.append(check_quadraalgebra(p))


def cmd_double(args, run: RunReport) -> None:
    doc = _load(args.file, "hopf")
    D, R = drinfeld_double(doc.payload)
    report = check_quasitriangular(D, R)
    run.reports.append(report)
    qio.dump(qio.AlgebraDocument("hopf", D, {"r_matrix": R}), args.output)
    run.output.append(f"wrote double of dimension {D.dim} to {args.output}")


def cmd_gt_check(args, run: RunReport) -> None:
    e = _load(args.file, "gt-element").payload
    n = _degree(args, args.degree)
    e = GTElement(e.lam, _truncated(e.f, n, args.file))
    report = Report(f"GT relations for lambda = {e.lam} up to degree {n}")
    for rel in check_all(e):
        if rel.holds:
            report.add(rel.relation, HOLDS, detail=f"up to degree {n}")
        else:
            d = rel.first_failing_degree
            report.add(rel.relation, FAILS, (f"degree {d}",), "; ".join(rel.residual.degree_part(d).format_lines()))
    run.reports.append(report)


def cmd_gt_solve(args, run: RunReport) -> None:
    n = _degree(args, args.degree)
    cap = args.max_degree if args.max_degree is not None else DEFAULT_MAX_DEGREE
    if n > cap:
        raise UsageError(f"degree {n} exceeds the solver maximum {cap}; raise it with --max-degree")
    sol = solve_relations(args.lam, n, max_degree=cap)
    report = Report(f"GT relation solve at lambda = {args.lam} up to degree {n}")
    for d in sol.degrees:
        if d.feasible:
            report.add(f"degree {d.degree}", HOLDS, detail=f"affine solution space of dimension {d.dimension}")
        else:
            report.add(f"degree {d.degree}", FAILS, detail="no solution")
    run.reports.append(report)
    if sol.feasible:
        f = sol.element().f
        run.output.append("particular solution f:")
        run.output.extend("  " + line for line in f.format_lines())


def cmd_hgt_check(args, run: RunReport) -> None:
    p = _load(args.file, "hgt-pair").payload
    run.single("g^-1 f = f^-1 g", check_b4(p))


def cmd_hgt_solve(args, run: RunReport) -> None:
    doc = qio.load(args.file)
    if doc.kind == "series":
        f = doc.payload
    elif doc.kind in ("gt-element", "hgt-pair"):
        f = doc.payload.f
    else:
        raise UsageError(f"{args.file}: expected a series, gt-element or hgt-pair document")
    n = _degree(args, args.degree)
    sol = solve_b4(_truncated(f, n, args.file))
    report = Report(f"pair condition solve for g up to degree {n}")
    for d, particular, kernel in sol.degrees:
        if particular is None:
            report.add(f"degree {d}", FAILS, detail="no solution")
        else:
            report.add(f"degree {d}", HOLDS, detail=f"{len(kernel)} free parameters")
    run.reports.append(report)
    run.output.append(sol.summary())


def _lie_input(path: str, n: int | None):
    s = _load(path, "series").payload
    if n is not None:
        s = _truncated(s, n, path)
    try:
        return project_lie(s)
    except QGTError as exc:
        raise UsageError(f"{path}: not a Lie series ({exc})") from None


def cmd_ihara_bracket(args, run: RunReport) -> None:
    n = _degree(args, args.degree)
    f, g = _lie_input(args.f, n), _lie_input(args.g, n)
    b = ihara_bracket(f, g)
    run.output.append("{f, g} =")
    run.output.extend("  " + line for line in embed_lie(b).format_lines() or ["0"])


def cmd_ihara_b5(args, run: RunReport) -> None:
    f, h = _lie_input(args.f, None), _lie_input(args.g, None)
    name = "[f, h] = 0" if args.plain_bracket else "{f, h} = 0"
    ok = check_b5(f, h, plain_bracket=args.plain_bracket)
    detail = ""
    if not ok:
        b = (lie_bracket if args.plain_bracket else ihara_bracket)(f, h)
        detail = "; ".join(embed_lie(b).format_lines())
    run.single(name, ok, detail=detail)


def cmd_braid_eq(args, run: RunReport) -> None:
    try:
        u, v = BraidWord.parse(args.w1), BraidWord.parse(args.w2)
    except QGTError as exc:
        raise UsageError(str(exc)) from None
    ok = equal_braids(u, v)
    run.single("equal in B3 (Burau)", ok, detail="" if ok else f"images differ: {burau(u)} vs {burau(v)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgt", description="Exact checks for GT relations, Hopf algebras and trialgebras.")
    parser.add_argument("--version", action="version", version=f"qgt {__version__}")
    parser.add_argument("--report", choices=("text", "json"), default="text", help="output format")
    parser.add_argument("--max-degree", type=_nonneg, default=None, help="upper bound on any requested degree")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized suites (recorded in the report)")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="verify the axioms of a structure-constant file")
    check.add_argument("kind", choices=("hopf", "trialgebra", "quadraalgebra"))
    check.add_argument("file")
    check.set_defaults(func=cmd_check)

    double = sub.add_parser("double", help="Drinfeld double of a Hopf algebra file")
    double.add_argument("file")
    double.add_argument("-o", "--output", required=True)
    double.set_defaults(func=cmd_double)

    gt = sub.add_parser("gt", help="GT relations").add_subparsers(dest="gt_command", required=True)
    p = gt.add_parser("check")
    p.add_argument("file")
    p.add_argument("--degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_gt_check)
    p = gt.add_parser("solve")
    p.add_argument("--lambda", dest="lam", type=_fraction, required=True)
    p.add_argument("--degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_gt_solve)

    hgt = sub.add_parser("hgt", help="pairs (f, g)").add_subparsers(dest="hgt_command", required=True)
    p = hgt.add_parser("check-b4")
    p.add_argument("file")
    p.set_defaults(func=cmd_hgt_check)
    p = hgt.add_parser("solve-b4")
    p.add_argument("file")
    p.add_argument("--degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_hgt_solve)

    ih = sub.add_parser("ihara", help="Ihara bracket").add_subparsers(dest="ihara_command", required=True)
    p = ih.add_parser("bracket")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--degree", type=_nonneg, required=True)
    p.set_defaults(func=cmd_ihara_bracket)
    p = ih.add_parser("b5")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--plain-bracket", action="store_true", help="use the free Lie bracket instead")
    p.set_defaults(func=cmd_ihara_b5)

    br = sub.add_parser("braid", help="braid words in B3").add_subparsers(dest="braid_command", required=True)
    p = br.add_parser("eq")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(func=cmd_braid_eq)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    run = RunReport(argv, seed=args.seed)
    start = time.perf_counter()
    try:
        args.func(args, run)
        run.exit_status = EXIT_OK if run.ok else EXIT_FAIL
    except (ParseError, UsageError) as exc:
        run.exit_status, run.error = EXIT_INPUT, str(exc)
    except QGTError as exc:
        run.exit_status, run.error = EXIT_INPUT, f"{type(exc).__name__}: {exc}"
    run.elapsed = time.perf_counter() - start
    if args.report == "json":
        print(json.dumps(run.to_dict(), indent=2, ensure_ascii=False))
    else:
        print(run.text())
    if run.error:
        print(f"qgt: error: {run.error}", file=sys.stderr)
    return run.exit_status

