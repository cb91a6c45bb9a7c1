"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 a computed identity failed.
Errors go to stderr as a single line ``error: <code>: <reason>``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import betti, bwb, gn, hilbert, intersect, lattice
from .errors import ComputationError, Inconsistency, InvalidInput, OddSquare
from .selftest import battery

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 2, 3


class _UsageError(Exception):
    pass


class _Failed(Exception):
    """A computed check failed; carries the already rendered output."""

    def __init__(self, output: str, reason: str) -> None:
        super().__init__(reason)
        self.output = output


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from None


def _half_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(x) for x in text.split(",")]
    except ValueError:
        raise InvalidInput(f"expected comma-separated half-integers, got {text!r}") from None


def _square_to_d(square: int) -> int:
    if square % 2:
        raise OddSquare(f"square must be even, got {square}")
    if square <= 0:
        raise InvalidInput(f"square must be positive, got {square}")
    return square // 2


def _genus_range(args: argparse.Namespace) -> list[int]:
    if args.sweep:
        try:
            lo, hi = (int(x) for x in args.sweep.split(".."))
        except ValueError:
            raise InvalidInput(f"--sweep expects g1..g2, got {args.sweep!r}") from None
        if lo > hi:
            raise InvalidInput(f"empty sweep {args.sweep!r}")
        return list(range(lo, hi + 1))
    if args.genus is None:
        raise InvalidInput("either --genus or --sweep is required")
    return [args.genus]


def _emit(rows: list[dict[str, Any]], fmt: str, text_lines: list[str]) -> str:
    if fmt == "json":
        payload: Any = rows[0] if len(rows) == 1 else rows
        return json.dumps(payload, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        fields = list(rows[0])
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
        return buf.getvalue().rstrip("\n")
    return "\n".join(text_lines)


def _cmd_hilbert(args: argparse.Namespace) -> str:
    d = _square_to_d(args.square)
    h0 = hilbert.h0_power(d, args.power)
    row = {"square": args.square, "power": args.power, "n": hilbert.embedding_dimension(d), "h0": h0}
    return _emit([row], args.format, [f"h0 = {h0}", f"n = {row['n']}"])


def _cmd_ideal(args: argparse.Namespace) -> str:
    d = _square_to_d(args.square)
    dim = hilbert.ideal_dimension(d, args.degree)
    row = {"square": args.square, "degree": args.degree, "ideal_dim": dim}
    return _emit([row], args.format, [f"ideal_dim = {dim}"])


def _cmd_betti(args: argparse.Namespace) -> str:
    if args.action == "expected":
        if args.square is None:
            raise InvalidInput("betti expected needs --square")
        return betti.render_table(betti.expected_betti(_square_to_d(args.square)), args.format)
    if args.fixture is None:
        raise InvalidInput(f"betti {args.action} needs --fixture")
    table = betti.fixture(args.fixture)
    if args.action == "show":
        return betti.render_table(table, args.format)
    report = betti.validate_table(table, betti.fixture_square(args.fixture))
    rows = [{"check": c.name, "pass": c.passed, "offending": [list(o) if isinstance(o, tuple) else o for o in c.offending]}
            for c in report.checks]
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f" offending={list(c.offending)}" if c.offending else "")
             for c in report.checks]
    text = _emit(rows, args.format, lines) if args.format != "json" else json.dumps(rows, sort_keys=True)
    if not report.passed:
        raise _Failed(text, f"fixture {args.fixture} fails: {', '.join(c.name for c in report.failures())}")
    return text


def _cohomology_output(b: bwb.HomogBundle, fmt: str) -> str:
    table = bwb.cohomology(b).as_dict()
    row = {"ambient": str(b.ambient), "rank": b.rank, "cohomology": {str(i): v for i, v in table.items()},
           "euler": bwb.cohomology(b).euler()}
    lines = [f"ambient = {b.ambient}", f"rank = {b.rank}"]
    lines += [f"H^{i} = {v}" for i, v in table.items()] or ["all cohomology vanishes"]
    return _emit([row], fmt, lines)


def _cmd_bwb(args: argparse.Namespace) -> str:
    if args.space == "gr":
        quot_text, _, sub_text = (args.pattern or "").partition("/")
        gr = bwb.Grassmannian(args.k, args.n)
        b = bwb.schur(gr, _int_list(quot_text), _int_list(sub_text), args.twist)
    else:
        q = bwb.EvenQuadric(args.m)
        b = bwb.quadric_bundle(q, _half_list(args.weight), args.twist)
    return _cohomology_output(b, args.format)


def _cmd_gn(args: argparse.Namespace) -> str:
    case = gn.case_by_name(args.case)
    page = gn.e1_page(case, args.degree)
    result = gn.ideal_cohomology(case, args.degree)
    row = {
        "case": case.name.lower(),
        "degree": args.degree,
        "e1": {f"{p},{q}": v for (p, q), v in sorted(page.grid.items())},
        "h": {str(i): v for i, v in sorted(result.items())},
    }
    lines = [f"case = {case.name.lower()}", f"degree = {args.degree}"]
    lines += [f"E1[{p},{q}] = {v}" for (p, q), v in sorted(page.grid.items())]
    lines += [f"h{i} = {v}" for i, v in sorted(result.items())]
    return _emit([row], args.format, lines)


def _degrees_row(g: int) -> dict[str, Any]:
    dec = intersect.sigma_decomposition(g)
    return {"genus": g, "sigma": dec.total, "y0": dec.y0, "y_top": dec.y_top, "residual": dec.residual}


def _cmd_degrees(args: argparse.Namespace) -> str:
    rows = [_degrees_row(g) for g in _genus_range(args)]
    lines = []
    for r in rows:
        parts = [f"sigma={r['sigma']}", f"y0={r['y0']}"]
        if r["y_top"] is not None:
            parts.append(f"y_top={r['y_top']}")
        parts.append(f"residual={r['residual']}")
        lines.append((f"g={r['genus']} " if args.sweep else "") + " ".join(parts))
    return _emit(rows, args.format, lines)


def _mukai_row(g: int, v: lattice.MukaiVector) -> dict[str, Any]:
    ctx = lattice.GenusContext(g)
    sq = lattice.mukai_square(v, ctx)
    row: dict[str, Any] = {"genus": g, "vector": [v.r, v.c, v.s], "square": sq,
                           "moduli_dim": sq + 2 if sq >= -2 else None}
    if v.r > 0:
        c1, c2 = lattice.mukai_to_chern(v, ctx)
        row.update(c1=c1, c2=c2)
    return row


def _cmd_mukai(args: argparse.Namespace) -> str:
    parts = _int_list(args.vector)
    if len(parts) != 3:
        raise InvalidInput(f"--vector expects r,c,s, got {args.vector!r}")
    v = lattice.MukaiVector(*parts)
    rows = [_mukai_row(g, v) for g in _genus_range(args)]
    lines = []
    for r in rows:
        dim = "empty" if r["moduli_dim"] is None else r["moduli_dim"]
        line = f"square={r['square']} moduli_dim={dim}"
        if "c2" in r:
            line += f" c1={r['c1']}L c2={r['c2']}"
        lines.append((f"g={r['genus']} " if args.sweep else "") + line)
    return _emit(rows, args.format, lines)


def _cmd_selftest(args: argparse.Namespace, spinor_cp: intersect.ChernPoly | None) -> str:
    checks = battery(spinor_cp)
    rows = [c.as_dict() for c in checks]
    if args.format == "json":
        text = json.dumps(rows, sort_keys=True, default=str)
    elif args.format == "csv":
        text = _emit([{k: (json.dumps(v, default=str) if k in ("expected", "got") else v) for k, v in r.items()} for r in rows],
                     "csv", [])
    else:
        lines = [f"{'PASS' if c.passed else 'FAIL'} [{c.criterion}] {c.name}: expected={c.expected!r} got={c.got!r}"
                 for c in checks]
        passed = sum(c.passed for c in checks)
        lines.append(f"{passed}/{len(checks)} checks passed")
        text = "\n".join(lines)
    failed = [c.name for c in checks if not c.passed]
    if failed:
        raise _Failed(text, f"{len(failed)} selftest checks failed: {'; '.join(failed)}")
    return text


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--chern-file", help="JSON file with c1, c2, c3 of the spinor bundle on Q^8")

    parser = _Parser(prog="hksyz", description="Exact computations for K3^[2]-type fourfolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="h^0 of a power of the polarization")
    p.add_argument("--square", type=int, required=True, help="q(H) = 2d")
    p.add_argument("--power", type=int, required=True)

    p = sub.add_parser("ideal", parents=[common], help="dimension of degree-e forms in the ideal")
    p.add_argument("--square", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("betti", parents=[common], help="Betti tables")
    p.add_argument("action", choices=("expected", "validate", "show"))
    p.add_argument("--square", type=int)
    p.add_argument("--fixture")

    p = sub.add_parser("bwb", parents=[common], help="Borel-Weil-Bott cohomology")
    spaces = p.add_subparsers(dest="space", required=True)
    q = spaces.add_parser("gr", parents=[common], help="bundle on Gr(k,n)")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--pattern", default="", help="QUOT[/SUB], e.g. 2,1,1 or 1,1/1")
    q.add_argument("--twist", type=int, default=0)
    q = spaces.add_parser("quadric", parents=[common], help="bundle on Q^(2m)")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--weight", required=True, help="m+1 half-integers, e.g. 1/2,1/2,1/2,1/2,-1/2")
    q.add_argument("--twist", type=int, default=0)

    p = sub.add_parser("gn", parents=[common], help="ideal cohomology from the Gulliksen-Negard resolution")
    p.add_argument("--case", choices=("genus7", "genus8"), required=True)
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("degrees", parents=[common], help="degrees of the rank strata")
    p.add_argument("--genus", type=int)
    p.add_argument("--sweep", help="genus range g1..g2")

    p = sub.add_parser("mukai", parents=[common], help="Mukai vector invariants")
    p.add_argument("--genus", type=int)
    p.add_argument("--sweep", help="genus range g1..g2")
    p.add_argument("--vector", required=True, help="r,c,s")

    sub.add_parser("selftest", parents=[common], help="run the acceptance battery")
    return parser


COMMANDS = {
    "hilbert": _cmd_hilbert,
    "ideal": _cmd_ideal,
    "betti": _cmd_betti,
    "bwb": _cmd_bwb,
    "gn": _cmd_gn,
    "degrees": _cmd_degrees,
    "mukai": _cmd_mukai,
}


def _fail(code: str, reason: str, exit_code: int) -> int:
    print(f"error: {code}: {' '.join(str(reason).split())}", file=sys.stderr)
    return exit_code


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return _fail("invalid_input", str(exc), EXIT_INPUT)
    try:
        spinor_cp = None
        if args.chern_file:
            c1, c2, c3 = intersect.check_spinor_override(args.chern_file)
            spinor_cp = intersect.spinor_chern_from_coefficients(c1, c2, c3)
        if args.command == "selftest":
            out = _cmd_selftest(args, spinor_cp)
        else:
            out = COMMANDS[args.command](args)
    except _Failed as exc:
        print(exc.output)
        return _fail("check_failed", str(exc), EXIT_INCONSISTENT)
    except InvalidInput as exc:
        return _fail(exc.code, str(exc), EXIT_INPUT)
    except (Inconsistency, ComputationError) as exc:
        return _fail(exc.code, str(exc), EXIT_INCONSISTENT)
    print(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
