"""Command-line front end.

Subcommands:

* ``sweep``  one state family over a parameter grid, CSV out
* ``audit``  the five purity inequalities over a random ensemble
* ``scan``   conjecture scan (sign of delta vs entanglement), JSON out
* ``check``  one state from a matrix file: purities and all reports

Exit codes: 0 success, 1 usage or input validation error, 2 at least one
audited inequality unsatisfied, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .defaults import REPORT_TOL, SWEEP_POINTS
from .density import BlockShape, purity_set, random_density
from .errors import IoError, PurityLabError
from .fileio import (
    csv_lines,
    emit_csv,
    format_value,
    read_matrix_file,
    scan_report_json,
    write_scan_report,
)
from .inequalities import audit_reports
from .prng import child_seed
from .sweep import FAMILIES, SweepSpec, run_sweep, scan_conjecture


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_shape(text: str) -> BlockShape:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise _UsageError(f"shape must look like 2x2, got {text!r}")
    try:
        return BlockShape(int(parts[0]), int(parts[1]))
    except (ValueError, PurityLabError) as err:
        raise _UsageError(f"bad shape {text!r}: {err}") from err


def build_parser() -> _Parser:
    parser = _Parser(prog="puritylab", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="sweep a state family over a grid")
    sweep.add_argument("--family", required=True, choices=FAMILIES)
    sweep.add_argument("--start", required=True, type=float)
    sweep.add_argument("--stop", required=True, type=float)
    sweep.add_argument("--count", type=int, default=SWEEP_POINTS)
    sweep.add_argument("--a", type=complex, default=None,
                       help="first Gisin amplitude (complex accepted)")
    sweep.add_argument("--b", type=complex, default=None,
                       help="second Gisin amplitude")
    sweep.add_argument("--out", default=None, help="CSV path (default stdout)")
    sweep.set_defaults(func=_cmd_sweep)

    audit = sub.add_parser("audit", help="audit inequalities on random states")
    audit.add_argument("--shape", default="2x2")
    audit.add_argument("--samples", type=int, default=1000)
    audit.add_argument("--seed", type=int, default=0)
    audit.add_argument("--tol", type=float, default=REPORT_TOL)
    audit.set_defaults(func=_cmd_audit)

    scan = sub.add_parser("scan", help="scan the sign of delta vs entanglement")
    scan.add_argument("--shape", default="2x2")
    scan.add_argument("--samples", type=int, default=1000)
    scan.add_argument("--seed", type=int, default=0)
    scan.add_argument("--tol", type=float, default=REPORT_TOL)
    scan.add_argument("--out", default=None, help="JSON path (default stdout)")
    scan.set_defaults(func=_cmd_scan)

    check = sub.add_parser("check", help="evaluate one state from a matrix file")
    check.add_argument("path")
    check.add_argument("--tol", type=float, default=REPORT_TOL)
    check.set_defaults(func=_cmd_check)

    return parser


def _cmd_sweep(args) -> int:
    spec = SweepSpec(family=args.family, start=args.start, stop=args.stop,
                     count=args.count, a=args.a, b=args.b)
    rows = run_sweep(spec)
    if args.out is None:
        for line in csv_lines(rows):
            print(line)
    else:
        emit_csv(rows, args.out)
    return 0


def _cmd_audit(args) -> int:
    shape = _parse_shape(args.shape)
    worst: dict[str, float] = {}
    for k in range(args.samples):
        rank = k % shape.dim + 1
        rho = random_density(shape.n, shape.m, rank, child_seed(args.seed, k))
        for report in audit_reports(rho, tol=args.tol):
            if report.name not in worst or report.margin < worst[report.name]:
                worst[report.name] = report.margin
    print(f"audited {args.samples} states of shape {shape.n}x{shape.m} "
          f"(seed {args.seed}, tol {format_value(args.tol)})")
    all_ok = True
    for name, margin in worst.items():
        ok = margin >= -args.tol
        all_ok &= ok
        verdict = "ok" if ok else "VIOLATED"
        print(f"{name}: min margin = {format_value(margin)} {verdict}")
    return 0 if all_ok else 2


def _cmd_scan(args) -> int:
    shape = _parse_shape(args.shape)
    report = scan_conjecture(shape, args.samples, args.seed, tol=args.tol)
    if args.out is None:
        sys.stdout.write(scan_report_json(report))
    else:
        write_scan_report(report, args.out)
        print(f"scanned {report.samples} states; "
              f"{len(report.counterexamples)} counterexample(s); "
              f"report written to {args.out}")
    return 0


def _cmd_check(args) -> int:
    rho = read_matrix_file(args.path)
    ps = purity_set(rho)
    print(f"shape: {rho.shape.n}x{rho.shape.m}")
    for label, value in (("mu12", ps.mu12), ("mu1", ps.mu1), ("mu2", ps.mu2),
                         ("mu_tilde", ps.mu_tilde), ("delta", ps.delta)):
        print(f"{label} = {format_value(value)}")
    reports = audit_reports(rho, tol=args.tol)
    failed = False
    for rep in reports:
        failed |= not rep.satisfied
        print(f"{rep.name}: lhs={format_value(rep.lhs)} "
              f"rhs={format_value(rep.rhs)} expected={rep.direction} "
              f"margin={format_value(rep.margin)} "
              f"satisfied={'true' if rep.satisfied else 'false'}")
    return 2 if failed else 0


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except SystemExit as exc:  # --help lands here
        code = exc.code
        return int(code) if code else 0
    try:
        return args.func(args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except IoError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except PurityLabError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
