"""Command line interface.

Subcommands: solve, construct, verify, audit.  Exit codes:

    0   success
    2   no solutions for this c (solve)
    3   rejected parameters, not a solution and no --force (construct)
    4   orbit cap exceeded
    5   verified family is not a flag-transitive 2-design
    64  usage error
    65  malformed design file
    74  file I/O error
"""

from __future__ import annotations

import argparse
import sys

from .errors import (
    DesignFileError,
    NotASolution,
    OrbitCapExceeded,
    UnknownFamily,
)

EX_OK = 0
EX_UNSOLVABLE = 2
EX_NOT_A_SOLUTION = 3
EX_ORBIT_CAP = 4
EX_NOT_A_DESIGN = 5
EX_USAGE = 64
EX_PARSE = 65
EX_IO = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def build_parser() -> _Parser:
    parser = _Parser(prog="flagprod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_solve = sub.add_parser("solve", help="enumerate parameter equation solutions")
    p_solve.add_argument("--c", type=_positive, required=True)
    grp = p_solve.add_mutually_exclusive_group(required=True)
    grp.add_argument("--count", type=_positive, help="emit the first N solutions")
    grp.add_argument("--max-omega", type=_positive, help="emit all solutions with omega <= W")

    p_con = sub.add_parser("construct", help="build a design orbit and write it out")
    p_con.add_argument("--c", type=_positive, required=True)
    p_con.add_argument("--m", type=_positive, required=True)
    p_con.add_argument("--omega", type=_positive, required=True)
    p_con.add_argument("--out", required=True, help="output design file path")
    p_con.add_argument("--cap", type=_positive, default=None, help="orbit size cap")
    p_con.add_argument("--force", action="store_true",
                       help="build even when the parameters solve nothing")

    p_ver = sub.add_parser("verify", help="verify a design file")
    p_ver.add_argument("file", help="design file path")

    p_aud = sub.add_parser("audit", help="run the case elimination")
    p_aud.add_argument("--case", default="all",
                       choices=("all", "alternating", "psl", "psu3", "sz", "sporadic"))
    p_aud.add_argument("--d", type=_positive, default=None,
                       help="restrict psl to one dimension")
    p_aud.add_argument("--e-max", type=_positive, default=None,
                       help="field exponent sweep bound (default 12, min 6)")
    return parser


def cmd_solve(args) -> int:
    from .diophantine import UnsolvableC, enumerate_solutions, solution_family

    try:
        if args.count is not None:
            sols = enumerate_solutions(args.c, args.count)
        else:
            fam = solution_family(args.c)
            sols = []
            s = 0
            while fam.omega0 + s * fam.domega <= args.max_omega:
                sols.append(fam.member(s))
                s += 1
    except UnsolvableC:
        print("UNSOLVABLE")
        return EX_UNSOLVABLE
    for sol in sols:
        print(f"{sol.c} {sol.m} {sol.omega}")
    return EX_OK


def cmd_construct(args) -> int:
    from .construct import build_design
    from .designio import write_design
    from .permaction import DEFAULT_CAP

    cap = args.cap if args.cap is not None else DEFAULT_CAP
    try:
        design = build_design(args.c, args.m, args.omega, cap=cap, force=args.force)
    except NotASolution as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_NOT_A_SOLUTION
    except OrbitCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_ORBIT_CAP
    try:
        write_design(design, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_IO
    print(f"{design.v} {design.k} {design.b}")
    return EX_OK


def cmd_verify(args) -> int:
    from .designio import read_design
    from .verify import full_report

    try:
        design = read_design(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_IO
    except DesignFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_PARSE
    try:
        report = full_report(design)
    except OrbitCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_ORBIT_CAP
    sys.stdout.write(report.render())
    if report.is_2design and report.flag_transitive:
        return EX_OK
    return EX_NOT_A_DESIGN


def cmd_audit(args) -> int:
    from .audit import DEFAULT_E_MAX, FILTERED, AuditResult, audit_case, audit_all, family_cases

    e_max = args.e_max if args.e_max is not None else DEFAULT_E_MAX
    try:
        if args.case == "all":
            result = audit_all(e_max=e_max)
        else:
            cases = family_cases(args.case, e_max=e_max, d=args.d)
            filtered = FILTERED if args.case == "psl" and args.d is None else ()
            result = AuditResult(e_max=e_max, reports=[audit_case(i) for i in cases],
                                 filtered=filtered)
    except (UnknownFamily, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    sys.stdout.write(result.render())
    return EX_OK if result.global_verdict == "NO_PRODUCT_ACTION" else EX_NOT_A_DESIGN


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "solve":
        return cmd_solve(args)
    if args.command == "construct":
        return cmd_construct(args)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_audit(args)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
