from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from afverify.core import ArgumentationFramework
from afverify.enumeration import DEFAULT_BOUND, DEFAULT_FRESH
from afverify.errors import AFError
from afverify.formats import format_extensions, write_apx, write_dot
from afverify.kernels import KernelKind
from afverify.semantics import SemanticsKind
from afverify.verification import format_class, hierarchy_edges
from afverify.workbench import Workbench

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2

_SEMANTICS = [kind.value for kind in SemanticsKind]
_KERNELS = [kind.value.removeprefix("k_") for kind in KernelKind] + [
    kind.value for kind in KernelKind
]


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker processes for searches")
    common.add_argument(
        "--bound", type=int, default=DEFAULT_BOUND, help="exhaustive bound on arguments"
    )
    common.add_argument("--strict", action="store_true", help="undeclared APX arguments fail")
    common.add_argument("--debug", action="store_true", help="log progress to stderr")
    return common


def _input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-f", "--file", required=True, help="AF file (.apx or .tgf)")
    parser.add_argument("--format", choices=["apx", "tgf"], help="override the file suffix")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="afverify",
        description="Extensions, kernels, verification classes and equivalence of Dung AFs.",
    )
    common = _common()
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="print the extensions of a semantics")
    p.add_argument("-s", "--semantics", choices=_SEMANTICS, required=True)
    p.add_argument("--iccma", action="store_true", help="single nested-list line")
    _input(p)

    p = sub.add_parser("kernel", parents=[common], help="print a kernel as APX")
    p.add_argument("-k", "--kernel", choices=_KERNELS, required=True)
    _input(p)

    p = sub.add_parser("vclass", parents=[common], help="print the verification class")
    p.add_argument("-x", "--function", required=True, help="label or names, e.g. p,mp")
    _input(p)

    p = sub.add_parser("equiv", parents=[common], help="expansion equivalence of two AFs")
    p.add_argument("-s", "--semantics", choices=_SEMANTICS, required=True)
    p.add_argument(
        "--fresh", type=int, default=DEFAULT_FRESH, help="new arguments allowed in witnesses"
    )
    p.add_argument("--format", choices=["apx", "tgf"])
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("verify", parents=[common], help="search a verifiability counterexample")
    p.add_argument("-s", "--semantics", choices=_SEMANTICS, required=True)
    p.add_argument("-x", "--function", required=True)
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("exact", parents=[common], help="minimal classes with no counterexample")
    p.add_argument("-s", "--semantics", choices=_SEMANTICS, required=True)
    p.add_argument("-n", type=int, required=True)

    sub.add_parser("hierarchy", parents=[common], help="print the lattice covering edges")

    p = sub.add_parser("mine", parents=[common], help="run the bounded theorem suite")
    p.add_argument("-n", type=int, default=3)

    p = sub.add_parser("rational", parents=[common], help="loop-reduct invariance check")
    p.add_argument("-s", "--semantics", choices=_SEMANTICS, required=True)
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("convert", parents=[common], help="rewrite an AF file")
    p.add_argument("--to", choices=["apx", "dot"], required=True)
    _input(p)

    p = sub.add_parser("theorem", parents=[common], help="kernel/oracle agreement for a bracket")
    p.add_argument("-s", "--semantics", choices=_SEMANTICS, required=True)
    p.add_argument("-n", type=int, required=True)
    return parser


def _block(title: str, af: ArgumentationFramework) -> str:
    return f"% {title}\n{write_apx(af)}"


def _cmd_solve(wb: Workbench, args: argparse.Namespace) -> int:
    af = wb.load(args.file, args.format)
    sys.stdout.write(format_extensions(wb.solve(af, args.semantics), iccma=args.iccma))
    return EXIT_OK


def _cmd_kernel(wb: Workbench, args: argparse.Namespace) -> int:
    af = wb.load(args.file, args.format)
    sys.stdout.write(write_apx(wb.kernel(af, args.kernel)))
    return EXIT_OK


def _cmd_vclass(wb: Workbench, args: argparse.Namespace) -> int:
    af = wb.load(args.file, args.format)
    sys.stdout.write(format_class(wb.vclass(af, args.function)))
    return EXIT_OK


def _cmd_equiv(wb: Workbench, args: argparse.Namespace) -> int:
    first = wb.load(args.first, args.format)
    second = wb.load(args.second, args.format)
    verdict = wb.equivalence(first, second, args.semantics)
    out = ["EQUIVALENT" if verdict.equivalent else "NOT"]
    if verdict.witness is not None:
        out.append(_block("witness expansion", verdict.witness).rstrip("\n"))
    if verdict.bound_note:
        out.append(f"% {verdict.bound_note}")
    print("\n".join(out))
    return EXIT_OK if verdict.equivalent else EXIT_FINDING


def _cmd_verify(wb: Workbench, args: argparse.Namespace) -> int:
    found = wb.verify(args.semantics, args.function, args.n)
    if found is None:
        print(f"OK: no counterexample up to n={args.n}")
        return EXIT_OK
    lines = [f"COUNTEREXAMPLE {found.kind} under {found.fn}"]
    for title, af, ext in (
        ("left", found.left, found.left_extensions),
        ("right", found.right, found.right_extensions),
    ):
        lines.append(_block(title, af).rstrip("\n"))
        lines.extend(f"% {found.kind}: [" + ",".join(row) + "]" for row in ext)
    print("\n".join(lines))
    return EXIT_FINDING


def _cmd_exact(wb: Workbench, args: argparse.Namespace) -> int:
    for fn in wb.exact(args.semantics, args.n):
        print(fn.label)
    return EXIT_OK


def _cmd_hierarchy(wb: Workbench, args: argparse.Namespace) -> int:
    for lower, upper in hierarchy_edges():
        print(f"{lower} -> {upper}")
    return EXIT_OK


def _cmd_mine(wb: Workbench, args: argparse.Namespace) -> int:
    checks = wb.suite(args.n)
    for check in checks:
        if check.ok:
            status = "PASS" if check.passed else "XFAIL"
        else:
            status = "FAIL" if check.expected else "XPASS"
        print(f"{status} {check.name} {check.detail}".rstrip())
    failed = sum(1 for check in checks if not check.ok)
    print(f"{len(checks) - failed}/{len(checks)} checks as expected at n={args.n}")
    return EXIT_OK if failed == 0 else EXIT_FINDING


def _cmd_rational(wb: Workbench, args: argparse.Namespace) -> int:
    report = wb.rationality(args.semantics, args.n)
    if report.rational:
        print(f"OK: {report.kind} unchanged by the loop-reduct on {report.checked} AFs")
        return EXIT_OK
    print(f"NOT RATIONAL {report.kind}")
    print(_block("changed by the loop-reduct", report.counterexample).rstrip("\n"))
    return EXIT_FINDING


def _cmd_convert(wb: Workbench, args: argparse.Namespace) -> int:
    af = wb.load(args.file, args.format)
    sys.stdout.write(write_apx(af) if args.to == "apx" else write_dot(af))
    return EXIT_OK


def _cmd_theorem(wb: Workbench, args: argparse.Namespace) -> int:
    report = wb.intermediate(args.semantics, args.n)
    head = f"{report.kind} under {report.kernel}, n={report.n}, fresh={report.fresh}"
    violation = report.soundness_violation
    if violation is None:
        print(f"OK: {head}, {report.frameworks} AFs x {report.expansions} expansions")
        return EXIT_OK
    print(f"VIOLATION: {head}")
    print(_block("left", violation.left).rstrip("\n"))
    print(_block("right", violation.right).rstrip("\n"))
    if violation.witness is not None:
        print(_block("separating expansion", violation.witness).rstrip("\n"))
    return EXIT_FINDING


_COMMANDS = {
    "solve": _cmd_solve,
    "kernel": _cmd_kernel,
    "vclass": _cmd_vclass,
    "equiv": _cmd_equiv,
    "verify": _cmd_verify,
    "exact": _cmd_exact,
    "hierarchy": _cmd_hierarchy,
    "mine": _cmd_mine,
    "rational": _cmd_rational,
    "convert": _cmd_convert,
    "theorem": _cmd_theorem,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    handler: logging.Handler | None = None
    logger: logging.Logger | None = None
    if args.debug:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s %(message)s"))
        logger = logging.getLogger("afverify")
        logger.addHandler(handler)
        logger.setLevel(logging.DEBUG)

    wb = Workbench(
        bound=args.bound,
        threads=args.threads,
        fresh=getattr(args, "fresh", DEFAULT_FRESH),
        strict=args.strict,
        debug=args.debug,
        logger=logger,
    )
    try:
        return _COMMANDS[args.command](wb, args)
    except (AFError, OSError) as exc:
        print(f"afverify {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if handler is not None and logger is not None:
            logger.removeHandler(handler)
