"""Command-line front end.

Exit status: 0 success, 2 unreadable input or bad arguments, 3 invalid
curve or sheaf, 4 precondition failure, 5 verification failed, 70 internal
assertion failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import documents as docs
from .bounds import SystemType, alpha_range_bound, bounds_report, enumerate_critical_values
from .census import census
from .curve import validate
from .errors import DocumentError, PreconditionError, ValidationError
from .exact import parse_rational
from .oracle import OracleRange, verify_suite
from .polarization import analyze_polarization

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_PRECONDITION = 4
EXIT_VERIFY_FAILED = 5
EXIT_INTERNAL = 70

COMMANDS = ("validate", "goodness", "bounds", "critical-values", "census", "verify", "report")
NEEDS_TYPE = {"bounds", "critical-values", "census", "report"}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nodal-coherent",
        description="Exact stability numerics of coherent systems on polarized nodal curves.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--curve", metavar="PATH", help="curve + polarization document (JSON)")
    parser.add_argument("--sheaf", metavar="PATH", help="depth-one sheaf numerics document (validate)")
    parser.add_argument("--type", dest="stype", metavar="r,d,k", help="system type, rationals allowed for r and d")
    parser.add_argument("--window", metavar="M", help="critical values are listed in (0, M)")
    parser.add_argument("--permissive", action="store_true", help="drop the r' <= r cap (critical-values)")
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument(
        "--oracle-range",
        metavar="KEY=VAL,...",
        help="verify bounds, e.g. R_max=6,r_max=4,d_max=6,gamma_max=3,delta_max=4,pols=50,trials=10000,seed=0",
    )
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None


def _load_curve(args):
    if not args.curve:
        raise UsageError(f"{args.command} needs --curve")
    curve, pol = docs.load_curve(_read(args.curve))
    validate(curve, pol)
    return curve, pol


def _type(args) -> SystemType:
    if not args.stype:
        raise UsageError(f"{args.command} needs --type r,d,k")
    parts = args.stype.split(",")
    if len(parts) != 3:
        raise UsageError(f"--type must be r,d,k, got {args.stype!r}")
    r, d, k = (parse_rational(p) for p in parts)
    if k.denominator != 1:
        raise UsageError(f"k must be an integer, got {k}")
    return SystemType(r, d, int(k))


def _critical_values(curve, pol, stype, args) -> docs.CriticalValuesReport:
    if args.window is not None:
        window = parse_rational(args.window)
    else:
        window = alpha_range_bound(curve, pol, stype)
        if window <= 0:
            raise PreconditionError(f"alpha range bound is {window} <= 0; pass --window")
    values = enumerate_critical_values(curve, pol, stype, window, permissive=args.permissive)
    return docs.CriticalValuesReport(stype, window, args.permissive, tuple(values))


def _sections(args):
    """Yield typed report sections; errors propagate to the caller."""
    command = args.command
    if command == "verify":
        cfg = OracleRange.parse(args.oracle_range) if args.oracle_range else OracleRange()
        if args.curve:
            curve, pol = _load_curve(args)
            yield verify_suite(cfg, curve, pol)
        else:
            yield verify_suite(cfg)
        return
    curve, pol = _load_curve(args)
    stype = _type(args) if command in NEEDS_TYPE else None
    if command == "validate":
        sheaf = docs.load_sheaf(_read(args.sheaf)) if args.sheaf else None
        yield docs.summarize_curve(curve, pol, sheaf)
    elif command == "goodness":
        yield analyze_polarization(curve, pol)
    elif command == "bounds":
        yield bounds_report(curve, pol, stype)
    elif command == "critical-values":
        yield _critical_values(curve, pol, stype, args)
    elif command == "census":
        yield census(curve, pol, stype)


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, ValidationError):
        return EXIT_INVALID
    if isinstance(exc, PreconditionError):
        return EXIT_PRECONDITION
    if isinstance(exc, (DocumentError, UsageError, ValueError)):
        return EXIT_USAGE
    return EXIT_INTERNAL


def _full_report(args):
    """validate -> goodness -> bounds -> census; failed sections become placeholders."""
    curve, pol = _load_curve(args)
    stype = _type(args)
    steps = (
        ("validate", lambda: docs.summarize_curve(curve, pol)),
        ("goodness", lambda: analyze_polarization(curve, pol)),
        ("bounds", lambda: bounds_report(curve, pol, stype)),
        ("census", lambda: census(curve, pol, stype)),
    )
    sections, status = [], EXIT_OK
    for kind, step in steps:
        try:
            sections.append(step())
        except (PreconditionError, ValidationError, AssertionError) as exc:
            sections.append(docs.Unavailable(kind, str(exc)))
            if status == EXIT_OK:
                status = _exit_code(exc)
    return docs.FullReport(tuple(sections)), status


def _nested(value) -> bool:
    if isinstance(value, dict):
        return True
    return isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value)


def render_text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for key, value in doc.items():
            if _nested(value):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    else:
        for item in doc:
            if _nested(item):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    return "\n".join(line for line in lines if line)


def _scalar(value) -> str:
    if isinstance(value, list):
        return "(" + ", ".join(_scalar(v) for v in value) + ")"
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _emit(obj, fmt: str, out) -> None:
    doc = docs.to_doc(obj)
    if fmt == "structured":
        out.write(docs.dumps(doc))
    else:
        out.write(render_text(doc) + "\n")


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "report":
            report, status = _full_report(args)
            _emit(report, args.format, out)
            return status
        status = EXIT_OK
        for section in _sections(args):
            _emit(section, args.format, out)
            if getattr(section, "passed", True) is False:
                status = EXIT_VERIFY_FAILED
        return status
    except AssertionError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except (DocumentError, UsageError, ValidationError, PreconditionError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
