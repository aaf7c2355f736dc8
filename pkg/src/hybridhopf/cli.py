"""Command-line front end.

Subcommands: ``check`` (run every axiom check), ``table`` (the product
table), ``delta``/``counit``/``antipode``/``et``/``es`` (apply a structure
map to an element expression), ``eval``, ``mul``, and ``integrals``.

Exit codes: 0 on success (for ``check``: all checks passed), 1 when some
check failed, 2 on usage or parse errors.  ``--format`` defaults to the
``HYBRIDHOPF_FORMAT`` environment variable when set.  Output is UTF-8 and
deterministic: rerunning the same invocation yields identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checker import all_passed, run_all
from .errors import (
    DimensionMismatch,
    DivisionByZero,
    EvalPole,
    ParseError,
    UnsupportedVariant,
    ZeroParameter,
)
from .hybrid import BASIS_LABELS, MUL_TABLE
from .integrals import integral_space, unsafe_denominators
from .parser import parse_element, parse_gaussian
from .structure import (
    Variant,
    antipode_ext,
    build_structure,
    counit_ext,
    delta_ext,
    eps_s,
    eps_t,
    maps_eval,
)

_MAP_COMMANDS = {
    "delta": delta_ext,
    "counit": counit_ext,
    "antipode": antipode_ext,
    "et": eps_t,
    "es": eps_s,
}

_USER_ERRORS = (
    ParseError,
    DivisionByZero,
    EvalPole,
    ZeroParameter,
    UnsupportedVariant,
    DimensionMismatch,
    ValueError,
)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--variant",
        choices=("a", "b"),
        default="a",
        help="structure variant (default: a)",
    )
    common.add_argument(
        "--b",
        dest="b_value",
        metavar="VALUE",
        default=None,
        help="numeric mode: substitute this nonzero Gaussian rational for b, e.g. 2, 3/5, i, 1+2*i",
    )
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default=None,
        help="output format (default: $HYBRIDHOPF_FORMAT or text)",
    )
    parser = _ArgumentParser(
        prog="hybridhopf",
        description="Exact symbolic checks of the weak Hopf structures on the hybrid numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("check", parents=[common], help="run every axiom check for the chosen variant")
    sub.add_parser("table", parents=[common], help="print the 4x4 multiplication table")
    for name, blurb in (
        ("delta", "comultiplication of an element"),
        ("counit", "counit of an element"),
        ("antipode", "antipode of an element"),
        ("et", "target counital map eps_t of an element"),
        ("es", "source counital map eps_s of an element"),
        ("eval", "parse (and in numeric mode substitute b into) an element"),
    ):
        p = sub.add_parser(name, parents=[common], help=blurb)
        p.add_argument("expr", help="element expression, e.g. '(1/(2*b))*mu + g'")
    p = sub.add_parser("mul", parents=[common], help="product of two elements")
    p.add_argument("left", help="element expression")
    p.add_argument("right", help="element expression")
    p = sub.add_parser("integrals", parents=[common], help="basis of an integral space")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--source", choices=("derived", "paper"), default="derived")
    return parser


def _resolve_format(args) -> str:
    fmt = args.format
    if fmt is None:
        fmt = os.environ.get("HYBRIDHOPF_FORMAT", "text")
    if fmt not in ("text", "json"):
        raise _UsageError(f"invalid format {fmt!r} (choose 'text' or 'json')")
    return fmt


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _cmd_check(args, fmt, variant, b_value) -> int:
    reports = run_all(variant, b_value)
    passed = sum(1 for r in reports if r.passed)
    b_mode = "symbolic" if b_value is None else str(b_value)
    if fmt == "json":
        payload = [r.to_json() for r in reports]
        payload.append(
            {
                "total": len(reports),
                "passed": passed,
                "failed": len(reports) - passed,
                "variant": variant.value,
                "b_mode": b_mode,
            }
        )
        _emit_json(payload)
    else:
        for r in reports:
            label = f"{r.name}({', '.join(r.inputs)})" if r.inputs else r.name
            if r.passed:
                print(f"pass  {label}")
            else:
                print(f"FAIL  {label}")
                print(f"      lhs      = {r.lhs}")
                print(f"      rhs      = {r.rhs}")
                print(f"      residual = {r.residual}")
        print(
            f"{len(reports)} checks: {passed} passed, {len(reports) - passed} failed "
            f"(variant {variant.value}, b = {b_mode})"
        )
    return 0 if all_passed(reports) else 1


def _cmd_table(fmt) -> int:
    cells = [[""] + list(BASIS_LABELS)]
    for i, row in enumerate(MUL_TABLE):
        cells.append([BASIS_LABELS[i]] + [str(e) for e in row])
    if fmt == "json":
        _emit_json(
            {
                "basis": list(BASIS_LABELS),
                "table": [[str(e) for e in row] for row in MUL_TABLE],
            }
        )
        return 0
    widths = [max(len(r[c]) for r in cells) for c in range(5)]
    for r in cells:
        print(" | ".join(val.ljust(widths[c]) for c, val in enumerate(r)).rstrip())
    return 0


def _cmd_integrals(args, fmt, variant, b_value) -> int:
    maps = build_structure(variant)
    if b_value is not None:
        maps = maps_eval(maps, b_value)
    space = integral_space(args.side, variant, args.source, maps)
    flagged = unsafe_denominators(space)
    if fmt == "json":
        _emit_json(
            {
                "side": space.side,
                "variant": variant.value,
                "source": space.source,
                "dimension": len(space.basis),
                "basis": [[str(c) for c in v.coeffs] for v in space.basis],
                "denominators_vanish_only_at_zero": not flagged,
            }
        )
        return 0
    print(
        f"{space.side} integral space (variant {variant.value}, {space.source}), "
        f"dimension {len(space.basis)}:"
    )
    for v in space.basis:
        print(f"  {v}")
    if flagged:
        print("warning: denominators with roots at nonzero b:")
        for c in flagged:
            print(f"  {c}")
    return 0


def _dispatch(args) -> int:
    fmt = _resolve_format(args)
    variant = Variant(args.variant)
    b_value = None
    if args.b_value is not None:
        b_value = parse_gaussian(args.b_value)
        if not b_value:
            raise ZeroParameter("the parameter b must be nonzero")

    if args.command == "check":
        return _cmd_check(args, fmt, variant, b_value)
    if args.command == "table":
        return _cmd_table(fmt)
    if args.command == "integrals":
        return _cmd_integrals(args, fmt, variant, b_value)

    if args.command == "mul":
        x = parse_element(args.left)
        y = parse_element(args.right)
        if b_value is not None:
            x = x.eval(b_value)
            y = y.eval(b_value)
        result = x * y
    elif args.command == "eval":
        result = parse_element(args.expr)
        if b_value is not None:
            result = result.eval(b_value)
    else:
        maps = build_structure(variant)
        element = parse_element(args.expr)
        if b_value is not None:
            maps = maps_eval(maps, b_value)
            element = element.eval(b_value)
        result = _MAP_COMMANDS[args.command](maps, element)

    if fmt == "json":
        _emit_json({"result": str(result)})
    else:
        print(result)
    return 0


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return _dispatch(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except _USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
