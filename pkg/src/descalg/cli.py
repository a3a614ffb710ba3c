"""Command-line interface: ``descalg <verb> [options]``.

Verbs: descent, expand, gamma, multiply, table, verify, count.  Output goes
to stdout; diagnostics go to stderr with a nonzero exit status.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .combinatorics import Flavor, enumerate_indices, parse_index
from .descent_algebra import DegreeCapExceeded, check_cap, compute_structure_constants, export_table
from .groups import descent_index, group_order, parse_element
from .ppartition import gamma_flavor, parse_poset
from .qsym import Basis, QSymVector, inner_product
from .series import TruncationMismatch
from .verification import run_suite


class CliError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-f", "--flavor", choices=[f.value for f in Flavor], default="A", help="A, B or S (default A)")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text", help="output format")
    p.add_argument("--json", action="store_const", const="json", dest="format", help="same as --format json")
    p.add_argument("--cap-override", type=int, metavar="N", help="raise the brute-force degree cap")
    return p


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(text)


def _check_degree(index, args) -> None:
    if args.degree is not None and index.n != args.degree:
        raise CliError(f"{index} has degree {index.n}, but -n {args.degree} was given")


def cmd_descent(args) -> int:
    pi = parse_element(args.window, args.flavor)
    index = descent_index(pi, args.flavor)
    _emit(args, str(index), {"flavor": args.flavor, "window": list(pi.window), "index": list(index.parts)})
    return 0


def cmd_expand(args) -> int:
    index = parse_index(args.index, args.flavor)
    _check_degree(index, args)
    series = QSymVector.basis_element(index, args.basis).expand(args.truncation)
    _emit(
        args,
        str(series),
        {"flavor": args.flavor, "basis": args.basis, "index": list(index.parts), "N": args.truncation,
         "terms": series.to_json()},
    )
    return 0


def cmd_gamma(args) -> int:
    if (args.window is None) == (args.poset is None):
        raise CliError("give exactly one of a window or --poset FILE")
    if args.poset is not None:
        with open(args.poset) as fh:
            source = parse_poset(fh.read(), type_b=args.flavor != "A")
    else:
        source = parse_element(args.window, args.flavor)
    series = gamma_flavor(source, args.truncation, args.flavor)
    _emit(args, str(series), {"flavor": args.flavor, "N": args.truncation, "terms": series.to_json()})
    return 0


def cmd_multiply(args) -> int:
    left = parse_index(args.left, args.flavor)
    right = parse_index(args.right, args.flavor)
    _check_degree(left, args)
    _check_degree(right, args)
    if left.n != right.n:
        raise CliError(f"degrees differ: {left} has {left.n}, {right} has {right.n}")
    # u_left * u_right has the coefficients of F_right * F_left
    product = inner_product(right, left, args.flavor, cap=args.cap_override)
    _emit(args, str(product), product.to_json())
    return 0


def cmd_table(args) -> int:
    if args.degree is None:
        raise CliError("table needs -n/--degree")
    table = compute_structure_constants(args.flavor, args.degree, cap=args.cap_override)
    fmt = "json" if args.format == "json" else "csv"
    sys.stdout.write(export_table(table, fmt, include_zero=args.include_zero))
    return 0


def cmd_verify(args) -> int:
    flavors = [Flavor.coerce(args.flavor)] if args.only else None
    results = []
    for result in run_suite(flavors, slow=args.slow):
        results.append(result)
        if args.format != "json":
            print(result.line(), flush=True)
    if args.format == "json":
        print(json.dumps([vars(r) for r in results], indent=1))
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed", file=sys.stderr)
        return 1
    return 0


def cmd_count(args) -> int:
    if args.degree is None:
        raise CliError("count needs -n/--degree")
    count = len(enumerate_indices(args.flavor, args.degree))
    payload = {"flavor": args.flavor, "n": args.degree, "indices": count}
    if args.group:
        group = "A" if args.flavor == "A" else "B"
        payload["group_order"] = group_order(args.degree, group)
        text = f"{count} {payload['group_order']}"
    else:
        text = str(count)
    _emit(args, text, payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="descalg", description="Descent algebras and quasisymmetric functions.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("descent", parents=[common], help="descent index of a group element")
    p.add_argument("window", help='one-line window, e.g. "3,4,5,2,6,1"')
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("expand", parents=[common], help="expand a basis element as a truncated series")
    p.add_argument("index", help='composition, e.g. "2,1"')
    p.add_argument("--basis", choices=[b.value for b in Basis], default="fundamental")
    p.add_argument("-n", "--degree", type=int)
    p.add_argument("-N", "--truncation", type=int, default=4, help="variable bound (default 4)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("gamma", parents=[common], help="P-partition generating function")
    p.add_argument("window", nargs="?", help="group element whose chain poset is used")
    p.add_argument("--poset", metavar="FILE", help="poset file: n, then 'i < j' lines")
    p.add_argument("-N", "--truncation", type=int, default=4, help="variable bound (default 4)")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("multiply", parents=[common], help="product of two descent classes")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-n", "--degree", type=int)
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("table", parents=[common], help="structure-constant table (csv or json)")
    p.add_argument("-n", "--degree", type=int)
    p.add_argument("--include-zero", action="store_true", help="write zero rows too")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run the brute-force identity checks")
    p.add_argument("--only", action="store_true", help="restrict the flavor-specific checks to -f")
    p.add_argument("--slow", action="store_true", help="include the larger type B checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", parents=[common], help="number of indices of a degree")
    p.add_argument("-n", "--degree", type=int)
    p.add_argument("--group", action="store_true", help="also print the group order")
    p.set_defaults(func=cmd_count)
    return parser


# a signed window such as "-3,4,-1" would otherwise be read as an option
_SIGNED_LIST = re.compile(r"^-\d+(,\s*-?\d+)+$")


def _protect_signed_lists(argv: list[str]) -> list[str]:
    return [" " + a if _SIGNED_LIST.match(a) else a for a in argv]


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_protect_signed_lists(argv))
    try:
        if hasattr(args, "degree") and args.degree is not None:
            if args.degree < 1:
                raise CliError("degree must be positive")
            if args.verb in ("table", "multiply"):
                check_cap(args.flavor, args.degree, args.cap_override)
        return args.func(args)
    except (CliError, DegreeCapExceeded, TruncationMismatch, OverflowError, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"descalg {args.verb}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
