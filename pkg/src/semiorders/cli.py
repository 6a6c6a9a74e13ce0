"""Command-line front end: counting, enumeration, format mapping, series,
trunk trees, and the verification suites.

Exit codes: 0 success, 1 usage error, 2 verification mismatch.  Output is
deterministic; enumeration follows lexicographic vector order.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from itertools import permutations

from . import bijection, core, counting, labeled, oracle, trees, trunk, verify


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; usage errors are 1 here
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="semiorders", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count semiorders with n elements")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--height", type=int, required=True, help="length bound h")
    count.add_argument("--at-most", action="store_true", help="count length <= h instead of exactly h")
    count.add_argument("--labeled", action="store_true")
    count.add_argument("--mode", choices=counting.METHODS, default="convolution",
                       help="unlabeled route; 'closed' always reports the at-most count")
    count.add_argument("--check", action="store_true", help="cross-check against the series route")

    enum = sub.add_parser("enumerate", help="list all n-element semiorders")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--max-height", type=int, default=None,
                      help="keep only semiorders of length (longest-chain edges) <= this")
    enum.add_argument("--format", choices=("vector", "tree", "dyck"), default="vector")
    enum.add_argument("--force", action="store_true", help="lift the n <= 14 cap")

    mapping = sub.add_parser("map", help="convert between vector, tree, and dyck forms")
    mapping.add_argument("--from", dest="source", choices=("vector", "tree", "dyck"), required=True)
    mapping.add_argument("--to", dest="target", choices=("vector", "tree", "dyck"), required=True)
    mapping.add_argument("--input", required=True)

    series = sub.add_parser("series", help="print counting series coefficients")
    series.add_argument("--height", type=int, required=True)
    series.add_argument("--terms", type=int, required=True, help="number of coefficients, from n = 0")
    series.add_argument("--labeled", action="store_true")
    series.add_argument("--at-most", action="store_true")

    tt = sub.add_parser("trunk-trees", help="distinct trunk trees of a length-<=1 semiorder")
    tt.add_argument("--rho", required=True, help="comma-separated vector")
    tt.add_argument("--count-only", action="store_true")

    ver = sub.add_parser("verify", help="run self-check suites")
    ver.add_argument("--suite", choices=verify.SUITES, default="all")
    ver.add_argument("--max-n", type=int, default=8)
    return parser


def _parse_input(kind: str, text: str) -> core.Semiorder:
    if kind == "vector":
        return core.Semiorder.from_text(text)
    if kind == "tree":
        return bijection.tree_to_semiorder(trees.OrderedTree.from_text(text))
    return bijection.dyck_to_semiorder(trees.DyckPath.from_text(text))


def _render(kind: str, s: core.Semiorder) -> str:
    if kind == "vector":
        return s.to_text()
    if kind == "tree":
        return bijection.semiorder_to_tree(s).to_text()
    return bijection.semiorder_to_dyck(s).to_text()


def _cmd_count(args, out) -> int:
    if args.labeled:
        value = (
            labeled.count_labeled_leq(args.n, args.height)
            if args.at_most
            else labeled.count_labeled_exact(args.n, args.height)
        )
    elif args.mode == "closed" or args.at_most:
        # the closed forms exist only for the at-most family
        value = counting.count_leq(args.n, args.height, args.mode)
    else:
        value = counting.count_exact(args.n, args.height, args.mode)
    if args.check and not args.labeled:
        reference = (
            counting.count_leq(args.n, args.height, "series")
            if args.mode == "closed" or args.at_most
            else counting.count_exact(args.n, args.height, "series")
        )
        if reference != value:
            print(f"cross-check failed: {value} != series {reference}", file=sys.stderr)
            return 2
    print(value, file=out)
    return 0


def _cmd_enumerate(args, out) -> int:
    for s in oracle.enumerate_semiorders(args.n, force=args.force):
        if args.max_height is not None and s.n and s.length > args.max_height:
            continue
        print(_render(args.format, s), file=out)
    return 0


def _cmd_series(args, out) -> int:
    order = args.terms - 1
    if order < 0:
        print("need --terms >= 1", file=sys.stderr)
        return 1
    coefficients = (
        counting.series_leq(args.height, order)
        if args.at_most
        else counting.series_exact(args.height, order)
    )
    if args.labeled:
        coefficients = labeled.substitute_one_minus_exp(coefficients)
    print(",".join(str(c) for c in coefficients), file=out)
    return 0


def _cmd_trunk(args, out) -> int:
    s = core.Semiorder.from_text(args.rho)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if args.count_only:
            print(trunk.count_trunk_trees(s), file=out)
        else:
            m = trunk.upper_count(s)
            shapes = sorted(
                {trunk.trunk_tree(s, sigma).leaf_counts for sigma in permutations(range(1, m + 1))}
            )
            for shape in shapes:
                print(",".join(str(c) for c in shape), file=out)
    for warning in caught:
        if issubclass(warning.category, trunk.HypothesisViolatedWarning):
            print(f"note: {warning.message}", file=sys.stderr)
    return 0


def _cmd_map(args, out) -> int:
    print(_render(args.target, _parse_input(args.source, args.input)), file=out)
    return 0


def _cmd_verify(args, out) -> int:
    lines, passed = verify.run_suite(args.suite, args.max_n)
    for line in lines:
        print(line, file=out)
    return 0 if passed else 2


def run(argv, out=None) -> int:
    """Parse ``argv`` (no program name) and execute; returns the exit code."""
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    handlers = {
        "count": _cmd_count,
        "enumerate": _cmd_enumerate,
        "map": _cmd_map,
        "series": _cmd_series,
        "trunk-trees": _cmd_trunk,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args, out)
    except (ValueError, ArithmeticError) as exc:
        print(f"semiorders: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
