"""Command-line front end.

Each verb prints its result as plain text, one result per line.  Exit codes:
0 success, 1 domain error, 2 parse error.
"""
import argparse
import sys
from math import factorial

from . import congruence, green, monoid, window
from .core import FinPointSet, box_points
from .errors import CofisoError, ParseError, SliceTooLarge
from .monoid import format_element, multiply, natural_leq, slice_elements
from .permutations import format_perm
from .syntax import parse_element, parse_point, parse_point_set

MAX_TABLE = 10 ** 4
DEFAULT_SEED = 0


def _bool(value):
    return "true" if value else "false"


def _check_slice_size(n, k):
    # n! * 2^k without building 2^k for huge k
    if k > MAX_TABLE.bit_length() or factorial(n) * 2 ** k > MAX_TABLE:
        raise SliceTooLarge(f"slice with n={n} and {k} points exceeds {MAX_TABLE} elements")


def _dot_quote(text):
    return '"' + text.replace('"', '\\"') + '"'


def hasse_dot(elements):
    """DOT for the covering relation of the natural order on ``elements``."""
    index = {a: i for i, a in enumerate(elements)}
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for a, i in index.items():
        lines.append(f"  n{i} [label={_dot_quote(format_element(a))}];")
    present = set(elements)
    for a in elements:
        # a is covered by b iff b drops exactly one excluded point of a
        for p in a.excluded:
            b = monoid.Element(a.sigma, FinPointSet._trusted(a.excluded.members - {p}, a.n))
            if b in present:
                lines.append(f"  n{index[a]} -> n{index[b]};")
    lines.append("}")
    return "\n".join(lines)


def dclass_dot(members):
    """D-class as clusters of R-classes (rows of the eggbox)."""
    rows = {}
    for a in members:
        rows.setdefault(a.excluded.points, []).append(a)
    lines = ["graph dclass {", "  node [shape=box];"]
    k = 0
    for r, key in enumerate(sorted(rows)):
        lines.append(f"  subgraph cluster_r{r} {{")
        lines.append(f"    label={_dot_quote('R: excluded ' + str(rows[key][0].excluded))};")
        for a in sorted(rows[key]):
            lines.append(f"    n{k} [label={_dot_quote(format_element(a))}];")
            k += 1
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines)


def cayley_table(n, m):
    box = box_points(n, m)
    _check_slice_size(n, len(box))
    elements = sorted(slice_elements(box, n))
    index = {a: i for i, a in enumerate(elements)}
    lines = [f"# S({n},{m}): {len(elements)} elements"]
    lines += [f"{i} {format_element(a)}" for i, a in enumerate(elements)]
    lines.append("")
    for a in elements:
        lines.append(" ".join(str(index[multiply(a, b)]) for b in elements))
    return "\n".join(lines)


def _write_dot(path, text, out):
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        out.append(text)


def _cmd_mul(args, out):
    elements = [parse_element(t) for t in args.elements]
    result = elements[0]
    for b in elements[1:]:
        result = multiply(result, b)
    out.append(format_element(result))


def _cmd_inv(args, out):
    out.append(format_element(monoid.inverse(parse_element(args.element))))


def _cmd_nf(args, out):
    a = parse_element(args.element)
    f = monoid.factorize(a)
    out.append(format_element(a))
    out.append(f"unit {format_element(f.unit)}")
    out.append(f"left {format_element(f.left_idem)}")
    out.append(f"right {format_element(f.right_idem)}")


def _cmd_order(args, out):
    out.append(_bool(natural_leq(parse_element(args.a), parse_element(args.b))))


def _cmd_green(args, out):
    out.append(_bool(green.related(args.rel, parse_element(args.a), parse_element(args.b))))


def _cmd_dclass(args, out):
    a = parse_element(args.element)
    members = sorted(green.d_class(a))
    out.append(str(len(members)))
    if args.enumerate:
        out.extend(format_element(b) for b in members)
    if args.dot:
        _write_dot(args.dot, dclass_dot(members), out)


def _cmd_quotient(args, out):
    out.append(format_perm(congruence.quotient_project(parse_element(args.element))))


def _cmd_cmg(args, out):
    out.append(_bool(congruence.cmg_related(parse_element(args.a), parse_element(args.b))))


def _cmd_maxabove(args, out):
    out.append(format_element(monoid.max_above(parse_element(args.element))))


def _cmd_encode(args, out):
    out.append(str(congruence.encode(parse_element(args.element))))


def _cmd_hasse(args, out):
    points = parse_point_set(args.points, args.n)
    if args.n is None and not points:
        raise ParseError("give --n for an empty point list", 1, args.points)
    _check_slice_size(points.n, len(points))
    elements = sorted(slice_elements(points))
    _write_dot(args.dot, hasse_dot(elements), out)


def _cmd_cayley(args, out):
    out.append(cayley_table(args.n, args.box))


def _cmd_verify(args, out):
    reports = window.run_sweeps(args.n, args.box, args.cases, args.seed)
    out.append(f"verify n={args.n} box={args.box} cases={args.cases} seed={args.seed}")
    failed = False
    for r in reports:
        status = "FAIL" if r.failures else "PASS"
        failed = failed or bool(r.failures)
        out.append(f"{r.name}: {status} ({r.checked} checked, {r.skipped} skipped)")
        out.extend(f"  counterexample: {c}" for c in r.failures)
    return 1 if failed else 0


def _cmd_m1(args, out):
    x = parse_point(args.point)
    m = args.box if args.box is not None else max(x) + 1
    out.append(str(window.count_unit_neighbors(x, m)))


def _cmd_scan25(args, out):
    hits = window.integer_terms_scan(args.x, args.y, args.bound)
    out.append(" ".join(str(i) for i in hits))


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="cofiso", description="Cofinite partial isometries of N^n.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("mul", help="multiply elements left to right")
    p.add_argument("elements", nargs="+")
    p.set_defaults(func=_cmd_mul)

    for verb, func, help_ in [
        ("inv", _cmd_inv, "inverse element"),
        ("nf", _cmd_nf, "normal form and unit/idempotent factorization"),
        ("quotient", _cmd_quotient, "image in S_n"),
        ("maxabove", _cmd_maxabove, "maximum element above"),
        ("encode", _cmd_encode, "semidirect-product pair <sigma|range complement>"),
    ]:
        p = sub.add_parser(verb, help=help_)
        p.add_argument("element")
        p.set_defaults(func=func)

    for verb, func, help_ in [
        ("order", _cmd_order, "is a <= b in the natural order"),
        ("cmg", _cmd_cmg, "are a and b related by the minimum group congruence"),
    ]:
        p = sub.add_parser(verb, help=help_)
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(func=func)

    p = sub.add_parser("green", help="decide a Green's relation")
    p.add_argument("--rel", required=True, choices=[r.value for r in green.GreenRelation])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_green)

    p = sub.add_parser("dclass", help="size (and members) of the D-class")
    p.add_argument("element")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=_cmd_dclass)

    p = sub.add_parser("hasse", help="DOT Hasse diagram of elements excluding subsets of POINTS")
    p.add_argument("points", help="point list such as {(1,2);(2,1)}")
    p.add_argument("--n", type=int)
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser("cayley", help="multiplication table of the box submonoid S(n,m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--box", type=_positive, required=True)
    p.set_defaults(func=_cmd_cayley)

    p = sub.add_parser("verify", help="randomized oracle sweeps")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--box", type=_positive, default=4)
    p.add_argument("--cases", type=_positive, default=200)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("m1", help="count lattice points at distance 1")
    p.add_argument("point")
    p.add_argument("--box", type=_positive)
    p.set_defaults(func=_cmd_m1)

    p = sub.add_parser("scan25", help="indices i <= N with (x+i)^2 + y a perfect square")
    p.add_argument("x", type=_positive)
    p.add_argument("y", type=_positive)
    p.add_argument("bound", type=_positive)
    p.set_defaults(func=_cmd_scan25)
    return parser


def run(argv):
    """Execute one command; returns (output text, exit code)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return "", int(exc.code or 0)
    out = []
    try:
        code = args.func(args, out) or 0
    except ParseError as exc:
        return f"parse error: {exc}", 2
    except CofisoError as exc:
        return f"error: {exc}", 1
    return "\n".join(out), code


def main(argv=None):
    text, code = run(sys.argv[1:] if argv is None else argv)
    if text:
        is_error = text.startswith(("error:", "parse error:"))
        print(text, file=sys.stderr if is_error else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
