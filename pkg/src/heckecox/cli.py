"""Command line interface: ``heckecox table|value|verify|dfamily|fourier``.

Exit codes: 0 success, 1 well-formed request for something that does not
exist (e.g. a label that is not a character of the type), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable

from .coxvalues import CoxValue, cox_table, cox_value, epsilon_sum_check
from .fourier import FIXTURES, FixtureError, fourier_matrix, load_fixture, m_gamma, omega
from .heckerep import ORACLE_MAX_RANK, RelationError, bn_extend, oracle_compare, seminormal_rep, trace_word
from .labels import LabelError, TypeD, format_label, parse_label, partitions
from .laurent import lh_parse
from .symbols import (
    FOURIER_MATRIX,
    d_epsilon_via_fourier,
    d_family_symbols,
    family_size,
    z_set,
)
from .weyl import (
    WeylType,
    build_root_system,
    coxeter_conjugacy_check,
    coxeter_element,
    coxeter_number,
    element_order,
    parse_type,
)

__all__ = ["main", "render_rows", "parse_rows", "build_parser"]

FORMATS = ("text", "csv", "json")
SUITES = ("orthogonality", "oracle", "dfamily", "fourier", "relations", "conjugacy", "coxeter")
EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")

CONVENTIONS = """\
label grammar:
  partitions      4,1,1   (parts in any order; '-' is the empty partition)
  type B, D       alpha|beta, e.g. '-|2,1,1'; type D split labels end in + or -
  exceptional     d,e with an optional ' or '' mark, e.g. 4096,12 or 1,3''

conventions:
  type A: the hook with first row k is (k,1^(n+1-k)); its value is
          (-1)^(n+1+k) u^(k-1). Note the leg has n+1-k ones; a form with
          n+1+k ones is not a partition of n+1.
  type B: the index character is (-|n) and the sign character is (1^n|-).
          Readers using the opposite orientation swap the two halves.
"""

Row = tuple[str, CoxValue]


# -- table rendering -----------------------------------------------------------


def render_rows(rows: Iterable[Row], fmt: str) -> str:
    rows = list(rows)
    if fmt == "json":
        payload = [
            {"label": lab, "epsilon": v.epsilon, "vexp": v.vexp, "value": str(v)} for lab, v in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", "epsilon", "vexp", "value"])
        for lab, v in rows:
            writer.writerow([lab, v.epsilon, v.vexp, str(v)])
        return buf.getvalue()
    if fmt == "text":
        width = max([len("label")] + [len(lab) for lab, _ in rows])
        lines = [f"{'label':<{width}}  value"]
        lines += [f"{lab:<{width}}  {v}" for lab, v in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_rows(text: str, fmt: str) -> list[Row]:
    """Inverse of :func:`render_rows` for csv and json."""
    out = []
    if fmt == "json":
        for rec in json.loads(text):
            v = CoxValue(int(rec["epsilon"]), int(rec["vexp"]))
            if CoxValue.from_laurent(lh_parse(rec["value"])) != v:
                raise ValueError(f"inconsistent row {rec}")
            out.append((rec["label"], v))
    elif fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header != ["label", "epsilon", "vexp", "value"]:
            raise ValueError(f"unexpected csv header {header}")
        for lab, eps, vexp, value in reader:
            v = CoxValue(int(eps), int(vexp))
            if CoxValue.from_laurent(lh_parse(value)) != v:
                raise ValueError(f"inconsistent row {lab}")
            out.append((lab, v))
    else:
        raise ValueError(f"cannot parse format {fmt!r}")
    return out


# -- verification suites -------------------------------------------------------

Check = tuple[bool, str]


def format_label_part(lam) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def _suite_orthogonality(args) -> list[Check]:
    checks = []
    for family, lo in (("A", 1), ("B", 2), ("D", 4)):
        for n in range(lo, args.max_rank + 1):
            total, h, ok = epsilon_sum_check(WeylType(family, n))
            checks.append((ok, f"{family}{n}: sum eps^2 = {total}, h = {h}"))
    for name in EXCEPTIONAL:
        total, h, ok = epsilon_sum_check(parse_type(name))
        checks.append((ok, f"{name}: sum eps^2 = {total}, h = {h}"))
    return checks


def _oracle_types(args) -> list[WeylType]:
    families = [args.type] if args.type else ["A", "B"]
    out = []
    for f in families:
        lo = 1 if f == "A" else 2
        ranks = [args.rank] if args.rank else range(lo, ORACLE_MAX_RANK + 1)
        out += [WeylType(f, n) for n in ranks]
    return out


def _suite_oracle(args) -> list[Check]:
    checks = []
    for t in _oracle_types(args):
        checks += oracle_compare(t).checks()
    return checks


def _suite_dfamily(args) -> list[Check]:
    checks = []
    for n in range(4, max(args.max_rank, 4) + 1):
        t = WeylType("D", n)
        for k in range(2, n - 1):
            for which, label in (
                ("X1", TypeD((1,), (k,) + (1,) * (n - k - 1))),
                ("X2", TypeD((), (k, 2) + (1,) * (n - k - 2))),
            ):
                eps = d_epsilon_via_fourier(n, k, which)
                closed = cox_value(t, label).epsilon
                checks.append((eps == closed, f"D{n} k={k} {which}: fourier eps = {eps:+d}, closed form eps = {closed:+d}"))
    return checks


def _square(m):
    size = len(m)
    return [[sum((m[i][k] * m[k][j] for k in range(size)), Fraction(0)) for j in range(size)] for i in range(size)]


def _suite_fourier(args) -> list[Check]:
    checks = []
    z2 = fourier_matrix(load_fixture("z2"))
    same = all(z2[i][j] == FOURIER_MATRIX[i][j] for i in range(4) for j in range(4))
    checks.append((same, "z2: computed Fourier matrix equals the type-D family matrix"))
    names = [args.group_fixture] if args.group_fixture else list(FIXTURES)
    for name in names:
        m = fourier_matrix(load_fixture(name))
        sq = _square(m)
        ok = all(sq[i][j] == (1 if i == j else 0) for i in range(len(m)) for j in range(len(m)))
        checks.append((ok, f"{name}: Fourier matrix of size {len(m)} squares to the identity"))
    return checks


def _suite_relations(args) -> list[Check]:
    checks = []
    top = min(args.max_rank, ORACLE_MAX_RANK)
    for n in range(1, top + 1):
        for lam in partitions(n + 1):
            try:
                rep = seminormal_rep(lam, n)
                checks.append((True, f"A{n} {format_label_part(lam)}: dim {rep.dim}, relations hold"))
            except RelationError as exc:
                checks.append((False, f"A{n} {format_label_part(lam)}: {exc}"))
    for n in range(2, top + 1):
        for lam in partitions(n):
            for scalar in ("u", "-1"):
                try:
                    bn_extend(seminormal_rep(lam, n - 1), scalar)
                    checks.append((True, f"B{n} ext {format_label_part(lam)} T_t={scalar}: relations hold"))
                except RelationError as exc:
                    checks.append((False, f"B{n} ext {format_label_part(lam)} T_t={scalar}: {exc}"))
    return checks


def _suite_conjugacy(args) -> list[Check]:
    checks = []
    top = min(args.max_rank, 4)
    for n in range(1, top + 1):
        for lam in partitions(n + 1):
            rep = seminormal_rep(lam, n)
            values = {trace_word(rep, order) for order in permutations(range(1, n + 1))}
            checks.append((len(values) == 1, f"A{n} {format_label_part(lam)}: {len(values)} distinct trace(s) over all orderings"))
    return checks


def _suite_coxeter(args) -> list[Check]:
    checks = []
    types = [WeylType(f, n) for f, lo in (("A", 1), ("B", 2), ("D", 4)) for n in range(lo, min(args.max_rank, 8) + 1)]
    types += [parse_type(name) for name in EXCEPTIONAL]
    for t in types:
        sys_ = build_root_system(t)
        order = element_order(sys_, coxeter_element(t))
        checks.append((order == coxeter_number(t), f"{t}: Coxeter element order {order}, h = {coxeter_number(t)}"))
    for name in ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2"):
        ok = coxeter_conjugacy_check(parse_type(name))
        checks.append((ok, f"{name}: all Coxeter elements conjugate"))
    return checks


_SUITES: dict[str, Callable] = {
    "orthogonality": _suite_orthogonality,
    "oracle": _suite_oracle,
    "dfamily": _suite_dfamily,
    "fourier": _suite_fourier,
    "relations": _suite_relations,
    "conjugacy": _suite_conjugacy,
    "coxeter": _suite_coxeter,
}


# -- commands --------------------------------------------------------------------


def _type_arg(parser: argparse.ArgumentParser, text: str) -> WeylType:
    try:
        return parse_type(text)
    except ValueError as exc:
        parser.error(str(exc))


def cmd_table(args, parser) -> int:
    t = _type_arg(parser, args.type)
    rows = [(format_label(lab), v) for lab, v in cox_table(t)]
    if args.nonzero:
        rows = [r for r in rows if r[1].epsilon]
    sys.stdout.write(render_rows(rows, args.format))
    return 0


def cmd_value(args, parser) -> int:
    t = _type_arg(parser, args.type)
    try:
        label = parse_label(t, args.label)
    except LabelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.error(f"cannot parse label {args.label!r}: {exc}")
    try:
        print(cox_value(t, label))
    except LabelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args, parser) -> int:
    if args.type and args.type not in ("A", "B"):
        parser.error("--type must be A or B for the oracle suite")
    if args.rank is not None and args.type is None:
        parser.error("--rank needs --type")
    if args.rank is not None and not (1 if args.type == "A" else 2) <= args.rank <= ORACLE_MAX_RANK:
        parser.error(f"--rank must be at most {ORACLE_MAX_RANK} (and at least 2 for type B)")
    try:
        checks = _SUITES[args.suite](args)
    except FixtureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    failed = 0
    for ok, line in checks:
        print(f"{'PASS' if ok else 'FAIL'} {line}")
        failed += not ok
    print(f"{args.suite}: {len(checks) - failed}/{len(checks)} passed")
    return 0 if failed == 0 else 1


def cmd_dfamily(args, parser) -> int:
    n, k = args.n, args.k
    if n < 4 or not 2 <= k <= n - 2:
        parser.error(f"need n >= 4 and 2 <= k <= n-2, got n={n}, k={k}")
    fam = d_family_symbols(n, k)
    for name, x in zip(("X1", "X2", "X3", "X4"), fam.symbols):
        print(f"{name} = {x}")
    x1 = fam.symbols[0]
    print(f"Z = {{{','.join(map(str, sorted(z_set(x1))))}}}")
    print(f"family size = {family_size(x1)}")
    t = WeylType("D", n)
    for which, label in (
        ("X1", TypeD((1,), (k,) + (1,) * (n - k - 1))),
        ("X2", TypeD((), (k, 2) + (1,) * (n - k - 2))),
    ):
        eps = d_epsilon_via_fourier(n, k, which)
        closed = cox_value(t, label)
        print(f"eps({which}) = {eps:+d}   closed form {format_label(label)}: {closed}")
    return 0


def cmd_fourier(args, parser) -> int:
    try:
        g = load_fixture(args.group_fixture)
    except (FixtureError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    classes = m_gamma(g)
    names = [f"[{g.name(c.x)},{c.sigma}]" for c in classes]
    print(f"|M| = {len(classes)}")
    width = max(len(s) for s in names)
    matrix = fourier_matrix(g)
    cells = [[str(x) for x in row] for row in matrix]
    cw = max(len(s) for row in cells for s in row)
    print(" " * width + "  " + " ".join(f"{s:>{cw}}" for s in names))
    for name, row in zip(names, cells):
        print(f"{name:<{width}}  " + " ".join(f"{s:>{max(cw, len(n))}}" for s, n in zip(row, names)))
    for name, c in zip(names, classes):
        print(f"omega{name} = {omega(c, g, args.exceptional)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckecox",
        description="Exact values of Iwahori-Hecke algebra characters on T_w, w a Coxeter element.",
        epilog=CONVENTIONS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="all character values for a type",
                       epilog=CONVENTIONS, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("type", help="Weyl type, e.g. A4, B5, D6, G2, F4, E6, E7, E8")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--nonzero", action="store_true", help="only rows with a non-zero value")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("value", help="value of one character",
                       epilog=CONVENTIONS, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("type")
    p.add_argument("label")
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-rank", type=int, default=12)
    p.add_argument("--type", choices=("A", "B"), help="oracle suite: restrict to one family")
    p.add_argument("--rank", type=int, help="oracle suite: restrict to one rank")
    p.add_argument("--group-fixture", help="fourier suite: fixture name or file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dfamily", help="symbols and signs of a four-element type-D family")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_dfamily)

    p = sub.add_parser("fourier", help="Fourier matrix of M(G) for a group fixture")
    p.add_argument("--group-fixture", default="z2",
                   help=f"shipped fixture ({', '.join(FIXTURES)}) or path to a fixture file")
    p.add_argument("--exceptional", action="store_true", help="use the exceptional-family root of unity")
    p.set_defaults(func=cmd_fourier)
    return parser


def _protect_labels(argv: list[str]) -> list[str]:
    """Labels such as ``-|2,1`` start with '-' but are positionals, not options."""
    if "--" in argv:
        return argv
    for i, a in enumerate(argv):
        if a.startswith("-") and ("|" in a or a == "-"):
            return argv[:i] + ["--"] + argv[i:]
    return argv


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_protect_labels(argv))
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
