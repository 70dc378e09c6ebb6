"""Command-line front end: ``bqft <command> ...``.

Exit status is 0 on success, 1 on a domain error (bad table, bad code,
failed check) and 2 on a usage error.
"""
import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import data_path
from .arrow import AlgebraElement
from .biquandle import (BiquandleError, cyclic_group_table, enumerate_biquandles,
                        load_biquandle, make_alexander, make_conjugation,
                        make_constant_action, symmetric_group_table)
from .enhance import EnhancementError, enhancement, linking_element, linking_number
from .gauss import GaussCodeError, parse_gauss_code
from .labeling import LabelingError, counting_invariant, enumerate_labelings, format_labeling
from .polyak import polyak_basis, verify_invariance


class CliError(Exception):
    pass


@dataclass
class KnotTableEntry:
    name: str
    gauss_code: str
    expected: dict = field(default_factory=dict)
    line: int = 0


def load_knot_table(path):
    entries, names = [], set()
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise CliError(f"{path}:{lineno}: expected name<TAB>gauss_code")
            name, code = parts[0].strip(), parts[1].strip()
            if name in names:
                raise CliError(f"{path}:{lineno}: duplicate name {name!r}")
            names.add(name)
            expected = {}
            if len(parts) > 2 and parts[2].strip():
                try:
                    expected = json.loads(parts[2])
                except json.JSONDecodeError as exc:
                    raise CliError(f"{path}:{lineno}: bad expectations JSON: {exc}") from None
            try:
                parse_gauss_code(code)
            except GaussCodeError as exc:
                raise CliError(f"{path}:{lineno}: {exc}") from None
            entries.append(KnotTableEntry(name, code, expected, lineno))
    return entries


def resolve_biquandle(name):
    """A biquandle from a file path, or the name of a shipped table."""
    path = Path(name)
    if not path.exists():
        shipped = data_path(name if name.endswith(".bq") else name + ".bq")
        if not shipped.exists():
            raise CliError(f"no biquandle file {name!r}")
        path = shipped
    try:
        return load_biquandle(path)
    except BiquandleError as exc:
        raise CliError(f"{path}: {exc}") from None


def _code(text):
    try:
        return parse_gauss_code(text)
    except GaussCodeError as exc:
        raise CliError(f"gauss code {text!r}: {exc}") from None


def _emit(args, obj, text):
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def cmd_biquandle(args):
    if args.action == "validate":
        b = resolve_biquandle(args.file)
        _emit(args, {"valid": True, "size": b.n, "quandle": b.is_quandle()},
              f"valid biquandle with {b.n} elements")
        return 0
    found = _generate(args.kind, args.params, args.k)
    _emit(args, [{"over": b.over_table, "under": b.under_table} for b in found],
          "\n".join(b.to_text() for b in found).rstrip("\n"))
    return 0


def _generate(kind, params, k):
    try:
        if kind == "sweep":
            return enumerate_biquandles(int(params[0]) if params else 2)
        if kind == "alexander":
            if len(params) != 3:
                raise CliError("gen alexander needs M T S")
            return [make_alexander(*map(int, params))]
        if kind == "constant":
            return [make_constant_action([int(v) for v in params])]
        if len(params) != 1 or params[0][:1] not in ("S", "Z") or not params[0][1:].isdigit():
            raise CliError("gen conj needs a group such as S3 or Z4")
        m = int(params[0][1:])
        table = symmetric_group_table(m) if params[0][0] == "S" else cyclic_group_table(m)
        return [make_conjugation(table, k)]
    except ValueError as exc:
        raise CliError(f"gen {kind}: {exc}") from None


def cmd_labelings(args):
    d = _code(args.code)
    b = resolve_biquandle(args.biquandle)
    if args.action == "count":
        n = counting_invariant(d, b)
        _emit(args, {"counting": n}, str(n))
    else:
        labs = enumerate_labelings(d, b)
        _emit(args, [list(f) for f in labs], "\n".join(format_labeling(f) for f in labs))
    return 0


def cmd_polyak(args):
    b = resolve_biquandle(args.biquandle)
    p = polyak_basis(b, args.degree, args.components)
    if args.action == "verify":
        report = verify_invariance(p, args.trials, args.seed)
        n_fail = len(report["failures"])
        _emit(args, report, f"trials {report['trials']}, failures {n_fail}")
        return 1 if n_fail else 0
    out = p.to_json()
    lines = [f"dim A = {p.dim_arrow}", f"relation rank = {p.relation_rank}",
             f"dim P = {p.dim}"]
    if args.oracle:
        from .linalg import rank
        from .oracle import global_relation_stack
        g = rank(global_relation_stack(b, args.degree, args.components))
        out["oracle_rank"] = g
        lines.append(f"global move-difference rank = {g}")
    for i, v in enumerate(p.vectors):
        lines.append(f"P[{i}] = {v}")
    _emit(args, out, "\n".join(lines))
    return 0


def _element(args, b, c):
    if args.element is not None:
        try:
            return AlgebraElement.from_json(args.element)
        except (ValueError, KeyError, TypeError) as exc:
            raise CliError(f"bad --element: {exc}") from None
    if args.linking:
        return linking_element(b)
    p = polyak_basis(b, args.degree, c)
    if not 0 <= args.element_index < p.dim:
        raise CliError(f"element index {args.element_index} out of range 0..{p.dim - 1}")
    return p.element(args.element_index)


def cmd_enhance(args):
    b = resolve_biquandle(args.biquandle)
    if args.mode == "table":
        if not args.knots:
            raise CliError("enhance table needs --knots")
        rows = []
        cache = {}
        for e in load_knot_table(args.knots):
            d = _code(e.gauss_code)
            c = d.n_circles
            if c not in cache:
                cache[c] = _element(args, b, c)
            try:
                v = enhancement(d, b, cache[c], args.degree)
            except EnhancementError as exc:
                rows.append({"name": e.name, "skipped": str(exc)})
                continue
            rows.append({"name": e.name, **v.to_json()})
        _emit(args, rows, "\n".join(
            f"{r['name']}\t{r.get('polynomial', 'skipped')}" for r in rows))
        return 0
    if args.gauss is None:
        raise CliError("enhance needs --gauss")
    d = _code(args.gauss)
    v = enhancement(d, b, _element(args, b, d.n_circles), args.degree)
    _emit(args, v.to_json(), v.render())
    return 0


def cmd_verify(args):
    """Check the shipped regression table against its recorded expectations."""
    from .enhance import parity_element
    tables = {name: resolve_biquandle(name) for name in ("fox3", "X1", "X2")}
    x1, x2 = tables["X1"], tables["X2"]
    parity = parity_element(polyak_basis(x2, 1, 1))
    link = linking_element(x1)
    problems, checked = [], 0
    path = args.knots or data_path("knots.tsv")
    for e in load_knot_table(path):
        d = _code(e.gauss_code)
        for key, want in e.expected.items():
            if key in tables:
                got = counting_invariant(d, tables[key])
            elif key == "parity":
                got = enhancement(d, x2, parity, 1).render()
            elif key == "linking":
                got = enhancement(d, x1, link, 1).render()
            elif key == "lk":
                got = list(linking_number(d, 0, 1)[:2])
            else:
                continue
            checked += 1
            if got != want:
                problems.append(f"{e.name} {key}: expected {want}, got {got}")
    for b in tables.values():
        report = verify_invariance(polyak_basis(b, 1, 1), args.trials, args.seed)
        checked += 1
        if report["failures"]:
            problems.append(f"invariance failures: {len(report['failures'])}")
    _emit(args, {"checked": checked, "problems": problems},
          "\n".join(problems + [f"{checked} checks, {len(problems)} problems"]))
    return 1 if problems else 0


def _biquandle_arg(p):
    p.add_argument("--biquandle", required=True,
                   help="table file, or a shipped name: fox3, X1, X2, alexander3")


def build_parser():
    parser = argparse.ArgumentParser(prog="bqft",
                                     description="Biquandle-labeled finite type invariants.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)
    # --json is accepted after the subcommand too
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    def sub_with_json(group, name, **kw):
        return group.add_parser(name, parents=[common], **kw)

    p = sub.add_parser("biquandle", help="validate or generate biquandle tables")
    act = p.add_subparsers(dest="action", required=True)
    v = sub_with_json(act, "validate")
    v.add_argument("file")
    g = sub_with_json(act, "gen")
    g.add_argument("kind", choices=["alexander", "constant", "conj", "sweep"])
    g.add_argument("params", nargs="*",
                   help="alexander: M T S; constant: sigma as 1-based images; "
                        "conj: S<m> or Z<m>; sweep: size (<= 2)")
    g.add_argument("--k", type=int, default=1, help="conjugation power")

    p = sub.add_parser("labelings", help="count or list labelings")
    act = p.add_subparsers(dest="action", required=True)
    for name in ("count", "list"):
        a = sub_with_json(act, name)
        a.add_argument("code")
        _biquandle_arg(a)

    p = sub.add_parser("polyak", help="truncated labeled Polyak algebras")
    act = p.add_subparsers(dest="action", required=True)
    a = sub_with_json(act, "basis")
    _biquandle_arg(a)
    a.add_argument("--degree", type=int, default=1)
    a.add_argument("--components", type=int, default=1)
    a.add_argument("--oracle", action="store_true", help="also report the global oracle rank")
    a = sub_with_json(act, "verify")
    _biquandle_arg(a)
    a.add_argument("--degree", type=int, default=1)
    a.add_argument("--components", type=int, default=1)
    a.add_argument("--trials", type=int, default=100)
    a.add_argument("--seed", type=int, required=True)

    p = sub_with_json(sub, "enhance", help="finite type enhancement of a knot or a table")
    p.add_argument("mode", nargs="?", choices=["table"])
    p.add_argument("--gauss")
    p.add_argument("--knots")
    _biquandle_arg(p)
    p.add_argument("--degree", type=int, default=1)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--element", help="element as JSON")
    which.add_argument("--element-index", type=int, default=0)
    which.add_argument("--linking", action="store_true",
                       help="use the two-component linking element")

    p = sub_with_json(sub, "verify", help="run the shipped regression checks")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--knots")
    return parser


COMMANDS = {"biquandle": cmd_biquandle, "labelings": cmd_labelings,
            "polyak": cmd_polyak, "enhance": cmd_enhance, "verify": cmd_verify}

DOMAIN_ERRORS = (CliError, BiquandleError, GaussCodeError, LabelingError,
                 EnhancementError, OSError)


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "polyak" and (args.degree < 1 or args.components < 1):
        parser.print_usage(sys.stderr)
        print("bqft: error: degree and components must be at least 1", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except DOMAIN_ERRORS as exc:
        print(f"bqft: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
