"""Command-line interface: ``irrsub VERB [options]``.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2 on
bad input (malformed weight, unknown group or subgroup, illegal p).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import atlas
from .atlas import CHARACTERISTICS, ExpectedRow, levi_subgroups, load_db, maximal_subgroups, row_embedding
from .charring import tensor, weyl_character, weyl_dim
from .embed import restrict_character
from .modular import UnknownCharacterError, decompose, evaluate, irr_char, irr_dim
from .notation import format_weight, parse_weight
from .rootsys import GroupShape
from . import verify as vf


class InputError(Exception):
    pass


def _shape(text: str) -> GroupShape:
    try:
        return GroupShape.parse(text)
    except (ValueError, KeyError) as exc:
        raise InputError(f"unknown group {text!r}: {exc}") from None


def _weight(shape: GroupShape, text: str) -> tuple:
    try:
        return parse_weight(shape, text)
    except (ValueError, KeyError) as exc:
        raise InputError(f"malformed weight {text!r}: {exc}") from None


def _p(value: str) -> int:
    try:
        p = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"p must be 0 or a prime, got {value!r}") from None
    if p < 0 or (p > 0 and (p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)))):
        raise argparse.ArgumentTypeError(f"p must be 0 or a prime, got {p}")
    return p


def _twists(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        key, sep, val = part.partition("=")
        if not sep or not key.strip().isalpha() or not val.strip().isdigit():
            raise InputError(f"cannot read twists {text!r}; expected e.g. r=1,s=2")
        out[key.strip()] = int(val)
    return out


def _db(args):
    return load_db(args.db or None, "strict" if args.strict else "permissive")


def _emit(args, text: str, doc) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _subgroup_row(args, group: str) -> ExpectedRow:
    """An ad hoc row for --to/--factors/--via."""
    reg = atlas.REGISTRY.get(group, {})
    if args.to not in reg:
        raise InputError(f"no subgroup {args.to!r} of {group}; see list-maximals")
    facs = None
    if args.factors:
        try:
            facs = tuple(int(i) for i in args.factors.split(","))
        except ValueError:
            raise InputError(f"cannot read --factors {args.factors!r}") from None
    return ExpectedRow(table="-", group=group, id=args.to, over=args.to, via=args.via, factors=facs)


def _embedding(args, group: str, p: int, db):
    row = _subgroup_row(args, group)
    try:
        return row, row_embedding(row, p, db, _twists(args.twists))
    except KeyError as exc:
        raise InputError(str(exc)) from None


# ------------------------------------------------------------------ verbs


def cmd_dim(args) -> int:
    g = _shape(args.group)
    lam = _weight(g, args.weight)
    db = _db(args)
    d = weyl_dim(g, lam) if args.p == 0 or args.weyl else irr_dim(g, lam, args.p, db)
    _emit(args, str(d), {"group": args.group, "weight": args.weight, "p": args.p,
                         "module": "weyl" if args.weyl or args.p == 0 else "irreducible", "dim": d})
    return 0


def _char_lines(shape, ch, dominant_only: bool) -> list:
    items = ch.dominant_part().items() if dominant_only else ch.items()
    rows = sorted(items, key=lambda wm: (-sum(wm[0]), tuple(-x for x in wm[0])))
    return [(format_weight(shape, w), m) for w, m in rows]


def cmd_char(args) -> int:
    g = _shape(args.group)
    lam = _weight(g, args.weight)
    ch = weyl_character(g, lam) if args.weyl or args.p == 0 else irr_char(g, lam, args.p, _db(args))
    rows = _char_lines(g, ch, not args.all)
    text = "\n".join(f"{w} {m}" for w, m in rows) + f"\ndim {ch.dim}"
    _emit(args, text, {"group": args.group, "weight": args.weight, "p": args.p, "dim": ch.dim,
                       "weights": [[w, m] for w, m in rows]})
    return 0


def cmd_tensor(args) -> int:
    g = _shape(args.group)
    db = _db(args)
    ch = None
    for text in args.weights:
        lam = _weight(g, text)
        c = weyl_character(g, lam) if args.weyl or args.p == 0 else irr_char(g, lam, args.p, db)
        ch = c if ch is None else tensor(ch, c)
    f = decompose(ch, args.p, db)
    _emit(args, f.format(), {"group": args.group, "p": args.p, "weights": args.weights,
                             "dim": ch.dim, "factors": f.to_json()})
    return 0


def cmd_decompose(args) -> int:
    g = _shape(args.group)
    db = _db(args)
    if args.weyl:
        ch = weyl_character(g, _weight(g, args.weyl))
    else:
        try:
            ch = evaluate(args.expr, g, args.p, db, _twists(args.twists))
        except (ValueError, KeyError) as exc:
            raise InputError(f"cannot read expression {args.expr!r}: {exc}") from None
    f = decompose(ch, args.p, db)
    _emit(args, f.format(), {"group": args.group, "p": args.p, "dim": ch.dim, "factors": f.to_json()})
    return 0


def cmd_restrict(args) -> int:
    g = _shape(args.group)
    db = _db(args)
    row, e = _embedding(args, args.group, args.p, db)
    if args.module:
        lam = (atlas.minimal_weight if args.module == "V" else atlas.adjoint_weight)(args.group)
        if lam is None:
            raise InputError(f"{args.group} has no minimal module listed")
    elif args.weight:
        lam = _weight(g, args.weight)
    else:
        raise InputError("restrict needs --weight or --module")
    ch = irr_char(g, lam, args.p, db) if args.irreducible else weyl_character(g, lam)
    f = decompose(restrict_character(ch, e, args.p, db), args.p, db)
    _emit(args, f.format(), {"group": args.group, "subgroup": str(e.target), "p": args.p,
                             "weight": format_weight(g, lam), "factors": f.to_json()})
    return 0


def cmd_screen(args) -> int:
    db = _db(args)
    row, e = _embedding(args, args.group, args.p, db)
    tw = _twists(args.twists)
    lie = vf.row_factors(row, args.p, db, tw, "L")
    v = vf.row_factors(row, args.p, db, tw, "V") if atlas.minimal_weight(args.group) else None
    verdict = vf.screen_irreducibility(args.group, args.p, e.target, lie, v, db)
    head = f"L(G) factors: {lie.format()}" + (f"\nV factors: {v.format()}" if v is not None else "")
    doc = {"group": args.group, "subgroup": str(e.target), "p": args.p, "L": lie.to_json(),
           "V": v.to_json() if v is not None else None, **verdict.to_json()}
    _emit(args, head + "\n" + verdict.text(), doc)
    return 0


def cmd_verify(args) -> int:
    if args.distinctness:
        return _distinctness(args)
    tables = args.table or None
    groups = [args.group] if args.group else None
    if groups and not tables:
        tables = ["1", "2", "3", "4", "5", "10", "11", "12"]
    ps = tuple(args.p) if args.p else CHARACTERISTICS
    tw = _twists(args.twists)
    sets = ((tw.get("r", 1), tw.get("s", 2)),) if tw else vf.TWIST_SETS
    db = _db(args) if (args.db or args.strict) else None
    report = vf.verify_tables(tables, groups, sets, ps, db=db, jobs=args.jobs, db_paths=args.db or None)
    if args.maximal:
        mdb = db or load_db()
        for g in groups or atlas.EXCEPTIONAL:
            report.extend(vf.verify_maximal(g, mdb, ps))
        report = report.sorted()
    _emit(args, report.text(args.verbose), json.loads(report.json()))
    return 0 if report.ok else 1


def _distinctness(args) -> int:
    db = _db(args)
    tw = _twists(args.twists)
    sets = ((tw.get("r", 1), tw.get("s", 2)),) if tw else vf.TWIST_SETS
    ps = tuple(args.p) if args.p else CHARACTERISTICS
    groups = [args.group] if args.group else atlas.EXCEPTIONAL
    reports = [vf.check_factor_distinctness(g, p, inst, db) for g in groups for p in ps for inst in sets]
    _emit(args, "".join(r.text() for r in reports), [r.to_json() for r in reports])
    return 1 if any(r.errors for r in reports) else 0


def cmd_list_maximals(args) -> int:
    ents = maximal_subgroups(args.group, args.p)
    lines = [f"{m.name}  ({m.shape})  {m.condition.text}" for m in ents]
    _emit(args, "\n".join(lines), [{"name": m.name, "shape": str(m.shape), "condition": m.condition.text,
                                    "V": m.V, "L": m.L} for m in ents])
    return 0


def cmd_list_levis(args) -> int:
    ents = levi_subgroups(args.group)
    lines = [f"{lv.name}  ({lv.shape})" + ("" if lv.has_data else "  computed") for lv in ents]
    _emit(args, "\n".join(lines), [{"name": lv.name, "shape": str(lv.shape), "V": lv.V, "L": lv.L}
                                   for lv in ents])
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--db", action="append", metavar="PATH",
                        help="Weyl-module factor file(s) replacing the shipped ones")
    common.add_argument("--strict", action="store_true",
                        help="fail on a missing Weyl-module entry instead of assuming irreducibility")
    ap = argparse.ArgumentParser(prog="irrsub", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    def group(sp, required=True):
        sp.add_argument("--group", required=required, help="group, e.g. E6, A2, B2B2")

    def char_p(sp, default=0):
        sp.add_argument("--p", type=_p, default=default, help="characteristic (0 or a prime)")

    def subgroup(sp):
        sp.add_argument("--to", required=True, help="subgroup name from list-maximals")
        sp.add_argument("--factors", help="project to simple factors, e.g. 0 or 1,2")
        sp.add_argument("--via", help="diagonal embedding, e.g. 10,10^[r]")
        sp.add_argument("--twists", help="twist values, e.g. r=1,s=2")

    sp = verb("dim", cmd_dim, "dimension of an irreducible (p>0) or Weyl module")
    group(sp); char_p(sp)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--weyl", action="store_true", help="Weyl module even when p>0")

    sp = verb("char", cmd_char, "weight multiplicities")
    group(sp); char_p(sp)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--weyl", action="store_true")
    sp.add_argument("--all", action="store_true", help="all weights, not only dominant ones")

    sp = verb("tensor", cmd_tensor, "composition factors of a tensor product")
    group(sp); char_p(sp)
    sp.add_argument("--weights", nargs="+", required=True)
    sp.add_argument("--weyl", action="store_true", help="tensor Weyl modules instead of irreducibles")

    sp = verb("decompose", cmd_decompose, "composition factors of a Weyl module or factor list")
    group(sp); char_p(sp)
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--weyl", help="highest weight of the Weyl module")
    src.add_argument("--expr", help="factor list, e.g. 'W(11) / 10*01^[r]'")
    sp.add_argument("--twists")

    sp = verb("restrict", cmd_restrict, "restrict a module to a subgroup")
    group(sp); char_p(sp); subgroup(sp)
    sp.add_argument("--weight")
    sp.add_argument("--module", choices=("V", "L"), help="minimal module or L(G)")
    sp.add_argument("--irreducible", action="store_true", help="restrict L(weight) instead of W(weight)")

    sp = verb("screen", cmd_screen, "irreducibility screen for a subgroup")
    group(sp); char_p(sp); subgroup(sp)

    sp = verb("verify", cmd_verify, "recompute table rows and report differences")
    group(sp, required=False)
    sp.add_argument("--table", action="append", help="table id (repeatable); default all")
    sp.add_argument("--p", type=_p, action="append", help="characteristic (repeatable); default 0,2,3,5,7")
    sp.add_argument("--twists", help="one instantiation, e.g. r=1,s=2; default (1,2) and (2,3)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--maximal", action="store_true", help="also check maximal-subgroup data")
    sp.add_argument("--verbose", action="store_true", help="list passing checks too")
    sp.add_argument("--distinctness", action="store_true",
                    help="compare L(G) factors across the rows of each group instead")

    sp = verb("list-maximals", cmd_list_maximals, "maximal subgroups in the registry")
    group(sp)
    sp.add_argument("--p", type=_p, default=None)

    sp = verb("list-levis", cmd_list_levis, "Levi subgroups with no rank-one factor")
    group(sp)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"irrsub: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, UnknownCharacterError) as exc:
        print(f"irrsub: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
