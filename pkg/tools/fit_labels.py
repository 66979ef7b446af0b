"""Choose simple systems for the subsystem subgroups used by the atlas.

For each maximal-rank or Levi subgroup, search over the simple-root bases
produced by deleting nodes (extended diagram for maximal rank, ordinary
diagram for Levis), permutations of isomorphic factors, and graph
automorphisms of each factor, until the characteristic-zero restrictions of
the minimal and adjoint modules match the recorded factor lists.  The chosen
root lists are written to ``src/irrsub/data/subsystems.yaml``; nothing is
searched at run time.

Usage: python3 tools/fit_labels.py [--check]
"""

from __future__ import annotations

import argparse
from itertools import combinations, permutations, product
from pathlib import Path
import sys

import yaml

from irrsub.charring import weyl_character
from irrsub.embed import subsystem_embedding
from irrsub.modular import ModularDB, decompose, evaluate
from irrsub.rootsys import (
    GroupShape,
    SimpleType,
    borel_de_siebenthal,
    build_root_datum,
    find_bases,
    graph_automorphisms,
    identify_components,
)

DATA = Path(__file__).resolve().parents[1] / "src" / "irrsub" / "data"
MINIMAL = {"E6": "100000", "E7": "0000001", "F4": "0001", "G2": "10"}

# name -> how to produce candidate bases, plus the factor lists to match.
MAXIMAL_RANK = {
    "G2": {
        "A2": {"node": 1, "V": "10 / 01 / 00", "L": "W(11) / 10 / 01"},
        "~A2": {"short": "A2"},
    },
    "F4": {
        "B4": {"node": 4, "V": "W(1000) / 0001 / 0000", "L": "W(0100) / 0001"},
        "D4": {"long": "D4", "V": "1000 / 0010 / 0001 / 0000^2",
               "L": "W(0100) / 1000 / 0010 / 0001"},
        "~D4": {"short": "D4"},
        "C4": {"any": "C4"},
        # the labelling used by the diagonal rows of the F4 table
        "A2~A2": {"node": 2, "V": "(10,10) / (01,01) / (00,W(11))",
                  "L": "(W(11),00) / (00,W(11)) / (10,W(02)) / (01,W(20))"},
    },
    "E6": {
        "A2^3": {"node": 4, "V": "(10,01,00) / (00,10,01) / (01,00,10)",
                 "L": "(W(11),00,00) / (00,W(11),00) / (00,00,W(11)) / (10,10,10) / (01,01,01)"},
    },
    "E7": {
        "A7": {"node": 2, "V": "0100000 / 0000010", "L": "W(1000001) / 0001000"},
        "A2A5": {"node": 3, "V": "(10,10000) / (01,00001) / (00,00100)",
                 "L": "(W(11),00000) / (00,W(10001)) / (10,00010) / (01,01000)"},
    },
    "E8": {
        "D8": {"node": 1, "L": "W(01000000) / 00000010"},
        "A8": {"node": 2, "L": "W(10000001) / 00100000 / 00000100"},
        "A2E6": {"node": 7, "L": "(W(11),000000) / (00,W(010000)) / (10,000001) / (01,100000)"},
        "A4A4": {"node": 5, "L": "(W(1001),0000) / (0000,W(1001)) / (1000,0100) / (0001,0010) "
                                 "/ (0100,0001) / (0010,1000)"},
    },
}


def _aut_perm(aut) -> list:
    return [row.index(1) for row in aut.matrix]


def relabelings(comps):
    """All reorderings of isomorphic factors combined with graph automorphisms."""
    n = len(comps)
    for perm in permutations(range(n)):
        choices = [[_aut_perm(a) for a in graph_automorphisms(comps[i][0])] for i in perm]
        for auts in product(*choices):
            out = []
            for i, pi in zip(perm, auts):
                t, rs = comps[i]
                out.append((t, tuple(rs[pi[j]] for j in range(t.rank))))
            yield out


def _matches(gt, comps, want, db) -> bool:
    d = build_root_datum(gt)
    emb = subsystem_embedding(d, comps)
    hi = d.root_to_weight(d.highest_root)
    mods = [("L", hi)]
    if gt.family + str(gt.rank) in MINIMAL:
        from irrsub.notation import parse_component
        mods.append(("V", parse_component(MINIMAL[gt.family + str(gt.rank)], gt.rank)))
    for key, lam in mods:
        if key not in want:
            continue
        got = decompose(emb.restrict(weyl_character(GroupShape((gt,)), lam)), 0, db)
        exp = decompose(evaluate(want[key], emb.target, 0, db), 0, db)
        if got != exp:
            return False
    return True


def _candidates(gt, spec):
    d = build_root_datum(gt)
    if "node" in spec:
        return [borel_de_siebenthal(d, spec["node"])]
    for key in ("long", "short", "any"):
        if key in spec:
            t = SimpleType.parse(spec[key])
            norms = [d.root_norm(r) for r in d.all_roots()]
            lo, hi = min(norms), max(norms)
            allowed = {"long": lambda r: d.root_norm(r) == hi,
                       "short": lambda r: d.root_norm(r) == lo,
                       "any": None}[key]
            bases = find_bases(d, t, allowed=allowed, limit=1)
            return [[(t, bases[0])]]
    raise ValueError(spec)


def levi_candidates(gt, shape: GroupShape):
    d = build_root_datum(gt)
    k = shape.rank
    want = sorted(str(t) for t in shape.components)
    for nodes in combinations(range(d.rank), k):
        roots = [tuple(int(i == j) for j in range(d.rank)) for i in nodes]
        comps = identify_components(d, roots)
        if sorted(str(t) for t, _ in comps) == want:
            yield comps


def fit_one(gt, cands, want, db):
    for comps in cands:
        first = [t for t, _ in comps]
        for lab in relabelings(comps):
            if [t for t, _ in lab] != first:
                continue
            if not want or _matches(gt, lab, want, db):
                return lab
    return None


def _dump(lab) -> list:
    return [[list(r) for r in rs] for _, rs in lab]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare with the stored file only")
    args = ap.parse_args(argv)
    db = ModularDB()
    out: dict = {}
    failed = []
    for g, items in MAXIMAL_RANK.items():
        gt = SimpleType.parse(g)
        for name, spec in items.items():
            want = {k: spec[k] for k in ("V", "L") if k in spec}
            lab = fit_one(gt, _candidates(gt, spec), want, db)
            if lab is None:
                failed.append(f"{g} {name}")
                continue
            out.setdefault(g, {})[name] = _dump(lab)
    levis = yaml.safe_load((DATA / "levi.yaml").read_text(encoding="utf-8"))
    for g, rows in levis.items():
        gt = SimpleType.parse(g)
        for row in rows:
            shape = GroupShape.parse(row.get("type", row["name"]))
            want = {k: row[k] for k in ("V", "L") if k in row}
            order = [t for t in shape.components]
            cands = (c for c in levi_candidates(gt, shape))
            lab = None
            for comps in cands:
                for cand in relabelings(comps):
                    if [t for t, _ in cand] == order and _matches(gt, cand, want, db):
                        lab = cand
                        break
                if lab:
                    break
            if lab is None:
                failed.append(f"{g} Levi {row['name']}")
                continue
            out.setdefault(g, {})["levi:" + row["name"]] = _dump(lab)
    for f in failed:
        print("no labelling found:", f, file=sys.stderr)
    text = "# Simple systems (ambient simple-root coordinates, Bourbaki order per\n" \
           "# factor) chosen by tools/fit_labels.py.\n" + yaml.safe_dump(out, default_flow_style=None,
                                                                          sort_keys=False, width=100)
    path = DATA / "subsystems.yaml"
    if args.check:
        same = path.exists() and path.read_text(encoding="utf-8") == text
        print("up to date" if same else "stale")
        return 0 if same and not failed else 1
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path} ({sum(len(v) for v in out.values())} entries)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
