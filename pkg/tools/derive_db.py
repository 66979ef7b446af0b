"""Compute the Weyl-module entries that the transcribed table does not cover.

Runs every check the package performs (table rows, maximal entries, Levi
rows, row factors for the distinctness comparison) with a recording
database, collects each restricted (type, p, weight) whose irreducible
character was needed, and computes the composition factors of those Weyl
modules from the integral form (irrsub.zform).  This repeats until no new
weight appears, then writes ``src/irrsub/data/weyl_modules_computed.db``.

Every transcribed entry is also recomputed and compared.

Usage: python3 tools/derive_db.py [--check]
"""

from __future__ import annotations

import argparse
from pathlib import Path
import sys

from irrsub import atlas, modular
from irrsub.atlas import REGISTRY, CHARACTERISTICS, named_embedding, EXCEPTIONAL, expected_rows, seed_db, twist_instances
from irrsub.modular import ModularDB, steinberg_split
from irrsub.rootsys import SimpleType
from irrsub.verify import (
    TWIST_SETS,
    row_factors,
    verify_maximal,
    verify_tables,
)
from irrsub.zform import weyl_composition_factors

OUT = Path(__file__).resolve().parents[1] / "src" / "irrsub" / "data" / "weyl_modules_computed.db"


def compute_entry(db: ModularDB, t: SimpleType, p: int, lam: tuple) -> dict:
    """Composition factors of W(lam) at p, adding any lower entries needed."""
    def irr_dom(mu):
        for digit, _ in steinberg_split(mu, p):
            if any(digit) and (t, p, digit) not in db:
                db.add(t, p, digit, compute_entry(db, t, p, digit), "computed")
        return modular._simple_irr_dominant(t, p, mu, db)
    return weyl_composition_factors(t, lam, p, irr_dom)


def exercise(db: ModularDB):
    """Every computation the package performs on the shipped data."""
    for g, names in REGISTRY.items():
        for name in names:
            for p in CHARACTERISTICS:
                try:
                    named_embedding(g, name, p, db)
                except Exception:
                    pass
    verify_tables(db=db)
    for g in EXCEPTIONAL:
        verify_maximal(g, db)
    for row in expected_rows():
        for p in CHARACTERISTICS:
            if not row.legal(p):
                continue
            for inst in TWIST_SETS:
                for tw in twist_instances(row, inst):
                    for which in ("V", "L"):
                        if which == "V" and row.group in ("E8",):
                            continue
                        try:
                            row_factors(row, p, db, tw, which)
                        except Exception:
                            pass


def derive() -> ModularDB:
    seed = seed_db()
    db = seed.copy()
    rounds = 0
    while True:
        rounds += 1
        db.recording = set()
        db._irr.clear()
        atlas._CACHE.clear()
        atlas._SHAPES.clear()
        exercise(db)
        need = sorted({k for k in db.recording if k[1] > 0 and any(k[2]) and k not in db},
                      key=lambda k: (str(k[0]), k[1], k[2]))
        db.recording = None
        print(f"round {rounds}: {len(need)} new weights", file=sys.stderr)
        if not need:
            return db
        for t, p, lam in need:
            if (t, p, lam) not in db:
                db.add(t, p, lam, compute_entry(db, t, p, lam), "computed")


def cross_check(seed: ModularDB) -> list:
    """Transcribed entries that disagree with the integral-form computation."""
    bad = []
    scratch = ModularDB()
    for (t, p, lam), facs in sorted(seed.entries.items(), key=lambda kv: (str(kv[0][0]), kv[0][1], kv[0][2])):
        got = compute_entry(scratch, t, p, lam)
        if got != facs:
            bad.append((t, p, lam, facs, got))
    return bad


HEADER = """\
# Composition factors of Weyl modules needed by the shipped checks but not
# listed in the transcribed table.  Generated by tools/derive_db.py from the
# integral form of each Weyl module; entries with a single factor record that
# the Weyl module is irreducible (needed in strict mode).
"""


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare with the stored file only")
    args = ap.parse_args(argv)
    seed = seed_db()
    bad = cross_check(seed)
    for t, p, lam, facs, got in bad:
        print(f"transcribed entry {t} p={p} {lam} disagrees: {facs} vs computed {got}", file=sys.stderr)
    db = derive()
    for key in seed.entries:
        db.provenance[key] = "table"
    text = HEADER + db.dumps("computed")
    if args.check:
        same = OUT.exists() and OUT.read_text(encoding="utf-8") == text
        print("up to date" if same else "stale")
        return 0 if same and not bad else 1
    OUT.write_text(text, encoding="utf-8")
    print(f"wrote {OUT} ({text.count(chr(10)) - HEADER.count(chr(10))} entries)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
