"""Subgroup data: maximal subgroups, Levi subgroups, expected table rows, and
the embedding chains that realise each named subgroup.

The datasets live in ``data/`` (YAML for restriction data, the ``.db``
files for Weyl-module composition factors).  Setting ``IRRSUB_DATA`` points
the loaders at another directory with the same layout.

Every named subgroup of a group G is produced by a builder in
:data:`REGISTRY`, keyed by G and the subgroup name.  A builder takes the
characteristic and a :class:`~irrsub.modular.ModularDB` and returns an
embedding (``source`` = G, ``target`` = the subgroup) for the restriction
machinery in :mod:`irrsub.embed`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
import os
from pathlib import Path
import re

import yaml

from .charring import weyl_character, weyl_dim
from .embed import (
    DiagonalSpec,
    aut_from_image,
    classical_embedding,
    compose_embeddings,
    diagonal_embedding,
    factor_projection,
    identity_embedding,
    product_embedding,
    subsystem_embedding,
    transporter_from_table,
)
from .modular import ModularDB, evaluate, twist_value
from .notation import parse_component
from .rootsys import GroupShape, SimpleType, build_root_datum

__all__ = [
    "Condition",
    "MaximalEntry",
    "LeviEntry",
    "ExpectedRow",
    "data_dir",
    "maximal_subgroups",
    "levi_subgroups",
    "expected_rows",
    "named_embedding",
    "row_embedding",
    "twist_instances",
    "minimal_weight",
    "adjoint_weight",
    "seed_db",
    "load_db",
    "REGISTRY",
    "EXCEPTIONAL",
    "CHARACTERISTICS",
]

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")
CHARACTERISTICS = (0, 2, 3, 5, 7)

# highest weight of the module V used alongside L(G); E8 has none
_MINIMAL = {"G2": "10", "F4": "0001", "E6": "100000", "E7": "0000001"}


def data_dir() -> Path:
    env = os.environ.get("IRRSUB_DATA")
    return Path(env) if env else Path(__file__).resolve().parent / "data"


@lru_cache(maxsize=None)
def _load_yaml(directory: str, name: str):
    return yaml.safe_load((Path(directory) / name).read_text(encoding="utf-8"))


def _yaml(name: str):
    return _load_yaml(str(data_dir()), name)


def minimal_weight(g: str) -> tuple | None:
    t = SimpleType.parse(g)
    lab = _MINIMAL.get(g)
    return parse_component(lab, t.rank) if lab else None


def adjoint_weight(g: str) -> tuple:
    d = build_root_datum(SimpleType.parse(g))
    return d.root_to_weight(d.highest_root)


# ------------------------------------------------------------- conditions


_CLAUSE = re.compile(r"p\s*(=|!=|>=|<=|>|<)\s*(\d+)")


@dataclass(frozen=True)
class Condition:
    """A conjunction of comparisons on the characteristic.

    Characteristic 0 counts as larger than every prime, so ``p>3`` and
    ``p!=2`` hold at 0 while ``p=2`` does not.
    """

    text: str = "any"

    def __post_init__(self):
        for clause in self._clauses():
            if not _CLAUSE.fullmatch(clause):
                raise ValueError(f"cannot read condition {self.text!r}")

    def _clauses(self):
        t = self.text.strip().replace("≠", "!=").replace("≥", ">=").replace("≤", "<=")
        if t in ("", "any"):
            return []
        return [c.strip() for c in t.split(",") if c.strip()]

    def holds(self, p: int) -> bool:
        for clause in self._clauses():
            op, n = _CLAUSE.fullmatch(clause).groups()
            n = int(n)
            if op == "=":
                ok = p == n
            elif op == "!=":
                ok = p != n
            elif p == 0:
                ok = op in (">", ">=")
            else:
                ok = {">": p > n, ">=": p >= n, "<": p < n, "<=": p <= n}[op]
            if not ok:
                return False
        return True

    def __str__(self):
        return self.text


# ------------------------------------------------------------- registry


def _subsystem(g: str, key: str):
    roots = _yaml("subsystems.yaml")[g][key]
    d = build_root_datum(SimpleType.parse(g))
    comps = []
    from .rootsys import identify_components
    for rs in roots:
        rs = [tuple(r) for r in rs]
        (t, _), = identify_components(d, rs)
        comps.append((t, tuple(rs)))
    return subsystem_embedding(d, comps, f"{g}>{key}")


def _transporter(g: str, target: str, table: dict, name: str):
    src = GroupShape.parse(g)
    tgt = GroupShape.parse(target)

    def build(p, db):
        entries = {parse_component(k, src.rank): v for k, v in table.items()}
        return transporter_from_table(src, tgt, entries, p, db, f"{g}>{name}")
    return build


def _classical(family: str, target: str, natural: str, flip: bool = False, name: str = ""):
    """Embedding of a classical group into ``target`` given by the natural module."""
    x = GroupShape.parse(target)

    def build(p, db):
        nat = evaluate(natural, x, p, db)
        return classical_embedding(family, x, nat, spin_flip=flip, name=name)
    return build


def _sub(g, key):
    return lambda p, db: _subsystem(g, key)


def _chain(*steps):
    """Compose builders left to right."""
    def build(p, db):
        e = steps[0](p, db)
        for s in steps[1:]:
            e = compose_embeddings(e, s(p, db))
        return e
    return build


def _named(g, name):
    return lambda p, db: named_embedding(g, name, p, db)


def _identity(shape: str):
    return lambda p, db: identity_embedding(GroupShape.parse(shape))


def _product(*legs):
    return lambda p, db: product_embedding([leg(p, db) for leg in legs])


def _need(cond: str, build):
    c = Condition(cond)

    def wrapped(p, db):
        if not c.holds(p):
            raise ValueError(f"subgroup needs {cond}, got p={p}")
        return build(p, db)
    return wrapped


def _by_p(cond: str, yes, no):
    c = Condition(cond)
    return lambda p, db: (yes if c.holds(p) else no)(p, db)


REGISTRY: dict = {
    # subgroups of D8 given by the natural 16-dimensional module; the spin
    # choice decides which half-spin module is the one inside L(E8)
    "D8": {
        "B7": _classical("D", "B7", "W(1000000) / 0000000"),
        "B6": _classical("D", "B6", "W(100000) / 000000^3"),
        "B4†": _classical("D", "B4", "W(0001)", flip=False),
        "B4‡": _classical("D", "B4", "W(0001)", flip=True),
        "A3": _classical("D", "A3", "W(101) / 000"),
        "D4D4": _classical("D", "D4D4", "(1000,0000) / (0000,1000)"),
        "B3B3": _classical("D", "B3B3", "(W(100),000) / (000,001) / (000,000)"),
        "A2A2": _classical("D", "A2A2", "(W(11),00) / (00,W(11))"),
        "B2B2†": _classical("D", "B2B2", "(01,01)", flip=False),
        "B2B2‡": _classical("D", "B2B2", "(01,01)", flip=True),
        "B2B2": _classical("D", "B2B2", "(W(10),00) / (00,W(02)) / (00,00)"),
        "B2^3": _classical("D", "B2^3", "(W(10),00,00) / (00,W(10),00) / (00,00,W(10)) / (00,00,00)"),
    },
    "G2": {
        "A2": _sub("G2", "A2"),
        "~A2": _need("p=3", _sub("G2", "~A2")),
    },
    "F4": {
        "B4": _sub("F4", "B4"),
        "D4": _sub("F4", "D4"),
        "C4": _need("p=2", _sub("F4", "C4")),
        "~D4": _need("p=2", _sub("F4", "~D4")),
        "A2~A2": _sub("F4", "A2~A2"),
        "G2": _need("p=7", _transporter("F4", "G2", {"0001": "20", "1000": "01 / 11"}, "G2")),
        # B2 x B2 inside B4 at p=2: long and short root pairs {e1-e2, e2}, {e3-e4, e4}
        "B2B2": _need("p=2", _chain(_sub("F4", "B4"), lambda p, db: _b4_b2b2())),
    },
    "E6": {
        "F4": _transporter("E6", "F4", {"100000": "W(0001) / 0000",
                                        "010000": "W(1000) / W(0001)"}, "F4"),
        "C4": _by_p("p!=2",
                    _transporter("E6", "C4", {"100000": "W(0100)",
                                              "010000": "W(2000) / W(0001)"}, "C4"),
                    _chain(_named("E6", "F4"), _named("F4", "C4"))),
        "~D4": _need("p=2", _chain(_named("E6", "F4"), _named("F4", "~D4"))),
        "G2": _by_p("p!=7",
                    _transporter("E6", "G2", {"100000": "W(20)", "010000": "W(01) / W(11)"}, "G2"),
                    _chain(_named("E6", "F4"), _named("F4", "G2"))),
        "A2": _need("p>=3", _by_p("p>=5",
                                  _transporter("E6", "A2", {"100000": "W(22)",
                                                            "010000": "11 / 41 / 14"}, "A2"),
                                  _chain(_named("E6", "G2"), _named("G2", "~A2")))),
        "A2G2": _transporter("E6", "A2G2", {"100000": "(10,W(10)) / (W(02),00)",
                                            "010000": "(W(11),W(10)) / (W(11),00) / (00,W(01))"},
                             "A2G2"),
        "A2~A2": _need("p=3", _chain(_named("E6", "A2G2"),
                                     _product(_identity("A2"), _named("G2", "~A2")))),
        "A2^3": _sub("E6", "A2^3"),
    },
    "E7": {
        "A7": _sub("E7", "A7"),
        "A2A5": _sub("E7", "A2A5"),
        "G2C3": _transporter("E7", "G2C3", {"0000001": "(W(10),100) / (00,W(001))",
                                            "1000000": "(W(10),W(010)) / (W(01),000) / (00,W(200))"},
                             "G2C3"),
        "A2": _need("p>=5", _transporter("E7", "A2", {"0000001": "W(60) / W(06)",
                                                      "1000000": "W(44) / 11"}, "A2")),
        "D4": _chain(_sub("E7", "A7"), _classical("A", "D4", "W(1000)")),
        # the second factor acts on the natural module of A5 as 20
        "A2A2*": _chain(_sub("E7", "A2A5"),
                        _product(_identity("A2"), _classical("A", "A2", "W(20)"))),
        "G2G2": _need("p=2", _chain(_named("E7", "G2C3"),
                                    _product(_identity("G2"), _classical("C", "G2", "10")))),
    },
    "E8": {
        "D8": _sub("E8", "D8"),
        "A8": _sub("E8", "A8"),
        "A2E6": _sub("E8", "A2E6"),
        "A4A4": _sub("E8", "A4A4"),
        "G2F4": _transporter("E8", "G2F4",
                             {"00000001": "(W(10),W(0001)) / (W(01),0000) / (00,W(1000))"}, "G2F4"),
        "B2": _need("p>=5", _transporter("E8", "B2", {"00000001": "02 / W(06) / W(32)"}, "B2")),
        # classical subgroups of D8
        **{name: _chain(_sub("E8", "D8"), _named("D8", name)) for name in (
            "B7", "B6", "B4†", "B4‡", "A3", "D4D4", "B3B3", "A2A2", "B2B2†", "B2B2‡",
            "B2B2", "B2^3")},
        "A2A2<A8": _chain(_sub("E8", "A8"), _classical("A", "A2A2", "(10,10)")),
        "B2B2<A4A4": _chain(_sub("E8", "A4A4"), _product(_classical("A", "B2", "W(10)"),
                                                          _classical("A", "B2", "W(10)"))),
        "A2^4": _chain(_sub("E8", "A2E6"), _product(_identity("A2"), _named("E6", "A2^3"))),
        "A2Y": _need("p>=3", _chain(_sub("E8", "A2E6"),
                                    _product(_identity("A2"), _named("E6", "A2")))),
        "A2A2~A2": _need("p=3", _chain(_sub("E8", "A2E6"),
                                       _product(_identity("A2"), _named("E6", "A2~A2")))),
        "G2G2": _need("p=7", _chain(_named("E8", "G2F4"),
                                    _product(_identity("G2"), _named("F4", "G2")))),
    },
}


def _b4_b2b2():
    d = build_root_datum(SimpleType("B", 4))
    return subsystem_embedding(d, [(1, 0, 0, 0), (0, 1, 1, 1), (0, 0, 1, 0), (0, 0, 0, 1)], "B4>B2B2")


for _g in ("F4", "E6", "E7", "E8"):
    for _key in _load_yaml(str(Path(__file__).resolve().parent / "data"), "subsystems.yaml").get(_g, {}):
        if _key.startswith("levi:"):
            REGISTRY[_g][_key] = _sub(_g, _key)

_CACHE: dict = {}


def named_embedding(g: str, name: str, p: int, db: ModularDB):
    """Embedding of the named subgroup of ``g`` at characteristic ``p``.

    Results are cached per (group, name, p, database).
    """
    try:
        build = REGISTRY[g][name]
    except KeyError:
        raise KeyError(f"no subgroup {name!r} of {g}") from None
    key = (g, name, p, id(db))
    hit = _CACHE.get(key)
    if hit is not None and hit[0] is db:
        return hit[1]
    e = build(p, db)
    if not e.source.same_group(GroupShape.parse(g)):
        raise AssertionError(f"{g}>{name} starts at {e.source}")
    _CACHE[key] = (db, e)
    return e


# ------------------------------------------------------------- maximal / Levi


@dataclass(frozen=True)
class MaximalEntry:
    group: str
    name: str
    shape: GroupShape
    condition: Condition
    V: str | None
    L: str
    table_text: str | None = None
    derived: bool = False


def _all_maximal(g: str) -> list:
    out = []
    for row in _yaml("maximal.yaml").get(g, []):
        out.append(MaximalEntry(g, row["name"], GroupShape.parse(row.get("shape", row["name"])),
                                Condition(str(row.get("p", "any"))), row.get("V"), row["L"],
                                row.get("table_text"), bool(row.get("derived", False))))
    return out


def maximal_subgroups(g: str, p: int | None = None) -> list:
    """Maximal entries of ``g``; with ``p`` given, only those existing at p."""
    if g not in EXCEPTIONAL:
        raise ValueError(f"unknown group {g!r}")
    rows = _all_maximal(g)
    return rows if p is None else [r for r in rows if r.condition.holds(p)]


@dataclass(frozen=True)
class LeviEntry:
    group: str
    name: str
    shape: GroupShape
    V: str | None
    L: str | None
    table_text: str | None = None

    @property
    def has_data(self) -> bool:
        return self.L is not None

    @property
    def key(self) -> str:
        return "levi:" + self.name


def levi_subgroups(g: str) -> list:
    if g not in EXCEPTIONAL:
        raise ValueError(f"unknown group {g!r}")
    out = []
    for row in _yaml("levi.yaml").get(g, []):
        out.append(LeviEntry(g, row["name"], GroupShape.parse(row.get("type", row["name"])),
                             row.get("V"), row.get("L"), row.get("table_text")))
    return out


# ------------------------------------------------------------- table rows


@dataclass(frozen=True)
class ExpectedRow:
    """One expected row: a subgroup X of G, how to reach it, and its factors.

    ``over`` names a registry subgroup; ``factors`` optionally projects to
    some of its simple factors; ``via`` is the diagonal embedding
    (per-factor image of the first fundamental weight with twist).
    ``condition`` is where X exists; ``check`` is where the stated factor
    lists apply.  ``kind`` is ``row`` (a table row), ``factor`` (a stated
    restriction to a factor or product, not itself a row) or ``reducible``
    (stated data for a subgroup that is not G-irreducible there).
    """

    table: str
    group: str
    id: str
    over: str
    via: str | None = None
    factors: tuple | None = None
    condition: Condition = field(default_factory=Condition)
    check: Condition = field(default_factory=Condition)
    twist: str = ""
    kind: str = "row"
    V: str | None = None
    L: str | None = None
    table_text: str | None = None
    note: str | None = None
    stage: str | None = None
    stage_modules: tuple = ()

    @property
    def twisted(self) -> bool:
        return bool(self.twist)

    def x_shape(self, db: ModularDB | None = None) -> GroupShape:
        base = _target_shape(self.group, self.over, db)
        if self.factors is not None:
            base = GroupShape(tuple(base.components[i] for i in self.factors))
        if self.via:
            return GroupShape((base.components[0],))
        return base

    def legal(self, p: int) -> bool:
        return self.condition.holds(p) and (p > 0 or not self.twisted)

    def checkable(self, p: int) -> bool:
        return self.legal(p) and self.check.holds(p) and self.has_data

    @property
    def has_data(self) -> bool:
        return self.L is not None or self.V is not None or bool(self.stage_modules)


_SHAPES: dict = {}


def _target_shape(g: str, name: str, db: ModularDB | None = None) -> GroupShape:
    """Shape of a registry subgroup, read off its embedding at the first
    characteristic where it exists."""
    hit = _SHAPES.get((g, name))
    if hit is not None:
        return hit
    db = db if db is not None else load_db()
    last = None
    for p in CHARACTERISTICS:
        try:
            shape = named_embedding(g, name, p, db).target
        except ValueError as exc:
            last = exc
            continue
        _SHAPES[(g, name)] = shape
        return shape
    raise ValueError(f"{g}>{name}: {last}")


def expected_rows(table=None, group: str | None = None) -> list:
    """Expected rows, optionally filtered by table id (int or str) and group."""
    out = []
    for row in _yaml("tables.yaml"):
        tab = str(row["table"])
        if table is not None and tab != str(table):
            continue
        if group is not None and row["group"] != group:
            continue
        facs = row.get("factors")
        if isinstance(facs, int):
            facs = [facs]
        rid = row.get("id") or _row_id(row)
        cond = Condition(str(row.get("p", "any")))
        v, lie, text = row.get("V"), row.get("L"), row.get("table_text")
        if row.get("weyl_terms"):
            text = text or lie or v
            v, lie = _as_weyl(v), _as_weyl(lie)
        out.append(ExpectedRow(
            table=tab, group=row["group"], id=rid, over=row["over"], via=row.get("via"),
            factors=tuple(facs) if facs is not None else None, condition=cond,
            check=Condition(str(row.get("check", "any"))), twist=row.get("twist", ""),
            kind=row.get("kind", "row"), V=v, L=lie, table_text=text, note=row.get("note"),
            stage=row.get("stage"),
            stage_modules=tuple((str(k), v) for k, v in (row.get("stage_modules") or {}).items())))
    return out


def _as_weyl(expr: str | None) -> str | None:
    """Read every term of a plain factor list as a Weyl character."""
    if expr is None:
        return None
    out = []
    for term in expr.split("/"):
        if term.strip().startswith("W("):
            out.append(term.strip())
            continue
        m = re.fullmatch(r"\s*([0-9,()]+)(\^\d+)?\s*", term)
        if not m:
            raise ValueError(f"weyl_terms: cannot wrap {term!r}")
        out.append(f"W({m.group(1)}){m.group(2) or ''}")
    return " / ".join(out)


def _row_id(row) -> str:
    s = row.get("x", row["over"])
    if row.get("via"):
        s += f" < {row['over']} via ({row['via']})"
    elif row.get("x") and row["x"] != row["over"]:
        s += f" < {row['over']}"
    if row.get("factors") is not None:
        s += f" factor {row['factors']}"
    if row.get("kind", "row") != "row":
        s += f" [{row['kind']}, {row.get('p', 'any')}]"
    return s


def twist_instances(row: ExpectedRow, inst=(1, 2)) -> list:
    """Concrete twist values for a row under the instantiation ``(R, S)``.

    ``r!=0`` uses r=R; ``0<r<s`` uses (R, S); ``rs=0`` is run both ways,
    (r, s) = (0, R) and (R, 0).
    """
    r, s = inst
    if not row.twist:
        return [{}]
    if row.twist == "r!=0":
        return [{"r": r}]
    if row.twist == "0<r<s":
        return [{"r": r, "s": s}]
    if row.twist == "rs=0":
        return [{"r": 0, "s": r}, {"r": r, "s": 0}]
    raise ValueError(f"unknown twist class {row.twist!r}")


def _parse_via(text: str, t: SimpleType):
    items = []
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"([^\^]+)(?:\^\[(.+)\])?", part)
        if not m:
            raise ValueError(f"cannot read diagonal factor {part!r}")
        lab, tw = m.group(1), m.group(2) or "0"
        hint = ""
        if tw.startswith(("ι", "iota")):
            hint = "iota"
            tw = tw[1:] if tw.startswith("ι") else tw[4:]
            tw = tw or "0"
        items.append((parse_component(lab, t.rank), tw, hint))
    return items


def row_embedding(row: ExpectedRow, p: int, db: ModularDB, twists: dict | None = None,
                  start: str | None = None):
    """Embedding G -> X for a row at a given characteristic and twist values.

    With ``start`` (an intermediate group such as ``"D8"``) the chain begins
    there instead of at G.
    """
    e = named_embedding(start or row.group, row.over, p, db)
    if row.factors is not None:
        e = compose_embeddings(e, factor_projection(e.target, list(row.factors)))
    if row.via:
        h = e.target
        t = h.components[0]
        if any(c != t for c in h.components):
            raise ValueError(f"diagonal row {row.id} over a mixed product {h}")
        items = _parse_via(row.via, t)
        if len(items) != len(h.components):
            raise ValueError(f"row {row.id}: {len(items)} diagonal entries for {h}")
        facs = []
        for image, tw, hint in items:
            r = twist_value(tw, twists or {})
            if r and p == 0:
                raise ValueError("twisted diagonal rows need p > 0")
            aut = aut_from_image(t, image, p, hint)
            if aut.p and aut.p != p:
                raise ValueError(f"row {row.id} needs p={aut.p}")
            facs.append((r, aut))
        e = compose_embeddings(e, diagonal_embedding(DiagonalSpec(tuple(facs), p), t))
    return e


# ------------------------------------------------------------- databases


def seed_db(mode: str = "permissive") -> ModularDB:
    """Only the transcribed Weyl-module composition factors."""
    return ModularDB.load([data_dir() / "weyl_modules.db"], mode)


def load_db(paths=None, mode: str = "permissive") -> ModularDB:
    """Transcribed entries plus the derived ones (or the given files)."""
    if paths is None:
        paths = [data_dir() / "weyl_modules.db"]
        extra = data_dir() / "weyl_modules_computed.db"
        if extra.exists():
            paths.append(extra)
    return ModularDB.load(paths, mode)


def module_character(g: str, which: str):
    """Character of the minimal module (``"V"``) or of L(G) (``"L"``)."""
    shape = GroupShape.parse(g)
    lam = minimal_weight(g) if which == "V" else adjoint_weight(g)
    if lam is None:
        return None
    return weyl_character(shape, lam)


def module_dim(g: str, which: str) -> int | None:
    lam = minimal_weight(g) if which == "V" else adjoint_weight(g)
    return None if lam is None else weyl_dim(GroupShape.parse(g), lam)
