"""Characteristic-p layer: twists, Steinberg digits, irreducible characters
from a database of Weyl-module composition factors, and greedy decomposition.

Database file grammar (one entry per line, ``#`` starts a comment)::

    TYPE RANK p WEIGHT : FACTOR^MULT, FACTOR^MULT, ...   # {table} or {computed}

for example ``B 4 2 0100 : 0100^1, 1000^1, 0000^2``.  Weights use the
weight-string convention of :mod:`irrsub.notation`.  A ``{table}`` tag marks
a transcribed entry and ``{computed}`` one produced by :mod:`irrsub.zform`;
the tag is kept with the entry.  An entry whose only factor is the
weight itself records that the Weyl module is irreducible.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product
from pathlib import Path
import re

from .charring import (
    FormalCharacter,
    dominant_weyl_multiplicities,
    is_dominant,
    shape_height,
    tensor,
    trivial_character,
    weyl_character,
    weyl_dim,
)
from .notation import Node, format_component, format_weight, parse_component, parse_factor_list, parse_weight
from .rootsys import GroupShape, SimpleType, build_root_datum, is_prime

__all__ = [
    "ModularDB",
    "FactorMultiset",
    "UnknownCharacterError",
    "InconsistentDatabaseError",
    "frobenius_twist",
    "steinberg_split",
    "irr_char",
    "irr_dim",
    "decompose",
    "weyl_factors",
    "evaluate",
    "restricted",
    "twist_value",
]


class UnknownCharacterError(KeyError):
    """A strict database has no entry for a restricted weight.

    ``key`` is the missing ``(type, p, weight)``.
    """

    def __init__(self, message: str, key: tuple | None = None):
        super().__init__(message)
        self.key = key

    def __str__(self):
        return str(self.args[0])


class InconsistentDatabaseError(ValueError):
    """Peeling produced a negative multiplicity."""


def restricted(w, p: int) -> bool:
    return all(0 <= x < p for x in w)


def _check_p(p: int):
    if p != 0 and not is_prime(p):
        raise ValueError(f"p must be 0 or a prime, got {p}")


# ----------------------------------------------------------------- multisets


class FactorMultiset:
    """Composition factors, ``{highest weight: multiplicity}``, of a group."""

    __slots__ = ("group", "_m")

    def __init__(self, group: GroupShape, mults=None):
        self.group = group
        m = {}
        for w, k in dict(mults or {}).items():
            if k < 0:
                raise ValueError("factor multiplicities must be positive")
            if k:
                m[tuple(w)] = k
        self._m = m

    def items(self):
        return self._m.items()

    def labels(self):
        return self._m.keys()

    def mult(self, w) -> int:
        return self._m.get(tuple(w), 0)

    def __len__(self):
        return len(self._m)

    def __eq__(self, other):
        if not isinstance(other, FactorMultiset):
            return NotImplemented
        return self.group.same_group(other.group) and self._m == other._m

    def __hash__(self):
        return hash((self.group.components, frozenset(self._m.items())))

    def __add__(self, other: "FactorMultiset") -> "FactorMultiset":
        m = dict(self._m)
        for w, k in other.items():
            m[w] = m.get(w, 0) + k
        return FactorMultiset(self.group, m)

    def scaled(self, c: int) -> "FactorMultiset":
        return FactorMultiset(self.group, {w: c * k for w, k in self._m.items()})

    def count(self) -> int:
        return sum(self._m.values())

    def trivial_count(self) -> int:
        return self._m.get((0,) * self.group.rank, 0)

    def dims(self, p: int, db: "ModularDB") -> dict:
        return {w: irr_dim(self.group, w, p, db) for w in self._m}

    def total_dim(self, p: int, db: "ModularDB") -> int:
        return sum(k * irr_dim(self.group, w, p, db) for w, k in self._m.items())

    def sorted_items(self) -> list:
        key = lambda wk: (-shape_height(self.group, wk[0]), tuple(-x for x in wk[0]))
        return sorted(self._m.items(), key=key)

    def format(self, sep: str = ", ") -> str:
        if not self._m:
            return "(empty)"
        return sep.join(f"{format_weight(self.group, w)}^{k}" for w, k in self.sorted_items())

    def to_json(self) -> list:
        return [[format_weight(self.group, w), k] for w, k in self.sorted_items()]

    def __repr__(self):
        return f"FactorMultiset({self.group}: {self.format()})"


# ----------------------------------------------------------------- database


class ModularDB:
    """Composition factors of Weyl modules W(lam), keyed by (type, p, lam).

    In permissive mode a missing entry means W(lam) is irreducible; in strict
    mode a missing entry for a restricted weight raises
    :class:`UnknownCharacterError`.
    """

    def __init__(self, mode: str = "permissive"):
        if mode not in ("permissive", "strict"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.entries: dict = {}
        self.provenance: dict = {}
        self.recording: set | None = None
        self._irr: dict = {}

    # --- building
    def add(self, t: SimpleType, p: int, lam, factors: dict, provenance: str = "computed"):
        lam = tuple(lam)
        factors = {tuple(w): k for w, k in factors.items() if k}
        if factors.get(lam) != 1:
            raise InconsistentDatabaseError(f"entry {t} p={p} {lam} must contain itself once")
        d = build_root_datum(t)
        h = d.height(lam)
        for w in factors:
            if w != lam and (d.height(w) >= h or not is_dominant(w)):
                raise InconsistentDatabaseError(
                    f"entry {t} p={p} {lam}: factor {w} is not below the highest weight")
        key = (t, p, lam)
        old = self.entries.get(key)
        if old is not None and old != factors:
            raise InconsistentDatabaseError(f"conflicting entries for {t} p={p} {lam}")
        self.entries[key] = factors
        self.provenance[key] = provenance
        self._irr.clear()

    def copy(self, mode: str | None = None) -> "ModularDB":
        new = ModularDB(mode or self.mode)
        new.entries = dict(self.entries)
        new.provenance = dict(self.provenance)
        return new

    def lookup(self, t: SimpleType, p: int, lam) -> dict | None:
        return self.entries.get((t, p, tuple(lam)))

    def __len__(self):
        return len(self.entries)

    def __contains__(self, key):
        t, p, lam = key
        return (t, p, tuple(lam)) in self.entries

    # --- file io
    @classmethod
    def load(cls, paths, mode: str = "permissive") -> "ModularDB":
        db = cls(mode)
        if isinstance(paths, (str, Path)):
            paths = [paths]
        for path in paths:
            db.read_text(Path(path).read_text(encoding="utf-8"), str(path))
        return db

    def read_text(self, text: str, origin: str = "<string>"):
        for lineno, raw in enumerate(text.splitlines(), 1):
            line, _, comment = raw.partition("#")
            if not line.strip():
                continue
            tag = re.search(r"\{(table|computed)\}", comment)
            try:
                head, _, body = line.partition(":")
                fam, rank, p, wt = head.split()
                t = SimpleType(fam, int(rank))
                lam = parse_component(wt, t.rank)
                factors: dict = {}
                for item in body.split(","):
                    item = item.strip()
                    if not item:
                        continue
                    lab, _, k = item.partition("^")
                    w = parse_component(lab, t.rank)
                    factors[w] = factors.get(w, 0) + int(k or 1)
                self.add(t, int(p), lam, factors, tag.group(1) if tag else "computed")
            except (ValueError, KeyError) as exc:
                raise ValueError(f"{origin}:{lineno}: {exc}") from exc

    def dumps(self, provenance: str | None = None) -> str:
        lines = []
        keys = sorted(self.entries, key=lambda k: (str(k[0]), k[1], k[2]))
        for key in keys:
            tag = self.provenance.get(key, "computed")
            if provenance and tag != provenance:
                continue
            t, p, lam = key
            facs = sorted(self.entries[key].items(),
                          key=lambda wk: (-build_root_datum(t).height(wk[0]), wk[0]))
            body = ", ".join(f"{format_component(w)}^{k}" for w, k in facs)
            lines.append(f"{t.family} {t.rank} {p} {format_component(lam)} : {body}  # {{{tag}}}")
        return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- operations


def frobenius_twist(a: FormalCharacter, r: int, p: int) -> FormalCharacter:
    if r < 0:
        raise ValueError("twist exponent must be non-negative")
    if r == 0:
        return a
    if p == 0:
        raise ValueError("Frobenius twists need p > 0")
    _check_p(p)
    q = p ** r
    return FormalCharacter._raw(a.group, {tuple(q * x for x in w): k for w, k in a.items()})


def steinberg_split(lam, p: int) -> list:
    """Base-p digits of ``lam``: ``[(restricted weight, exponent), ...]``."""
    _check_p(p)
    if p == 0:
        raise ValueError("Steinberg factorisation needs p > 0")
    lam = list(lam)
    if any(x < 0 for x in lam):
        raise ValueError("weight must be dominant")
    out, r = [], 0
    while any(lam):
        digit = tuple(x % p for x in lam)
        if any(digit):
            out.append((digit, r))
        lam = [x // p for x in lam]
        r += 1
    return out


def _simple_restricted_irr(t: SimpleType, p: int, lam: tuple, db: ModularDB) -> dict:
    """Full character (weight -> mult) of L(lam) for a simple type, lam restricted."""
    key = (t, p, lam)
    cached = db._irr.get(key)
    if cached is not None:
        return cached
    if db.recording is not None:
        db.recording.add(key)
    g = GroupShape((t,))
    entry = db.lookup(t, p, lam)
    if entry is None:
        if db.mode == "strict" and any(lam):
            raise UnknownCharacterError(f"no composition factors for W({format_component(lam)}) "
                                        f"of {t} at p={p}", key)
        entry = {lam: 1}
    m = dict(weyl_character(g, lam).items())
    for mu, k in entry.items():
        if mu == lam:
            continue
        for w, c in _simple_irr(t, p, mu, db).items():
            v = m.get(w, 0) - k * c
            if v < 0:
                raise InconsistentDatabaseError(
                    f"{t} p={p} W({format_component(lam)}): negative multiplicity at {w}")
            if v:
                m[w] = v
            else:
                del m[w]
    db._irr[key] = m
    return m


def _simple_irr(t: SimpleType, p: int, lam: tuple, db: ModularDB) -> dict:
    if p == 0:
        return dict(weyl_character(GroupShape((t,)), lam).items())
    key = (t, p, lam, "full")
    cached = db._irr.get(key)
    if cached is not None:
        return cached
    acc = {(0,) * t.rank: 1}
    for digit, r in steinberg_split(lam, p):
        q = p ** r
        part = _simple_restricted_irr(t, p, digit, db)
        nxt: dict = defaultdict(int)
        for w, k in acc.items():
            for v, c in part.items():
                nxt[tuple(x + q * y for x, y in zip(w, v))] += k * c
        acc = dict(nxt)
    db._irr[key] = acc
    return acc


def _simple_irr_dominant(t: SimpleType, p: int, lam: tuple, db: ModularDB) -> dict:
    if p == 0:
        return dominant_weyl_multiplicities(t, lam)
    key = (t, p, lam, "dom")
    cached = db._irr.get(key)
    if cached is None:
        cached = {w: k for w, k in _simple_irr(t, p, lam, db).items() if is_dominant(w)}
        db._irr[key] = cached
    return cached


def irr_char(group: GroupShape, lam, p: int, db: ModularDB) -> FormalCharacter:
    lam = tuple(lam)
    _check_p(p)
    if len(lam) != group.rank or not is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant weight of {group}")
    if p == 0:
        return weyl_character(group, lam)
    parts = [_simple_irr(t, p, w, db) for t, w in zip(group.components, group.split(lam))]
    if len(parts) == 1:
        return FormalCharacter._raw(group, dict(parts[0]))
    from .charring import outer_product
    return outer_product(group, parts)


def irr_dim(group: GroupShape, lam, p: int, db: ModularDB) -> int:
    lam = tuple(lam)
    if p == 0:
        return weyl_dim(group, lam)
    out = 1
    for t, w in zip(group.components, group.split(lam)):
        out *= sum(_simple_irr(t, p, w, db).values())
    return out


def _irr_dominant(group: GroupShape, lam: tuple, p: int, db: ModularDB) -> dict:
    parts = [_simple_irr_dominant(t, p, w, db) for t, w in zip(group.components, group.split(lam))]
    if len(parts) == 1:
        return parts[0]
    out = {}
    for combo in product(*[list(q.items()) for q in parts]):
        w = tuple(x for wk in combo for x in wk[0])
        k = 1
        for wk in combo:
            k *= wk[1]
        out[w] = k
    return out


def decompose(a: FormalCharacter, p: int, db: ModularDB) -> FactorMultiset:
    """Composition factors of a character: peel the dominant weight of
    largest coroot height (ties broken by the lexicographically largest)."""
    _check_p(p)
    g = a.group
    rest = a.dominant_part()
    heights = {w: shape_height(g, w) for w in rest}
    out: dict = {}
    while rest:
        lam = max(rest, key=lambda w: (heights[w], w))
        c = rest[lam]
        if c < 0:
            raise InconsistentDatabaseError(
                f"negative multiplicity {c} at {format_weight(g, lam)} while decomposing")
        out[lam] = c
        for w, k in _irr_dominant(g, lam, p, db).items():
            v = rest.get(w, 0) - c * k
            if v:
                rest[w] = v
                if w not in heights:
                    heights[w] = shape_height(g, w)
            else:
                rest.pop(w, None)
    return FactorMultiset(g, out)


def weyl_factors(group: GroupShape, lam, p: int, db: ModularDB) -> FactorMultiset:
    return decompose(weyl_character(group, lam), p, db)


def compose_factors(f: FactorMultiset, p: int, db: ModularDB) -> FormalCharacter:
    """The character sum of a factor multiset."""
    acc = FormalCharacter(f.group)
    for w, k in f.items():
        acc = acc + irr_char(f.group, w, p, db).scaled(k)
    return acc


# ----------------------------------------------------------------- expressions


def twist_value(sym: str, twists: dict) -> int:
    """Value of a twist exponent such as ``"2"``, ``"r"`` or ``"r+1"``."""
    if re.fullmatch(r"\d+", sym):
        return int(sym)
    m = re.fullmatch(r"([a-z])(?:\+(\d+))?", sym)
    if not m:
        raise ValueError(f"cannot read twist {sym!r}")
    if m.group(1) not in twists:
        raise ValueError(f"twist symbol {m.group(1)!r} has no value")
    return twists[m.group(1)] + int(m.group(2) or 0)


def evaluate(expr, group: GroupShape, p: int, db: ModularDB, twists: dict | None = None) -> FormalCharacter:
    """Character of a factor-list expression (see :mod:`irrsub.notation`)."""
    node = expr if isinstance(expr, Node) else parse_factor_list(expr, len(group.components))
    return _eval(node, group, p, db, twists or {})


def _eval(node: Node, group: GroupShape, p: int, db: ModularDB, twists: dict) -> FormalCharacter:
    if node.kind == "sum":
        acc = FormalCharacter(group)
        for ch in node.children:
            acc = acc + _eval(ch, group, p, db, twists)
        val = acc
    elif node.kind == "tensor":
        val = trivial_character(group)
        for ch in node.children:
            val = tensor(val, _eval(ch, group, p, db, twists))
    elif node.kind == "tuple":
        from .charring import outer_product
        parts = []
        for ch, t in zip(node.children, group.components):
            sub = GroupShape((t,), group.p)
            parts.append(_eval(ch, sub, p, db, twists).items())
        val = outer_product(group, parts)
    elif node.kind in ("weyl", "irr"):
        lam = parse_weight(group, node.label) if len(group.components) > 1 else \
            parse_component(node.label, group.rank)
        val = weyl_character(group, lam) if node.kind == "weyl" else irr_char(group, lam, p, db)
    else:
        raise ValueError(f"unknown node kind {node.kind}")
    if node.twist:
        val = frobenius_twist(val, twist_value(node.twist, twists), p)
    if node.mult != 1:
        val = val.scaled(node.mult)
    return val
