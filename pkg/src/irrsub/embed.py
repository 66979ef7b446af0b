"""Embeddings between semisimple groups and restriction along them.

Three kinds of embedding share one interface (``source``, ``target``,
``restrict``):

* :class:`WeightMap` - an integer matrix taking source weights to subgroup
  weights (subsystems, diagonals with twists, classical embeddings).
* :class:`Transporter` - where each source Weyl module lands, for subgroups
  with no weight map in hand.  A source character is first written as an
  integer combination of Weyl characters.
* :class:`Composite` - a chain, restricted step by step.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .charring import (
    FormalCharacter,
    dual,
    dual_weight,
    outer_product,
    trivial_character,
    weyl_character,
    weyl_coefficients,
)
from .modular import FactorMultiset, ModularDB, decompose, evaluate, irr_char
from .rootsys import (
    DiagramAut,
    GroupShape,
    RootDatum,
    SimpleType,
    build_root_datum,
    graph_aut,
    identify_components,
    special_isogeny,
)

__all__ = [
    "WeightMap",
    "Transporter",
    "Composite",
    "FactorwiseMap",
    "DiagonalSpec",
    "identity_embedding",
    "subsystem_embedding",
    "diagonal_embedding",
    "factor_projection",
    "product_embedding",
    "classical_embedding",
    "relabel_embedding",
    "transporter_from_table",
    "restrict_character",
    "restrict_factors",
    "compose_embeddings",
    "is_classical_irreducible",
    "aut_from_image",
]


@dataclass(frozen=True)
class WeightMap:
    """``target_w[j] = sum_i matrix[j][i] * source_w[i]``."""

    source: GroupShape
    target: GroupShape
    matrix: tuple
    name: str = ""

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(m) != self.target.rank or any(len(r) != self.source.rank for r in m):
            raise ValueError(f"weight map {self.name!r} has the wrong shape")
        object.__setattr__(self, "matrix", m)

    def apply(self, w) -> tuple:
        return tuple(sum(a * x for a, x in zip(row, w)) for row in self.matrix)

    def restrict(self, a: FormalCharacter, p: int = 0, db: ModularDB | None = None) -> FormalCharacter:
        if not a.group.same_group(self.source):
            raise ValueError(f"character of {a.group} cannot restrict along {self.source} -> {self.target}")
        m: dict = defaultdict(int)
        rows = self.matrix
        for w, k in a.items():
            m[tuple(sum(c * x for c, x in zip(row, w)) for row in rows)] += k
        return FormalCharacter(self.target, m)


@dataclass(frozen=True)
class Transporter:
    """Images of the source Weyl modules, keyed by highest weight."""

    source: GroupShape
    target: GroupShape
    entries: dict = field(hash=False)
    name: str = ""

    def restrict(self, a: FormalCharacter, p: int = 0, db: ModularDB | None = None) -> FormalCharacter:
        if not a.group.same_group(self.source):
            raise ValueError(f"character of {a.group} cannot restrict along {self.name}")
        acc = FormalCharacter(self.target)
        for lam, c in weyl_coefficients(a).items():
            img = self.entries.get(lam)
            if img is None:
                raise KeyError(f"transporter {self.name!r} has no entry for {lam}")
            acc = acc + img.scaled(c)
        return acc


@dataclass(frozen=True)
class Composite:
    steps: tuple
    name: str = ""

    def __post_init__(self):
        for a, b in zip(self.steps, self.steps[1:]):
            if not a.target.same_group(b.source):
                raise ValueError("composite chain endpoints do not match")

    @property
    def source(self):
        return self.steps[0].source

    @property
    def target(self):
        return self.steps[-1].target

    def restrict(self, a: FormalCharacter, p: int = 0, db: ModularDB | None = None) -> FormalCharacter:
        for s in self.steps:
            a = s.restrict(a, p, db)
        return a


@dataclass(frozen=True)
class DiagonalSpec:
    """Per-factor (exponent, graph morphism) of a diagonal subgroup of H^k."""

    factors: tuple  # of (r, DiagramAut)
    p: int = 0

    @property
    def k(self) -> int:
        return len(self.factors)


def identity_embedding(shape: GroupShape) -> WeightMap:
    n = shape.rank
    return WeightMap(shape, shape, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), "id")


def subsystem_embedding(ambient: RootDatum, roots, name: str = "") -> WeightMap:
    """Weight map to a subsystem subgroup given by simple roots.

    ``roots`` is either a flat list of ambient roots (components and their
    Bourbaki order are then identified automatically) or a list of
    ``(SimpleType, roots)`` pairs used as given.
    """
    roots = list(roots)
    if roots and isinstance(roots[0], tuple) and len(roots[0]) == 2 and isinstance(roots[0][0], SimpleType):
        comps = [(t, tuple(tuple(r) for r in rs)) for t, rs in roots]
        for t, rs in comps:
            got = identify_components(ambient, rs)
            if len(got) != 1 or got[0][0] != t or _cartan_of(ambient, rs) != build_root_datum(t).cartan:
                raise ValueError(f"roots {rs} are not a Bourbaki-ordered base of {t}")
    else:
        comps = identify_components(ambient, roots)
    rows = []
    for _, rs in comps:
        for r in rs:
            rows.append(ambient.coroot(r))
    tgt = GroupShape(tuple(t for t, _ in comps))
    src = GroupShape((ambient.type,))
    return WeightMap(src, tgt, tuple(rows), name or f"{ambient.type}>{tgt}")


def _cartan_of(d: RootDatum, rs) -> tuple:
    wts = [d.root_to_weight(r) for r in rs]
    cor = [d.coroot(r) for r in rs]
    return tuple(tuple(sum(x * y for x, y in zip(wts[i], cor[j])) for j in range(len(rs)))
                 for i in range(len(rs)))


def aut_from_image(t: SimpleType, image, p: int = 0, name: str = "") -> DiagramAut:
    """The graph morphism of ``t`` sending l1 to ``image``.

    ``name`` selects among several with the same image (``"iota"`` for D4).
    Special isogenies are used when the image is not a fundamental weight.
    """
    image = tuple(image)
    if name:
        if name == "special":
            return special_isogeny(t)
        aut = graph_aut(t, name)
        if aut(_unit(t, 0)) != image:
            raise ValueError(f"{name} does not send l1 to {image}")
        return aut
    from .rootsys import graph_automorphisms
    for aut in graph_automorphisms(t):
        if aut(_unit(t, 0)) == image:
            return aut
    try:
        sp = special_isogeny(t)
    except ValueError:
        sp = None
    if sp is not None and sp.target == t:
        for aut in graph_automorphisms(t):
            cand = sp.then(aut)
            if cand(_unit(t, 0)) == image:
                return cand
    raise ValueError(f"no graph morphism of {t} sends l1 to {image}")


def _unit(t: SimpleType, i: int) -> tuple:
    return tuple(int(j == i) for j in range(t.rank))


def diagonal_embedding(spec: DiagonalSpec, factor: SimpleType) -> WeightMap:
    n = factor.rank
    src = GroupShape((factor,) * spec.k)
    cols = []
    for r, aut in spec.factors:
        if aut.p and spec.p != aut.p:
            raise ValueError(f"graph morphism {aut.name} needs p={aut.p}")
        if r and spec.p == 0:
            raise ValueError("twisted diagonal factors need p > 0")
        q = spec.p ** r if r else 1
        for j in range(n):
            cols.append(tuple(q * x for x in aut.matrix[j]))
    matrix = tuple(tuple(col[i] for col in cols) for i in range(n))
    return WeightMap(src, GroupShape((factor,)), matrix, "diagonal")


def factor_projection(shape: GroupShape, indices) -> WeightMap:
    """Restriction from a product to the sub-product of the given factors."""
    if isinstance(indices, int):
        indices = [indices]
    sl = shape.slices()
    rows = []
    for i in indices:
        for j in range(sl[i].start, sl[i].stop):
            rows.append(tuple(int(c == j) for c in range(shape.rank)))
    tgt = GroupShape(tuple(shape.components[i] for i in indices))
    return WeightMap(shape, tgt, tuple(rows), f"factors{tuple(indices)}")


@dataclass(frozen=True)
class FactorwiseMap:
    """Product of embeddings of the factors of a product group, at least one
    of which is not a weight map.  Characters are split into Weyl
    characters of the product and each tensor factor is restricted on its
    own."""

    maps: tuple
    name: str = ""

    @property
    def source(self) -> GroupShape:
        return GroupShape(tuple(t for m in self.maps for t in m.source.components))

    @property
    def target(self) -> GroupShape:
        return GroupShape(tuple(t for m in self.maps for t in m.target.components))

    def restrict(self, a: FormalCharacter, p: int = 0, db: ModularDB | None = None) -> FormalCharacter:
        src = self.source
        if not a.group.same_group(src):
            raise ValueError(f"character of {a.group} cannot restrict along {self.name}")
        tgt = self.target
        cache: list = [dict() for _ in self.maps]
        acc: dict = defaultdict(int)
        for lam, c in weyl_coefficients(a).items():
            parts = []
            for i, (m, w) in enumerate(zip(self.maps, src_split(src, self.maps, lam))):
                img = cache[i].get(w)
                if img is None:
                    img = m.restrict(weyl_character(m.source, w), p, db)
                    cache[i][w] = img
                parts.append(img.items())
            for w, k in outer_product(tgt, parts).items():
                acc[w] += c * k
        return FormalCharacter(tgt, acc)


def src_split(shape: GroupShape, maps, lam) -> list:
    out, off = [], 0
    for m in maps:
        n = m.source.rank
        out.append(tuple(lam[off:off + n]))
        off += n
    return out


def product_embedding(maps):
    """Product of embeddings on the factors of a product: a block-diagonal
    weight map when every factor map is one, else a :class:`FactorwiseMap`."""
    maps = list(maps)
    if not all(isinstance(m, WeightMap) for m in maps):
        return FactorwiseMap(tuple(maps), "product")
    src_comps, tgt_comps, blocks = [], [], []
    for m in maps:
        src_comps.extend(m.source.components)
        tgt_comps.extend(m.target.components)
        blocks.append(m)
    ns = sum(m.source.rank for m in maps)
    rows = []
    off = 0
    for m in blocks:
        for row in m.matrix:
            rows.append((0,) * off + row + (0,) * (ns - off - len(row)))
        off += m.source.rank
    return WeightMap(GroupShape(tuple(src_comps)), GroupShape(tuple(tgt_comps)), tuple(rows), "product")


def relabel_embedding(shape: GroupShape, perm, auts=None) -> WeightMap:
    """Permute the factors of a product and apply graph automorphisms.

    Factor ``perm[j]`` of the source becomes factor ``j`` of the target,
    after ``auts[perm[j]]`` (a DiagramAut or ``None``) is applied to it.
    """
    auts = list(auts or [None] * len(shape.components))
    sl = shape.slices()
    tgt = GroupShape(tuple(shape.components[i] for i in perm))
    rows = []
    for i in perm:
        t = shape.components[i]
        aut = auts[i] or graph_aut(t)
        s = sl[i]
        for j in range(t.rank):
            row = [0] * shape.rank
            for k in range(t.rank):
                row[s.start + k] = aut.matrix[k][j]
            rows.append(tuple(row))
    return WeightMap(shape, tgt, tuple(rows), "relabel")


def _pair_weights(natural: FormalCharacter) -> tuple:
    """Split a self-dual weight multiset into (one of each +-pair, zero count)."""
    rest = dict(natural.items())
    zeros = rest.pop((0,) * natural.group.rank, 0)
    chosen = []
    for w in sorted(rest):
        k = rest.get(w, 0)
        if k <= 0:
            continue
        neg = tuple(-x for x in w)
        if rest.get(neg, 0) != k:
            raise ValueError("natural character is not self-dual")
        chosen.extend([w] * k)
        rest[w] = 0
        rest[neg] = 0
    return chosen, zeros


def classical_embedding(family: str, x: GroupShape, natural: FormalCharacter,
                        spin_flip: bool = False, name: str = "") -> WeightMap:
    """Weight map from SL/SO/Sp of the given natural character to ``x``.

    ``family`` is ``"A"``, ``"B"``, ``"C"`` or ``"D"``.  For ``"D"``,
    ``spin_flip`` changes the sign of one weight, which swaps the images of
    the two half-spin weights.
    """
    if not natural.group.same_group(x):
        raise ValueError("natural character must belong to the subgroup")
    if natural.is_virtual():
        raise ValueError("natural character must be genuine")
    rk = x.rank
    zero = (0,) * rk
    if family == "A":
        ws = sorted(w for w, k in natural.items() for _ in range(k))
        n = len(ws) - 1
        imgs = []
        acc = list(zero)
        for k in range(n):
            acc = [a + b for a, b in zip(acc, ws[k])]
            imgs.append(tuple(acc))
        t = SimpleType("A", n)
    else:
        ws, zeros = _pair_weights(natural)
        if family == "B":
            if zeros % 2 != 1:
                raise ValueError("odd orthogonal natural module needs an odd zero count")
            ws = ws + [zero] * (zeros // 2)
        else:
            if zeros % 2:
                raise ValueError("natural module needs an even zero count")
            ws = ws + [zero] * (zeros // 2)
        n = len(ws)
        if family == "D" and spin_flip:
            ws = ws[:-1] + [tuple(-c for c in ws[-1])]
        t = SimpleType(family, n)
        pref = []
        acc = list(zero)
        for w in ws:
            acc = [a + b for a, b in zip(acc, w)]
            pref.append(tuple(acc))

        def half(v):
            if any(c % 2 for c in v):
                raise ValueError("spin weight is not integral on the subgroup")
            return tuple(c // 2 for c in v)

        if family == "C":
            imgs = pref
        elif family == "B":
            imgs = pref[:-1] + [half(pref[-1])]
        else:
            last = ws[-1]
            imgs = pref[:-2] + [half(tuple(a - 2 * b for a, b in zip(pref[-1], last))),
                                half(pref[-1])]
    matrix = tuple(tuple(img[j] for img in imgs) for j in range(rk))
    return WeightMap(GroupShape((t,)), x, matrix, name or f"{t}>{x}")


def is_classical_irreducible(family: str, factors: FactorMultiset) -> bool:
    """Irreducibility of a subgroup of a classical group, read off the
    composition factors of the natural module: one factor for SL; for
    SO/Sp, the factors must be multiplicity free and each self-dual."""
    items = list(factors.items())
    if family == "A":
        return len(items) == 1 and items[0][1] == 1
    g = factors.group
    return all(k == 1 and dual_weight(g, w) == w for w, k in items)


def transporter_from_table(source: GroupShape, target: GroupShape, table: dict, p: int,
                           db: ModularDB, name: str = "") -> Transporter:
    """Build a transporter from ``{source label: factor-list expression}``.

    Expressions are evaluated at the given characteristic.  Duals of the
    listed labels and the trivial module are added automatically.
    """
    entries = {(0,) * source.rank: trivial_character(target)}
    for lam, expr in table.items():
        ch = expr if isinstance(expr, FormalCharacter) else evaluate(expr, target, p, db)
        lam = tuple(lam)
        entries[lam] = ch
        dl = dual_weight(source, lam)
        if dl not in entries:
            entries[dl] = dual(ch)
    for lam, ch in entries.items():
        exp = weyl_character(source, lam).dim
        if ch.dim != exp:
            raise ValueError(f"transporter {name!r}: entry {lam} has dimension {ch.dim}, "
                             f"expected {exp}")
    return Transporter(source, target, entries, name)


def restrict_character(a: FormalCharacter, e, p: int = 0, db: ModularDB | None = None) -> FormalCharacter:
    out = e.restrict(a, p, db)
    if out.dim != a.dim:
        raise AssertionError("restriction changed the dimension")
    return out


def restrict_factors(f: FactorMultiset, e, p: int, db: ModularDB) -> FactorMultiset:
    acc = FactorMultiset(e.target)
    for lam, k in f.items():
        ch = restrict_character(irr_char(f.group, lam, p, db), e, p, db)
        acc = acc + decompose(ch, p, db).scaled(k)
    return acc


def compose_embeddings(outer, inner):
    """``outer``: G -> H followed by ``inner``: H -> X."""
    if not outer.target.same_group(inner.source):
        raise ValueError("embedding endpoints do not match")
    if isinstance(outer, WeightMap) and isinstance(inner, WeightMap):
        m = tuple(
            tuple(sum(inner.matrix[j][k] * outer.matrix[k][i] for k in range(outer.target.rank))
                  for i in range(outer.source.rank))
            for j in range(inner.target.rank)
        )
        return WeightMap(outer.source, inner.target, m, f"{outer.name}|{inner.name}")
    if isinstance(outer, Transporter) and not isinstance(inner, Transporter):
        entries = {lam: inner.restrict(ch) for lam, ch in outer.entries.items()}
        return Transporter(outer.source, inner.target, entries, f"{outer.name}|{inner.name}")
    steps = []
    for e in (outer, inner):
        steps.extend(e.steps if isinstance(e, Composite) else [e])
    return Composite(tuple(steps))
