"""Formal characters of semisimple groups.

A character is stored as its full weight multiset.  Weyl-module characters
come from Freudenthal's recursion on dominant weights followed by orbit
expansion; characters of products are outer products of the factors.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations, product

from . import kernels
from .rootsys import GroupShape, SimpleType, build_root_datum, orbit_tuple, to_dominant

__all__ = [
    "FormalCharacter",
    "weyl_character",
    "weyl_dim",
    "dominant_weyl_multiplicities",
    "tensor",
    "alt_power",
    "sym_power",
    "dual",
    "dual_weight",
    "subtract",
    "outer_product",
    "trivial_character",
    "weyl_coefficients",
    "is_dominant",
    "shape_height",
]


class FormalCharacter:
    """A finite multiset of weights of a fixed group.

    Multiplicities are nonzero integers; virtual characters (negative
    entries) are allowed as intermediate values but every operation that
    expects a genuine module says so.
    """

    __slots__ = ("group", "_m", "_dim")

    def __init__(self, group: GroupShape, mults=None):
        self.group = group
        m = {}
        if mults:
            for w, k in dict(mults).items():
                if k:
                    m[tuple(w)] = k
        self._m = m
        self._dim = None

    @classmethod
    def _raw(cls, group, m):
        obj = cls.__new__(cls)
        obj.group = group
        obj._m = m
        obj._dim = None
        return obj

    @property
    def dim(self) -> int:
        if self._dim is None:
            self._dim = sum(self._m.values())
        return self._dim

    def __len__(self):
        return len(self._m)

    def __iter__(self):
        return iter(self._m)

    def __contains__(self, w):
        return tuple(w) in self._m

    def mult(self, w) -> int:
        return self._m.get(tuple(w), 0)

    def items(self):
        return self._m.items()

    def weights(self):
        return self._m.keys()

    def as_dict(self) -> dict:
        return dict(self._m)

    def is_empty(self) -> bool:
        return not self._m

    def is_virtual(self) -> bool:
        return any(k < 0 for k in self._m.values())

    def dominant_part(self) -> dict:
        return {w: k for w, k in self._m.items() if is_dominant(w)}

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.group.same_group(other.group) and self._m == other._m

    def __hash__(self):
        return hash((self.group.components, frozenset(self._m.items())))

    def __add__(self, other):
        _check_same(self, other)
        m = dict(self._m)
        for w, k in other._m.items():
            v = m.get(w, 0) + k
            if v:
                m[w] = v
            else:
                m.pop(w, None)
        return FormalCharacter._raw(self.group, m)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c: int) -> "FormalCharacter":
        if c == 0:
            return FormalCharacter(self.group)
        return FormalCharacter._raw(self.group, {w: c * k for w, k in self._m.items()})

    def map_weights(self, f, group: GroupShape | None = None) -> "FormalCharacter":
        m: dict = defaultdict(int)
        for w, k in self._m.items():
            m[f(w)] += k
        return FormalCharacter(group or self.group, m)

    def __repr__(self):
        return f"FormalCharacter({self.group}, dim={self.dim}, weights={len(self._m)})"


def _check_same(a: FormalCharacter, b: FormalCharacter):
    if not a.group.same_group(b.group):
        raise ValueError(f"group mismatch: {a.group} vs {b.group}")


def is_dominant(w) -> bool:
    return all(x >= 0 for x in w)


def trivial_character(group: GroupShape) -> FormalCharacter:
    return FormalCharacter._raw(group, {(0,) * group.rank: 1})


@lru_cache(maxsize=None)
def dominant_weyl_multiplicities(t: SimpleType, lam: tuple) -> dict:
    """Dominant weight multiplicities of the Weyl module W(lam) of a simple type."""
    d = build_root_datum(t)
    if len(lam) != d.rank or not is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant weight of {t}")
    return kernels.dominant_multiplicities(
        d.cartan, d.norms, d.positive_roots, d.roots_fund, tuple(lam)
    )


@lru_cache(maxsize=4096)
def _simple_weyl_full(t: SimpleType, lam: tuple) -> tuple:
    d = build_root_datum(t)
    out = []
    for mu, k in dominant_weyl_multiplicities(t, lam).items():
        out.extend((w, k) for w in orbit_tuple(d, mu))
    return tuple(out)


def outer_product(group: GroupShape, parts) -> FormalCharacter:
    """Character of a product group from per-component weight->mult dicts."""
    m: dict = {}
    lists = [list(p.items()) if isinstance(p, dict) else list(p) for p in parts]
    for combo in product(*lists):
        w = tuple(x for wk in combo for x in wk[0])
        k = 1
        for wk in combo:
            k *= wk[1]
        m[w] = m.get(w, 0) + k
    return FormalCharacter(group, m)


def weyl_character(group: GroupShape, lam) -> FormalCharacter:
    lam = tuple(lam)
    if len(lam) != group.rank:
        raise ValueError(f"weight {lam} has wrong length for {group}")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    parts = [_simple_weyl_full(t, w) for t, w in zip(group.components, group.split(lam))]
    if len(parts) == 1:
        return FormalCharacter._raw(group, dict(parts[0]))
    return outer_product(group, parts)


def _simple_weyl_dim(t: SimpleType, lam) -> int:
    d = build_root_datum(t)
    num = den = 1
    for v in d.coroots:
        num *= sum((x + 1) * c for x, c in zip(lam, v))
        den *= sum(v)
    return num // den


def weyl_dim(group: GroupShape, lam) -> int:
    lam = tuple(lam)
    if len(lam) != group.rank or not is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant weight of {group}")
    out = 1
    for t, w in zip(group.components, group.split(lam)):
        out *= _simple_weyl_dim(t, w)
    return out


def tensor(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    _check_same(a, b)
    m: dict = defaultdict(int)
    bi = list(b.items())
    for w, k in a.items():
        for v, l in bi:
            m[tuple(x + y for x, y in zip(w, v))] += k * l
    return FormalCharacter(a.group, m)


def _adams(a: FormalCharacter, i: int) -> FormalCharacter:
    return FormalCharacter._raw(a.group, {tuple(i * x for x in w): k for w, k in a.items()})


def _power_series(a: FormalCharacter, k: int, sign: int) -> FormalCharacter:
    """Elementary (sign=-1) or complete (sign=+1) symmetric power via Newton."""
    terms = [trivial_character(a.group)]
    for n in range(1, k + 1):
        acc: dict = defaultdict(int)
        for i in range(1, n + 1):
            c = 1 if sign > 0 else (-1) ** (i - 1)
            t = tensor(terms[n - i], _adams(a, i))
            for w, m in t.items():
                acc[w] += c * m
        out = {}
        for w, m in acc.items():
            if m % n:
                raise ArithmeticError("Newton recurrence lost integrality")
            if m:
                out[w] = m // n
        terms.append(FormalCharacter._raw(a.group, out))
    return terms[k]


def alt_power(a: FormalCharacter, k: int) -> FormalCharacter:
    if a.is_virtual():
        raise ValueError("exterior powers need a genuine character")
    if not 0 <= k <= a.dim:
        raise ValueError(f"k={k} out of range 0..{a.dim}")
    if k == 0:
        return trivial_character(a.group)
    if k <= 4:
        flat = [w for w, m in a.items() for _ in range(m)]
        acc: dict = defaultdict(int)
        for sub in combinations(flat, k):
            acc[tuple(map(sum, zip(*sub)))] += 1
        return FormalCharacter(a.group, acc)
    return _power_series(a, k, -1)


def sym_power(a: FormalCharacter, k: int) -> FormalCharacter:
    if a.is_virtual():
        raise ValueError("symmetric powers need a genuine character")
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return trivial_character(a.group)
    return _power_series(a, k, 1)


def dual_weight(group: GroupShape, w) -> tuple:
    """Highest weight of the dual of the irreducible with highest weight ``w``."""
    out = []
    for t, part in zip(group.components, group.split(tuple(w))):
        out.extend(to_dominant(build_root_datum(t), tuple(-x for x in part)))
    return tuple(out)


def dual(a: FormalCharacter) -> FormalCharacter:
    return FormalCharacter._raw(a.group, {tuple(-x for x in w): k for w, k in a.items()})


def subtract(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    """Exact difference ``a - b``; raises if ``b`` is not contained in ``a``."""
    _check_same(a, b)
    m = dict(a._m)
    for w, k in b.items():
        v = m.get(w, 0) - k
        if v < 0:
            raise ValueError(f"negative multiplicity at weight {w}")
        if v:
            m[w] = v
        else:
            m.pop(w, None)
    return FormalCharacter._raw(a.group, m)


def shape_height(group: GroupShape, w) -> int:
    """Sum of the coroot heights of the components of ``w``."""
    return sum(
        build_root_datum(t).height(part) for t, part in zip(group.components, group.split(w))
    )


def _peel_key(group: GroupShape):
    def key(w):
        return (shape_height(group, w), w)
    return key


def weyl_coefficients(a: FormalCharacter) -> dict:
    """Express a (possibly virtual) character as an integer combination of
    Weyl characters.  Returns ``{dominant weight: coefficient}``."""
    rest = dict(a.dominant_part())
    out = {}
    key = _peel_key(a.group)
    while rest:
        lam = max(rest, key=key)
        c = rest[lam]
        out[lam] = c
        for mu, k in _dominant_of_weyl(a.group, lam).items():
            v = rest.get(mu, 0) - c * k
            if v:
                rest[mu] = v
            else:
                rest.pop(mu, None)
    return out


def _dominant_of_weyl(group: GroupShape, lam: tuple) -> dict:
    parts = [dominant_weyl_multiplicities(t, w) for t, w in zip(group.components, group.split(lam))]
    out = {}
    for combo in product(*[list(p.items()) for p in parts]):
        w = tuple(x for wk in combo for x in wk[0])
        k = 1
        for wk in combo:
            k *= wk[1]
        out[w] = k
    return out

