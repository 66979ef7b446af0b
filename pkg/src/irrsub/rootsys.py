"""Root systems of the simple types and their products.

Simple roots are indexed in Bourbaki order.  Weights are integer tuples in
fundamental-weight coordinates; roots are integer tuples in simple-root
coordinates.  The Cartan matrix is stored with ``cartan[i][j] = <a_i, a_j^v>``,
so row ``i`` is the simple root ``a_i`` written in fundamental coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import re

__all__ = [
    "SimpleType",
    "GroupShape",
    "RootDatum",
    "DiagramAut",
    "build_root_datum",
    "weyl_orbit",
    "to_dominant",
    "apply_diagram_aut",
    "graph_automorphisms",
    "graph_aut",
    "special_isogeny",
    "borel_de_siebenthal",
    "identify_components",
    "find_bases",
    "is_prime",
]

FAMILIES = "ABCDEFG"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple Cartan type such as ``E6`` or ``B4``."""

    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in FAMILIES or not isinstance(n, int):
            raise ValueError(f"unknown type {f}{n}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not ok:
            raise ValueError(f"invalid rank {n} for family {f}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse simple type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self) -> str:
        return f"SimpleType({self})"


@dataclass(frozen=True)
class GroupShape:
    """An ordered product of simple types, with a field characteristic.

    ``p == 0`` stands for characteristic zero.  Characters only look at the
    components; the characteristic is carried along for callers that need it.
    """

    components: tuple
    p: int = 0

    def __post_init__(self):
        comps = tuple(
            c if isinstance(c, SimpleType) else SimpleType.parse(c)
            for c in self.components
        )
        if not comps:
            raise ValueError("a group shape needs at least one component")
        if self.p != 0 and not is_prime(self.p):
            raise ValueError(f"characteristic must be 0 or prime, got {self.p}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def parse(cls, text: str, p: int = 0) -> "GroupShape":
        """Parse ``"E6"``, ``"A2A5"``, ``"A2^3"`` or ``"A2,G2"``."""
        comps = []
        for m in re.finditer(r"([A-Ga-g])(\d)(?:\^(\d+))?", text.replace(",", "")):
            t = SimpleType(m.group(1).upper(), int(m.group(2)))
            comps.extend([t] * int(m.group(3) or 1))
        if not comps or re.sub(r"[A-Ga-g]\d(\^\d+)?|[,\s]", "", text):
            raise ValueError(f"cannot parse group {text!r}")
        return cls(tuple(comps), p)

    @property
    def ranks(self) -> tuple:
        return tuple(c.rank for c in self.components)

    @property
    def rank(self) -> int:
        return sum(self.ranks)

    def slices(self) -> list:
        out, k = [], 0
        for n in self.ranks:
            out.append(slice(k, k + n))
            k += n
        return out

    def split(self, w) -> list:
        return [tuple(w[s]) for s in self.slices()]

    def data(self) -> list:
        return [build_root_datum(c) for c in self.components]

    def with_p(self, p: int) -> "GroupShape":
        return GroupShape(self.components, p)

    def same_group(self, other: "GroupShape") -> bool:
        return self.components == other.components

    def __str__(self) -> str:
        return "".join(str(c) for c in self.components)


def _cartan(t: SimpleType) -> list:
    n, f = t.rank, t.family
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, ij=-1, ji=-1):
        a[i][j], a[j][i] = ij, ji

    if f in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B":
            link(n - 2, n - 1, -2, -1)
        elif f == "C":
            link(n - 2, n - 1, -1, -2)
    elif f == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif f == "G":
        link(0, 1, -1, -3)
    return a


def _norms(t: SimpleType) -> tuple:
    """Twice the squared lengths of the simple roots (short roots get 2)."""
    n, f = t.rank, t.family
    if f == "B":
        return (4,) * (n - 1) + (2,)
    if f == "C":
        return (2,) * (n - 1) + (4,)
    if f == "F":
        return (4, 4, 2, 2)
    if f == "G":
        return (2, 6)
    return (2,) * n


@dataclass(frozen=True)
class RootDatum:
    """Cartan data and positive roots of one simple type."""

    type: SimpleType
    cartan: tuple
    norms: tuple
    positive_roots: tuple
    rho: tuple
    # derived tables, filled in by build_root_datum
    roots_fund: tuple = field(repr=False, default=())
    coroots: tuple = field(repr=False, default=())
    height_vector: tuple = field(repr=False, default=())

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def highest_root(self) -> tuple:
        return self.positive_roots[-1]

    def root_norm(self, beta) -> int:
        """Twice the squared length of ``beta`` (simple-root coordinates)."""
        n = self.rank
        return sum(
            beta[i] * beta[j] * self.cartan[i][j] * self.norms[j] // 2
            for i in range(n)
            for j in range(n)
        )

    def root_to_weight(self, beta) -> tuple:
        n = self.rank
        return tuple(sum(beta[i] * self.cartan[i][j] for i in range(n)) for j in range(n))

    def coroot(self, beta) -> tuple:
        """Vector ``v`` with ``<mu, beta^v> = sum(mu[j] * v[j])``."""
        nb = self.root_norm(beta)
        out = []
        for c, nj in zip(beta, self.norms):
            q, r = divmod(c * nj, nb)
            if r:
                raise ValueError(f"{beta} is not a root of {self.type}")
            out.append(q)
        return tuple(out)

    def is_root(self, beta) -> bool:
        beta = tuple(beta)
        return beta in _root_set(self.type)

    def all_roots(self) -> tuple:
        return self.positive_roots + tuple(tuple(-c for c in r) for r in self.positive_roots)

    def reflect(self, w, i: int) -> tuple:
        k = w[i]
        if k == 0:
            return tuple(w)
        row = self.cartan[i]
        return tuple(x - k * a for x, a in zip(w, row))

    def height(self, w) -> int:
        """Coroot height <w, 2 rho^v>; strictly monotone in dominance order."""
        return sum(x * h for x, h in zip(w, self.height_vector))

    def weight_to_root_coords(self, w) -> tuple:
        """Rational simple-root coordinates of a weight."""
        inv = _inverse_cartan(self.type)
        n = self.rank
        return tuple(sum(w[j] * inv[j][i] for j in range(n)) for i in range(n))

    def inner(self, u, v) -> Fraction:
        """Normalized form (short roots of length^2 = 1 in doubled units / 2)."""
        uc = self.weight_to_root_coords(u)
        return sum(uc[i] * v[i] * Fraction(self.norms[i], 2) for i in range(self.rank))


@lru_cache(maxsize=None)
def _inverse_cartan(t: SimpleType) -> tuple:
    a = [[Fraction(x) for x in row] for row in _cartan(t)]
    n = len(a)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def _positive_roots(cartan) -> list:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pair = sum(beta[j] * cartan[j][i] for j in range(n))
                # length of the i-string below beta
                down, b = 0, list(beta)
                while True:
                    b[i] -= 1
                    if tuple(b) in roots:
                        down += 1
                    else:
                        break
                if down - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_datum(t: SimpleType) -> RootDatum:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    cartan = tuple(tuple(r) for r in _cartan(t))
    norms = _norms(t)
    pos = tuple(_positive_roots(cartan))
    d = RootDatum(t, cartan, norms, pos, (1,) * t.rank)
    fund = tuple(d.root_to_weight(b) for b in pos)
    cor = tuple(d.coroot(b) for b in pos)
    hv = tuple(sum(c[j] for c in cor) for j in range(t.rank))
    object.__setattr__(d, "roots_fund", fund)
    object.__setattr__(d, "coroots", cor)
    object.__setattr__(d, "height_vector", hv)
    return d


@lru_cache(maxsize=None)
def _root_set(t: SimpleType) -> frozenset:
    return frozenset(build_root_datum(t).all_roots())


def to_dominant(datum: RootDatum, w) -> tuple:
    w = tuple(w)
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = datum.reflect(w, i)
                break
        else:
            return w


@lru_cache(maxsize=200_000)
def _orbit_of_dominant(t: SimpleType, w: tuple) -> tuple:
    d = build_root_datum(t)
    seen = {w}
    stack = [w]
    while stack:
        v = stack.pop()
        for i, x in enumerate(v):
            # walking down from the dominant weight only needs positive coords
            if x > 0:
                u = d.reflect(v, i)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return tuple(sorted(seen))


def weyl_orbit(datum: RootDatum, w) -> frozenset:
    return frozenset(_orbit_of_dominant(datum.type, to_dominant(datum, w)))


def orbit_tuple(datum: RootDatum, dominant_w: tuple) -> tuple:
    """Orbit of an already dominant weight, as a sorted tuple (cached)."""
    return _orbit_of_dominant(datum.type, dominant_w)


# ---------------------------------------------------------------- automorphisms


@dataclass(frozen=True)
class DiagramAut:
    """A linear map on weights coming from a graph morphism.

    ``matrix[i]`` is the image of the i-th fundamental weight.  ``p`` is the
    characteristic the map requires (0 for a genuine graph automorphism).
    """

    source: SimpleType
    target: SimpleType
    matrix: tuple
    p: int = 0
    name: str = ""

    def __call__(self, w) -> tuple:
        return apply_diagram_aut(self, w)

    def then(self, other: "DiagramAut") -> "DiagramAut":
        """Apply ``self`` first, then ``other``."""
        if self.target != other.source:
            raise ValueError("automorphism endpoints do not match")
        if self.p and other.p and self.p != other.p:
            raise ValueError("incompatible characteristics")
        m = tuple(other(img) for img in self.matrix)
        return DiagramAut(self.source, other.target, m, self.p or other.p,
                          f"{other.name}*{self.name}")


def apply_diagram_aut(aut: DiagramAut, w, p: int | None = None) -> tuple:
    if p is not None and aut.p and p != aut.p:
        raise ValueError(f"{aut.name or 'isogeny'} needs p={aut.p}, got p={p}")
    n = aut.target.rank
    out = [0] * n
    for x, img in zip(w, aut.matrix):
        if x:
            for j in range(n):
                out[j] += x * img[j]
    return tuple(out)


def _perm_aut(t: SimpleType, perm, name) -> DiagramAut:
    n = t.rank
    m = tuple(tuple(int(j == perm[i]) for j in range(n)) for i in range(n))
    return DiagramAut(t, t, m, 0, name)


def graph_aut(t: SimpleType, name: str = "") -> DiagramAut:
    """Named graph automorphism: ``"id"``, ``"sigma"`` (the order-2 one),
    and for D4 ``"tau"`` (l1 -> l3 -> l4 -> l1), ``"tau2"`` and ``"iota"``
    (swaps l3 and l4)."""
    n = t.rank
    ident = list(range(n))
    if name in ("", "id"):
        return _perm_aut(t, ident, "id")
    if t.family == "D" and n == 4 and name in ("tau", "tau2", "iota"):
        perm = {"tau": [2, 1, 3, 0], "tau2": [3, 1, 0, 2], "iota": [0, 1, 3, 2]}[name]
        return _perm_aut(t, perm, name)
    if name == "sigma":
        if t.family == "A" and n > 1:
            return _perm_aut(t, ident[::-1], name)
        if t.family == "D":
            perm = ident[:]
            perm[n - 2], perm[n - 1] = n - 1, n - 2
            return _perm_aut(t, perm, name)
        if t == SimpleType("E", 6):
            return _perm_aut(t, [5, 1, 4, 3, 2, 0], name)
    raise ValueError(f"{t} has no graph automorphism {name!r}")


def graph_automorphisms(t: SimpleType) -> list:
    out = [graph_aut(t)]
    if t.family == "D" and t.rank == 4:
        # involutions first: a bare image of l1 names the transposition
        out += [graph_aut(t, "iota"), _perm_aut(t, [2, 1, 0, 3], "iota13"),
                _perm_aut(t, [3, 1, 2, 0], "iota14"), graph_aut(t, "tau"), graph_aut(t, "tau2")]
    elif (t.family == "A" and t.rank > 1) or t.family == "D" or t == SimpleType("E", 6):
        out.append(graph_aut(t, "sigma"))
    return out


def special_isogeny(t: SimpleType, target: SimpleType | None = None) -> DiagramAut:
    """The special isogenies in characteristic 2 or 3, as maps on weights.

    B_n -> C_n and C_n -> B_n (p=2), B2 -> B2 and F4 -> F4 (p=2),
    G2 -> G2 (p=3).  For B_n -> C_n the image of l1 is 2 l1.
    """
    n = t.rank
    if t.family == "B" and (target is None or target.family == "C"):
        tgt = SimpleType("C", n)
        if n == 2 and target is None:
            return DiagramAut(t, t, ((0, 2), (1, 0)), 2, "special")
        m = tuple(tuple((2 if i < n - 1 else 1) * int(i == j) for j in range(n)) for i in range(n))
        return DiagramAut(t, tgt, m, 2, "special")
    if t.family == "C" and (target is None or target.family == "B"):
        tgt = SimpleType("B", n)
        if n == 2 and target is None:
            return DiagramAut(t, t, ((0, 2), (1, 0)), 2, "special")
        m = tuple(tuple((2 if i == n - 1 else 1) * int(i == j) for j in range(n)) for i in range(n))
        return DiagramAut(t, tgt, m, 2, "special")
    if t == SimpleType("F", 4):
        m = ((0, 0, 0, 2), (0, 0, 2, 0), (0, 1, 0, 0), (1, 0, 0, 0))
        return DiagramAut(t, t, m, 2, "special")
    if t == SimpleType("G", 2):
        return DiagramAut(t, t, ((0, 1), (3, 0)), 3, "special")
    raise ValueError(f"{t} has no special isogeny")


# --------------------------------------------------------------- subsystems


def _sub_cartan(datum: RootDatum, roots) -> list:
    cor = [datum.coroot(b) for b in roots]
    wts = [datum.root_to_weight(b) for b in roots]
    return [[sum(x * y for x, y in zip(wts[i], cor[j])) for j in range(len(roots))]
            for i in range(len(roots))]


def _candidate_types(k: int) -> list:
    out = []
    for f in FAMILIES:
        try:
            out.append(SimpleType(f, k))
        except ValueError:
            pass
    return out


def _match_order(sub, target) -> list | None:
    """Order of the nodes of ``sub`` realising the Cartan matrix ``target``."""
    k = len(sub)
    order: list = []
    used = [False] * k

    def rec(pos):
        if pos == k:
            return True
        for v in range(k):
            if used[v] or sub[v][v] != target[pos][pos]:
                continue
            if all(sub[v][order[q]] == target[pos][q] and sub[order[q]][v] == target[q][pos]
                   for q in range(pos)):
                used[v] = True
                order.append(v)
                if rec(pos + 1):
                    return True
                order.pop()
                used[v] = False
        return False

    return order if rec(0) else None


def identify_components(datum: RootDatum, roots) -> list:
    """Split a set of simple roots into components in Bourbaki order.

    Returns ``[(SimpleType, (root, ...)), ...]``; components are listed in the
    order their first root appears.
    """
    roots = [tuple(r) for r in roots]
    for r in roots:
        if not datum.is_root(r):
            raise ValueError(f"{r} is not a root of {datum.type}")
    c = _sub_cartan(datum, roots)
    k = len(roots)
    comp_of = [-1] * k
    comps = []
    for s in range(k):
        if comp_of[s] >= 0:
            continue
        stack, members = [s], []
        comp_of[s] = len(comps)
        while stack:
            v = stack.pop()
            members.append(v)
            for u in range(k):
                if comp_of[u] < 0 and c[v][u] != 0:
                    comp_of[u] = len(comps)
                    stack.append(u)
        comps.append(sorted(members))
    out = []
    for members in comps:
        sub = [[c[i][j] for j in members] for i in members]
        for t in _candidate_types(len(members)):
            order = _match_order(sub, _cartan(t))
            if order is not None:
                out.append((t, tuple(roots[members[o]] for o in order)))
                break
        else:
            raise ValueError("roots do not form a base of a root subsystem")
    return out


def borel_de_siebenthal(datum: RootDatum, node: int) -> list:
    """Delete a node of the extended Dynkin diagram.

    Node 0 is the extra node (the negative highest root); nodes 1..rank are
    the simple roots.  Returns the components of the remaining diagram as
    ``[(SimpleType, simple roots in ambient simple-root coordinates), ...]``.
    """
    n = datum.rank
    if not 0 <= node <= n:
        raise ValueError(f"node {node} out of range 0..{n}")
    lowest = tuple(-c for c in datum.highest_root)
    ext = [lowest] + [tuple(int(i == j) for j in range(n)) for i in range(n)]
    keep = [r for i, r in enumerate(ext) if i != node]
    return identify_components(datum, keep)


def find_bases(datum: RootDatum, target: SimpleType, allowed=None, limit: int = 1) -> list:
    """Search ambient roots for a base of a subsystem of the given type.

    ``allowed`` optionally filters candidate roots.  Returns at most ``limit``
    tuples of roots in Bourbaki order.
    """
    cand = [r for r in datum.all_roots() if allowed is None or allowed(r)]
    tgt = _cartan(target)
    cor = {r: datum.coroot(r) for r in cand}
    wt = {r: datum.root_to_weight(r) for r in cand}
    k = target.rank
    found: list = []
    chosen: list = []

    def pair(a, b):
        return sum(x * y for x, y in zip(wt[a], cor[b]))

    def rec(pos):
        if len(found) >= limit:
            return
        if pos == k:
            found.append(tuple(chosen))
            return
        for r in cand:
            if r in chosen:
                continue
            if all(pair(r, chosen[q]) == tgt[pos][q] and pair(chosen[q], r) == tgt[q][pos]
                   for q in range(pos)):
                chosen.append(r)
                rec(pos + 1)
                chosen.pop()

    rec(0)
    return found
