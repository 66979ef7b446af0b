"""Brute-force reference computations that share no code with irrsub.

Root systems of rank at most two are built from explicit simple roots in
Euclidean space; weight multiplicities come from Kostant's alternating sum
over the Weyl group of the partition function.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

# Bourbaki-ordered simple roots, written in an ambient Euclidean basis
SIMPLE_ROOTS = {
    "A1": [(1, -1)],
    "A2": [(1, -1, 0), (0, 1, -1)],
    "B2": [(1, -1), (0, 1)],
    "C2": [(1, -1), (0, 2)],
    "G2": [(0, 1, -1), (1, -2, 1)],
}


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


class EuclideanSystem:
    """Root data computed in simple-root coordinates from a Gram matrix."""

    def __init__(self, name):
        simple = SIMPLE_ROOTS[name]
        self.name = name
        self.rank = n = len(simple)
        self.gram = [[Fraction(_dot(a, b)) for b in simple] for a in simple]
        # <x, alpha_j^vee> for x in simple-root coordinates
        self.pair = [[2 * self.gram[i][j] / self.gram[j][j] for j in range(n)] for i in range(n)]
        self.positive = self._positive_roots()
        self.group = self._weyl_group()

    def coroot_pairing(self, x):
        return tuple(sum(x[i] * self.pair[i][j] for i in range(self.rank)) for j in range(self.rank))

    def reflect(self, j, x):
        c = self.coroot_pairing(x)[j]
        return tuple(x[i] - (c if i == j else 0) for i in range(self.rank))

    def _positive_roots(self):
        n = self.rank
        roots = {tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)}
        todo = list(roots)
        while todo:
            x = todo.pop()
            for j in range(n):
                y = self.reflect(j, x)
                if y not in roots:
                    roots.add(y)
                    todo.append(y)
        return sorted(r for r in roots if all(c >= 0 for c in r))

    def _weyl_group(self):
        """Elements as (images of the simple roots, sign)."""
        n = self.rank
        ident = tuple(tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n))
        seen = {ident: 1}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for j in range(n):
                    h = tuple(self.reflect(j, col) for col in g)
                    if h not in seen:
                        seen[h] = -seen[g]
                        nxt.append(h)
            frontier = nxt
        return list(seen.items())

    def act(self, g, x):
        return tuple(sum(x[k] * g[k][i] for k in range(self.rank)) for i in range(self.rank))

    def from_fundamental(self, a):
        """Simple-root coordinates of the weight with fundamental coordinates a."""
        n = self.rank
        m = [[self.pair[i][j] for i in range(n)] + [Fraction(a[j])] for j in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if m[r][c] != 0)
            m[c], m[piv] = m[piv], m[c]
            m[c] = [v / m[c][c] for v in m[c]]
            for r in range(n):
                if r != c and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [u - f * v for u, v in zip(m[r], m[c])]
        return tuple(m[i][n] for i in range(n))

    def to_fundamental(self, x):
        return tuple(int(c) for c in self.coroot_pairing(x))

    def partition(self, v):
        roots = tuple(tuple(int(c) for c in r) for r in self.positive)
        return _kostant(roots, tuple(v))

    def multiplicity(self, lam, mu):
        rho = self.from_fundamental((1,) * self.rank)
        lr = tuple(a + b for a, b in zip(self.from_fundamental(lam), rho))
        mr = tuple(a + b for a, b in zip(self.from_fundamental(mu), rho))
        total = 0
        for g, sign in self.group:
            d = tuple(a - b for a, b in zip(self.act(g, lr), mr))
            if all(c.denominator == 1 and c >= 0 for c in d):
                total += sign * self.partition(tuple(int(c) for c in d))
        return total

    def character(self, lam):
        """All weights of W(lam) with their multiplicities."""
        top = self.from_fundamental(lam)
        low = min((self.act(g, top) for g, _ in self.group), key=sum)
        span = [int(a - b) for a, b in zip(top, low)]
        out = {}
        for c in product(*(range(s + 1) for s in span)):
            x = tuple(t - k for t, k in zip(top, c))
            mu = self.to_fundamental(x)
            m = self.multiplicity(lam, mu)
            if m:
                out[mu] = m
        return out


@lru_cache(maxsize=None)
def _kostant(roots, v):
    if all(c == 0 for c in v):
        return 1
    if not roots:
        return 0
    first, rest = roots[0], roots[1:]
    total = 0
    cur = v
    while all(c >= 0 for c in cur):
        total += _kostant(rest, cur)
        cur = tuple(a - b for a, b in zip(cur, first))
    return total


def negate_weights(char: dict) -> dict:
    return {tuple(-c for c in w): k for w, k in char.items()}
