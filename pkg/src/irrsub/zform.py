"""Weight multiplicities of irreducible modules in characteristic p, computed
from the integral form of the Weyl module.

The Weyl module W(lam) is built weight space by weight space over the
integers.  A vector of weight mu (below the top) is stored through its images
under the raising operators e_k, written in the bases of the weight spaces
mu + a_k; this map is injective, so it serves as a coordinate system.  The
lattice spanned by the divided-power images f_i^(a) of higher basis vectors
is put in Hermite normal form, which gives a basis of the integral weight
space.  Its rank is checked against Freudenthal's multiplicity.

The maximal submodule in characteristic p is the common kernel of the maps
v -> (top component of u v) for u running over raising divided powers.  These
functionals are propagated downwards modulo p; the rank of the functionals
on a weight space is the weight multiplicity of the irreducible quotient.
"""

from __future__ import annotations

from math import factorial

from .charring import dominant_weyl_multiplicities, weyl_character
from .rootsys import GroupShape, SimpleType, build_root_datum

__all__ = ["WeylModuleZ", "irreducible_dominant", "weyl_composition_factors"]


def _hnf_rows(rows: list) -> list:
    """Row echelon Z-basis of the lattice spanned by ``rows`` (entries above
    pivots reduced)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    ncol = len(a[0])
    basis = []
    col = 0
    while a and col < ncol:
        nz = [r for r in a if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in a if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            nxt = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            nz = nxt
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        for b in basis:
            q = b[col] // piv[col]
            if q:
                for j in range(col, ncol):
                    b[j] -= q * piv[j]
        basis.append(piv)
        a = [r for r in rest if any(r)]
        col += 1
    return basis


def _pivots(basis: list) -> list:
    return [next(j for j, x in enumerate(r) if x) for r in basis]


def _solve(basis: list, pivots: list, y: list) -> list:
    """Integer coordinates of ``y`` in the echelon basis."""
    y = list(y)
    x = []
    for r, c in zip(basis, pivots):
        q, rem = divmod(y[c], r[c])
        if rem:
            raise ArithmeticError("vector is not in the lattice")
        x.append(q)
        if q:
            for j in range(c, len(y)):
                y[j] -= q * r[j]
    if any(y):
        raise ArithmeticError("vector is not in the span")
    return x


def _vec_mat(v: list, m: list) -> list:
    """Row vector times matrix (rows of m)."""
    if not m:
        return []
    out = [0] * len(m[0])
    for c, row in zip(v, m):
        if c:
            for j, x in enumerate(row):
                if x:
                    out[j] += c * x
    return out


def _rank_basis_mod_p(cols: list, p: int, nrows: int) -> list:
    """Column basis modulo p of the given columns (each a list of length nrows)."""
    basis = []
    piv_rows = []
    for col in cols:
        v = [x % p for x in col]
        for b, pr in zip(basis, piv_rows):
            if v[pr]:
                f = v[pr]
                v = [(x - f * y) % p for x, y in zip(v, b)]
        nz = next((i for i, x in enumerate(v) if x), None)
        if nz is None:
            continue
        inv = pow(v[nz], -1, p)
        v = [(x * inv) % p for x in v]
        for k, b in enumerate(basis):
            if b[nz]:
                f = b[nz]
                basis[k] = [(x - f * y) % p for x, y in zip(b, v)]
        basis.append(v)
        piv_rows.append(nz)
        if len(basis) == nrows:
            break
    return basis


class WeylModuleZ:
    """Integral form of W(lam) for a simple type, with raising/lowering data."""

    def __init__(self, t: SimpleType, lam):
        self.t = t
        self.d = build_root_datum(t)
        self.lam = tuple(lam)
        n = self.d.rank
        self.n = n
        char = weyl_character(GroupShape((t,)), self.lam)
        self.mult = dict(char.items())
        self.alpha = [self.d.cartan[i] for i in range(n)]
        # weights by depth below the top
        depth = {}
        for mu in self.mult:
            rc = self.d.weight_to_root_coords(tuple(x - y for x, y in zip(self.lam, mu)))
            depth[mu] = int(sum(rc))
        self.order = sorted(self.mult, key=lambda m: (depth[m], m))
        self.basis: dict = {}    # mu -> list of e-coordinate rows
        self.pivots: dict = {}
        self.blocks: dict = {}   # mu -> list of (start, stop) per k, or None
        self.F: dict = {}        # (i, mu) -> matrix W_{mu+a_i} -> W_mu (rows)
        self._build()

    def up(self, mu, i, a=1):
        return tuple(x + a * y for x, y in zip(mu, self.alpha[i]))

    def dim(self, mu) -> int:
        return self.mult.get(mu, 0)

    def e_block(self, mu, k) -> list:
        """Matrix of e_k on W_mu (rows = images of basis vectors)."""
        blk = self.blocks[mu]
        if blk is None or blk[k] is None:
            return [[] for _ in range(self.dim(mu))]
        s, e = blk[k]
        return [row[s:e] for row in self.basis[mu]]

    def _apply_f(self, v: list, nu, i: int, a: int) -> list:
        """f_i^a (not divided) applied to v in W_nu, landing in W_{nu - a a_i}."""
        cur = nu
        for _ in range(a):
            low = self.up(cur, i, -1)
            if low not in self.mult:
                return None
            v = _vec_mat(v, self.F[(i, low)])
            cur = low
        return v

    def _f_div(self, v: list, nu, i: int, a: int) -> list | None:
        w = self._apply_f(v, nu, i, a)
        if w is None:
            return None
        fa = factorial(a)
        out = []
        for x in w:
            q, r = divmod(x, fa)
            if r:
                raise ArithmeticError("divided power is not integral")
            out.append(q)
        return out

    def _e_coords(self, mu, i: int, a: int, b: list) -> list:
        """e-coordinates of f_i^(a) b for b in W_{mu + a a_i}."""
        src = self.up(mu, i, a)
        out = []
        for k in range(self.n):
            tgt = self.up(mu, k)
            if tgt not in self.mult:
                continue
            dt = self.dim(tgt)
            acc = [0] * dt
            # f_i^(a) e_k b
            above = self.up(src, k)
            if src != self.lam and above in self.mult:
                ekb = _vec_mat(b, self.e_block(src, k))
                v = self._f_div(ekb, above, i, a)
                if v is not None:
                    acc = [x + y for x, y in zip(acc, v)]
            if k == i:
                c = src[i] - a + 1
                if c:
                    v = b if a == 1 else self._f_div(b, src, i, a - 1)
                    if v is not None:
                        acc = [x + c * y for x, y in zip(acc, v)]
            out.extend(acc)
        return out

    def _build(self):
        lam = self.lam
        self.basis[lam] = [[1]]
        self.pivots[lam] = [0]
        self.blocks[lam] = None
        for mu in self.order[1:]:
            blocks, pos = [], 0
            for k in range(self.n):
                tgt = self.up(mu, k)
                if tgt in self.mult:
                    blocks.append((pos, pos + self.dim(tgt)))
                    pos += self.dim(tgt)
                else:
                    blocks.append(None)
            self.blocks[mu] = blocks
            gens = []
            single = {}
            for i in range(self.n):
                a = 1
                while True:
                    src = self.up(mu, i, a)
                    if src not in self.mult:
                        break
                    for idx in range(self.dim(src)):
                        b = [int(j == idx) for j in range(self.dim(src))]
                        y = self._e_coords(mu, i, a, b)
                        gens.append(y)
                        if a == 1:
                            single.setdefault(i, []).append(y)
                    a += 1
            basis = _hnf_rows(gens)
            if len(basis) != self.dim(mu):
                raise ArithmeticError(
                    f"rank {len(basis)} != multiplicity {self.dim(mu)} at {mu}")
            piv = _pivots(basis)
            self.basis[mu] = basis
            self.pivots[mu] = piv
            for i, ys in single.items():
                self.F[(i, mu)] = [_solve(basis, piv, y) for y in ys]

    def e_div(self, mu, i: int, a: int) -> list | None:
        """Matrix of e_i^(a): W_mu -> W_{mu + a a_i}."""
        if self.up(mu, i, a) not in self.mult:
            return None
        m = self.e_block(mu, i)
        cur = self.up(mu, i)
        for _ in range(a - 1):
            m = [_vec_mat(row, self.e_block(cur, i)) for row in m]
            cur = self.up(cur, i)
        fa = factorial(a)
        out = []
        for row in m:
            r2 = []
            for x in row:
                q, r = divmod(x, fa)
                if r:
                    raise ArithmeticError("raising divided power is not integral")
                r2.append(q)
            out.append(r2)
        return out

    def irreducible_multiplicities(self, p: int) -> dict:
        """``{mu: dim L(lam)_mu}`` over all weights mu of W(lam)."""
        q = {self.lam: [[1]]}  # columns mod p, stored as list of columns
        out = {self.lam: 1}
        for mu in self.order[1:]:
            cols = []
            dmu = self.dim(mu)
            for i in range(self.n):
                a = 1
                while True:
                    src = self.up(mu, i, a)
                    if src not in self.mult:
                        break
                    qs = q[src]
                    if qs:
                        m = self.e_div(mu, i, a)
                        for col in qs:
                            cols.append([sum(x * y for x, y in zip(row, col)) % p for row in m])
                    a += 1
            basis = _rank_basis_mod_p(cols, p, dmu)
            q[mu] = basis
            if basis:
                out[mu] = len(basis)
        return out


def irreducible_dominant(t: SimpleType, lam, p: int) -> dict:
    """Dominant weight multiplicities of L(lam) in characteristic p (lam restricted)."""
    mod = WeylModuleZ(t, lam)
    full = mod.irreducible_multiplicities(p)
    return {mu: k for mu, k in full.items() if min(mu) >= 0}


def weyl_composition_factors(t: SimpleType, lam, p: int, irr_dominant_of) -> dict:
    """Composition factors of W(lam) from the dominant character of L(lam).

    ``irr_dominant_of(mu)`` must return the dominant multiplicities of L(mu)
    for every dominant mu below lam (callers recurse or consult a database).
    """
    lam = tuple(lam)
    d = build_root_datum(t)
    rest = dict(dominant_weyl_multiplicities(t, lam))
    top = irreducible_dominant(t, lam, p)
    for mu, k in top.items():
        rest[mu] -= k
        if not rest[mu]:
            del rest[mu]
    out = {lam: 1}
    while rest:
        mu = max(rest, key=lambda w: (d.height(w), w))
        c = rest[mu]
        if c < 0:
            raise ArithmeticError(f"negative remainder at {mu}")
        out[mu] = c
        for w, k in irr_dominant_of(mu).items():
            v = rest.get(w, 0) - c * k
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return out
