"""Pure-Python Freudenthal recursion (reference implementation of the kernel)."""


def _dominant(w, cartan):
    w = list(w)
    n = len(w)
    i = 0
    while i < n:
        k = w[i]
        if k < 0:
            row = cartan[i]
            for j in range(n):
                w[j] -= k * row[j]
            i = 0
        else:
            i += 1
    return tuple(w)


def dominant_multiplicities(cartan, norms, pos_simple, pos_fund, lam):
    """Multiplicities of the dominant weights of the Weyl module W(lam).

    ``cartan[i]`` is the i-th simple root in fundamental coordinates,
    ``norms[j]`` twice the squared length of the j-th simple root (short
    roots normalised to 2), ``pos_simple``/``pos_fund`` the positive roots in
    simple-root and fundamental coordinates.  Returns ``{weight: mult}``.
    """
    n = len(lam)
    lam = tuple(lam)
    half = [x // 2 for x in norms]
    depth = {lam: (0,) * n}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            c = depth[mu]
            for a_s, a_f in zip(pos_simple, pos_fund):
                nu = tuple(x - y for x, y in zip(mu, a_f))
                if min(nu) < 0 or nu in depth:
                    continue
                depth[nu] = tuple(x + y for x, y in zip(c, a_s))
                nxt.append(nu)
        frontier = nxt
    order = sorted(depth, key=lambda m: sum(depth[m]))
    mult = {lam: 1}
    lam_rho2 = [x + 2 for x in lam]
    for mu in order[1:]:
        c = depth[mu]
        den = 0
        for j in range(n):
            den += c[j] * (lam_rho2[j] + mu[j]) * half[j]
        num = 0
        for a_s, a_f in zip(pos_simple, pos_fund):
            # (nu, a) for nu = mu + k a, written as base + k * step
            base = 0
            step = 0
            for j in range(n):
                if a_s[j]:
                    base += a_s[j] * mu[j] * half[j]
                    step += a_s[j] * a_f[j] * half[j]
            nu = mu
            while True:
                nu = tuple(x + y for x, y in zip(nu, a_f))
                base += step
                m = mult.get(_dominant(nu, cartan))
                if not m:
                    break
                num += m * base
        num *= 2
        if num % den:
            raise ArithmeticError("Freudenthal recursion produced a non-integer")
        val = num // den
        if val:
            mult[mu] = val
    return mult
