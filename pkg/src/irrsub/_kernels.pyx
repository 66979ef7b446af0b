# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Freudenthal recursion; same contract as irrsub._kernels_py."""

from libc.stdlib cimport malloc, free


cdef inline void _to_dominant(long *w, const long *cartan, int n) noexcept nogil:
    cdef int i = 0, j
    cdef long k
    while i < n:
        k = w[i]
        if k < 0:
            for j in range(n):
                w[j] -= k * cartan[i * n + j]
            i = 0
        else:
            i += 1


def dominant_multiplicities(cartan, norms, pos_simple, pos_fund, lam):
    """Multiplicities of the dominant weights of the Weyl module W(lam)."""
    cdef int n = len(lam)
    cdef int npos = len(pos_simple)
    cdef int i, j, r
    cdef long *cm = <long *> malloc(n * n * sizeof(long))
    cdef long *half = <long *> malloc(n * sizeof(long))
    cdef long *ps = <long *> malloc(npos * n * sizeof(long))
    cdef long *pf = <long *> malloc(npos * n * sizeof(long))
    cdef long *buf = <long *> malloc(n * sizeof(long))
    cdef long *mu_c = <long *> malloc(n * sizeof(long))
    cdef long base, step, den, num, m
    if not (cm and half and ps and pf and buf and mu_c):
        raise MemoryError()
    try:
        for i in range(n):
            half[i] = norms[i] // 2
            for j in range(n):
                cm[i * n + j] = cartan[i][j]
        for r in range(npos):
            for j in range(n):
                ps[r * n + j] = pos_simple[r][j]
                pf[r * n + j] = pos_fund[r][j]

        lam_t = tuple(lam)
        depth = {lam_t: (0,) * n}
        frontier = [lam_t]
        while frontier:
            nxt = []
            for mu in frontier:
                c = depth[mu]
                for r in range(npos):
                    ok = True
                    for j in range(n):
                        buf[j] = <long> mu[j] - pf[r * n + j]
                        if buf[j] < 0:
                            ok = False
                            break
                    if not ok:
                        continue
                    nu = tuple([buf[j] for j in range(n)])
                    if nu in depth:
                        continue
                    depth[nu] = tuple([c[j] + ps[r * n + j] for j in range(n)])
                    nxt.append(nu)
            frontier = nxt

        order = sorted(depth, key=lambda w: sum(depth[w]))
        mult = {lam_t: 1}
        for mu in order[1:]:
            c = depth[mu]
            for j in range(n):
                mu_c[j] = mu[j]
            den = 0
            for j in range(n):
                den += (<long> c[j]) * (<long> lam_t[j] + 2 + mu_c[j]) * half[j]
            num = 0
            for r in range(npos):
                base = 0
                step = 0
                for j in range(n):
                    if ps[r * n + j]:
                        base += ps[r * n + j] * mu_c[j] * half[j]
                        step += ps[r * n + j] * pf[r * n + j] * half[j]
                k = 1
                while True:
                    for j in range(n):
                        buf[j] = mu_c[j] + k * pf[r * n + j]
                    _to_dominant(buf, cm, n)
                    base += step
                    got = mult.get(tuple([buf[j] for j in range(n)]))
                    if not got:
                        break
                    m = got
                    num += m * base
                    k += 1
            num *= 2
            if num % den:
                raise ArithmeticError("Freudenthal recursion produced a non-integer")
            if num:
                mult[mu] = num // den
        return mult
    finally:
        free(cm); free(half); free(ps); free(pf); free(buf); free(mu_c)
