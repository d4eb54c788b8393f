# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset
from libc.math cimport sqrt


def represented_mod_p(entries, long p):
    cdef long n = len(entries)
    cdef unsigned char *zero_s = <unsigned char *> calloc(p, 1)
    cdef unsigned char *nz = <unsigned char *> calloc(p, 1)
    cdef unsigned char *nz2 = <unsigned char *> calloc(p, 1)
    cdef unsigned char *sq = <unsigned char *> calloc(p, 1)
    cdef long i, r, t, x, a
    zero_s[0] = 1
    try:
        for i in range(n):
            a = entries[i] % p
            memset(sq, 0, p)
            for x in range(1, p):
                sq[(a * x % p) * x % p] = 1
            for r in range(p):
                nz2[r] = nz[r]
            for r in range(p):
                if nz[r] or zero_s[r]:
                    for t in range(p):
                        if sq[t]:
                            nz2[(r + t) % p] = 1
            for r in range(p):
                nz[r] = nz2[r]
        return [nz[r] for r in range(p)]
    finally:
        free(zero_s); free(nz); free(nz2); free(sq)


def witt_index_mod_p(entries, long p):
    cdef long n = len(entries)
    cdef long total = 1
    cdef long j, idx, w, c, s, v_i, acc, k, b
    cdef long *a = <long *> malloc(n * sizeof(long))
    cdef long *v = <long *> malloc(n * sizeof(long))
    cdef long *basis = <long *> malloc(n * n * sizeof(long))
    for j in range(n):
        total *= p
    cdef unsigned char *in_span = <unsigned char *> calloc(total, 1)
    cdef unsigned char *tmp = <unsigned char *> calloc(total, 1)
    cdef long nb = 0
    cdef bint found, ok
    try:
        for j in range(n):
            a[j] = entries[j] % p
        in_span[0] = 1
        found = True
        while found:
            found = False
            for idx in range(1, total):
                if in_span[idx]:
                    continue
                w = idx
                acc = 0
                for j in range(n):
                    v[j] = w % p
                    w //= p
                    acc += a[j] * v[j] * v[j]
                if acc % p:
                    continue
                ok = True
                for b in range(nb):
                    acc = 0
                    for j in range(n):
                        acc += a[j] * v[j] * basis[b * n + j]
                    if acc % p:
                        ok = False
                        break
                if not ok:
                    continue
                for j in range(n):
                    basis[nb * n + j] = v[j]
                nb += 1
                # span := span + F_p * v
                memset(tmp, 0, total)
                for s in range(total):
                    if not in_span[s]:
                        continue
                    for c in range(p):
                        w = s
                        k = 0
                        acc = 1
                        for j in range(n):
                            v_i = (w % p + c * v[j]) % p
                            w //= p
                            k += v_i * acc
                            acc *= p
                        tmp[k] = 1
                for s in range(total):
                    in_span[s] = tmp[s]
                found = True
                break
        return nb
    finally:
        free(a); free(v); free(basis); free(in_span); free(tmp)


def lattice_search(entries, long bound):
    cdef long n = len(entries)
    if n < 2 or all(a > 0 for a in entries) or all(a < 0 for a in entries):
        return None  # definite: no nonzero zero at all
    cdef long m = n - 1
    cdef long long last = entries[n - 1]
    cdef long long *head = <long long *> malloc(m * sizeof(long long))
    cdef long *x = <long *> calloc(m, sizeof(long))
    cdef long long s, w, r, b2 = <long long> bound * bound
    cdef long i
    try:
        for i in range(m):
            head[i] = entries[i]
        while True:
            i = 0
            while i < m:
                x[i] += 1
                if x[i] <= bound:
                    break
                x[i] = 0
                i += 1
            if i == m:
                return None
            s = 0
            for i in range(m):
                s += head[i] * x[i] * x[i]
            if s % last:
                continue
            w = -s // last
            if w < 0 or w > b2:
                continue
            r = <long long> sqrt(<double> w)
            while r * r > w:
                r -= 1
            while (r + 1) * (r + 1) <= w:
                r += 1
            if r * r == w:
                return tuple(x[i] for i in range(m)) + (r,)
    finally:
        free(head); free(x)


cdef long _val(long long n, long p, long cap):
    cdef long e = 0
    if n == 0:
        return cap
    while n % p == 0 and e < cap:
        n //= p
        e += 1
    return e


ctypedef unsigned long long u64


cdef void _rotate_or(u64 *dst, u64 *src2, long M, long nw, long t):
    # dst |= rotate(src, t) where src2 holds src twice (bits [0, 2M))
    cdef long o = (M - t) % M
    cdef long wo = o >> 6, bo = o & 63, i
    cdef u64 w
    for i in range(nw):
        w = src2[wo + i] >> bo
        if bo:
            w |= src2[wo + i + 1] << (64 - bo)
        dst[i] |= w


def local_isotropic_padic(entries, long p, long k):
    cdef long M = 1, j
    for j in range(k):
        M *= p
    cdef long cap = (k + 1) // 2
    cdef long ng = cap + 1
    cdef long nw = (M + 63) >> 6
    cdef long nw2 = ((2 * M + 63) >> 6) + 1
    cdef long ncls = ng * 2
    cdef u64 *cur = <u64 *> calloc(ncls * nw, sizeof(u64))
    cdef u64 *nxt = <u64 *> calloc(ncls * nw, sizeof(u64))
    cdef u64 *src2 = <u64 *> calloc(nw2, sizeof(u64))
    cdef unsigned char *seen = <unsigned char *> calloc(M * ncls, 1)
    cdef long *tt = <long *> malloc(M * sizeof(long))
    cdef long *tg = <long *> malloc(M * sizeof(long))
    cdef long *tp = <long *> malloc(M * sizeof(long))
    cdef long nt, x, t, g, pr, r, cls, ii, key, step, need, g1, b, q
    cdef long long a
    cdef bint empty
    cdef u64 tail = (<u64> 1 << (M & 63)) - 1 if (M & 63) else <u64> 0xFFFFFFFFFFFFFFFF
    try:
        cur[(cap * 2) * nw] = 1
        for ii in range(len(entries)):
            a = entries[ii]
            memset(seen, 0, M * ncls)
            nt = 0
            for x in range(M):
                t = <long> (((a % M + M) % M) * x % M * x % M)
                g = _val(2 * a * x, p, k)
                if g > cap:
                    g = cap
                pr = 1 if x % p else 0
                key = (g * 2 + pr) * M + t
                if not seen[key]:
                    seen[key] = 1
                    tt[nt] = t
                    tg[nt] = g
                    tp[nt] = pr
                    nt += 1
            memset(nxt, 0, ncls * nw * sizeof(u64))
            for cls in range(ncls):
                empty = True
                for j in range(nw):
                    if cur[cls * nw + j]:
                        empty = False
                        break
                if empty:
                    continue
                memset(src2, 0, nw2 * sizeof(u64))
                for r in range(M):
                    if (cur[cls * nw + (r >> 6)] >> (r & 63)) & 1:
                        src2[r >> 6] |= (<u64> 1) << (r & 63)
                        b = r + M
                        src2[b >> 6] |= (<u64> 1) << (b & 63)
                for j in range(nt):
                    g1 = tg[j] if tg[j] < cls // 2 else cls // 2
                    q = g1 * 2 + ((cls & 1) | tp[j])
                    _rotate_or(nxt + q * nw, src2, M, nw, tt[j])
            for cls in range(ncls):
                nxt[cls * nw + nw - 1] &= tail
            for j in range(ncls * nw):
                cur[j] = nxt[j]
        for g in range(ng):
            need = 2 * g + 1
            if need > k:
                continue
            step = 1
            for j in range(need):
                step *= p
            for r in range(0, M, step):
                if (cur[(g * 2 + 1) * nw + (r >> 6)] >> (r & 63)) & 1:
                    return True
        return False
    finally:
        free(cur); free(nxt); free(src2); free(seen); free(tt); free(tg); free(tp)


def local_isotropic_laurent(units, exps, long p, long k):
    cdef long M = 1, j, i
    for j in range(k):
        M *= p
    cdef long cap = (k + 1) // 2
    cdef long ng = cap + 1
    cdef long nstate = M * ng * 2
    cdef unsigned char *cur = <unsigned char *> calloc(nstate, 1)
    cdef unsigned char *nxt = <unsigned char *> calloc(nstate, 1)
    cdef unsigned char *seen = <unsigned char *> calloc(nstate, 1)
    cdef long *tt = <long *> malloc(M * sizeof(long))
    cdef long *tg = <long *> malloc(M * sizeof(long))
    cdef long *tp = <long *> malloc(M * sizeof(long))
    cdef long *pw = <long *> malloc((k + 1) * sizeof(long))
    cdef long *xc = <long *> malloc(k * sizeof(long))
    cdef long *sq = <long *> malloc(k * sizeof(long))
    cdef long nt, x, t, g, pr, r, g0, pr0, ii, key, e, u, v, s, g1, w, need
    pw[0] = 1
    for j in range(k):
        pw[j + 1] = pw[j] * p
    try:
        cur[(cap * 2) * M] = 1
        for ii in range(len(units)):
            u = units[ii] % p
            e = exps[ii]
            memset(seen, 0, nstate)
            nt = 0
            for x in range(M):
                w = x
                v = k
                for j in range(k):
                    xc[j] = w % p
                    w //= p
                    if xc[j] and v == k:
                        v = j
                for j in range(k):
                    sq[j] = 0
                for i in range(k):
                    if xc[i]:
                        for j in range(k - i):
                            sq[i + j] = (sq[i + j] + xc[i] * xc[j]) % p
                t = 0
                for j in range(k - e):
                    t += (u * sq[j] % p) * pw[j + e]
                g = e + v
                if g > cap:
                    g = cap
                pr = 1 if xc[0] else 0
                key = (g * 2 + pr) * M + t
                if not seen[key]:
                    seen[key] = 1
                    tt[nt] = t
                    tg[nt] = g
                    tp[nt] = pr
                    nt += 1
            memset(nxt, 0, nstate)
            for g0 in range(ng):
                for pr0 in range(2):
                    for r in range(M):
                        if not cur[(g0 * 2 + pr0) * M + r]:
                            continue
                        for i in range(nt):
                            s = 0
                            for j in range(k):
                                s += ((r // pw[j] + tt[i] // pw[j]) % p) * pw[j]
                            g1 = tg[i] if tg[i] < g0 else g0
                            nxt[(g1 * 2 + (pr0 | tp[i])) * M + s] = 1
            for j in range(nstate):
                cur[j] = nxt[j]
        for g in range(ng):
            need = 2 * g + 1
            if need > k:
                continue
            for r in range(0, M, pw[need]):
                if cur[(g * 2 + 1) * M + r]:
                    return True
        return False
    finally:
        free(cur); free(nxt); free(seen); free(tt); free(tg); free(tp); free(pw); free(xc); free(sq)
