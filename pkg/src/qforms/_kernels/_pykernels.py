"""Pure-Python brute-force kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when
the extension is not built or ``QFORMS_PURE_PYTHON=1`` is set.
"""

from math import isqrt


def represented_mod_p(entries, p):
    """Flags ``f[r]``: some nonzero vector of ``sum a_i x_i^2`` takes value ``r`` mod p."""
    # state: (value, vector nonzero so far)
    zero_seen, nonzero = {0}, set()
    for a in entries:
        sq = {a * x * x % p for x in range(1, p)}
        new_nonzero = {(r + t) % p for r in nonzero for t in sq} | nonzero
        new_nonzero |= {(r + t) % p for r in zero_seen for t in sq}
        nonzero = new_nonzero
    return [1 if r in nonzero else 0 for r in range(p)]


def _vectors(n, p):
    v = [0] * n
    while True:
        yield v
        i = 0
        while i < n:
            v[i] += 1
            if v[i] < p:
                break
            v[i] = 0
            i += 1
        if i == n:
            return


def witt_index_mod_p(entries, p):
    """Dimension of a maximal totally isotropic subspace, grown greedily.

    All maximal totally isotropic subspaces have the same dimension, so the
    greedy extension is exact.
    """
    n = len(entries)
    basis = []
    span = {tuple([0] * n)}
    changed = True
    while changed:
        changed = False
        for v in _vectors(n, p):
            t = tuple(v)
            if t in span:
                continue
            if sum(a * x * x for a, x in zip(entries, v)) % p:
                continue
            if any(sum(a * x * y for a, x, y in zip(entries, v, w)) % p for w in basis):
                continue
            basis.append(t)
            span = {tuple((s[i] + c * t[i]) % p for i in range(n)) for s in span for c in range(p)}
            changed = True
            break
    return len(basis)


def lattice_search(entries, bound):
    """Nonzero integer vector with ``|x_i| <= bound`` and ``sum a_i x_i^2 = 0``, or ``None``."""
    n = len(entries)
    if n < 2 or all(a > 0 for a in entries) or all(a < 0 for a in entries):
        return None  # definite: no nonzero zero at all
    last = entries[-1]
    head = entries[:-1]
    m = len(head)
    x = [0] * m
    b2 = bound * bound
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
        for a, xi in zip(head, x):
            s += a * xi * xi
        if s % last:
            continue
        w = -s // last
        if w < 0 or w > b2:
            continue
        r = isqrt(w)
        if r * r == w:
            return tuple(x) + (r,)


def _val(n, p, cap):
    if n == 0:
        return cap
    e = 0
    while n % p == 0 and e < cap:
        n //= p
        e += 1
    return e


def local_isotropic_padic(entries, p, k):
    """Primitive ``v`` mod ``p^k`` with ``v_p(q(v)) >= 2g + 1``, ``g = min v_p(2 a_i v_i)``.

    ``entries`` are nonzero integers; exact whenever ``2g + 1 <= k`` holds for
    every primitive vector (squarefree entries: ``k = 3`` for odd ``p``,
    ``k = 5`` for ``p = 2``).  Residues are carried as big-int bitsets.
    """
    M = p**k
    full = (1 << M) - 1
    cap = (k + 1) // 2
    # states[(g, prim)] = bitset over residues mod M
    states = {(cap, 0): 1}
    for a in entries:
        triples = set()
        for x in range(M):
            t = a * x * x % M
            g = min(_val(2 * a * x, p, k), cap)
            triples.add((t, g, 1 if x % p else 0))
        new = {}
        for (g0, pr0), mask in states.items():
            for t, g1, pr1 in triples:
                key = (min(g0, g1), pr0 | pr1)
                shifted = ((mask << t) | (mask >> (M - t))) & full if t else mask
                new[key] = new.get(key, 0) | shifted
        states = new
    for (g, prim), mask in states.items():
        if not prim:
            continue
        need = 2 * g + 1
        if need > k:
            continue
        step = p**need
        for r in range(0, M, step):
            if mask >> r & 1:
                return True
    return False


def local_isotropic_laurent(units, exps, p, k):
    """The same criterion over ``F_p[[x]] / x^k`` for ``sum u_i x^{e_i} X_i^2``.

    Truncated series are encoded base ``p``: ``c0 + c1*p + ... ``.
    """
    M = p**k
    cap = (k + 1) // 2

    def decode(r):
        return [(r // p**j) % p for j in range(k)]

    def encode(c):
        return sum(cj * p**j for j, cj in enumerate(c))

    def polymul(a, b):
        out = [0] * k
        for i, ai in enumerate(a):
            if ai:
                for j in range(k - i):
                    out[i + j] = (out[i + j] + ai * b[j]) % p
        return out

    def val(c):
        for j, cj in enumerate(c):
            if cj:
                return j
        return k

    states = {(0, cap, 0)}
    for u, e in zip(units, exps):
        coeff = [0] * k
        if e < k:
            coeff[e] = u % p
        triples = set()
        for x in range(M):
            xc = decode(x)
            t = encode(polymul(coeff, polymul(xc, xc)))
            g = min(e + val(xc), cap)
            triples.add((t, g, 1 if xc[0] else 0))
        new = set()
        for r, g0, pr0 in states:
            rc = decode(r)
            for t, g1, pr1 in triples:
                tc = decode(t)
                s = encode([(x + y) % p for x, y in zip(rc, tc)])
                new.add((s, min(g0, g1), pr0 | pr1))
        states = new
    for r, g, prim in states:
        if prim and 2 * g + 1 <= k and val(decode(r)) >= 2 * g + 1:
            return True
    return False
