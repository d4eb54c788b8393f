"""Independent oracles used to cross-check the decision procedures.

None of these routes go through the residue-form split or the record-level
Witt index of :mod:`qforms.isotropy`:

* over ``F_p``: exhaustive vector evaluation and greedy isotropic subspaces;
* over ``F_p((x))``: local-field Hilbert symbols, and a truncated power
  series search with a Hensel lifting criterion;
* over ``Q``: bounded lattice search and local solvability modulo prime
  powers at every relevant prime.
"""

from __future__ import annotations

from itertools import product
from math import isqrt

from . import _kernels
from .errors import UnsupportedFieldError
from .fields import FieldDescriptor, FieldElement, element, square_class
from .forms import QuadraticForm

__all__ = [
    "DEFAULT_LATTICE_BOUND",
    "d_set_bruteforce",
    "isometric_bruteforce",
    "laurent_isotropic_bruteforce",
    "local_field_isometric",
    "local_field_witt_index",
    "q_isotropic_local_bruteforce",
    "q_lattice_isotropic",
    "witt_index_bruteforce",
]

DEFAULT_LATTICE_BOUND = 50


def _fp_units(q: QuadraticForm) -> list[int]:
    F = q.field
    if F.base != "F" or F.depth:
        raise UnsupportedFieldError(f"vector enumeration is implemented over F_p only, not {F}")
    return [a.unit for a in q.entries]


def d_set_bruteforce(q: QuadraticForm) -> frozenset[FieldElement]:
    """Square classes of the values ``q(v)``, ``v != 0``, enumerated over ``F_p^n``."""
    F = q.field
    flags = _kernels.represented_mod_p(_fp_units(q), F.p)
    return frozenset(square_class(element(F, r)) for r in range(1, F.p) if flags[r])


def isotropic_bruteforce(q: QuadraticForm) -> bool:
    return bool(_kernels.represented_mod_p(_fp_units(q), q.field.p)[0])


def witt_index_bruteforce(q: QuadraticForm | None) -> int:
    if q is None:
        return 0
    return _kernels.witt_index_mod_p(_fp_units(q), q.field.p)


def isometric_bruteforce(p: QuadraticForm, q: QuadraticForm) -> bool:
    """Search for a basis ``v1..vn`` of ``F_p^n`` with ``p(vi) = b_i`` pairwise orthogonal.

    ``p = <a_i>``, ``q = <b_i>``: such a basis is exactly an isometry ``q -> p``.
    """
    a = _fp_units(p)
    b = _fp_units(q)
    pr = p.field.p
    n = len(a)
    if len(b) != n:
        return False
    vecs = list(product(range(pr), repeat=n))

    def form(v, w):
        return sum(ai * x * y for ai, x, y in zip(a, v, w)) % pr

    def independent(cols):
        # Gaussian elimination mod p
        rows = [list(c) for c in cols]
        rank = 0
        for col in range(n):
            piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = pow(rows[rank][col], -1, pr)
            for r in range(len(rows)):
                if r != rank and rows[r][col]:
                    f = rows[r][col] * inv
                    rows[r] = [(x - f * y) % pr for x, y in zip(rows[r], rows[rank])]
            rank += 1
        return rank == len(rows)

    def extend(chosen):
        k = len(chosen)
        if k == n:
            return True
        for v in vecs:
            if form(v, v) != b[k] % pr:
                continue
            if any(form(v, w) for w in chosen):
                continue
            if not independent(chosen + [v]):
                continue
            if extend(chosen + [v]):
                return True
        return False

    return extend([])


# -- F_p((x)) as a local field ------------------------------------------------


def _laurent_entries(q: QuadraticForm) -> tuple[int, list[tuple[int, int]]]:
    F = q.field
    if F.base != "F" or F.depth != 1:
        raise UnsupportedFieldError(f"local-field oracle needs F_p((x)), got {F}")
    return F.p, [(a.unit % F.p, a.exps[0]) for a in q.entries]


def _leg(u: int, p: int) -> int:
    return 1 if pow(u % p, (p - 1) // 2, p) == 1 else -1


def _local_hilbert(a: tuple[int, int], b: tuple[int, int], p: int) -> int:
    (u, alpha), (v, beta) = a, b
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= _leg(u, p)
    if alpha % 2:
        s *= _leg(v, p)
    return s


def _lmul(a, b, p):
    return (a[0] * b[0] % p, a[1] + b[1])


def _local_square(a, p) -> bool:
    return a[1] % 2 == 0 and _leg(a[0], p) == 1


def _local_isotropic(dim, det, hasse, p) -> bool:
    minus_one = (p - 1, 0)
    if dim < 2:
        return False
    if dim == 2:
        return _local_square(_lmul(minus_one, det, p), p)
    if dim == 3:
        return _local_hilbert(minus_one, _lmul(minus_one, det, p), p) == hasse
    if dim == 4:
        return not _local_square(det, p) or hasse == _local_hilbert(minus_one, minus_one, p)
    return True


def _local_invariants(q: QuadraticForm):
    p, ents = _laurent_entries(q)
    det = (1, 0)
    hasse = 1
    for a in ents:
        hasse *= _local_hilbert(det, a, p)
        det = _lmul(det, a, p)
    return p, len(ents), det, hasse


def local_field_isometric(q1: QuadraticForm, q2: QuadraticForm) -> bool:
    """Isometry over ``F_p((x))`` by the local classification (dim, det, Hasse)."""
    p, n1, d1, s1 = _local_invariants(q1)
    _, n2, d2, s2 = _local_invariants(q2)
    return n1 == n2 and s1 == s2 and _local_square(_lmul(d1, d2, p), p)


def local_field_witt_index(q: QuadraticForm) -> int:
    """Witt index over the local field ``F_p((x))`` from ``(dim, det, Hasse)`` only."""
    p, dim, det, hasse = _local_invariants(q)
    i = 0
    minus_one = (p - 1, 0)
    while _local_isotropic(dim, det, hasse, p):
        # q = H + q': det' = -det, s' = s (-1, -det)
        det = _lmul(minus_one, det, p)
        hasse *= _local_hilbert(minus_one, det, p)
        dim -= 2
        i += 1
        if dim == 0:
            break
    return i


def laurent_isotropic_bruteforce(q: QuadraticForm) -> bool:
    """Primitive zero modulo ``x^3`` with a liftable gradient, searched exhaustively."""
    p, ents = _laurent_entries(q)
    return bool(_kernels.local_isotropic_laurent([u for u, _ in ents], [e % 2 for _, e in ents], p, 3))


# -- Q --------------------------------------------------------------------------


def _squarefree(n: int) -> int:
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1
    return sign * out * n


def _primes_dividing(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _integer_entries(q: QuadraticForm | list[int]) -> list[int]:
    if isinstance(q, QuadraticForm):
        if q.field != FieldDescriptor("Q"):
            raise UnsupportedFieldError(f"rational oracle needs Q, got {q.field}")
        return [a.unit.numerator * a.unit.denominator for a in q.entries]
    return list(q)


def q_lattice_isotropic(q, bound: int = DEFAULT_LATTICE_BOUND):
    """A nonzero integer zero with coordinates in ``[-bound, bound]``, or ``None``."""
    return _kernels.lattice_search(_integer_entries(q), bound)


def q_isotropic_local_bruteforce(q) -> bool:
    """Isotropy over ``Q`` decided place by place by exhaustive residue search.

    Real place: indefiniteness.  Dim 2: ``-a1*a2`` a rational square.  Dim
    >= 3: a liftable primitive zero modulo ``p^3`` (``2^5``) at every prime
    dividing ``2 * prod(a_i)``; at the remaining primes all entries are units
    and a zero always exists.
    """
    ents = [_squarefree(a) for a in _integer_entries(q)]
    n = len(ents)
    if n < 2:
        return False
    if all(a > 0 for a in ents) or all(a < 0 for a in ents):
        return False
    if n == 2:
        m = -ents[0] * ents[1]
        return m > 0 and isqrt(m) ** 2 == m
    primes = {2}
    for a in ents:
        primes.update(_primes_dividing(a))
    for p in sorted(primes):
        k = 5 if p == 2 else 3
        if not _kernels.local_isotropic_padic(ents, p, k):
            return False
    return True
