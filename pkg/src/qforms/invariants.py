"""Classification invariants and the isometry deciders built from them.

Hasse invariant convention used throughout::

    s_v(<a1, ..., an>) = prod_{i<j} (ai, aj)_v

With this convention ``s(q1 + q2) = s(q1) s(q2) (d(q1), d(q2))`` and the
local isotropy criteria over ``Q_v`` read, for ``d = det q``:

* dim 2: ``-d`` is a square in ``Q_v``;
* dim 3: ``(-1, -d)_v == s_v``;
* dim 4: ``d`` is not a square in ``Q_v``, or ``s_v == (-1, -1)_v``;
* dim >= 5: always (finite places).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import FieldMismatchError, UnsupportedFieldError, QFError
from .fields import FieldDescriptor, FieldElement, element, mul, one, prime_support, square_class, square_class_reps
from .forms import QuadraticForm, scale

__all__ = [
    "REAL",
    "InvariantRecord",
    "Place",
    "determinant_class",
    "hasse_invariant",
    "hilbert_symbol",
    "invariant_record",
    "is_isometric",
    "is_similar",
    "record_is_isotropic",
    "records_isometric",
    "signature",
    "split_hyperbolic",
    "support",
]


@dataclass(frozen=True, order=True)
class Place:
    """A place of ``Q``: ``Place(0)`` is the real place, otherwise a prime."""

    prime: int

    @property
    def is_real(self) -> bool:
        return self.prime == 0

    def __str__(self):
        return "real" if self.is_real else str(self.prime)


REAL = Place(0)


def _val(n: int, p: int) -> tuple[int, int]:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def _legendre(u: int, p: int) -> int:
    return 1 if pow(u % p, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=1 << 16)
def hilbert_int(a: int, b: int, place: int) -> int:
    """``(a, b)_v`` for nonzero integers; ``place`` 0 is the real place."""
    if place == 0:
        return -1 if a < 0 and b < 0 else 1
    p = place
    alpha, u = _val(a, p)
    beta, v = _val(b, p)
    if p != 2:
        s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
        if beta % 2:
            s *= _legendre(u, p)
        if alpha % 2:
            s *= _legendre(v, p)
        return s

    def eps(w):
        return ((w - 1) // 2) % 2

    def omega(w):
        return ((w * w - 1) // 8) % 2

    e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
    return -1 if e % 2 else 1


def _as_int(a: FieldElement) -> int:
    c = square_class(a).unit
    return c.numerator


def _require_q(q_field: FieldDescriptor):
    if q_field.base != "Q" or q_field.depth:
        raise UnsupportedFieldError(f"Hilbert symbols are implemented over Q only, not {q_field}")


def hilbert_symbol(a: FieldElement, b: FieldElement, v: Place) -> int:
    if a.field != b.field:
        raise FieldMismatchError("hilbert_symbol operands over different fields")
    _require_q(a.field)
    return hilbert_int(_as_int(a), _as_int(b), v.prime)


def _hasse_ints(entries: list[int], place: int) -> int:
    s = 1
    d = 1
    for a in entries:
        s *= hilbert_int(d, a, place)
        d *= a
    return s


def hasse_invariant(q: QuadraticForm, v: Place) -> int:
    _require_q(q.field)
    return _hasse_ints([_as_int(a) for a in q.entries], v.prime)


def support(q: QuadraticForm) -> tuple[Place, ...]:
    """``{2, real}`` together with the primes dividing some entry's squarefree part."""
    _require_q(q.field)
    primes = {2}
    for a in q.entries:
        primes.update(prime_support(_as_int(a)))
    return (REAL,) + tuple(Place(p) for p in sorted(primes))


def determinant_class(q: QuadraticForm) -> FieldElement:
    d = one(q.field)
    for a in q.entries:
        d = mul(d, a)
    return square_class(d)


def signature(q: QuadraticForm) -> tuple[int, int]:
    """``(#positive, #negative)`` entries; ``R`` and ``Q`` without a tower only."""
    if q.field.base not in ("R", "Q") or q.field.depth:
        raise UnsupportedFieldError(f"signature is defined over R and Q, not {q.field}")
    pos = sum(1 for a in q.entries if a.unit > 0)
    return pos, q.dim - pos


@dataclass(frozen=True)
class InvariantRecord:
    """Complete isometry data for a form, per base field.

    ``tower_parts`` holds the records of the anisotropic parts of the two
    residue forms of the outermost Laurent variable (``None`` where that
    part is hyperbolic or empty).
    """

    field: FieldDescriptor
    dim: int
    det: FieldElement
    hasse: dict = dc_field(default=None, compare=False)
    signature: tuple | None = None
    tower_parts: tuple | None = None

    def hasse_at(self, v: Place) -> int:
        return self.hasse.get(v, 1)

    @property
    def places(self) -> tuple[Place, ...]:
        return tuple(sorted(self.hasse)) if self.hasse is not None else ()

    def to_dict(self) -> dict:
        out = {"field": str(self.field), "dim": self.dim, "det": str(self.det)}
        if self.hasse is not None:
            out["hasse"] = {str(v): s for v, s in sorted(self.hasse.items())}
        if self.signature is not None:
            out["signature"] = list(self.signature)
        if self.tower_parts is not None:
            out["tower_parts"] = [None if r is None else r.to_dict() for r in self.tower_parts]
        return out

    def __str__(self):
        bits = [f"dim {self.dim}", f"det {self.det}"]
        if self.signature is not None:
            bits.append(f"signature {self.signature}")
        if self.hasse is not None:
            bits.append("hasse {" + ", ".join(f"{v}: {s:+d}" for v, s in sorted(self.hasse.items())) + "}")
        if self.tower_parts is not None:
            names = ("unit part", f"{self.field.tower[-1]}-part")
            bits.extend(f"{n}: {'hyperbolic' if r is None else '[' + str(r) + ']'}" for n, r in zip(names, self.tower_parts))
        return f"{self.field}: " + ", ".join(bits)


def _q_record(q: QuadraticForm) -> InvariantRecord:
    ints = [_as_int(a) for a in q.entries]
    places = support(q)
    return InvariantRecord(
        field=q.field,
        dim=q.dim,
        det=determinant_class(q),
        hasse={v: _hasse_ints(ints, v.prime) for v in places},
        signature=signature(q),
    )


def invariant_record(q: QuadraticForm) -> InvariantRecord:
    F = q.field
    if F.depth:
        from .isotropy import anisotropic_part, springer_split

        parts = []
        for part in springer_split(q):
            an = None if part is None else anisotropic_part(part)
            if isinstance(an, QuadraticForm):
                an = invariant_record(an)
            parts.append(an)
        return InvariantRecord(F, q.dim, determinant_class(q), tower_parts=tuple(parts))
    if F.base == "Q":
        return _q_record(q)
    sig = signature(q) if F.base == "R" else None
    return InvariantRecord(F, q.dim, determinant_class(q), signature=sig)


def _local_square(d: int, p: int) -> bool:
    # d squarefree
    if p == 0:
        return d > 0
    if d % p == 0:
        return False
    if p == 2:
        return d % 8 == 1
    return _legendre(d, p) == 1


def record_is_isotropic(r: InvariantRecord) -> bool:
    """Hasse-Minkowski over ``Q`` from record data alone."""
    _require_q(r.field)
    n = r.dim
    if n < 2:
        return False
    pos, neg = r.signature
    if pos == 0 or neg == 0:
        return False
    d = _as_int(r.det)
    if n == 2:
        return square_class(element(r.field, -d)).unit == 1
    if n >= 5:
        return True
    for v in r.places:
        if v.is_real:
            continue
        p = v.prime
        if n == 3 and hilbert_int(-1, -d, p) != r.hasse_at(v):
            return False
        if n == 4 and _local_square(d, p) and r.hasse_at(v) != hilbert_int(-1, -1, p):
            return False
    return True


def split_hyperbolic(r: InvariantRecord) -> InvariantRecord | None:
    """Record of ``q'`` where ``q = <1,-1> + q'``; ``None`` when ``q'`` is empty.

    ``d' = -d`` and ``s_v(q') = s_v(q) (-1, -d)_v`` under the convention
    above.
    """
    if not record_is_isotropic(r):
        raise QFError(f"record is anisotropic, nothing to split: {r}")
    if r.dim == 2:
        return None
    d = _as_int(r.det)
    pos, neg = r.signature
    return InvariantRecord(
        field=r.field,
        dim=r.dim - 2,
        det=square_class(element(r.field, -d)),
        hasse={v: s * hilbert_int(-1, -d, v.prime) for v, s in r.hasse.items()},
        signature=(pos - 1, neg - 1),
    )


def records_isometric(r1: InvariantRecord | None, r2: InvariantRecord | None) -> bool:
    if r1 is None or r2 is None:
        return r1 is None and r2 is None
    if r1.field != r2.field or r1.dim != r2.dim:
        return False
    F = r1.field
    if F.depth:
        return all(records_isometric(a, b) for a, b in zip(r1.tower_parts, r2.tower_parts))
    if F.base == "C":
        return True
    if F.base == "R":
        return r1.signature == r2.signature
    if r1.det != r2.det:
        return False
    if F.base == "F":
        return True
    if r1.signature != r2.signature:
        return False
    places = set(r1.hasse) | set(r2.hasse)
    return all(r1.hasse_at(v) == r2.hasse_at(v) for v in places)


def is_isometric(p: QuadraticForm, q: QuadraticForm) -> bool:
    if p.field != q.field:
        raise FieldMismatchError(f"forms over {p.field} and {q.field}")
    if p.dim != q.dim:
        return False
    return records_isometric(invariant_record(p), invariant_record(q))


def is_similar(p: QuadraticForm, q: QuadraticForm) -> bool:
    if p.field != q.field:
        raise FieldMismatchError(f"forms over {p.field} and {q.field}")
    if not p.field.finite_classes:
        raise UnsupportedFieldError("similarity over Q has no finite candidate set of scalars")
    return any(is_isometric(p, scale(a, q)) for a in square_class_reps(p.field))
