"""Isotropy, Witt index, hyperbolicity and anisotropic parts.

Over a Laurent field ``k((x))`` a monomial diagonal form splits as
``p + x*q`` with ``p``, ``q`` over ``k`` and ``i(p + x*q) = i(p) + i(q)``;
every decision here reduces to the base field through that split.  Over
``Q`` the Witt index is found at record level: test isotropy, peel off a
hyperbolic plane, repeat.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldElement, element, mul, one, square_class
from .forms import QuadraticForm, extend_form
from .invariants import (
    InvariantRecord,
    determinant_class,
    invariant_record,
    record_is_isotropic,
    signature,
    split_hyperbolic,
)

__all__ = [
    "WittDecomposition",
    "anisotropic_part",
    "is_anisotropic",
    "is_hyperbolic",
    "is_isotropic",
    "springer_split",
    "witt_decomposition",
    "witt_index",
]


@dataclass(frozen=True)
class WittDecomposition:
    """``q = q_an + witt_index * <1,-1>``.

    ``anisotropic_part`` is ``None`` when ``q`` is hyperbolic, and also over a
    ``Q`` base where only ``anisotropic_invariants`` is produced.
    """

    dim: int
    witt_index: int
    anisotropic_part: QuadraticForm | None
    anisotropic_invariants: InvariantRecord | None

    @property
    def hyperbolic(self) -> bool:
        return 2 * self.witt_index == self.dim

    @property
    def anisotropic_dim(self) -> int:
        return self.dim - 2 * self.witt_index


def springer_split(q: QuadraticForm) -> tuple[QuadraticForm | None, QuadraticForm | None]:
    """Residue forms ``(p, q')`` with ``q = p + x*q'`` for the outermost ``x``."""
    F = q.field
    k = F.residue_field()
    unit, odd = [], []
    for a in q.entries:
        head, e = a.exps[:-1], a.exps[-1]
        (odd if e % 2 else unit).append(square_class(FieldElement(k, a.unit, head)))
    return (
        QuadraticForm(k, tuple(unit)) if unit else None,
        QuadraticForm(k, tuple(odd)) if odd else None,
    )


def _fp_decompose(q: QuadraticForm) -> tuple[int, QuadraticForm | None]:
    F = q.field
    n = q.dim
    d = determinant_class(q)
    if n % 2:
        i = (n - 1) // 2
        an = square_class(element(F, (-1) ** i) * d)
        return i, QuadraticForm(F, (an,))
    # n even: hyperbolic iff (-1)^(n/2) d is a square
    if square_class(element(F, (-1) ** (n // 2)) * d).unit == 1:
        return n // 2, None
    i = n // 2 - 1
    det_an = square_class(element(F, (-1) ** i) * d)
    return i, QuadraticForm(F, (one(F), det_an))


def _decompose(q: QuadraticForm | None) -> tuple[int, "QuadraticForm | InvariantRecord | None"]:
    if q is None:
        return 0, None
    F = q.field
    if F.depth:
        return _tower_decompose(q)
    if F.base == "F":
        return _fp_decompose(q)
    if F.base == "C":
        return q.dim // 2, (QuadraticForm(F, (one(F),)) if q.dim % 2 else None)
    if F.base == "R":
        pos, neg = signature(q)
        if pos == neg:
            return pos, None
        sign = 1 if pos > neg else -1
        return min(pos, neg), QuadraticForm(F, (element(F, sign),) * abs(pos - neg))
    rec = invariant_record(q)
    i = 0
    while rec is not None and record_is_isotropic(rec):
        rec = split_hyperbolic(rec)
        i += 1
    return i, rec


def _record_of(an) -> InvariantRecord | None:
    if an is None or isinstance(an, InvariantRecord):
        return an
    return invariant_record(an)


def _tower_decompose(q: QuadraticForm):
    K = q.field
    p, r = springer_split(q)
    i1, a1 = _decompose(p)
    i2, a2 = _decompose(r)
    i = i1 + i2
    if a1 is None and a2 is None:
        return i, None
    if not isinstance(a1, InvariantRecord) and not isinstance(a2, InvariantRecord):
        entries = ()
        if a1 is not None:
            entries += extend_form(a1, K, 0).entries
        if a2 is not None:
            entries += extend_form(a2, K, 1).entries
        return i, QuadraticForm(K, entries)
    # Q base somewhere below: assemble the record from the parts
    r1, r2 = _record_of(a1), _record_of(a2)
    x = element(K, 1, {K.tower[-1]: 1})
    det = one(K)
    dim = 0
    for rr, shift in ((r1, False), (r2, True)):
        if rr is None:
            continue
        dim += rr.dim
        d = FieldElement(K, rr.det.unit, rr.det.exps + (0,))
        det = mul(det, d)
        if shift and rr.dim % 2:
            det = mul(det, x)
    return i, InvariantRecord(K, dim, square_class(det), tower_parts=(r1, r2))


def witt_decomposition(q: QuadraticForm) -> WittDecomposition:
    i, an = _decompose(q)
    if isinstance(an, InvariantRecord):
        return WittDecomposition(q.dim, i, None, an)
    return WittDecomposition(q.dim, i, an, None if an is None else invariant_record(an))


def witt_index(q: QuadraticForm | None) -> int:
    """``i(q)``; an absent form has index 0."""
    return _decompose(q)[0]


def is_isotropic(q: QuadraticForm) -> bool:
    F = q.field
    if F.depth:
        return any(part is not None and is_isotropic(part) for part in springer_split(q))
    if F.base == "F":
        if q.dim >= 3:
            return True
        if q.dim == 1:
            return False
        return square_class(-determinant_class(q)).unit == 1
    if F.base == "C":
        return q.dim >= 2
    if F.base == "R":
        pos, neg = signature(q)
        return pos > 0 and neg > 0
    return record_is_isotropic(invariant_record(q))


def is_anisotropic(q: QuadraticForm) -> bool:
    return not is_isotropic(q)


def is_hyperbolic(q: QuadraticForm) -> bool:
    return q.dim % 2 == 0 and 2 * witt_index(q) == q.dim


def anisotropic_part(q: QuadraticForm):
    """Explicit ``q_an`` (``None`` if hyperbolic), or its record over a ``Q`` base."""
    return _decompose(q)[1]
