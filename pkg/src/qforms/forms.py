"""Diagonal quadratic forms and their algebra."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateFormError, FieldMismatchError
from .fields import FieldDescriptor, FieldElement, element, mul, neg, one, square_class

__all__ = [
    "QuadraticForm",
    "diag",
    "extend_form",
    "hyperbolic_form",
    "perp",
    "pfister",
    "scale",
    "tensor",
]


@dataclass(frozen=True)
class QuadraticForm:
    """``<a1, ..., an>`` with every entry stored as its canonical square class.

    Entry order is kept as given; isometry never depends on it.
    """

    field: FieldDescriptor
    entries: tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.entries:
            raise DegenerateFormError("forms have positive dimension")
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if e.field != self.field:
                raise FieldMismatchError(f"entry {e} is over {e.field}, form over {self.field}")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "<" + ", ".join(str(e) for e in self.entries) + ">"

    def __repr__(self):
        return f"QuadraticForm({self.field}, {self})"

    def multiset(self) -> Counter:
        return Counter(self.entries)

    def __add__(self, other):
        return perp(self, other)

    def __mul__(self, other):
        return tensor(self, other)

    def __neg__(self):
        return scale(element(self.field, -1), self)


def _coerce(field: FieldDescriptor, value) -> FieldElement:
    if isinstance(value, FieldElement):
        if value.field != field:
            raise FieldMismatchError(f"element {value} is over {value.field}, expected {field}")
        return value
    return element(field, value)


def diag(field: FieldDescriptor, raw: Iterable) -> QuadraticForm:
    """Diagonal form from field elements (or rationals, reduced into ``field``)."""
    entries = tuple(square_class(_coerce(field, a)) for a in raw)
    return QuadraticForm(field, entries)


def _check(p: QuadraticForm, q: QuadraticForm):
    if p.field != q.field:
        raise FieldMismatchError(f"forms over {p.field} and {q.field}")


def perp(p: QuadraticForm, q: QuadraticForm) -> QuadraticForm:
    _check(p, q)
    return QuadraticForm(p.field, p.entries + q.entries)


def tensor(p: QuadraticForm, q: QuadraticForm) -> QuadraticForm:
    _check(p, q)
    return QuadraticForm(p.field, tuple(square_class(mul(a, b)) for a in p.entries for b in q.entries))


def scale(a, q: QuadraticForm) -> QuadraticForm:
    a = _coerce(q.field, a)
    return QuadraticForm(q.field, tuple(square_class(mul(a, b)) for b in q.entries))


def pfister(field: FieldDescriptor, slots: Sequence) -> QuadraticForm:
    """``<1, a1> (x) ... (x) <1, an>``; the empty product is ``<1>``."""
    q = QuadraticForm(field, (one(field),))
    for a in slots:
        a = _coerce(field, a)
        q = tensor(QuadraticForm(field, (one(field), square_class(a))), q)
    return q


def hyperbolic_form(field: FieldDescriptor, m: int) -> QuadraticForm:
    if m < 1:
        raise DegenerateFormError("hyperbolic_form needs m >= 1")
    plane = (one(field), square_class(neg(one(field))))
    return QuadraticForm(field, plane * m)


def repeat(n: int, q: QuadraticForm) -> QuadraticForm:
    if n < 1:
        raise DegenerateFormError("repetition count must be positive")
    return QuadraticForm(q.field, q.entries * n)


def same_entries(p: QuadraticForm, q: QuadraticForm) -> bool:
    """Equal canonical entry multisets (isometric, but much stronger)."""
    return p.field == q.field and p.multiset() == q.multiset()


def extend_form(q: QuadraticForm, K: FieldDescriptor, x_power: int = 0) -> QuadraticForm:
    """View ``q`` over a Laurent extension ``K`` of its field, times ``x**x_power``.

    ``x`` is the outermost variable of ``K``.
    """
    F = q.field
    if K.base != F.base or K.p != F.p or K.tower[: F.depth] != F.tower or K.depth == F.depth:
        raise FieldMismatchError(f"{K} is not a Laurent extension of {F}")
    pad = (0,) * (K.depth - F.depth - 1) + (x_power,)
    return QuadraticForm(K, tuple(FieldElement(K, a.unit, a.exps + pad) for a in q.entries))
