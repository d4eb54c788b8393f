"""Value sets D, G, H and the group / round / Pfister predicates.

For a form ``q`` over ``F``:

* ``D(q)`` -- nonzero values represented by ``q``;
* ``G(q)`` -- similarity factors, ``a`` with ``<1,-a> (x) q`` hyperbolic;
* ``H(q)`` -- products of two values, ``a`` with ``<1,-a> (x) q`` isotropic.

``q`` is a group form iff ``H <= D`` (and then ``H == D``), and round iff
``1 in D`` and ``H <= G``.  All three sets are unions of square classes, so
over fields with finitely many classes they are decided by enumerating
class representatives.  Over ``Q`` only the membership tests are offered.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import UnsupportedFieldError, QFError
from .fields import FieldElement, element, neg, one, square_class, square_class_reps
from .forms import QuadraticForm, diag, perp, pfister, scale, tensor
from .invariants import is_isometric
from .isotropy import is_hyperbolic, is_isotropic, witt_index

__all__ = [
    "ValueSets",
    "group_witness",
    "in_D",
    "in_G",
    "in_H",
    "is_group",
    "is_pfister_form",
    "is_round",
    "is_similar_to_pfister",
    "pfister_slots",
    "represents",
    "round_via_binary_multiples",
    "round_via_pfister_multiples",
    "round_witness",
    "value_sets",
]


def _unit(q: QuadraticForm, a) -> FieldElement:
    if not isinstance(a, FieldElement):
        a = element(q.field, a)
    return square_class(a)


def _binary(q: QuadraticForm, a: FieldElement) -> QuadraticForm:
    # <1, -a>
    return diag(q.field, [one(q.field), neg(a)])


def represents(q: QuadraticForm, a) -> bool:
    a = _unit(q, a)
    return is_isotropic(q) or is_isotropic(perp(q, QuadraticForm(q.field, (square_class(neg(a)),))))


in_D = represents


def in_G(q: QuadraticForm, a) -> bool:
    return is_hyperbolic(tensor(_binary(q, _unit(q, a)), q))


def in_H(q: QuadraticForm, a) -> bool:
    return is_isotropic(tensor(_binary(q, _unit(q, a)), q))


def _reps(q: QuadraticForm) -> list[FieldElement]:
    if not q.field.finite_classes:
        raise UnsupportedFieldError(f"unsupported: infinite square-class group over {q.field}")
    return square_class_reps(q.field)


@dataclass(frozen=True)
class ValueSets:
    form: QuadraticForm
    d_set: frozenset
    g_set: frozenset
    h_set: frozenset

    def ordered(self, which: str) -> list[FieldElement]:
        s = {"D": self.d_set, "G": self.g_set, "H": self.h_set}[which]
        return [a for a in square_class_reps(self.form.field) if a in s]


def value_sets(q: QuadraticForm) -> ValueSets:
    reps = _reps(q)
    return ValueSets(
        q,
        frozenset(a for a in reps if represents(q, a)),
        frozenset(a for a in reps if in_G(q, a)),
        frozenset(a for a in reps if in_H(q, a)),
    )


def group_witness(q: QuadraticForm) -> FieldElement | None:
    """A class in ``H \\ D``, or ``None`` when ``q`` is a group form."""
    for a in _reps(q):
        if in_H(q, a) and not represents(q, a):
            return a
    return None


def is_group(q: QuadraticForm) -> bool:
    return group_witness(q) is None


def round_witness(q: QuadraticForm) -> tuple[str, FieldElement] | None:
    """Why ``q`` is not round: ``("not in D", 1)`` or ``("in H \\ G", a)``."""
    reps = _reps(q)
    if not represents(q, one(q.field)):
        return "not in D", one(q.field)
    for a in reps:
        if in_H(q, a) and not in_G(q, a):
            return "in H \\ G", a
    return None


def is_round(q: QuadraticForm) -> bool:
    return round_witness(q) is None


def _aniso_or_hyperbolic(q: QuadraticForm) -> bool:
    i = witt_index(q)
    return i == 0 or 2 * i == q.dim


def round_via_binary_multiples(q: QuadraticForm, *, witness: bool = False):
    """Roundness via ``q (x) <b, c>`` anisotropic or hyperbolic for all binary ``<b, c>``.

    Requires ``1 in D(q)``.  With ``witness=True`` returns ``(verdict, beta)``.
    """
    reps = _reps(q)
    if not represents(q, one(q.field)):
        raise QFError("round_via_binary_multiples requires q to represent 1")
    for b, c in product(reps, repeat=2):
        beta = QuadraticForm(q.field, (b, c))
        if not _aniso_or_hyperbolic(tensor(q, beta)):
            return (False, beta) if witness else False
    return (True, None) if witness else True


def round_via_pfister_multiples(q: QuadraticForm) -> bool:
    """``q (x) <1, a>`` anisotropic or hyperbolic for every class ``a``."""
    return all(_aniso_or_hyperbolic(tensor(q, pfister(q.field, [a]))) for a in _reps(q))


def _two_power(n: int) -> int | None:
    k = 0
    while (1 << k) < n:
        k += 1
    return k if (1 << k) == n else None


def pfister_slots(q: QuadraticForm) -> tuple[FieldElement, ...] | None:
    """Slots ``(a1, ..., an)`` with ``q = <<a1, ..., an>>``, or ``None``."""
    n = _two_power(q.dim)
    if n is None:
        return None
    F = q.field
    if not F.finite_classes:
        if n == 0:
            return () if is_isometric(q, pfister(F, [])) else None
        if n == 1:
            if not represents(q, one(F)):
                return None
            d = square_class(q.entries[0] * q.entries[1])
            return (d,)
        raise UnsupportedFieldError(f"Pfister recognition over {F} is limited to dimension <= 2")
    for slots, pf in _distinct_pfister_forms(F, n):
        if is_isometric(q, pf):
            return slots
    return None


@lru_cache(maxsize=None)
def _distinct_pfister_forms(F, n: int) -> tuple:
    # one (slots, form) per isometry class of n-fold Pfister forms
    out = []
    for slots in product(square_class_reps(F), repeat=n):
        pf = pfister(F, slots)
        if not any(is_isometric(pf, s) for _, s in out):
            out.append((tuple(slots), pf))
    return tuple(out)


def is_pfister_form(q: QuadraticForm) -> bool:
    return pfister_slots(q) is not None


def is_similar_to_pfister(q: QuadraticForm) -> bool:
    return any(is_pfister_form(scale(a, q)) for a in _reps(q))
