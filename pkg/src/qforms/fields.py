"""Field descriptors, exact element arithmetic and square classes.

A field is a base (``F<p>``, ``Q``, ``R`` or ``C``) followed by a tower of
Laurent series variables, innermost first: ``F3((x))((y))`` is
``F_3((x))((y))``.  Elements of a tower are stored as monomials
``u * x1^e1 * ... * xn^en`` with ``u`` in the base field; every square class
of ``k((x))`` has a representative of the form ``a`` or ``a*x``, so this is
enough for every question that depends only on square classes.

Reals and complexes are carried by exact rational proxies.  Only their sign
(for ``R``) is ever consumed.
"""

from __future__ import annotations

import contextlib
import re
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import isqrt
from typing import Iterator, Union

from .errors import FactoringBoundError, FieldMismatchError, ParseError, UnsupportedFieldError, DegenerateFormError

__all__ = [
    "FieldDescriptor",
    "FieldElement",
    "FieldTraits",
    "SquareClass",
    "arithmetic",
    "element",
    "factoring_bound",
    "field_traits",
    "invert",
    "is_square",
    "mul",
    "neg",
    "one",
    "parse_field",
    "prime_support",
    "square_class",
    "square_class_reps",
    "squarefree_part",
]

RESERVED_NAMES = frozenset({"pfister", "hyp"})
_VAR_RE = re.compile(r"[a-z][a-z0-9]*")
_FIELD_RE = re.compile(r"\s*(?:F(?P<p>\d+)|(?P<b>[QRC]))(?P<tower>(?:\(\([^()]*\)\))*)\s*")

DEFAULT_FACTORING_BOUND = 10**6
_factoring_bound: ContextVar[int] = ContextVar("factoring_bound", default=DEFAULT_FACTORING_BOUND)


@contextlib.contextmanager
def factoring_bound(bound: int):
    """Temporarily change the trial-division bound used over ``Q``."""
    token = _factoring_bound.set(int(bound))
    try:
        yield
    finally:
        _factoring_bound.reset(token)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=4096)
def _factor(n: int, bound: int) -> tuple[tuple[int, int], ...] | None:
    # None: the cofactor left after trial division cannot be certified prime.
    out = []
    m = n
    d = 2
    while d * d <= m:
        if d > bound:
            break
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        if d * d <= m:
            # every prime factor of m exceeds the bound
            r = isqrt(m)
            if r * r == m and r <= bound**2:
                out.append((r, 2))
                return tuple(out)
            if m < bound**3 and r * r != m:
                return tuple(out) + (("unfactored", m),)
            return None
        out.append((m, 1))
    return tuple(out)


def squarefree_part(n: int) -> int:
    """Signed squarefree integer in the square class of the nonzero integer ``n``."""
    if n == 0:
        raise DegenerateFormError("zero has no square class")
    sign = -1 if n < 0 else 1
    fac = _factor(abs(n), _factoring_bound.get())
    if fac is None:
        raise FactoringBoundError(f"cannot factor {n} within trial-division bound {_factoring_bound.get()}")
    out = 1
    for p, e in fac:
        if p == "unfactored":
            out *= e
        elif e % 2:
            out *= p
    return sign * out


def prime_support(n: int) -> tuple[int, ...]:
    """Primes dividing the squarefree part of ``n``."""
    fac = _factor(abs(n), _factoring_bound.get())
    if fac is None or any(p == "unfactored" for p, _ in fac):
        raise FactoringBoundError(f"cannot factor {n} within trial-division bound {_factoring_bound.get()}")
    return tuple(p for p, e in fac if e % 2)


@lru_cache(maxsize=None)
def _least_nonresidue(p: int) -> int:
    return next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)


@dataclass(frozen=True)
class FieldDescriptor:
    """A base field plus a (possibly empty) Laurent tower, innermost variable first."""

    base: str
    p: int | None = None
    tower: tuple[str, ...] = ()

    def __post_init__(self):
        if self.base not in ("F", "Q", "R", "C"):
            raise ParseError(f"unknown base field {self.base!r}")
        if self.base == "F":
            if self.p is None or self.p % 2 == 0:
                raise ParseError(f"even characteristic is excluded: F{self.p}")
            if not _is_prime(self.p):
                raise ParseError(f"F{self.p}: {self.p} is not prime")
        elif self.p is not None:
            raise ParseError("only finite fields carry a characteristic")
        object.__setattr__(self, "tower", tuple(self.tower))
        seen = set()
        for v in self.tower:
            if not _VAR_RE.fullmatch(v) or v in RESERVED_NAMES:
                raise ParseError(f"invalid variable name {v!r}")
            if v in seen:
                raise ParseError(f"duplicate variable {v!r}")
            seen.add(v)

    def __str__(self):
        head = f"F{self.p}" if self.base == "F" else self.base
        return head + "".join(f"(({v}))" for v in self.tower)

    @property
    def depth(self) -> int:
        return len(self.tower)

    @property
    def finite_classes(self) -> bool:
        return self.base != "Q"

    @property
    def base_field(self) -> FieldDescriptor:
        return FieldDescriptor(self.base, self.p)

    def residue_field(self) -> FieldDescriptor:
        """Drop the outermost Laurent variable."""
        if not self.tower:
            raise UnsupportedFieldError(f"{self} has no Laurent variable")
        return FieldDescriptor(self.base, self.p, self.tower[:-1])

    def extend(self, var: str) -> FieldDescriptor:
        return FieldDescriptor(self.base, self.p, self.tower + (var,))

    def fresh_variable(self) -> str:
        for v in ("x", "y", "z", "t", "u", "w"):
            if v not in self.tower:
                return v
        i = 1
        while f"x{i}" in self.tower:
            i += 1
        return f"x{i}"


def parse_field(text: str) -> FieldDescriptor:
    """Parse ``F<p>``, ``Q``, ``R`` or ``C`` followed by ``((var))`` suffixes."""
    m = _FIELD_RE.fullmatch(text)
    if not m:
        raise ParseError(f"malformed field descriptor {text!r}", text)
    tower = tuple(v.strip() for v in re.findall(r"\(\(([^()]*)\)\)", m.group("tower")))
    if m.group("p") is not None:
        return FieldDescriptor("F", int(m.group("p")), tower)
    return FieldDescriptor(m.group("b"), None, tower)


Unit = Union[int, Fraction]


@dataclass(frozen=True)
class FieldElement:
    """Nonzero monomial ``unit * prod(var**exp)`` over ``field``.

    ``unit`` is an ``int`` in ``1..p-1`` over a finite base and a
    :class:`~fractions.Fraction` otherwise.
    """

    field: FieldDescriptor
    unit: Unit
    exps: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.exps) != len(self.field.tower):
            raise FieldMismatchError(f"{len(self.exps)} exponents for field {self.field}")
        if self.field.base == "F":
            if not isinstance(self.unit, int) or not 0 < self.unit < self.field.p:
                raise DegenerateFormError(f"residue {self.unit!r} is not a unit mod {self.field.p}")
        else:
            if not isinstance(self.unit, Fraction):
                object.__setattr__(self, "unit", Fraction(self.unit))
            if self.unit == 0:
                raise DegenerateFormError("zero is not a unit")

    def __str__(self):
        return render_monomial(self.unit, self.field.tower, self.exps)

    def __repr__(self):
        return f"FieldElement({self.field}, {self})"

    def __mul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return neg(self)

    @property
    def is_monomial_one(self):
        return not any(self.exps)


SquareClass = FieldElement  # a canonical representative


def render_monomial(unit, tower, exps) -> str:
    mono = []
    for v, e in zip(tower, exps):
        if e == 1:
            mono.append(v)
        elif e:
            mono.append(f"{v}^{e}")
    unit = Fraction(unit)
    sign = "-" if unit < 0 else ""
    mag = abs(unit)
    num = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
    if not mono:
        return sign + num
    if mag == 1:
        return sign + "*".join(mono)
    return sign + num + "*".join(mono)


def _reduce_unit(field: FieldDescriptor, value) -> Unit:
    value = Fraction(value)
    if value == 0:
        raise DegenerateFormError("zero coefficient")
    if field.base == "F":
        p = field.p
        if value.denominator % p == 0:
            raise DegenerateFormError(f"denominator {value.denominator} vanishes mod {p}")
        r = value.numerator * pow(value.denominator, -1, p) % p
        if r == 0:
            raise DegenerateFormError(f"{value} vanishes mod {p}")
        return r
    return value


def element(field: FieldDescriptor, value=1, exps=None) -> FieldElement:
    """Build an element from a rational ``value`` and optional exponents.

    Over ``F<p>`` the rational is reduced mod p.
    """
    if exps is None:
        exps = (0,) * field.depth
    elif isinstance(exps, dict):
        unknown = set(exps) - set(field.tower)
        if unknown:
            raise FieldMismatchError(f"variables {sorted(unknown)} not in {field}")
        exps = tuple(exps.get(v, 0) for v in field.tower)
    return FieldElement(field, _reduce_unit(field, value), tuple(exps))


def one(field: FieldDescriptor) -> FieldElement:
    return element(field, 1)


def _same_field(a: FieldElement, b: FieldElement):
    if a.field != b.field:
        raise FieldMismatchError(f"elements over {a.field} and {b.field}")


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    u = a.unit * b.unit
    if a.field.base == "F":
        u %= a.field.p
    return FieldElement(a.field, u, tuple(x + y for x, y in zip(a.exps, b.exps)))


def neg(a: FieldElement) -> FieldElement:
    u = a.field.p - a.unit if a.field.base == "F" else -a.unit
    return FieldElement(a.field, u, a.exps)


def invert(a: FieldElement) -> FieldElement:
    u = pow(a.unit, -1, a.field.p) if a.field.base == "F" else 1 / a.unit
    return FieldElement(a.field, u, tuple(-e for e in a.exps))


def arithmetic(op: str, a: FieldElement, b: FieldElement | None = None):
    """Dispatch ``mul``, ``neg``, ``invert`` or ``equals``."""
    if op == "mul":
        return mul(a, b)
    if op == "neg":
        return neg(a)
    if op == "invert":
        return invert(a)
    if op == "equals":
        _same_field(a, b)
        return a == b
    raise ValueError(f"unknown operation {op!r}")


def _unit_is_square(field: FieldDescriptor, u: Unit) -> bool:
    if field.base == "F":
        return pow(u, (field.p - 1) // 2, field.p) == 1
    if field.base == "C":
        return True
    if field.base == "R":
        return u > 0
    if u < 0:
        return False
    n, d = u.numerator, u.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def is_square(a: FieldElement) -> bool:
    return all(e % 2 == 0 for e in a.exps) and _unit_is_square(a.field, a.unit)


def _canonical_unit(field: FieldDescriptor, u: Unit) -> Unit:
    if field.base == "F":
        return 1 if _unit_is_square(field, u) else _least_nonresidue(field.p)
    if field.base == "C":
        return Fraction(1)
    if field.base == "R":
        return Fraction(1 if u > 0 else -1)
    return Fraction(squarefree_part(u.numerator * u.denominator))


def square_class(a: FieldElement) -> SquareClass:
    """Canonical representative of the square class of ``a``."""
    return FieldElement(a.field, _canonical_unit(a.field, a.unit), tuple(e % 2 for e in a.exps))


def _base_reps(field: FieldDescriptor) -> list[Unit]:
    if field.base == "F":
        return [1, _least_nonresidue(field.p)]
    if field.base == "R":
        return [Fraction(1), Fraction(-1)]
    if field.base == "C":
        return [Fraction(1)]
    raise UnsupportedFieldError(f"{field} has infinitely many square classes")


def square_class_reps(field: FieldDescriptor) -> list[SquareClass]:
    """All square classes, base units varying fastest, innermost variable next."""
    units = _base_reps(field)
    out = []
    for bits in product((0, 1), repeat=field.depth):
        exps = tuple(reversed(bits))
        out.extend(FieldElement(field, u, exps) for u in units)
    return out


def iter_square_class_reps(field: FieldDescriptor) -> Iterator[SquareClass]:
    yield from square_class_reps(field)


@dataclass(frozen=True)
class FieldTraits:
    is_real: bool
    is_pythagorean: bool
    is_quadratically_closed: bool
    square_class_count: int | None  # None: infinite


def field_traits(field: FieldDescriptor) -> FieldTraits:
    real = field.base in ("R", "Q")
    base_pyth = field.base in ("R", "C")
    pyth = base_pyth and (real or field.depth == 0)
    closed = field.base == "C" and field.depth == 0
    if field.base == "Q":
        count = None
    else:
        count = (1 if field.base == "C" else 2) * 2**field.depth
    return FieldTraits(real, pyth, closed, count)
