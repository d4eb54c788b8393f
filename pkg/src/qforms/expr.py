"""Form expressions: ``<1,-1> + 2*<3>``, ``pfister(2,x)``, ``3x<1>``, ``hyp(2)``.

Grammar::

    expr    := term { "+" term }
    term    := factor { "*" factor }
    factor  := "<" coeff {"," coeff} ">" | "pfister(" [coeff {"," coeff}] ")"
             | "hyp(" nat ")" | nat "x" factor | coeff "*" factor | "(" expr ")"
    coeff   := ["-"] [nat | nat "/" nat] { var ["^" ["-"] nat] }

``+`` is the orthogonal sum, ``*`` the tensor product and ``n x q`` the
n-fold orthogonal sum of ``q``.  Scaling and repetition bind tighter than
``*``, which binds tighter than ``+``.  Variables within one coefficient are
joined by ``*`` (``2x*y``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DegenerateFormError, ParseError
from .fields import RESERVED_NAMES, FieldDescriptor, FieldElement, element, render_monomial
from .forms import QuadraticForm, diag, hyperbolic_form, perp, pfister, repeat, scale, tensor

__all__ = [
    "Coeff",
    "Diag",
    "Hyp",
    "Perp",
    "Pfister",
    "Repeat",
    "Scale",
    "Tensor",
    "evaluate",
    "evaluate_coeff",
    "parse_coeff",
    "parse_form",
    "render",
]


@dataclass(frozen=True)
class Coeff:
    value: Fraction
    monomial: tuple[tuple[str, int], ...] = ()

    def __str__(self):
        names = tuple(v for v, _ in self.monomial)
        return render_monomial(self.value, names, tuple(e for _, e in self.monomial))


@dataclass(frozen=True)
class Diag:
    coeffs: tuple[Coeff, ...]


@dataclass(frozen=True)
class Pfister:
    coeffs: tuple[Coeff, ...]


@dataclass(frozen=True)
class Hyp:
    n: int


@dataclass(frozen=True)
class Scale:
    coeff: Coeff
    expr: "Expr"


@dataclass(frozen=True)
class Perp:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Repeat:
    n: int
    expr: "Expr"


Expr = Union[Diag, Pfister, Hyp, Scale, Perp, Tensor, Repeat]


def _is_ident_start(c: str) -> bool:
    return "a" <= c <= "z"


def _is_ident_char(c: str) -> bool:
    return c.isdigit() or "a" <= c <= "z"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.text, self.pos)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, offset=0) -> str:
        self.ws()
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def eat(self, s: str) -> bool:
        self.ws()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.eat(s):
            self.error(f"expected {s!r}")

    def nat(self) -> int:
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start : self.pos])

    def ident_at(self, i: int) -> str:
        j = i
        if j < len(self.text) and _is_ident_start(self.text[j]):
            j += 1
            while j < len(self.text) and _is_ident_char(self.text[j]):
                j += 1
        return self.text[i:j]

    def _next_nonspace(self, i: int) -> int:
        while i < len(self.text) and self.text[i].isspace():
            i += 1
        return i

    def _is_variable_at(self, i: int) -> bool:
        name = self.ident_at(i)
        if not name or name in RESERVED_NAMES:
            return False
        j = self._next_nonspace(i + len(name))
        return not (j < len(self.text) and self.text[j] == "(")

    # grammar

    def parse(self) -> Expr:
        e = self.expr()
        self.ws()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.eat("+"):
            e = Perp(e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek() == "*":
            self.pos += 1
            e = Tensor(e, self.factor())
        return e

    def coeff_list(self, close: str, allow_empty=False) -> tuple[Coeff, ...]:
        if allow_empty and self.eat(close):
            return ()
        out = [self.coeff()]
        while self.eat(","):
            out.append(self.coeff())
        self.expect(close)
        return tuple(out)

    def factor(self) -> Expr:
        c = self.peek()
        if not c:
            self.error("unexpected end of input")
        if c == "<":
            self.pos += 1
            return Diag(self.coeff_list(">"))
        if c == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        if _is_ident_start(c):
            name = self.ident_at(self.pos)
            after = self._next_nonspace(self.pos + len(name))
            if name in RESERVED_NAMES and after < len(self.text) and self.text[after] == "(":
                self.pos = after + 1
                if name == "pfister":
                    return Pfister(self.coeff_list(")", allow_empty=True))
                self.ws()
                start = self.pos
                n = self.nat()
                if n < 1:
                    self.pos = start
                    self.error("hyp(n) needs n >= 1")
                self.expect(")")
                return Hyp(n)
        if c.isdigit() and self._is_repeat():
            start = self.pos
            n = self.nat()
            if n < 1:
                self.pos = start
                self.error("repetition count must be positive")
            self.expect("x")
            return Repeat(n, self.factor())
        if c == "-" or c.isdigit() or _is_ident_start(c):
            k = self.coeff()
            if self.peek() != "*":
                self.error("a coefficient must be followed by '*' and a form")
            self.pos += 1
            return Scale(k, self.factor())
        self.error(f"unexpected {c!r}")

    def _is_repeat(self) -> bool:
        i = self.pos
        while i < len(self.text) and self.text[i].isdigit():
            i += 1
        j = self._next_nonspace(i)
        if j >= len(self.text) or self.text[j] != "x":
            return False
        if j + 1 < len(self.text) and _is_ident_char(self.text[j + 1]):
            return False  # a variable such as x1
        k = self._next_nonspace(j + 1)
        if k >= len(self.text):
            return False
        nxt = self.text[k]
        return nxt in "<(-" or nxt.isdigit() or _is_ident_start(nxt)

    def coeff(self) -> Coeff:
        start = self.pos
        sign = -1 if self.eat("-") else 1
        self.ws()
        value = None
        if self.pos < len(self.text) and self.text[self.pos].isdigit():
            value = Fraction(self.nat())
            if self.peek() == "/":
                self.pos += 1
                self.ws()
                den_start = self.pos
                den = self.nat()
                if den == 0:
                    self.pos = den_start
                    self.error("zero denominator")
                value /= den
        mono: list[tuple[str, int]] = []
        while True:
            self.ws()
            if mono:
                # further variables of the same monomial, joined by '*'
                j = self._next_nonspace(self.pos)
                if j < len(self.text) and self.text[j] == "*":
                    k = self._next_nonspace(j + 1)
                    if self._is_variable_at(k):
                        self.pos = k
                    else:
                        break
                else:
                    break
            elif not self._is_variable_at(self.pos):
                break
            name = self.ident_at(self.pos)
            self.pos += len(name)
            e = 1
            if self.eat("^"):
                neg = self.eat("-")
                e = self.nat() * (-1 if neg else 1)
            mono.append((name, e))
        if value is None and not mono:
            self.pos = start
            self.error("expected a coefficient")
        if value == 0:
            self.pos = start
            self.error("zero coefficient")
        return Coeff(sign * (value if value is not None else Fraction(1)), tuple(mono))


def parse_form(text: str) -> Expr:
    return _Parser(text).parse()


def parse_coeff(text: str) -> Coeff:
    p = _Parser(text)
    c = p.coeff()
    p.ws()
    if p.pos != len(text):
        p.error(f"unexpected {text[p.pos]!r}")
    return c


def render(e: Expr) -> str:
    if isinstance(e, Diag):
        return "<" + ", ".join(map(str, e.coeffs)) + ">"
    if isinstance(e, Pfister):
        return "pfister(" + ", ".join(map(str, e.coeffs)) + ")"
    if isinstance(e, Hyp):
        return f"hyp({e.n})"
    if isinstance(e, Perp):
        r = render(e.right)
        if isinstance(e.right, Perp):
            r = f"({r})"
        return f"{render(e.left)} + {r}"
    if isinstance(e, Tensor):
        left, right = render(e.left), render(e.right)
        if isinstance(e.left, Perp):
            left = f"({left})"
        if isinstance(e.right, (Perp, Tensor)):
            right = f"({right})"
        return f"{left}*{right}"
    if isinstance(e, Scale):
        inner = render(e.expr)
        if isinstance(e.expr, (Perp, Tensor, Scale)):
            inner = f"({inner})"
        return f"{e.coeff}*{inner}"
    if isinstance(e, Repeat):
        inner = render(e.expr)
        if not isinstance(e.expr, Diag):
            inner = f"({inner})"
        return f"{e.n}x{inner}"
    raise TypeError(f"not a form expression: {e!r}")


def evaluate_coeff(c: Coeff, field: FieldDescriptor) -> FieldElement:
    exps: dict[str, int] = {}
    for v, e in c.monomial:
        exps[v] = exps.get(v, 0) + e
    try:
        return element(field, c.value, exps)
    except DegenerateFormError as exc:
        raise DegenerateFormError(f"coefficient {c} over {field}: {exc}") from None


def evaluate(e: Expr, field: FieldDescriptor) -> QuadraticForm:
    if isinstance(e, Diag):
        return diag(field, [evaluate_coeff(c, field) for c in e.coeffs])
    if isinstance(e, Pfister):
        return pfister(field, [evaluate_coeff(c, field) for c in e.coeffs])
    if isinstance(e, Hyp):
        return hyperbolic_form(field, e.n)
    if isinstance(e, Perp):
        return perp(evaluate(e.left, field), evaluate(e.right, field))
    if isinstance(e, Tensor):
        return tensor(evaluate(e.left, field), evaluate(e.right, field))
    if isinstance(e, Scale):
        return scale(evaluate_coeff(e.coeff, field), evaluate(e.expr, field))
    if isinstance(e, Repeat):
        return repeat(e.n, evaluate(e.expr, field))
    raise TypeError(f"not a form expression: {e!r}")
