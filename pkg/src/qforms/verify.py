"""Exhaustive desk-scale checks of the group / round / Pfister theory.

Each check sweeps every diagonal form of bounded dimension over the
finite-class fields of a :class:`SweepConfig` (dimension ascending, so the
first counterexample is a smallest one) and compares two independent routes
to the same answer.  Fields with infinitely many square classes are only
exercised by the fixed-witness checks.
"""

from __future__ import annotations

import contextlib
import json
import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator

from . import classify, isotropy, oracles
from .errors import BudgetExceededError, QFError, UnsupportedFieldError
from .fields import (
    FieldDescriptor,
    FieldElement,
    element,
    factoring_bound,
    field_traits,
    mul,
    neg,
    one,
    parse_field,
    square_class,
    square_class_reps,
)
from .forms import QuadraticForm, diag, extend_form, perp, pfister, repeat, tensor
from .invariants import is_isometric

__all__ = [
    "CHECKS",
    "DEFAULT_FIELDS",
    "CheckResult",
    "SweepConfig",
    "VerificationReport",
    "enumerate_forms",
    "run_suite",
]

DEFAULT_FIELDS = ("F3", "F5", "F3((x))", "R", "R((x))", "C")
DEFAULT_BUDGET = 10**6
MAX_COUNTEREXAMPLES = 10


@dataclass(frozen=True)
class SweepConfig:
    fields: tuple[FieldDescriptor, ...] = tuple(parse_field(f) for f in DEFAULT_FIELDS)
    max_dim: int = 4
    tower_depth_cap: int = 2
    checks: tuple[str, ...] | None = None
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    lattice_bound: int = oracles.DEFAULT_LATTICE_BOUND
    factoring_bound: int | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "fields", tuple(parse_field(f) if isinstance(f, str) else f for f in self.fields)
        )
        if self.max_dim < 1:
            raise ValueError("max_dim must be at least 1")
        if self.tower_depth_cap < 0:
            raise ValueError("tower_depth_cap must be non-negative")
        if self.checks is not None:
            object.__setattr__(self, "checks", tuple(self.checks))
            unknown = [c for c in self.checks if c not in CHECKS]
            if unknown:
                raise ValueError(f"unknown checks: {', '.join(unknown)}")
        for F in self.fields:
            if F.finite_classes and len(square_class_reps(F)) ** self.max_dim > self.budget:
                raise BudgetExceededError(
                    f"{len(square_class_reps(F))}^{self.max_dim} forms over {F} exceed the budget {self.budget}"
                )

    @property
    def selected(self) -> tuple[str, ...]:
        return tuple(CHECKS) if self.checks is None else self.checks


def enumerate_forms(F: FieldDescriptor, dims: Iterable[int], budget: int = DEFAULT_BUDGET) -> Iterator[QuadraticForm]:
    """Every entry tuple over the square-class representatives, ascending by dimension."""
    if not F.finite_classes:
        raise UnsupportedFieldError(f"unsupported: infinite square-class group over {F}")
    reps = square_class_reps(F)
    dims = list(dims)
    total = sum(len(reps) ** d for d in dims)
    if total > budget:
        raise BudgetExceededError(f"{total} forms over {F} exceed the budget {budget}")
    for d in dims:
        for ents in product(reps, repeat=d):
            yield QuadraticForm(F, ents)


@dataclass
class CheckResult:
    name: str
    anchor: str
    population: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    failures: int = 0
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        return "pass" if self.population else "vacuous"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timings: bool = True) -> dict:
        d = {
            "name": self.name,
            "anchor": self.anchor,
            "population": self.population,
            "status": self.status,
            "failures": self.failures,
            "counterexamples": list(self.counterexamples),
            "notes": list(self.notes),
        }
        if timings:
            d["elapsed"] = round(self.elapsed, 6)
        return d


@dataclass
class VerificationReport:
    config: dict
    results: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self, timings: bool = True) -> dict:
        return {
            "config": self.config,
            "ok": self.ok,
            "population": sum(r.population for r in self.results),
            "checks": [r.to_dict(timings) for r in self.results],
        }

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), indent=2)

    def render_text(self) -> str:
        lines = []
        for r in self.results:
            label = {"pass": "PASS", "fail": "FAIL", "vacuous": "VACUOUS"}[r.status]
            lines.append(f"{label:8} {r.name:26} population {r.population:6}  {r.elapsed:7.2f}s  {r.anchor}")
            for n in r.notes:
                lines.append(f"         note: {n}")
            for c in r.counterexamples:
                w = f" witness {c['witness']}" if c.get("witness") is not None else ""
                lines.append(f"         counterexample over {c['field']}: {c['form']}{w} ({c['detail']})")
        verdict = "all checks passed" if self.ok else "some checks failed"
        vac = [r.name for r in self.results if r.status == "vacuous"]
        if vac:
            verdict += f"; population 0 (not evidence): {', '.join(vac)}"
        lines.append(verdict)
        return "\n".join(lines)


class _Ctx:
    """Per-check bookkeeping handed to the check bodies."""

    def __init__(self, cfg: SweepConfig, result: CheckResult):
        self.cfg = cfg
        self.result = result
        self.current: tuple = ("-", "-")

    def count(self, n: int = 1):
        self.result.population += n

    def fail(self, F, form, detail: str, witness=None):
        self.result.failures += 1
        if len(self.result.counterexamples) < MAX_COUNTEREXAMPLES:
            self.result.counterexamples.append(
                {
                    "field": str(F),
                    "form": str(form),
                    "witness": None if witness is None else str(witness),
                    "detail": detail,
                }
            )

    def expect(self, cond: bool, F, form, detail: str, witness=None):
        self.count()
        if not cond:
            self.fail(F, form, detail, witness)

    def sweep_fields(self, pred: Callable[[FieldDescriptor], bool] = lambda F: True):
        return [F for F in self.cfg.fields if F.finite_classes and pred(F)]

    def forms(self, F, dims) -> Iterator[QuadraticForm]:
        for q in enumerate_forms(F, dims, self.cfg.budget):
            self.current = (F, q)
            yield q

    def dims(self, cap: int | None = None) -> range:
        top = self.cfg.max_dim if cap is None else min(cap, self.cfg.max_dim)
        return range(1, top + 1)

    def note(self, text: str):
        self.result.notes.append(text)


def _is_fp(F: FieldDescriptor) -> bool:
    return F.base == "F" and F.depth == 0


def _can_extend(ctx: _Ctx, F: FieldDescriptor, levels: int = 1) -> bool:
    return F.depth + levels <= ctx.cfg.tower_depth_cap


def _lift(q: QuadraticForm, K: FieldDescriptor) -> QuadraticForm:
    return extend_form(q, K)


def _lift_elem(a: FieldElement, K: FieldDescriptor) -> FieldElement:
    return extend_form(QuadraticForm(a.field, (a,)), K).entries[0]


def _times_generic_binary(q: QuadraticForm) -> tuple[FieldDescriptor, QuadraticForm]:
    # q (x) <1, x> over F((x))
    K = q.field.extend(q.field.fresh_variable())
    x = element(K, 1, {K.tower[-1]: 1})
    return K, tensor(_lift(q, K), diag(K, [one(K), x]))


def _base_witt_index(q: QuadraticForm | None) -> int:
    """Witt index over a base field by a route that avoids the engine."""
    if q is None:
        return 0
    F = q.field
    if _is_fp(F):
        return oracles.witt_index_bruteforce(q)
    if F.depth == 0 and F.base == "R":
        pos = sum(1 for a in q.entries if a.unit > 0)
        return min(pos, q.dim - pos)
    if F.depth == 0 and F.base == "C":
        return q.dim // 2
    return isotropy.witt_index(q)


# -- checks ---------------------------------------------------------------


def _check_springer(ctx: _Ctx):
    for F in ctx.sweep_fields(lambda F: _can_extend(ctx, F)):
        K = F.extend(F.fresh_variable())
        local = K.base == "F" and K.depth == 1
        parts = list(ctx.forms(F, ctx.dims(3)))
        base_index = {p: _base_witt_index(p) for p in parts}
        for p, r in product(parts, repeat=2):
            form = perp(extend_form(p, K), extend_form(r, K, x_power=1))
            expected = base_index[p] + base_index[r]
            got = isotropy.witt_index(form)
            ctx.expect(got == expected, K, form, f"engine index {got}, part indices sum to {expected}")
            if local:
                lf = oracles.local_field_witt_index(form)
                if lf != expected:
                    ctx.fail(K, form, f"local-field index {lf}, part indices sum to {expected}")


def _check_roussey(ctx: _Ctx):
    for F in ctx.sweep_fields(_is_fp):
        reps = square_class_reps(F)
        for q in ctx.forms(F, ctx.dims()):
            d = oracles.d_set_bruteforce(q)
            dd = {square_class(mul(a, b)) for a in d for b in d}
            h = {a for a in reps if classify.in_H(q, a)}
            ctx.expect(h == dd, F, q, f"H = {sorted(map(str, h))}, D*D = {sorted(map(str, dd))}")


def _closed(s: set, F) -> bool:
    return all(square_class(mul(a, b)) in s for a in s for b in s)


def _check_group_iff(ctx: _Ctx):
    for F in ctx.sweep_fields():
        for q in ctx.forms(F, ctx.dims()):
            vs = classify.value_sets(q)
            d = set(oracles.d_set_bruteforce(q)) if _is_fp(F) else set(vs.d_set)
            if _is_fp(F) and d != set(vs.d_set):
                ctx.fail(F, q, f"engine D {sorted(map(str, vs.d_set))} vs enumerated D {sorted(map(str, d))}")
            g = classify.is_group(q)
            ctx.expect(g == (vs.h_set <= vs.d_set), F, q, f"is_group {g} but H <= D is {vs.h_set <= vs.d_set}")
            ctx.expect(g == _closed(d, F), F, q, f"is_group {g} but D closed is {_closed(d, F)}")


def _check_group_equals(ctx: _Ctx):
    for F in ctx.sweep_fields():
        for q in ctx.forms(F, ctx.dims()):
            vs = classify.value_sets(q)
            g = classify.is_group(q)
            ctx.expect(g == (vs.h_set == vs.d_set), F, q, f"is_group {g} but H == D is {vs.h_set == vs.d_set}")


def _check_round_chain(ctx: _Ctx):
    for F in ctx.sweep_fields():
        for q in ctx.forms(F, ctx.dims()):
            if not classify.represents(q, one(F)):
                continue
            vs = classify.value_sets(q)
            verdicts = {
                "is_round": classify.is_round(q),
                "H <= G": vs.h_set <= vs.g_set,
                "binary multiples": classify.round_via_binary_multiples(q),
                "1-fold Pfister multiples": classify.round_via_pfister_multiples(q),
                "D == G": vs.d_set == vs.g_set,
            }
            ctx.expect(len(set(verdicts.values())) == 1, F, q, ", ".join(f"{k} {v}" for k, v in verdicts.items()))


def _check_simone(ctx: _Ctx):
    for F in ctx.sweep_fields():
        for q in ctx.forms(F, [d for d in (1, 2, 4) if d <= ctx.cfg.max_dim]):
            pf = classify.is_pfister_form(q)
            sim = classify.is_similar_to_pfister(q) and classify.represents(q, one(F))
            ctx.expect(pf == sim, F, q, f"Pfister {pf}, similar to Pfister and represents 1 {sim}")


def _check_rounddim(ctx: _Ctx):
    for F in ctx.sweep_fields():
        for q in ctx.forms(F, ctx.dims()):
            vs = classify.value_sets(q)
            rnd = classify.is_round(q)
            if vs.d_set == {one(F)}:
                ctx.expect(rnd, F, q, "D is the squares but q is not round")
            if rnd and vs.h_set != {one(F)}:
                ctx.expect(q.dim % 2 == 0, F, q, "round with H larger than the squares, odd dimension")


def _check_oddround(ctx: _Ctx):
    top = max(3, ctx.cfg.max_dim)
    for F in ctx.sweep_fields():
        ones = {n: repeat(n, diag(F, [1])) for n in range(1, top + 1, 2)}
        for q in ctx.forms(F, [d for d in ctx.dims() if d % 2]):
            if classify.is_round(q):
                ctx.expect(is_isometric(q, ones[q.dim]), F, q, f"odd round form not isometric to {q.dim}x<1>")
                if q.dim == 3:
                    ctx.expect(field_traits(F).is_pythagorean, F, q, "round in dimension 3 over a non-Pythagorean field")
        some = any(classify.is_round(ones[n]) for n in ones if n >= 3)
        every = all(classify.is_round(ones[n]) for n in ones)
        pyth = field_traits(F).is_pythagorean
        ctx.expect(
            some == every == pyth,
            F,
            ones[3],
            f"some odd n>=3 round {some}, all odd n round {every}, Pythagorean {pyth}",
        )


def _check_oddisoround(ctx: _Ctx):
    for F in ctx.sweep_fields():
        closed = field_traits(F).is_quadratically_closed
        for q in ctx.forms(F, [d for d in ctx.dims() if d % 2]):
            if not isotropy.is_isotropic(q):
                continue
            rnd = classify.is_round(q)
            ctx.expect(rnd == closed, F, q, f"odd isotropic: round {rnd}, quadratically closed {closed}")


def _check_oddroundcor(ctx: _Ctx):
    for F in ctx.sweep_fields():
        reps = square_class_reps(F)
        binaries = [QuadraticForm(F, (b, c)) for b, c in product(reps, repeat=2)]
        binaries = [b for b in binaries if not isotropy.is_isotropic(b)]
        for q in ctx.forms(F, [d for d in ctx.dims() if d % 2]):
            if isotropy.is_isotropic(q) or not classify.is_round(q):
                continue
            for beta in binaries:
                ctx.expect(
                    not isotropy.is_isotropic(tensor(q, beta)), F, q, "q (x) beta isotropic", witness=str(beta)
                )


def _going_up(ctx: _Ctx, levels: int):
    for F in ctx.sweep_fields(lambda F: _can_extend(ctx, F, levels)):
        K = F
        for _ in range(levels):
            K = K.extend(K.fresh_variable())
        for q in ctx.forms(F, ctx.dims()):
            qK = _lift(q, K)
            gF, gK = classify.is_group(q), classify.is_group(qK)
            ctx.expect(gF == gK, K, q, f"group over {F}: {gF}, over {K}: {gK}")
            rK = classify.is_round(qK)
            if not isotropy.is_isotropic(q):
                rF = classify.is_round(q)
                ctx.expect(rF == rK, K, q, f"anisotropic: round over {F}: {rF}, over {K}: {rK}")
            elif rK:
                ctx.expect(classify.is_round(q), K, q, f"isotropic and round over {K} but not over {F}")


def _check_laurent_going_up(ctx: _Ctx):
    _going_up(ctx, 1)


def _check_laurent_tower(ctx: _Ctx):
    if ctx.cfg.tower_depth_cap < 2:
        ctx.note("tower depth cap below 2")
    _going_up(ctx, 2)


def _check_agen(ctx: _Ctx):
    for F in ctx.sweep_fields(lambda F: _can_extend(ctx, F)):
        K = F.extend(F.fresh_variable())
        reps = square_class_reps(F)
        for q in ctx.forms(F, ctx.dims()):
            qK = _lift(q, K)
            aniso = not isotropy.is_isotropic(q)
            for a in reps:
                aK = _lift_elem(a, K)
                dF, dK = classify.represents(q, a), classify.represents(qK, aK)
                ctx.expect(dF == dK, K, q, f"represents over {F}: {dF}, over {K}: {dK}", witness=a)
                if aniso:
                    gF, gK = classify.in_G(q, a), classify.in_G(qK, aK)
                    ctx.expect(gF == gK, K, q, f"anisotropic: in G over {F}: {gF}, over {K}: {gK}", witness=a)


def _check_grouptrans(ctx: _Ctx):
    for F in ctx.sweep_fields(lambda F: _can_extend(ctx, F)):
        for q in ctx.forms(F, ctx.dims()):
            K, qx = _times_generic_binary(q)
            gF, gK = classify.is_group(q), classify.is_group(qx)
            ctx.expect(gF == gK, K, q, f"group over {F}: {gF}; q (x) <1,x> group over {K}: {gK}")


def _check_genericgnr_finite(ctx: _Ctx):
    for F in ctx.sweep_fields(lambda F: _can_extend(ctx, F)):
        for q in ctx.forms(F, ctx.dims()):
            if isotropy.is_isotropic(q) or not classify.is_group(q) or classify.is_round(q):
                continue
            K, qx = _times_generic_binary(q)
            ok = not isotropy.is_isotropic(qx) and classify.is_group(qx) and not classify.is_round(qx)
            ctx.expect(ok, K, q, "q (x) <1,x> is not an anisotropic group form that fails to be round")
    if not ctx.result.population:
        ctx.note("no anisotropic group form that is not round exists in the swept population")


def _hyperbolic_via_residues(q: QuadraticForm) -> bool:
    # over F((x)): q hyperbolic iff both residue forms are hyperbolic over F
    p, r = isotropy.springer_split(q)
    return all(part is None or isotropy.is_hyperbolic(part) for part in (p, r))


def _check_genericgnr_q(ctx: _Ctx):
    Q = parse_field("Q")
    q = repeat(7, diag(Q, [1]))
    two = element(Q, 2)
    for what, val in (
        ("represents(q, 2)", classify.represents(q, two)),
        ("2 in H(q)", classify.in_H(q, two)),
        ("2 not in G(q)", not classify.in_G(q, two)),
        ("q anisotropic", not isotropy.is_isotropic(q)),
    ):
        ctx.expect(val, Q, q, what + " fails", witness=two)
    # D(q) is the positive rationals, G(q) the squares, H(q) = D(q) D(q)
    rng = random.Random(ctx.cfg.seed)
    for a in rng.sample(range(-60, 61), 12):
        if a == 0:
            continue
        ea = element(Q, a)
        sq = a > 0 and int(a**0.5 + 0.5) ** 2 == a
        ctx.expect(classify.represents(q, ea) == (a > 0), Q, q, f"represents({a}) wrong", witness=a)
        ctx.expect(classify.in_H(q, ea) == (a > 0), Q, q, f"in_H({a}) wrong", witness=a)
        ctx.expect(classify.in_G(q, ea) == sq, Q, q, f"in_G({a}) wrong", witness=a)
    K, qx = _times_generic_binary(q)
    x = element(K, 1, {K.tower[-1]: 1})
    two_k = element(K, 2)
    ctx.expect(not isotropy.is_isotropic(qx), K, qx, "q (x) <1,x> isotropic")
    ctx.expect(classify.represents(qx, two_k), K, qx, "represents(2) fails", witness=two_k)
    ctx.expect(classify.in_H(qx, two_k), K, qx, "2 not in H", witness=two_k)
    ctx.expect(not classify.in_G(qx, two_k), K, qx, "2 in G", witness=two_k)
    bin2 = diag(K, [one(K), neg(two_k)])
    ctx.expect(not isotropy.is_hyperbolic(tensor(bin2, qx)), K, qx, "<1,-2> (x) q (x) <1,x> hyperbolic")
    for a in (two_k, mul(two_k, x), x, neg(x)):
        t = tensor(diag(K, [one(K), neg(a)]), qx)
        direct, reduced = classify.in_G(qx, a), _hyperbolic_via_residues(t)
        ctx.expect(direct == reduced, K, qx, f"in_G {direct}, residue-form reduction {reduced}", witness=a)


def _check_anisround(ctx: _Ctx):
    F = parse_field("F3")
    K = parse_field("F3((x))")
    q = diag(F, [1, -1, 1, 1])
    qK = _lift(q, K)
    x = element(K, 1, {"x": 1})
    ctx.expect(classify.is_round(q), F, q, "not round over F3")
    ctx.expect(not classify.is_round(qK), K, qK, "round over F3((x))")
    w = classify.round_witness(qK)
    ctx.expect(w is not None and w[0] == "in H \\ G" and w[1] == x, K, qK, f"witness {w}", witness=x)
    ctx.expect(classify.in_H(qK, x) and not classify.in_G(qK, x), K, qK, "x not in H \\ G", witness=x)
    an = isotropy.anisotropic_part(qK)
    ctx.expect(an is not None and not classify.represents(an, x), K, an, "x represented by the anisotropic part", witness=x)
    if ctx.result.failures == 0:
        ctx.note(f"round over {F}: true; round over {K}: false (witness: x in H \\ G); anisotropic part {an}")


def _check_pfister_round(ctx: _Ctx):
    for F in ctx.sweep_fields():
        reps = square_class_reps(F)
        for n in range(3):
            for slots in product(reps, repeat=n):
                pf = pfister(F, slots)
                ctx.expect(classify.is_round(pf), F, pf, "Pfister form not round")
                if isotropy.is_isotropic(pf):
                    ctx.expect(isotropy.is_hyperbolic(pf), F, pf, "isotropic Pfister form not hyperbolic")


CHECKS: dict[str, tuple[str, Callable[[_Ctx], None]]] = {
    "springer_additivity": ("i(p + x q) = i(p) + i(q) over F((x))", _check_springer),
    "roussey_H_eq_DD": ("H(q) = D(q) D(q), checked against vector enumeration", _check_roussey),
    "group_iff_H_subset_D": ("q is a group form iff H(q) <= D(q)", _check_group_iff),
    "group_H_equals_D": ("q is a group form iff H(q) = D(q)", _check_group_equals),
    "round_char_chain": (
        "for 1 in D(q): round iff H <= G iff q (x) <1,a> and q (x) <b,c> are anisotropic or hyperbolic",
        _check_round_chain,
    ),
    "simone": ("q is Pfister iff q is similar to a Pfister form and 1 in D(q)", _check_simone),
    "rounddim": ("D(q) = squares implies round; round with H(q) != squares implies even dimension", _check_rounddim),
    "oddround": ("odd round forms are n x <1>; (2k+1) x <1> round iff F is Pythagorean", _check_oddround),
    "oddisoround": ("odd isotropic q is round iff F is quadratically closed", _check_oddisoround),
    "oddroundcor": ("odd anisotropic round q: q (x) beta anisotropic for anisotropic binary beta", _check_oddroundcor),
    "laurent_going_up": ("group over F iff group over F((x)); same for round when q is anisotropic", _check_laurent_going_up),
    "laurent_tower": ("group and anisotropic round forms are preserved over F((x))((y))", _check_laurent_tower),
    "agen_laurent_instance": ("D(q over F((x))) meets F in D(q over F)", _check_agen),
    "grouptrans": ("q is a group form over F iff q (x) <1,x> is one over F((x))", _check_grouptrans),
    "genericgnr_finite": (
        "anisotropic group not round q: q (x) <1,x> is anisotropic group not round over F((x))",
        _check_genericgnr_finite,
    ),
    "genericgnr_Q_membership": (
        "q = 7 x <1> over Q and q (x) <1,x> over Q((x)): 2 in D and H but not in G",
        _check_genericgnr_q,
    ),
    "anisround_F3": ("<1,-1,1,1> is round over F3 but not over F3((x))", _check_anisround),
    "pfister_round": ("0-, 1- and 2-fold Pfister forms are round; isotropic ones are hyperbolic", _check_pfister_round),
}


def run_suite(cfg: SweepConfig) -> VerificationReport:
    results = []
    bound = contextlib.nullcontext() if cfg.factoring_bound is None else factoring_bound(cfg.factoring_bound)
    with bound:
        for name in cfg.selected:
            anchor, body = CHECKS[name]
            result = CheckResult(name, anchor)
            ctx = _Ctx(cfg, result)
            start = time.perf_counter()
            try:
                body(ctx)
            except QFError as exc:
                ctx.fail(*ctx.current, f"{type(exc).__name__}: {exc}")
            result.elapsed = time.perf_counter() - start
            results.append(result)
    config = {
        "fields": [str(F) for F in cfg.fields],
        "max_dim": cfg.max_dim,
        "tower_depth_cap": cfg.tower_depth_cap,
        "checks": list(cfg.selected),
        "seed": cfg.seed,
        "budget": cfg.budget,
    }
    return VerificationReport(config, results)
