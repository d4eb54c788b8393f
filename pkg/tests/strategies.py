"""Hypothesis strategies shared across the test modules."""

from hypothesis import strategies as st

from qforms.fields import element, parse_field, square_class_reps
from qforms.forms import diag

FINITE_CLASS_FIELDS = [parse_field(f) for f in ("F3", "F5", "F7", "F3((x))", "F5((x))", "R", "R((x))", "C", "C((x))")]
SMALL_FIELDS = [parse_field(f) for f in ("F3", "F5", "F3((x))", "R((x))")]


def field_elements(F):
    """Arbitrary nonzero elements, not only canonical representatives."""
    if F.base == "F":
        unit = st.integers(1, F.p - 1)
    else:
        unit = st.fractions(min_value=-50, max_value=50, max_denominator=12).filter(lambda u: u != 0)
    exps = st.tuples(*[st.integers(-3, 3) for _ in F.tower])
    return st.builds(lambda u, e: element(F, u, e), unit, exps)


def forms(F, min_dim=1, max_dim=4, canonical=True):
    if canonical:
        ent = st.sampled_from(square_class_reps(F))
    else:
        ent = field_elements(F)
    return st.lists(ent, min_size=min_dim, max_size=max_dim).map(lambda es: diag(F, es))


def field_and_form(fields=FINITE_CLASS_FIELDS, **kw):
    return st.sampled_from(fields).flatmap(lambda F: st.tuples(st.just(F), forms(F, **kw)))


def rational_forms(min_dim=1, max_dim=5, lo=-20, hi=20):
    Q = parse_field("Q")
    ent = st.integers(lo, hi).filter(lambda a: a != 0)
    return st.lists(ent, min_size=min_dim, max_size=max_dim).map(lambda es: diag(Q, es))
