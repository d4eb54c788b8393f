from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qforms.errors import DegenerateFormError, FieldMismatchError, ParseError
from qforms.expr import Coeff, Diag, Hyp, Perp, Pfister, Repeat, Scale, Tensor, evaluate, parse_coeff, parse_form, render
from qforms.fields import parse_field

CORPUS = [
    "<1>",
    "<1, -1>",
    "<1,-1> + 2*<3>",
    "<1, 2, 3, 4>",
    "<-1, -1, -1>",
    "<1/2, -3/4>",
    "<x>",
    "<x, -x>",
    "<2x, 3x^-1>",
    "<x^2, x^-3>",
    "<x*y, 2x*y^-1>",
    "<1, x, y, x*y>",
    "pfister(2)",
    "pfister(2, x)",
    "pfister(-1, -1)",
    "pfister(x, y, 2)",
    "pfister()",
    "hyp(1)",
    "hyp(3)",
    "3x<1>",
    "7 x <1>",
    "2x<1, -1>",
    "3x(<1> + <2>)",
    "2x pfister(x)",
    "2x hyp(2)",
    "2x(3x<1>)",
    "2*<1>",
    "-1*<1, 1>",
    "x*<1>",
    "-x*<1, 2>",
    "2x*<1, x>",
    "1/3*<3>",
    "2*(x*<1>)",
    "2*3x<1>",
    "x*pfister(2)",
    "x*hyp(1)",
    "2x*y*<1>",
    "<1> + <2>",
    "<1> + <2> + <3>",
    "<1> + (<2> + <3>)",
    "(<1> + <2>) + <3>",
    "<1, 1> * <1, x>",
    "<1> * <2> * <3>",
    "<1> * (<2> * <3>)",
    "(<1> + <2>) * <3, x>",
    "<1> + <2> * <3>",
    "pfister(2) * pfister(x) + hyp(1)",
    "3x<1> + x*<1, 1>",
    "(<1, -1> + <1, 1>) * pfister(x)",
    "2*(<1> + <x>)",
    "2*(<1> * <x>)",
    "((<1>))",
    "x1*<1, x1^-1>",
    "<2x1, 3>",
    "  < 1 ,  -1 >  +  hyp( 2 ) ",
    "-2/3*<x> + 5x<2>",
]


@pytest.mark.parametrize("text", CORPUS)
def test_corpus_round_trip(text):
    ast = parse_form(text)
    assert parse_form(render(ast)) == ast


def test_corpus_size():
    assert len(CORPUS) >= 50


@pytest.mark.parametrize(
    "text, field, expected",
    [
        ("pfister(2,x)", "F3((x))", "<1, 2, x, 2x>"),
        ("<1,-1> + 2*<3>", "Q", "<1, -1, 6>"),
        ("3x<1>", "R", "<1, 1, 1>"),
        ("hyp(2)", "F5", "<1, 1, 1, 1>"), ("hyp(1)", "F3", "<1, 2>"),
        ("<1/2, 4>", "F7", "<1, 1>"),
        ("x*<1, x>", "F3((x))", "<x, 1>"),
        ("<1, 2> * <1, x>", "Q((x))", "<1, x, 2, 2x>"),
        ("2x*y*<1>", "F3((x))((y))", "<2x*y>"),
        ("<x^-1>", "R((x))", "<x>"),
    ],
)
def test_evaluation(text, field, expected):
    assert str(evaluate(parse_form(text), parse_field(field))) == expected


@pytest.mark.parametrize(
    "text, pos",
    [("<0>", 1), ("<1", 2), ("<1,,2>", 3), ("3x", 2), ("<1> +", 5), ("hyp(0)", 4), ("<1> <2>", 4), ("pfister(", 8), ("<1/0>", 3), ("", 0), ("0x<1>", 0)],
)
def test_syntax_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as e:
        parse_form(text)
    assert e.value.pos == pos


def test_coefficient_errors():
    with pytest.raises(DegenerateFormError):
        evaluate(parse_form("<3>"), parse_field("F3"))
    with pytest.raises(FieldMismatchError):
        evaluate(parse_form("<y>"), parse_field("F3((x))"))
    assert parse_coeff("-2/3x^-1") == Coeff(Fraction(-2, 3), (("x", -1),))
    with pytest.raises(ParseError):
        parse_coeff("2 <")


def test_precedence():
    assert parse_form("<1> + <2> * <3>") == Perp(Diag((Coeff(Fraction(1)),)), Tensor(Diag((Coeff(Fraction(2)),)), Diag((Coeff(Fraction(3)),))))
    r = parse_form("2x<1> * <3>")
    assert isinstance(r, Tensor) and isinstance(r.left, Repeat)
    s = parse_form("2x*<1>")
    assert isinstance(s, Scale) and s.coeff == Coeff(Fraction(2), (("x", 1),))


# generated expressions

variables = st.sampled_from(["x", "y", "t", "x1"])
values = st.fractions(min_value=-20, max_value=20, max_denominator=6).filter(lambda v: v != 0)


@st.composite
def coeffs(draw):
    names = draw(st.lists(variables, unique=True, max_size=2))
    mono = tuple((v, draw(st.integers(-3, 3).filter(bool))) for v in names)
    return Coeff(draw(values), mono)


def exprs():
    leaves = st.one_of(
        st.lists(coeffs(), min_size=1, max_size=3).map(lambda cs: Diag(tuple(cs))),
        st.lists(coeffs(), max_size=2).map(lambda cs: Pfister(tuple(cs))),
        st.integers(1, 3).map(Hyp),
    )
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.tuples(kids, kids).map(lambda t: Perp(*t)),
            st.tuples(kids, kids).map(lambda t: Tensor(*t)),
            st.tuples(coeffs(), kids).map(lambda t: Scale(*t)),
            st.tuples(st.integers(1, 4), kids).map(lambda t: Repeat(*t)),
        ),
        max_leaves=6,
    )


@given(exprs())
def test_generated_round_trip(ast):
    assert parse_form(render(ast)) == ast


@given(st.text(alphabet="<>()+*,-/^ xy0123pfisterhy", max_size=20))
def test_parser_never_crashes(text):
    try:
        parse_form(text)
    except ParseError:
        pass
