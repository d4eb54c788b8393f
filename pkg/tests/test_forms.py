import pytest
from hypothesis import given

from qforms.errors import DegenerateFormError, FieldMismatchError
from qforms.fields import element, parse_field
from qforms.forms import QuadraticForm, diag, extend_form, hyperbolic_form, perp, pfister, repeat, same_entries, scale, tensor

from .strategies import field_and_form


def test_diag_canonicalises(F3):
    assert str(diag(F3, [4, 5, -1])) == "<1, 2, 2>"


def test_perp_and_tensor_shapes(F3x):
    p = diag(F3x, [1, element(F3x, 1, {"x": 1})])
    q = diag(F3x, [2, 1])
    assert perp(p, q).dim == 4
    assert str(tensor(p, q)) == "<2, 1, 2x, x>"
    assert str(p + q) == str(perp(p, q))
    assert str(p * q) == str(tensor(p, q))


def test_pfister_expansion(F3x):
    assert str(pfister(F3x, [2, element(F3x, 1, {"x": 1})])) == "<1, 2, x, 2x>"
    assert str(pfister(F3x, [])) == "<1>"


def test_hyperbolic_and_repeat():
    R = parse_field("R")
    assert str(hyperbolic_form(R, 2)) == "<1, -1, 1, -1>"
    assert str(repeat(3, diag(R, [1]))) == "<1, 1, 1>"
    with pytest.raises(DegenerateFormError):
        hyperbolic_form(R, 0)
    with pytest.raises(DegenerateFormError):
        repeat(0, diag(R, [1]))


def test_degenerate_and_mismatch(F3, F5):
    with pytest.raises(DegenerateFormError):
        QuadraticForm(F3, ())
    with pytest.raises(DegenerateFormError):
        diag(F3, [3])
    with pytest.raises(FieldMismatchError):
        perp(diag(F3, [1]), diag(F5, [1]))


def test_scale(Q):
    assert str(scale(element(Q, 2), diag(Q, [1, 3]))) == "<2, 6>"
    assert str(-diag(Q, [1, -2])) == "<-1, 2>"


def test_extend_form(F3):
    K = parse_field("F3((x))((y))")
    q = diag(F3, [1, 2])
    assert str(extend_form(q, K)) == "<1, 2>"
    assert str(extend_form(q, K, x_power=1)) == "<y, 2y>"
    with pytest.raises(FieldMismatchError):
        extend_form(q, F3)


@given(field_and_form(max_dim=3))
def test_multiset_algebra(Fq):
    F, q = Fq
    one = diag(F, [1])
    assert same_entries(tensor(q, one), q)
    assert same_entries(perp(q, q), repeat(2, q))
    assert tensor(q, q).dim == q.dim**2
