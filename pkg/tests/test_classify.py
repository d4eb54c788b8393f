import pytest
from hypothesis import given, strategies as st

from qforms import classify, oracles
from qforms.errors import QFError, UnsupportedFieldError
from qforms.fields import element, mul, one, parse_field, square_class, square_class_reps
from qforms.forms import diag, pfister, repeat, scale, tensor
from qforms.invariants import is_isometric
from qforms.isotropy import is_hyperbolic, is_isotropic

from .strategies import SMALL_FIELDS, field_and_form, forms

FP = [parse_field(f) for f in ("F3", "F5", "F7")]


def _strs(xs):
    return [str(a) for a in xs]


def test_value_sets_of_a_line(F3):
    vs = classify.value_sets(diag(F3, [2]))
    assert _strs(vs.ordered("D")) == ["2"]
    assert _strs(vs.ordered("G")) == ["1"]
    assert _strs(vs.ordered("H")) == ["1"]


def test_value_sets_over_laurent(F3x):
    vs = classify.value_sets(diag(F3x, [1, 1]))
    assert _strs(vs.ordered("D")) == ["1", "2"]
    assert _strs(vs.ordered("G")) == ["1", "2"]
    q = diag(F3x, [1, -1, 1, 1])
    vs = classify.value_sets(q)
    assert _strs(vs.ordered("D")) == _strs(square_class_reps(F3x))
    assert _strs(vs.ordered("G")) == ["1", "2"]


@given(st.sampled_from(FP).flatmap(lambda F: forms(F, max_dim=4)))
def test_d_set_matches_vector_enumeration(q):
    vs = classify.value_sets(q)
    d = oracles.d_set_bruteforce(q)
    assert vs.d_set == d
    assert vs.h_set == {square_class(mul(a, b)) for a in d for b in d}


@given(field_and_form(max_dim=3))
def test_similarity_factors_by_isometry(Fq):
    F, q = Fq
    for a in square_class_reps(F):
        assert classify.in_G(q, a) == is_isometric(scale(a, q), q)


@given(field_and_form(max_dim=4))
def test_structural_relations(Fq):
    F, q = Fq
    vs = classify.value_sets(q)
    assert one(F) in vs.g_set and one(F) in vs.h_set
    assert vs.g_set <= vs.h_set
    assert all(square_class(mul(a, b)) in vs.g_set for a in vs.g_set for b in vs.g_set)
    assert all(square_class(mul(g, d)) in vs.d_set for g in vs.g_set for d in vs.d_set)
    if is_isotropic(q):
        assert vs.d_set == vs.h_set == set(square_class_reps(F))
    if classify.is_round(q):
        assert classify.is_group(q)
        assert vs.d_set == vs.g_set


def test_round_witnesses(F3, F3x):
    assert classify.round_witness(diag(F3, [1, -1, 1, 1])) is None
    kind, a = classify.round_witness(diag(F3x, [1, -1, 1, 1]))
    assert kind == "in H \\ G" and str(a) == "x"
    kind, a = classify.round_witness(diag(F3, [2]))
    assert kind == "not in D" and str(a) == "1"


def test_binary_multiples_needs_one(F3):
    with pytest.raises(QFError):
        classify.round_via_binary_multiples(diag(F3, [2]))
    K = parse_field("F3((x))")
    ok, beta = classify.round_via_binary_multiples(diag(K, [1, -1, 1, 1]), witness=True)
    assert not ok and beta.field == K


def test_group_witness(R):
    Rx = parse_field("R((x))")
    x = element(Rx, 1, {"x": 1})
    assert classify.group_witness(diag(Rx, [1, 1, x])) is None
    assert classify.group_witness(diag(R, [1, 1])) is None
    # <-1> represents only -1, but 1 = (-1)(-1) lies in H
    a = classify.group_witness(diag(Rx, [-1]))
    assert str(a) == "1" and classify.in_H(diag(Rx, [-1]), a)
    assert not classify.is_group(diag(R, [-1]))


@pytest.mark.parametrize("F", [parse_field(f) for f in ("F3", "F5", "F3((x))", "R((x))", "C((x))")], ids=str)
def test_pfister_forms_are_round_and_recognised(F):
    for a in square_class_reps(F):
        for b in square_class_reps(F):
            pf = pfister(F, [a, b])
            assert classify.is_round(pf)
            assert classify.is_pfister_form(pf)
            slots = classify.pfister_slots(pf)
            assert is_isometric(pfister(F, slots), pf)
            if is_isotropic(pf):
                assert is_hyperbolic(pf)


def test_pfister_negatives(F3, R):
    assert not classify.is_pfister_form(diag(F3, [1, 1, 1]))
    assert not classify.is_pfister_form(diag(R, [-1, -1]))
    assert classify.is_similar_to_pfister(diag(R, [-1, -1]))
    assert classify.is_pfister_form(diag(R, [1]))


def test_rational_membership(Q):
    q = repeat(7, diag(Q, [1]))
    two = element(Q, 2)
    assert classify.represents(q, two) and classify.in_H(q, two) and not classify.in_G(q, two)
    assert classify.represents(diag(Q, [1, 1]), 2)
    assert not classify.represents(diag(Q, [1, 1]), 3)
    assert classify.in_G(diag(Q, [1, 1]), 2)
    assert not classify.in_G(diag(Q, [1, 1]), 3)


def test_rational_restrictions(Q):
    for fn in (classify.value_sets, classify.is_group, classify.is_round):
        with pytest.raises(UnsupportedFieldError, match="infinite square-class group"):
            fn(diag(Q, [1, 1]))
    assert classify.pfister_slots(diag(Q, [1, 2])) is not None
    assert str(classify.pfister_slots(diag(Q, [3, 6]))[0]) == "2"
    assert classify.pfister_slots(diag(Q, [3, 5])) is None
    assert classify.pfister_slots(diag(Q, [1])) == ()
    with pytest.raises(UnsupportedFieldError):
        classify.pfister_slots(diag(Q, [1, 1, 1, 1]))


@given(field_and_form(fields=SMALL_FIELDS, max_dim=3))
def test_round_characterisations_agree(Fq):
    F, q = Fq
    if not classify.represents(q, one(F)):
        return
    r = classify.is_round(q)
    assert r == classify.round_via_binary_multiples(q) == classify.round_via_pfister_multiples(q)
    for a in square_class_reps(F):
        qa = tensor(q, pfister(F, [a]))
        if r:
            assert classify.is_round(qa)
