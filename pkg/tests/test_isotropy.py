import pytest
from hypothesis import given, strategies as st

from qforms import oracles
from qforms.fields import element, parse_field
from qforms.forms import diag, hyperbolic_form, perp, repeat
from qforms.invariants import InvariantRecord, is_isometric
from qforms.isotropy import (
    anisotropic_part,
    is_anisotropic,
    is_hyperbolic,
    is_isotropic,
    springer_split,
    witt_decomposition,
    witt_index,
)
from qforms.verify import enumerate_forms

from .strategies import FINITE_CLASS_FIELDS, field_and_form, forms, rational_forms

FP = [parse_field(f) for f in ("F3", "F5", "F7", "F11")]
LAURENT = [parse_field(f) for f in ("F3((x))", "F5((x))", "F7((x))")]


@pytest.mark.parametrize("F", FP, ids=str)
def test_witt_index_matches_isotropic_subspaces(F):
    for q in enumerate_forms(F, range(1, 5)):
        assert witt_index(q) == oracles.witt_index_bruteforce(q), q


@pytest.mark.parametrize("K", LAURENT, ids=str)
def test_laurent_index_matches_local_field(K):
    for q in enumerate_forms(K, range(1, 5)):
        assert witt_index(q) == oracles.local_field_witt_index(q), q


@given(st.sampled_from(LAURENT).flatmap(lambda K: forms(K, max_dim=5)))
def test_laurent_isotropy_matches_series_search(q):
    assert is_isotropic(q) == oracles.laurent_isotropic_bruteforce(q)


@given(rational_forms(min_dim=2, max_dim=5))
def test_rational_isotropy_matches_local_search(q):
    assert is_isotropic(q) == oracles.q_isotropic_local_bruteforce(q)
    if oracles.q_lattice_isotropic(q, 12) is not None:
        assert is_isotropic(q)


@given(field_and_form(fields=[F for F in FINITE_CLASS_FIELDS if F.base in "RC"], max_dim=5))
def test_real_and_complex_indices(Fq):
    F, q = Fq
    if F.depth:
        return
    if F.base == "R":
        pos = sum(1 for a in q.entries if a.unit > 0)
        assert witt_index(q) == min(pos, q.dim - pos)
    else:
        assert witt_index(q) == q.dim // 2


@given(field_and_form(max_dim=4))
def test_decomposition_is_an_isometry(Fq):
    F, q = Fq
    w = witt_decomposition(q)
    assert w.dim == q.dim == 2 * w.witt_index + w.anisotropic_dim
    an = anisotropic_part(q)
    if an is None:
        assert is_hyperbolic(q)
    else:
        assert is_anisotropic(an)
        if w.witt_index:
            assert is_isometric(q, perp(an, hyperbolic_form(F, w.witt_index)))
        else:
            assert is_isometric(q, an)
    assert witt_index(perp(q, hyperbolic_form(F, 1))) == w.witt_index + 1
    assert is_hyperbolic(perp(q, -q))


def test_springer_split():
    K = parse_field("F3((x))((y))")
    q = diag(K, [1, element(K, 2, {"y": 1}), element(K, 1, {"x": 1, "y": 3})])
    p, r = springer_split(q)
    assert str(p) == "<1>"
    assert str(r) == "<2, x>"
    assert p.field == r.field == parse_field("F3((x))")


def test_rational_records_for_anisotropic_parts(Q):
    q = diag(Q, [1, 1, -2, 5])
    assert witt_index(q) == 1
    an = anisotropic_part(q)
    assert isinstance(an, InvariantRecord) and an.dim == 2
    assert anisotropic_part(diag(Q, [1, -1, 3, -3])) is None
    assert is_hyperbolic(diag(Q, [2, -2]))
    assert not is_isotropic(repeat(7, diag(Q, [1])))
    assert witt_index(diag(Q, [1, 1, 1, -7])) == 0  # 7 is not a sum of three squares
    assert witt_index(diag(Q, [1, 1, 1, 1, -7])) == 1


def test_rational_laurent_tower():
    K = parse_field("Q((x))")
    x = element(K, 1, {"x": 1})
    assert witt_index(diag(K, [1, -1, x, -x])) == 2
    assert not is_isotropic(diag(K, [1, 1, x, x]))
    assert witt_index(diag(K, [1, 1, -2, x, element(K, 3, {"x": 1})])) == 1


def test_anisround_residue_picture(F3, F3x):
    q = diag(F3x, [1, -1, 1, 1])
    assert witt_index(q) == 1
    assert str(anisotropic_part(q)) == "<1, 1>"
    assert witt_index(diag(F3, [1, -1, 1, 1])) == 1
