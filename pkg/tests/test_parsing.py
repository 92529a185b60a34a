from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from doublecayley.clifford import ExteriorElement, TOP, Vector14
from doublecayley.errors import ParseError
from doublecayley.parsing import format_chow, format_spinor, format_vector, parse_chow, parse_spinor
from doublecayley.schubert import ChowClass, class_DG, schubert_partitions


def test_spinor_examples():
    z = parse_spinor("1 + e1237 + e4567 + e123456")
    assert z == ExteriorElement.from_blades({(): 1, (1, 2, 3, 7): 1, (4, 5, 6, 7): 1, (1, 2, 3, 4, 5, 6): 1})
    x = parse_spinor("3/2*e14 - e25")
    assert x.is_even() and x.coefficient((1, 4)) == Fraction(3, 2)
    with pytest.raises(ParseError):
        parse_spinor("e17 + f3")


@pytest.mark.parametrize("bad", ["e11", "e8", "e21", "e1 +", "3/0*e1", "e", "e1 e2", "f1", "+"])
def test_spinor_errors(bad):
    with pytest.raises(ParseError):
        parse_spinor(bad)


def test_error_position():
    with pytest.raises(ParseError) as exc:
        parse_spinor("e12 + e33")
    assert exc.value.position == 6


def test_vector_context():
    v = parse_spinor("e1 - 2*f7", as_vector=True)
    assert v == Vector14.e(1) - Vector14.f(7) * 2
    for bad in ("e12", "1", "2"):
        with pytest.raises(ParseError):
            parse_spinor(bad, as_vector=True)


def test_parity_requirement():
    with pytest.raises(ParseError):
        parse_spinor("1 + e1", require_parity=0)
    assert parse_spinor("e1 + e123", require_parity=1).is_odd()


def test_bare_rationals():
    assert parse_spinor("-1/2") == ExteriorElement.scalar(Fraction(-1, 2))
    assert parse_spinor("2 e12") == parse_spinor("2*e12")


def test_format():
    assert format_spinor(parse_spinor("e123456 + e4567 + 1 + e1237")) == "1 + e1237 + e4567 + e123456"
    assert format_spinor(parse_spinor("-3/2*e14 + e25")) == "-3/2*e14 + e25"
    assert format_spinor(ExteriorElement()) == "0"
    assert format_vector(parse_spinor("f2 - e3", as_vector=True)) == "-e3 + f2"


elements = st.dictionaries(st.integers(0, TOP), st.fractions(max_denominator=7), max_size=8).map(ExteriorElement)


@settings(max_examples=150, deadline=None)
@given(elements)
def test_spinor_roundtrip(x):
    assert parse_spinor(format_spinor(x)) == x


@settings(max_examples=100, deadline=None)
@given(st.lists(st.fractions(max_denominator=5), min_size=14, max_size=14))
def test_vector_roundtrip(coords):
    v = Vector14.from_coords(coords)
    if v.is_zero():
        return
    assert parse_spinor(format_vector(v), as_vector=True) == v


def test_chow_examples():
    dg = class_DG()
    assert parse_chow("tau[6,1]+tau[5,2]+tau[4,3]+tau[4,2,1]") == dg
    assert parse_chow("2*t1*t3^2 + 2*t1^2*t5 - 6*t1^4*t3 + 3*t1^7") == dg
    assert parse_chow("t1^2") == ChowClass.schubert((2,))
    assert parse_chow("(t1 + t1)*t1") == ChowClass.schubert((2,)) * 2
    assert parse_chow("tau[]") == ChowClass.unit()


@pytest.mark.parametrize("bad", ["tau[7]", "tau[2,2]", "t1 + t2", "t7", "t1^22", "tau[1", "t1 *", "x"])
def test_chow_errors(bad):
    with pytest.raises(ParseError):
        parse_chow(bad)


classes = st.dictionaries(st.sampled_from(schubert_partitions(6)), st.integers(-5, 5), max_size=5)


@settings(max_examples=100, deadline=None)
@given(classes)
def test_chow_roundtrip(terms):
    c = ChowClass(terms, grade=6)
    if c.is_zero():
        return
    assert parse_chow(format_chow(c)) == c
