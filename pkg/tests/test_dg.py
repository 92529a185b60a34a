from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from doublecayley import dg
from doublecayley.clifford import annihilator, f_intersection_dim, is_pure, pairing
from doublecayley.errors import NotInDGError, ZeroSpinorError
from doublecayley.parsing import parse_spinor as P


@pytest.fixture(scope="module")
def data():
    return dg.canonical_data()


@pytest.fixture(scope="module")
def scan():
    return dg.fixed_points()


def test_canonical_data(data):
    assert data.z == P(dg.Z_TEXT)
    assert data.check() == []
    assert data.lz[3] == P("e4 - e12347")
    assert data.dz.dim == 50
    assert data.delta == P("1 + e123") and data.deltap == P("1 + e456")


def test_membership_examples():
    assert dg.in_DG(dg.lemma8_family(1, 0, 0, 0))
    assert dg.in_DG(P("e14"))
    assert not dg.in_DG(P("1"))
    with pytest.raises(ZeroSpinorError):
        dg.in_DG(P("0"))


def test_scalar_fails_orthogonality(data):
    # <e7.z, 1> picks up the top blade of e7.z with alpha sign -1
    assert pairing(data.lz[6], P("1")) == -1


def test_orbit_types():
    assert dg.orbit_type(dg.lemma8_family(1, 0, 0, 0)) == (3, 3)
    assert dg.orbit_type(dg.lemma8_family(1, 0, 0, 1)) == (2, 2)
    assert dg.orbit_type(P("e14")) == (3, 3)
    with pytest.raises(NotInDGError):
        dg.orbit_type(P("1"))


def test_kernel_of_e14_in_v7(data):
    ann = annihilator(P("e14"))
    assert ann.intersect(data.v7) == dg.span14([dg.Vector14.e(1), dg.Vector14.f(2), dg.Vector14.f(3)])


def test_lemma8_zero():
    with pytest.raises(ZeroSpinorError):
        dg.lemma8_family(0, 0, 0, 0)


def test_lemma8_unit_f_intersection():
    assert f_intersection_dim(dg.lemma8_family(1, 0, 0, 0)) == 5


def test_lemma8_degenerate_listed_span():
    # with t1 = 0 two listed generators become dependent but still annihilate y
    for t in ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)):
        span = dg.lemma8_span(*t)
        assert span.dim == 6
        assert annihilator(dg.lemma8_family(*t)).contains_subspace(span)


def test_lemma8_basis_in_dz(data):
    for b in dg.LEMMA8_BASIS:
        assert data.dz.contains(dg.even_coords(b))
        assert dg.orthogonal_to_lz(b)


nonzero_t = st.tuples(*[st.integers(-5, 5)] * 4).filter(lambda t: any(t))


@settings(max_examples=25, deadline=None)
@given(nonzero_t)
def test_lemma8_family_properties(t):
    y = dg.lemma8_family(*t)
    assert dg.in_DG(y)
    assert f_intersection_dim(y) % 2 == 1
    want = (3, 3) if dg.tensor_rank(*t) == 1 else (2, 2)
    assert dg.orbit_type(y) == want
    if t[0]:
        assert annihilator(y) == dg.lemma8_span(*t)


def test_fixed_points(scan):
    blades = sorted(dg.blade_of(x) for x in scan.points)
    assert len(blades) == 36
    assert blades == sorted(dg.expected_fixed_blades())
    assert (1, 4) in blades and (1, 2, 4, 7) in blades
    assert all(dg.in_DG(x) and dg.orbit_type(x) == (3, 3) for x in scan.points)


def test_fixed_point_weights(scan):
    weights = {dg.blade_weight(x.items()[0][0]) for x in scan.points}
    alpha = [dg.TorusWeight(g=a) for a in ((1, 0), (0, 1), (-1, -1))]
    alphap = [dg.TorusWeight(gp=a) for a in ((1, 0), (0, 1), (-1, -1))]
    expected = {(a if s > 0 else -a) + (b if t > 0 else -b)
                for a in alpha for b in alphap for s in (1, -1) for t in (1, -1)}
    assert weights == expected


def test_rejections(scan):
    mixed = [r for r in scan.rejections if not r.weight.is_zero()]
    assert len(mixed) == 12
    assert all(r.weight_space_dim == 2 and r.dz_dim == 1 and r.reason == "not pure" for r in mixed)
    zero = [r for r in scan.rejections if r.weight.is_zero()]
    assert len(zero) == 1 and zero[0].dz_dim == 2


def test_zero_weight_pencil():
    w0 = dg.zero_weight_pencil()
    assert w0["in_dz"]
    assert not w0["has_pure"] and not w0["undecided"]
    assert w0["annihilator_dims"][1] == 1
    for chart in w0["charts"]:
        assert chart["gcd_degree"] == 0


def test_pencil_detects_isolated_pure_point():
    # 1 + s(e12 + e34) is pure only at s = 0
    found, undecided, (first, second) = dg.pencil_has_pure_point(P("e12 + e34"), P("1"))
    assert found
    assert first["pure_finite"] == ["0"]
    assert not first["pure_at_infinity"]


def test_pencil_of_pure_spinors():
    found, _, (first, _) = dg.pencil_has_pure_point(P("e14"), P("1"))
    assert found and first["pure_finite"] == ["all"]


def test_graph():
    g = dg.fixed_point_graph()
    assert len(g.vertices) == 36
    assert g.adjacent((1, 4), (1, 2, 4, 7))
    assert not g.adjacent((1, 4), (2, 5))
    assert g.adjacent((1, 2, 4, 7), (1, 2, 5, 7))
    # no edges between two 2-blades
    assert not any(len(a) == 2 and len(b) == 2 for a, b in map(tuple, g.edges))


def test_character():
    char = dg.restrict_character()
    assert char["equal"]
    assert char["total"] == 64
    assert char["zero_multiplicity"] == 4
    w = dg.TorusWeight(g=(1, 0), gp=(1, 0))
    assert char["actual"][w] == 1
