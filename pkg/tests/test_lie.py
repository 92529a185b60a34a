import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from doublecayley import lie
from doublecayley.errors import CheckFailure, DomainError


def test_weyl_dimensions():
    assert lie.euler_dim_d7(lie.omega(6)) == 64
    assert lie.euler_dim_d7(lie.weight(0, 0, 0, 0, 0, 0, 0)) == 1
    assert lie.euler_dim_d7(lie.omega(1)) == 14
    assert lie.euler_dim_d7(lie.omega(7)) == 64
    assert lie.euler_dim_d7(lie.omega(2)) == 91


def test_positive_roots():
    assert len(lie.POSITIVE_ROOTS) == 42
    assert str(lie.POSITIVE_ROOTS[0]) == "e1-e2"


def test_g2_dimensions():
    assert lie.weyl_dim_g2(1, 0) == 7
    assert lie.weyl_dim_g2(0, 0) == 1
    assert lie.weyl_dim_g2(0, 1) == 14
    assert lie.weyl_dim_g2(2, 0) == 27
    with pytest.raises(DomainError):
        lie.weyl_dim_g2(-1, 0)


def test_g2_closed_formula():
    # ab(a+3b)(2a+3b)(a+b)(a+2b)/120 in lambda + rho coordinates (a, b)
    for i in range(6):
        for j in range(6):
            a, b = i + 1, j + 1
            assert lie.weyl_dim_g2(i, j) * 120 == a * b * (a + 3 * b) * (2 * a + 3 * b) * (a + b) * (a + 2 * b)


def _random_weight(rng):
    half = rng.random() < 0.5
    coords = [rng.randint(-6, 6) for _ in range(7)]
    return tuple(Fraction(c) + (Fraction(1, 2) if half else 0) for c in coords)


def test_dotted_antisymmetry():
    rng = random.Random(11)
    for k in range(1, 8):
        for _ in range(100):
            lam = _random_weight(rng)
            assert lie.euler_dim_d7(lie.dot_action(k, lam)) == -lie.euler_dim_d7(lam)


def test_singular_iff_zero_dimension():
    rng = random.Random(12)
    for _ in range(300):
        lam = _random_weight(rng)
        assert lie.bbw_resolve(lam).singular == (lie.euler_dim_d7(lam) == 0)


def test_bbw_examples():
    for k in range(6):
        res = lie.bbw_resolve(lie.scale(k, lie.omega(7)))
        assert not res.singular and res.degree == 0
        assert res.dominant == lie.scale(k, lie.omega(7))
    res = lie.bbw_resolve(lie.add(lie.lambda_weight(1), lie.scale(-1, lie.omega(7))))
    assert res.singular and str(res.witness) == "e6+e7"
    res = lie.bbw_resolve(lie.omega(2))
    assert res.degree == 0 and res.dominant == lie.omega(2)


def test_bbw_length_and_sign():
    # regular non-dominant weights: Euler value = (-1)^degree * dim of the dominant one
    rng = random.Random(13)
    for _ in range(200):
        lam = _random_weight(rng)
        res = lie.bbw_resolve(lam)
        if res.singular:
            continue
        assert lie.is_dominant(res.dominant)
        assert lie.euler_dim_d7(lam) == (-1) ** res.degree * lie.euler_dim_d7(res.dominant)


def test_rigidity():
    rows, base = lie.rigidity_suite()
    assert len(rows) == 17
    assert all(r.ok for r in rows)
    by = {(r.series, r.k): r for r in rows}
    assert lie.Root(4, 7, 1) in by[("lambda", 4)].result.zero_roots
    assert lie.Root(3, 7, 1) in by[("mu", 6)].result.zero_roots
    assert lie.Root(3, 6, 1) in by[("nu", 7)].result.zero_roots
    assert base.degree == 0


def test_h0_small():
    assert lie.h0_dg(0) == (1, 1, 1)
    assert lie.h0_dg(1) == (50, 50, 50)
    assert lie.h0_dg(2) == (975, 975, 975)
    # G2 route by hand: 1 + 49 + 27^2 + 14^2
    assert 1 + 49 + 27 ** 2 + 14 ** 2 == 975


@pytest.mark.parametrize("k", range(31))
def test_h0_triple(k):
    a, b, c = lie.h0_dg(k)
    assert a == b == c


@pytest.mark.parametrize("i", range(8))
def test_displayed_dimensions(i):
    for k in range(21):
        assert lie.displayed_dimension(i, k) == lie.euler_dim_d7(lie.koszul_weights(k)[i])


def test_degree():
    assert lie.degree_from_hilbert() == 4836
    assert lie.degree_by_differences() == 4836
    assert 4836 == 2 ** 2 * 3 * 13 * 31


def test_big_integers():
    d = lie.dim_d7(lie.scale(40, lie.omega(7)))
    assert d > 2 ** 64


def test_g2_weyl_group():
    w = lie.g2_weyl_group()
    assert len(w) == 12
    lengths = sorted(lie.g2_length(x) for x in w)
    assert lengths == [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6]
    simple = sorted(lie.g2_simple_length(x) for x in w)
    assert simple.count(0) == 1 and simple.count(2) == 1 and simple.count(1) == 10


def test_betti():
    b = lie.betti_suite()
    assert b.wonderful.coeffs == lie.WONDERFUL_EXPECTED and b.wonderful.euler == 144
    assert b.dg.coeffs == lie.DG_EXPECTED == b.dg_product.coeffs and b.dg.euler == 36
    assert b.sg.euler == 420 and b.sg.coeffs == lie.SG_EXPECTED
    assert b.closed_orbit_degree == 1008
    assert b.chi_minimal == 36
    assert all(p.is_palindromic() for p in (b.wonderful, b.dg, b.sg))


def test_poincare_polynomial():
    p = lie.PoincarePolynomial((1, 2, 1))
    assert p.euler == 4 and p.is_palindromic()
    assert not lie.PoincarePolynomial((1, 2)).is_palindromic()
