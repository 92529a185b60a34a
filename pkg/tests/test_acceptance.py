"""One test per acceptance criterion, all exact."""

import re
import time

import pytest

from doublecayley import dg, lie, schubert, schurq
from doublecayley.clifford import BASIS14, annihilator, clifford_mul, f_intersection_dim
from doublecayley.parsing import format_spinor, parse_chow, parse_spinor
from doublecayley.properties import run_properties
from doublecayley.suites import DEFAULT_SEED, lemma8_samples

crit = pytest.mark.criterion

PRINTED_TABLE = [
    ("e_1", "e_1+e_{14567}"), ("e_2", "e_2+e_{24567}"), ("e_3", "e_3+e_{34567}"),
    ("e_4", "e_4-e_{12347}"), ("e_5", "e_5-e_{12357}"), ("e_6", "e_6-e_{12367}"),
    ("e_7", "e_7+e_{1234567}"), ("f_1", "e_{237}+e_{23456}"), ("f_2", "-e_{137}-e_{13456}"),
    ("f_3", "e_{127}+e_{12456}"), ("f_4", "e_{567}-e_{12356}"), ("f_5", "-e_{467}+e_{12346}"),
    ("f_6", "e_{457}-e_{12345}"), ("f_7", "-e_{123}-e_{456}"),
]


def _symbols(tex):
    return re.sub(r"[_{}\s]", "", tex)


@crit(1, "Clifford table u.z for all 14 basis vectors, under 1 s")
def test_clifford_table():
    start = time.perf_counter()
    z = parse_spinor("1 + e1237 + e4567 + e123456")
    rows = [format_spinor(clifford_mul(u, z)) for u in BASIS14]
    elapsed = time.perf_counter() - start
    for (name, tex), row in zip(PRINTED_TABLE, rows):
        assert row.replace(" ", "") == _symbols(tex), name
    assert elapsed < 1.0


@crit(2, "deg DG = 4836 by Schubert calculus and by the Hilbert polynomial")
def test_degree_two_ways():
    assert schubert.deg_DG() == 4836
    assert lie.degree_from_hilbert() == 4836
    assert 4836 == 2 ** 2 * 3 * 13 * 31


@crit(3, "h0(L^k): Koszul = closed form = G2 x G2 sum for k = 0..30")
def test_postulation():
    for k in range(31):
        a, b, c = lie.h0_dg(k)
        assert a == b == c, k
    assert lie.h0_dg(1)[0] == 50
    assert lie.h0_dg(2) == (975, 975, 975)


@crit(4, "[DG] identity in the ring; Pieri engine = symmetric-function oracle")
def test_fundamental_class_and_pieri():
    dg_class = parse_chow("tau[6,1]+tau[5,2]+tau[4,3]+tau[4,2,1]")
    assert dg_class == parse_chow("2*t1*t3^2 + 2*t1^2*t5 - 6*t1^4*t3 + 3*t1^7")
    tau = schubert.ChowClass.schubert
    parts = schubert.schubert_partitions()
    for mu in parts:
        for p in range(1, 7):
            if sum(mu) + p <= 21:
                assert schubert.pieri_special(tau(mu), p) == schurq.product_oracle(mu, (p,))
    n = 0
    for mu in parts:
        for nu in parts:
            if sum(mu) + sum(nu) <= 21 and len(nu) > 1:
                assert schubert.pieri_product(tau(mu), tau(nu)) == schurq.product_oracle(mu, nu)
                n += 1
    assert n >= 500


@crit(5, "int_DG tau_4 h^10 = 1260 and int_DG tau_31 h^10 = 1780")
def test_schubert_integrals():
    got = (schubert.dg_integral((4,), 10), schubert.dg_integral((3, 1), 10))
    assert got == (1260, 1780)


@crit(6, "36 fixed points; W0 and the 12 single-copy lines carry no pure spinor")
def test_fixed_points():
    scan = dg.fixed_points()
    assert len(scan.points) == 36
    assert {dg.blade_of(x) for x in scan.points} == set(dg.expected_fixed_blades())
    assert all(dg.in_DG(x) for x in scan.points)
    w0 = dg.zero_weight_pencil()
    assert w0["in_dz"] and not w0["has_pure"] and not w0["undecided"]
    mixed = [r for r in scan.rejections if not r.weight.is_zero()]
    assert len(mixed) == 12
    assert all(r.reason == "not pure" and r.annihilator_dims[0] < 7 for r in mixed)
    assert len(scan.points) == lie.dg_betti_from_blowup().euler


@crit(7, "Betti numbers of the wonderful compactification, DG and SG; deg Q5 x Q5")
def test_betti():
    b = lie.betti_suite()
    assert b.wonderful.coeffs == (1, 2, 4, 8, 12, 16, 19, 20, 19, 16, 12, 8, 4, 2, 1)
    assert b.wonderful.euler == 144
    assert b.dg.coeffs == (1, 1, 1, 2, 3, 4, 4, 4, 4, 4, 3, 2, 1, 1, 1)
    assert b.dg.coeffs == b.dg_product.coeffs and b.dg.euler == 36
    assert b.sg.coeffs == lie.SG_EXPECTED and b.sg.euler == 420
    assert b.closed_orbit_degree == 1008


@crit(8, "rigidity weights singular with listed witnesses; omega_2 in degree 0")
def test_rigidity():
    rows, base = lie.rigidity_suite(strict=False)
    assert [r.k for r in rows if r.series == "lambda"] == [1, 2, 3, 4, 5]
    assert [r.k for r in rows if r.series == "mu"] == [1, 2, 3, 4, 5, 6]
    assert [r.k for r in rows if r.series == "nu"] == [2, 3, 4, 5, 6, 7]
    for r in rows:
        assert r.result.singular, (r.series, r.k)
        assert r.expected_root in r.result.zero_roots, (r.series, r.k)
    assert not base.singular and base.degree == 0


@crit(9, "null-plane family: annihilator = listed P_y, membership, odd F-dim, orbit types")
def test_lemma8():
    failures = []
    for t in lemma8_samples(DEFAULT_SEED):
        y = dg.lemma8_family(*t)
        if annihilator(y) != dg.lemma8_span(*t):
            failures.append(t)
        assert dg.in_DG(y)
        assert f_intersection_dim(y) % 2 == 1
        want = (3, 3) if dg.tensor_rank(*t) == 1 else (2, 2)
        assert dg.orbit_type(y) == want
    assert failures == []


@crit(10, "64 weights of the half-spin space = V7 x V7' + V7 + V7' + C")
def test_character():
    char = dg.restrict_character()
    assert char["equal"] and char["total"] == 64
    assert char["zero_multiplicity"] == 4


@crit(11, "seeded property suites report zero failures")
def test_property_suites():
    report = run_properties(DEFAULT_SEED)
    assert [c.name for c in report.failures()] == []
