"""Named verification suites behind ``doublecayley verify``."""

import random
from math import factorial

from . import dg, lie, properties, schubert, schurq
from .clifford import annihilator, f_intersection_dim
from .parsing import format_spinor, parse_chow, parse_spinor
from .report import Report, timed

DEFAULT_SEED = 20240614
DEFAULT_KMAX = 30

DG_TEXT = "tau[6,1]+tau[5,2]+tau[4,3]+tau[4,2,1]"
DG_SPECIAL_TEXT = "2*t1*t3^2 + 2*t1^2*t5 - 6*t1^4*t3 + 3*t1^7"

LEMMA8_UNIT = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def lemma8_samples(seed=DEFAULT_SEED, count=5):
    """The four unit vectors plus ``count`` random full-rank rational t."""
    rng = random.Random(seed)
    out = list(LEMMA8_UNIT)
    while len(out) < len(LEMMA8_UNIT) + count:
        t = tuple(rng.randint(-9, 9) for _ in range(4))
        t = (t[0] or 1,) + t[1:]
        if dg.tensor_rank(*t) == 2 and t not in out:
            out.append(t)
    return out


def clifford_table_suite(options=None):
    r = Report("clifford-table")
    with timed(r):
        for name, row, text in dg.clifford_table():
            r.add(f"{name}.z", text, format_spinor(row))
        r.add("dim L_z", 14, len({tuple(x.vector()) for x in dg.canonical_data().lz}))
    return r


def membership_suite(options=None):
    r = Report("membership")
    with timed(r):
        data = dg.canonical_data()
        r.add("dim D_z", 50, data.dz.dim)
        r.add("z in D_z", True, data.dz.contains(dg.even_coords(data.z)))
        r.add("annihilator of z", 0, annihilator(data.z).dim)
        for text, want in (("(e1+e2)(e4+e5)", True), ("e14", True), ("1", False),
                           ("1 + e123456", False)):
            y = dg.lemma8_family(1, 0, 0, 0) if text.startswith("(") else parse_spinor(text)
            r.add(f"in DG: {text}", want, dg.in_DG(y))
        for i, b in enumerate(dg.LEMMA8_BASIS, 1):
            r.add(f"y{i} orthogonal to L_z", True, dg.orthogonal_to_lz(b))
            r.add(f"y{i} in D_z", True, data.dz.contains(dg.even_coords(b)))
        char = dg.restrict_character()
        r.add("character: total weights", 64, char["total"])
        r.add("character: zero-weight multiplicity", 4, char["zero_multiplicity"])
        r.add("character: V7 x V7' + V7 + V7' + C", True, char["equal"])
    return r


def fixed_points_suite(options=None):
    r = Report("fixed-points")
    with timed(r):
        scan = dg.fixed_points()
        blades = [dg.blade_of(x) for x in scan.points]
        r.add("count", 36, len(scan.points))
        r.add("equals the listed blades", sorted(dg.expected_fixed_blades()),
              sorted(b for b in blades if b))
        r.add("all pass membership", True, all(dg.in_DG(x) for x in scan.points))
        weights = [dg.blade_weight(x.items()[0][0]) for x in scan.points]
        r.add("weights pairwise distinct", 36, len(set(weights)))
        mixed = [rej for rej in scan.rejections if not rej.weight.is_zero()]
        r.add("single-copy weight lines rejected", 12, len(mixed))
        r.add("single-copy lines all non-pure", True,
              all(rej.reason == "not pure" and rej.annihilator_dims[0] < 7 for rej in mixed))
        w0 = dg.zero_weight_pencil()
        r.add("W0 inside D_z", True, w0["in_dz"])
        r.add("W0 contains a pure spinor", False, w0["has_pure"] or w0["undecided"])
        r.add("annihilator dim of e1237 + e4567", 1, w0["annihilator_dims"][1])
        betti = lie.dg_betti_from_blowup()
        r.add("count equals DG Betti sum", betti.euler, len(scan.points))
        g = dg.fixed_point_graph()
        r.add("edge e14 ~ e1247", True, g.adjacent((1, 4), (1, 2, 4, 7)))
        r.add("edge e14 ~ e25", False, g.adjacent((1, 4), (2, 5)))
        r.add("edge e1247 ~ e1257", True, g.adjacent((1, 2, 4, 7), (1, 2, 5, 7)))
    return r


def orbit_types_suite(options=None):
    seed = (options or {}).get("seed", DEFAULT_SEED)
    r = Report("orbit-types")
    with timed(r):
        types = {dg.orbit_type(x) for x in dg.fixed_points().points}
        r.add("fixed points have type (3,3)", [(3, 3)], sorted(types))
        r.add("type of e14", (3, 3), dg.orbit_type(parse_spinor("e14")))
        for t in lemma8_samples(seed):
            y = dg.lemma8_family(*t)
            tag = "t=(" + ",".join(str(x) for x in t) + ")"
            ann = annihilator(y)
            r.add(f"{tag} annihilator equals listed span", True, ann == dg.lemma8_span(*t),
                  note="listed generators span %d dims" % dg.lemma8_span(*t).dim)
            r.add(f"{tag} listed vectors annihilate y", True, ann.contains_subspace(dg.lemma8_span(*t)))
            r.add(f"{tag} membership", True, dg.in_DG(y))
            r.add(f"{tag} F-intersection odd", 1, f_intersection_dim(y) % 2)
            want = (3, 3) if dg.tensor_rank(*t) == 1 else (2, 2)
            r.add(f"{tag} orbit type", want, dg.orbit_type(y))
        y = dg.lemma8_family(1, 0, 0, 1)
        r.add("type of y1 + y4", (2, 2), dg.orbit_type(y))
        r.add("F-intersection of y1", 5, f_intersection_dim(dg.lemma8_family(1, 0, 0, 0)))
    return r


def hilbert_suite(options=None):
    kmax = (options or {}).get("kmax", DEFAULT_KMAX)
    r = Report("hilbert")
    with timed(r):
        for k in range(kmax + 1):
            kz, cf, g2 = lie.h0_dg(k)
            r.add(f"h0(L^{k}) koszul/closed/G2", (cf, cf, cf), (kz, cf, g2))
        if kmax >= 1:
            r.add("h0(L) = 50", 50, lie.h0_closed_form(1))
        if kmax >= 2:
            r.add("h0(L^2) = 975", 975, lie.h0_g2(2))
        for i in range(8):
            bad = [k for k in range(21)
                   if lie.displayed_dimension(i, k) != lie.euler_dim_d7(lie.koszul_weights(k)[i])]
            r.add(f"displayed dimension formula {i}", [], bad)
    return r


def degree_suite(options=None):
    r = Report("degree")
    with timed(r):
        r.guard("deg DG (Schubert)", 4836, schubert.deg_DG)
        r.guard("deg DG (Hilbert)", 4836, lie.degree_from_hilbert)
        r.guard("deg DG (finite differences)", 4836, lie.degree_by_differences)
        r.add("4836 = 2^2 * 3 * 13 * 31", 4836, 2 ** 2 * 3 * 13 * 31)
        r.add("14! scaling", 87178291200, factorial(14))
    return r


def rigidity_suite(options=None):
    r = Report("rigidity")
    with timed(r):
        rows, base = lie.rigidity_suite(strict=False)
        for row in rows:
            name = f"{row.series}_{row.k} - {row.k} w7"
            zeros = [str(z) for z in row.result.zero_roots]
            r.add(name, f"singular, {row.expected_root} among zero roots",
                  f"singular, zero roots {zeros}" if row.result.singular else row.result.describe(),
                  passed=row.ok)
        r.add("omega_2 cohomology degree", 0, None if base.singular else base.degree)
        r.add("k w7 is dominant, degree 0", True,
              all(lie.bbw_resolve(lie.scale(k, lie.omega(7))).degree == 0 for k in range(6)))
    return r


def betti_suite(options=None):
    r = Report("betti")
    with timed(r):
        b = lie.betti_suite(strict=False)
        r.add("G2 Weyl group order", 12, b.weyl_order)
        r.add("wonderful Betti", list(lie.WONDERFUL_EXPECTED), list(b.wonderful.coeffs))
        r.add("wonderful Betti sum", 144, b.wonderful.euler)
        r.add("DG Betti (blowup)", list(lie.DG_EXPECTED), list(b.dg.coeffs))
        r.add("DG Betti (product formula)", list(b.dg.coeffs), list(b.dg_product.coeffs))
        r.add("DG Betti sum", 36, b.dg.euler)
        r.add("SG Betti", list(lie.SG_EXPECTED), list(b.sg.coeffs))
        r.add("chi(SG)", 420, b.sg.euler)
        r.add("deg Q5 x Q5", 1008, b.closed_orbit_degree)
        r.add("chi = (a+2)^2, a = 4", b.chi_formula, b.chi_minimal)
        r.add("palindromic", True, all(p.is_palindromic() for p in (b.wonderful, b.dg, b.sg)))
    return r


def schubert_suite(options=None):
    seed = (options or {}).get("seed", DEFAULT_SEED)
    r = Report("schubert")
    with timed(r):
        dg_class = schubert.class_DG()
        r.add("[DG] grade", 7, dg_class.grade)
        r.guard("[DG] special-class expression", str(dg_class), lambda: str(parse_chow(DG_SPECIAL_TEXT)))
        r.guard("[DG] parsed literal", str(dg_class), lambda: str(parse_chow(DG_TEXT)))
        for label, sign in schubert.CHERN_SIGNS.items():
            r.guard(f"{label} reproduces [DG]", label == schubert.CHERN_CONVENTION,
                    lambda sign=sign: schubert.chern_top_twist(sign) == dg_class)
        r.guard("int_DG tau_4 h^10", 1260, lambda: schubert.dg_integral((4,), 10))
        r.guard("int_DG tau_31 h^10", 1780, lambda: schubert.dg_integral((3, 1), 10))
        r.guard("int_DG (tau_4 + 2 tau_31) h^10 = int_DG h^14", 4836,
                lambda: schubert.dg_integral((4,), 10) + 2 * schubert.dg_integral((3, 1), 10))
        r.add("dual of tau_4", (6, 5, 3, 2, 1), schubert.complement((4,)))
        r.add("Poincare duality (all pairs)", [], properties.poincare_duality())
        r.add("projection formula (100 seeded pairs)", [],
              properties.projection_formula(random.Random(seed), samples=100))
    return r


def oracle_calibration_suite(options=None):
    seed = (options or {}).get("seed", DEFAULT_SEED)
    r = Report("oracle-calibration")
    with timed(r):
        r.add("Q-basis full rank up to degree 21", True,
              all(schurq.degree_basis(d).rank == len(schurq.strict_partitions(d)) for d in range(22)))
        survivors = schubert.calibrate_pieri()
        r.add("shipped Pieri variant agrees with oracle", True, schubert.PIERI_VARIANT in survivors,
              note="survivors: " + ", ".join(survivors))
        C = schubert.ChowClass
        bad = []
        for mu in schubert.schubert_partitions():
            for p in range(1, 7):
                if sum(mu) + p <= 21:
                    if schubert.pieri_special(C.schubert(mu), p) != schurq.product_oracle(mu, (p,)):
                        bad.append((mu, p))
                    if p == 1 and schubert.pieri1(C.schubert(mu)) != schubert.pieri_special(C.schubert(mu), 1):
                        bad.append((mu, "pieri1"))
        r.add("special products: Pieri = oracle (exhaustive)", [], bad)
        rng = random.Random(seed)
        pairs = [(m, n) for m in schubert.schubert_partitions() for n in schubert.schubert_partitions()
                 if sum(m) + sum(n) <= 21 and len(n) > 1]
        sample = rng.sample(pairs, 600)
        bad = [(m, n) for m, n in sample
               if schubert.pieri_product(C.schubert(m), C.schubert(n)) != schurq.product_oracle(m, n)]
        r.add("general products: Pieri engine = oracle (600 seeded pairs)", [], bad)
        r.add("integrality up to total degree 16", [], properties.oracle_integrality())
        r.add("ideal stability", [], properties.ideal_stability())
    return r


SUITES = {
    "clifford-table": clifford_table_suite,
    "membership": membership_suite,
    "fixed-points": fixed_points_suite,
    "orbit-types": orbit_types_suite,
    "hilbert": hilbert_suite,
    "degree": degree_suite,
    "rigidity": rigidity_suite,
    "betti": betti_suite,
    "schubert": schubert_suite,
    "oracle-calibration": oracle_calibration_suite,
}


def run_suite(name, options=None):
    options = options or {}
    if name == "all":
        total = Report("all")
        for fn in SUITES.values():
            total.extend(fn(options))
        return total
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](options)
