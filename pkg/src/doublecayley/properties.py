"""Seeded property checks across the toolkit.

Each function returns a list of counterexamples; an empty list means the
property held on every sampled case.
"""

import random
from fractions import Fraction

from . import lie, schubert, schurq
from .clifford import (
    BASIS14,
    EVEN_MASKS,
    ExteriorElement,
    Vector14,
    clifford_form_B,
    clifford_mul,
    pairing,
    spinor_form,
)
from .report import Report, timed

Z = ExteriorElement.from_blades({(): 1, (1, 2, 3, 7): 1, (4, 5, 6, 7): 1, (1, 2, 3, 4, 5, 6): 1})


def _vector(rng):
    return Vector14.from_coords([rng.randint(-3, 3) for _ in range(14)])


def _even(rng, terms=5):
    return ExteriorElement({rng.choice(EVEN_MASKS): rng.randint(-3, 3) for _ in range(terms)})


def clifford_relation(rng, samples=20):
    bad = []
    for _ in range(samples):
        u, v = _vector(rng), _vector(rng)
        b = 2 * clifford_form_B(u, v)
        for m in EVEN_MASKS:
            x = ExteriorElement({m: 1})
            if clifford_mul(u, clifford_mul(v, x)) + clifford_mul(v, clifford_mul(u, x)) != x * b:
                bad.append((str(u), str(v), m))
    return bad


def pairing_adjointness(rng, samples=20):
    bad = []
    for u in BASIS14:
        for _ in range(samples):
            y = _even(rng)
            if pairing(clifford_mul(u, Z), y) != spinor_form(Z, clifford_mul(u, y)):
                bad.append((str(u), str(y)))
    return bad


def dotted_antisymmetry(rng, samples=100):
    bad = []
    for k in range(1, lie.RANK + 1):
        for _ in range(samples):
            shift = Fraction(1, 2) if rng.random() < 0.5 else 0
            lam = tuple(Fraction(rng.randint(-8, 8)) + shift for _ in range(lie.RANK))
            if lie.euler_dim_d7(lie.dot_action(k, lam)) != -lie.euler_dim_d7(lam):
                bad.append((k, lam))
    return bad


def poincare_duality():
    C = schubert.ChowClass
    bad = []
    for mu in schubert.schubert_partitions():
        for nu in schubert.schubert_partitions(schubert.TOP_GRADE - sum(mu)):
            got = schubert.integrate(schubert.multiply(C.schubert(mu), C.schubert(nu)))
            if got != (1 if nu == schubert.complement(mu) else 0):
                bad.append((mu, nu))
    return bad


def projection_formula(rng, samples=200):
    C = schubert.ChowClass
    parts = [m for m in schubert.schubert_partitions() if sum(m) < schubert.TOP_GRADE]
    bad = []
    for _ in range(samples):
        mu = rng.choice(parts)
        nu = rng.choice(schubert.schubert_partitions(schubert.TOP_GRADE - 1 - sum(mu)))
        x, y = C.schubert(mu), C.schubert(nu)
        lhs = schubert.integrate(schubert.multiply(schubert.pieri1(x), y))
        rhs = schubert.integrate(schubert.multiply(x, schubert.pieri1(y)))
        if lhs != rhs:
            bad.append((mu, nu))
    return bad


def oracle_integrality(max_degree=16):
    bad = []
    for a in range(max_degree + 1):
        for b in range(max_degree + 1 - a):
            for m in schurq.strict_partitions(a):
                for n in schurq.strict_partitions(b):
                    try:
                        schurq.structure_constants(m, n)
                    except Exception as exc:
                        bad.append((m, n, str(exc)))
    return bad


def ideal_stability():
    bad = []
    for a in range(7, 15):
        for m in schurq.strict_partitions(a):
            if m[0] < 7:
                continue
            for b in range(schubert.TOP_GRADE + 1 - a):
                for n in schurq.strict_partitions(b):
                    if any(lam[0] < 7 for lam in schurq.structure_constants(m, n)):
                        bad.append((m, n))
    return bad


def run_properties(seed):
    rng = random.Random(seed)
    r = Report("properties")
    with timed(r):
        r.add("Clifford relation", [], clifford_relation(rng))
        r.add("pairing adjointness", [], pairing_adjointness(rng))
        r.add("dotted antisymmetry", [], dotted_antisymmetry(rng))
        r.add("Poincare duality", [], poincare_duality())
        r.add("projection formula", [], projection_formula(rng))
        r.add("oracle integrality", [], oracle_integrality())
        r.add("ideal stability", [], ideal_stability())
    return r
