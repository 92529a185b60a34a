"""Root-system computations for D7 and G2.

D7 weights live in epsilon coordinates (7 rationals, all integers or all
half-integers).  G2 weights are pairs ``(i, j)`` meaning ``i w1 + j w2`` with
``w1`` the short fundamental weight (7-dimensional representation) and
``w2`` the long one (adjoint).

All dimensions are exact; Python integers take care of the sizes involved
(``dim V_{k w7}`` leaves the 64-bit range quickly).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .errors import CheckFailure, DomainError

RANK = 7
RHO = tuple(Fraction(x) for x in (6, 5, 4, 3, 2, 1, 0))
HALF = Fraction(1, 2)


def weight(*coords):
    if len(coords) != RANK:
        raise DomainError(f"a D7 weight has {RANK} coordinates")
    w = tuple(Fraction(c) for c in coords)
    dens = {c.denominator for c in w}
    if not (dens == {1} or dens == {2}):
        raise DomainError(f"{coords} is neither integral nor half-integral")
    return w


def omega(i):
    """Fundamental weight of D7 (``omega(0)`` is the zero weight)."""
    if i == 0:
        return (Fraction(0),) * RANK
    if 1 <= i <= 5:
        return tuple(Fraction(int(k < i)) for k in range(RANK))
    if i == 6:
        return (HALF,) * 6 + (-HALF,)
    if i == 7:
        return (HALF,) * 7
    raise DomainError(f"no fundamental weight omega_{i} in D7")


def epsilon_sum(*coeffs):
    """``sum c_k eps_k`` padded to 7 coordinates."""
    return tuple(Fraction(c) for c in coeffs) + (Fraction(0),) * (RANK - len(coeffs))


def add(*ws):
    return tuple(sum(cs, Fraction(0)) for cs in zip(*ws))


def scale(k, w):
    return tuple(k * c for c in w)


def inner(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True, order=True)
class Root:
    """Positive root ``eps_i - eps_j`` (sign -1) or ``eps_i + eps_j`` (sign +1)."""

    i: int
    j: int
    sign: int

    @property
    def vector(self):
        v = [Fraction(0)] * RANK
        v[self.i - 1] = Fraction(1)
        v[self.j - 1] = Fraction(self.sign)
        return tuple(v)

    def __str__(self):
        return f"e{self.i}{'+' if self.sign > 0 else '-'}e{self.j}"


# lexicographic in (i, j), with eps_i - eps_j before eps_i + eps_j
POSITIVE_ROOTS = tuple(Root(i, j, s) for i, j in combinations(range(1, RANK + 1), 2) for s in (-1, 1))


def euler_dim_d7(lam):
    """Signed Weyl dimension: the Euler characteristic of the line bundle.

    Zero exactly on singular weights; negative when the dot-dominant
    representative sits in odd cohomological degree.
    """
    v = add(lam, RHO)
    num = Fraction(1)
    den = Fraction(1)
    for r in POSITIVE_ROOTS:
        num *= inner(v, r.vector)
        den *= inner(RHO, r.vector)
    return num / den


def dim_d7(lam):
    d = euler_dim_d7(lam)
    if d.denominator != 1:
        raise CheckFailure(f"non-integral dimension {d} for {lam}")
    return int(d)


def is_dominant(lam):
    x = lam
    return all(x[k] >= x[k + 1] for k in range(RANK - 1)) and x[RANK - 2] >= abs(x[RANK - 1])


def simple_reflection(k, v):
    """Action of the simple reflection s_k of D7 on a vector."""
    v = list(v)
    if 1 <= k <= RANK - 1:
        v[k - 1], v[k] = v[k], v[k - 1]
    elif k == RANK:
        v[RANK - 2], v[RANK - 1] = -v[RANK - 1], -v[RANK - 2]
    else:
        raise DomainError(f"D7 has no simple reflection s_{k}")
    return tuple(v)


def dot_action(k, lam):
    return add(simple_reflection(k, add(lam, RHO)), scale(-1, RHO))


@dataclass(frozen=True)
class BBWResult:
    singular: bool
    witness: Root = None
    zero_roots: tuple = ()
    degree: int = None
    dominant: tuple = None

    def describe(self):
        if self.singular:
            return f"singular (witness {self.witness})"
        return f"H^{self.degree} = V[{', '.join(str(c) for c in self.dominant)}]"


def bbw_resolve(lam):
    """Borel-Weil-Bott for the line bundle of weight ``lam`` on D7 flag varieties."""
    v = add(lam, RHO)
    zeros = tuple(r for r in POSITIVE_ROOTS if inner(v, r.vector) == 0)
    if zeros:
        return BBWResult(True, zeros[0], zeros)
    # sign-fix: type D only allows an even number of sign changes
    signs_negative = sum(1 for c in v if c < 0)
    mags = sorted((abs(c) for c in v), reverse=True)
    # odd flip count: negate the smallest entry (a no-op when it is zero)
    if signs_negative % 2 == 1:
        mags[-1] = -mags[-1]
    dominant = add(tuple(mags), scale(-1, RHO))
    length = sum(1 for r in POSITIVE_ROOTS if inner(v, r.vector) < 0)
    return BBWResult(False, degree=length, dominant=dominant)


# -- postulation of DG ---------------------------------------------------------

def koszul_weights(k):
    """Highest weights theta_0..theta_7 of wedge^i E^dual (x) L^k."""
    w7 = omega(7)
    thetas = [add(scale(k - i, w7), omega(i)) for i in range(6)]
    thetas.append(add(scale(k - 5, w7), omega(6)))
    thetas.append(scale(k - 5, w7))
    return thetas


# Displayed closed forms for dim of the eight Koszul terms:
# numerator {shift: exponent} in (k + shift), denominator {base: exponent}.
DISPLAYED_DIMENSIONS = (
    ({1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3, 7: 3, 8: 2, 9: 2, 10: 1, 11: 1},
     {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3, 7: 3, 8: 2, 9: 2, 10: 1, 11: 1}),
    ({0: 1, 1: 1, 2: 2, 3: 2, 4: 3, 5: 2, 6: 3, 7: 2, 8: 2, 9: 1, 10: 1, 11: 1},
     {3: 2, 4: 2, 5: 3, 6: 2, 7: 2, 8: 2, 9: 2, 10: 1, 11: 1, 12: 1}),
    ({-1: 1, 0: 1, 1: 2, 2: 2, 3: 2, 4: 2, 5: 3, 6: 2, 7: 2, 8: 2, 9: 1, 11: 1},
     {2: 1, 3: 2, 4: 2, 5: 2, 6: 2, 7: 2, 8: 2, 9: 2, 10: 2, 11: 1}),
    ({-2: 1, -1: 1, 0: 2, 1: 1, 2: 2, 3: 2, 4: 3, 5: 3, 6: 2, 7: 1, 8: 1, 9: 1, 10: 1},
     {2: 1, 3: 2, 5: 2, 6: 2, 7: 2, 8: 3, 9: 2, 10: 1, 11: 1, 12: 1}),
    ({-3: 1, -2: 1, -1: 1, 0: 1, 1: 2, 2: 3, 3: 3, 4: 2, 5: 2, 6: 1, 7: 2, 8: 1, 9: 1},
     {2: 1, 3: 1, 4: 1, 5: 2, 6: 3, 7: 2, 8: 2, 9: 2, 10: 1, 11: 1, 12: 1}),
    ({-4: 1, -2: 1, -1: 2, 0: 2, 1: 2, 2: 3, 3: 2, 4: 2, 5: 2, 6: 2, 7: 1, 8: 1},
     {2: 1, 3: 1, 4: 1, 5: 2, 6: 2, 7: 2, 8: 2, 9: 2, 10: 2, 11: 1, 12: 1}),
    ({-4: 1, -3: 1, -2: 1, -1: 2, 0: 2, 1: 3, 2: 2, 3: 3, 4: 2, 5: 2, 6: 1, 7: 1},
     {2: 1, 3: 1, 4: 2, 5: 2, 6: 3, 7: 2, 8: 1, 9: 2, 10: 2, 11: 1, 12: 1}),
    ({-4: 1, -3: 1, -2: 2, -1: 2, 0: 3, 1: 3, 2: 3, 3: 2, 4: 2, 5: 1, 6: 1},
     {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3, 7: 3, 8: 2, 9: 2, 10: 1, 11: 1}),
)


def displayed_dimension(i, k):
    num, den = DISPLAYED_DIMENSIONS[i]
    n = 1
    for shift, e in num.items():
        n *= (k + shift) ** e
    d = 1
    for base, e in den.items():
        d *= base ** e
    return Fraction(n, d)


HILBERT_PREFACTOR = {1: 1, 2: 1, 3: 2, 4: 2, 5: 1, 6: 1}
HILBERT_DENOMINATOR = 2 ** 10 * 3 ** 5 * 5 ** 2 * 7 ** 2 * 11
HILBERT_P = (388080, 634858, 438545, 163184, 34441, 3906, 186)  # ascending powers of k


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def hilbert_numerator():
    """Integer coefficients (ascending) of the closed-form numerator in k."""
    poly = list(HILBERT_P)
    for shift, e in HILBERT_PREFACTOR.items():
        for _ in range(e):
            poly = _poly_mul(poly, [shift, 1])
    return poly


def h0_closed_form(k):
    value = sum(c * k ** n for n, c in enumerate(hilbert_numerator()))
    return Fraction(value, HILBERT_DENOMINATOR)


def h0_koszul(k):
    return sum(((-1) ** i * euler_dim_d7(t) for i, t in enumerate(koszul_weights(k))), Fraction(0))


def g2_positive_roots():
    """Positive roots of G2 in simple-root coordinates, with squared length."""
    return ((1, 0, 2), (0, 1, 6), (1, 1, 2), (2, 1, 2), (3, 1, 6), (3, 2, 6))


G2_SIMPLE_LENGTHS = (2, 6)


def weyl_dim_g2(i, j):
    if i < 0 or j < 0:
        raise DomainError("G2 weights must have nonnegative coordinates")
    lam = (i + 1, j + 1)  # lambda + rho in fundamental-weight coordinates
    num = den = Fraction(1)
    for c1, c2, length in g2_positive_roots():
        # <mu, alpha^vee> = sum_k c_k |alpha_k|^2 / |alpha|^2 <mu, alpha_k^vee>
        pair = lambda mu: Fraction(c1 * G2_SIMPLE_LENGTHS[0] * mu[0] + c2 * G2_SIMPLE_LENGTHS[1] * mu[1], length)
        num *= pair(lam)
        den *= pair((1, 1))
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


def h0_g2(k):
    """Dimension of the degree-k part of the G2 x G2 equivariant Hilbert series."""
    total = 0
    for j in range(k // 2 + 1):
        for i in range(k - 2 * j + 1):
            total += weyl_dim_g2(i, j) ** 2
    return total


def h0_dg(k):
    """(Koszul alternating sum, closed form, G2 x G2 sum) for h^0(DG, L^k)."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    return h0_koszul(k), h0_closed_form(k), h0_g2(k)


HILBERT_DEGREE = 14


def degree_from_hilbert():
    """Degree of DG from the leading coefficient of its Hilbert polynomial."""
    poly = hilbert_numerator()
    assert len(poly) == HILBERT_DEGREE + 1
    lead = Fraction(poly[-1], HILBERT_DENOMINATOR)
    d = lead * factorial(HILBERT_DEGREE)
    assert d.denominator == 1
    return int(d)


def degree_by_differences():
    """Degree as the 14th finite difference of the Koszul values."""
    vals = [h0_koszul(k) for k in range(HILBERT_DEGREE + 1)]
    d = sum((-1) ** (HILBERT_DEGREE - k) * comb(HILBERT_DEGREE, k) * v for k, v in enumerate(vals))
    return int(d)


# -- rigidity -------------------------------------------------------------------

def lambda_weight(k):
    return epsilon_sum(*([1] * (k + 2)))


def mu_weight(k):
    return epsilon_sum(2, *([1] * k))


def nu_weight(k):
    return epsilon_sum(2, 2, *([1] * (k - 2)))


RIGIDITY_SERIES = {
    "lambda": (lambda_weight, range(1, 6), ((6, 7), (5, 7), (5, 7), (4, 7), (5, 6))),
    "mu": (mu_weight, range(1, 7), ((6, 7), (5, 7), (5, 6), (4, 7), (3, 7), (3, 7))),
    "nu": (nu_weight, range(2, 8), ((5, 7), (5, 6), (4, 7), (3, 7), (4, 6), (3, 6))),
}


@dataclass(frozen=True)
class RigidityRow:
    series: str
    k: int
    weight: tuple
    result: BBWResult
    expected_root: Root

    @property
    def ok(self):
        return self.result.singular and self.expected_root in self.result.zero_roots


def rigidity_suite(strict=True):
    """Check the Koszul terms of T S14 restricted to DG are acyclic in the needed degrees."""
    rows = []
    for name, (fn, ks, pairs) in RIGIDITY_SERIES.items():
        for k, (i, j) in zip(ks, pairs):
            w = add(fn(k), scale(-k, omega(7)))
            rows.append(RigidityRow(name, k, w, bbw_resolve(w), Root(i, j, 1)))
    base = bbw_resolve(omega(2))
    if strict:
        for r in rows:
            if not r.ok:
                raise CheckFailure(f"{r.series}_{r.k} - {r.k} w7 = {r.weight}: {r.result.describe()}")
        if base.singular or base.degree != 0:
            raise CheckFailure(f"omega_2 resolves to {base.describe()}")
    return rows, base


# -- G2 Weyl group and Betti numbers --------------------------------------------

def _g2_pair(beta, k):
    """<beta, alpha_k^vee> for beta in simple-root coordinates."""
    gram = ((2, -3), (-3, 6))
    num = 2 * (beta[0] * gram[0][k] + beta[1] * gram[1][k])
    return num // gram[k][k]


def _g2_reflect(k, beta):
    c = _g2_pair(beta, k)
    b = list(beta)
    b[k] -= c
    return tuple(b)


def _g2_apply(w, beta):
    """Image of ``beta`` under ``w``, stored as the images of the simple roots."""
    return (beta[0] * w[0][0] + beta[1] * w[1][0], beta[0] * w[0][1] + beta[1] * w[1][1])


def g2_weyl_group():
    """The 12 elements of W(G2), generated by the two simple reflections."""
    simple = ((1, 0), (0, 1))
    seen = {simple}
    order = [simple]
    frontier = [simple]
    while frontier:
        nxt = []
        for w in frontier:
            for k in (0, 1):
                ws = tuple(_g2_apply(w, _g2_reflect(k, e)) for e in simple)
                if ws not in seen:
                    seen.add(ws)
                    order.append(ws)
                    nxt.append(ws)
        frontier = nxt
    return order


def _negative(beta):
    return beta[0] <= 0 and beta[1] <= 0 and beta != (0, 0)


def g2_length(w):
    return sum(1 for c1, c2, _ in g2_positive_roots() if _negative(_g2_apply(w, (c1, c2))))


def g2_simple_length(w):
    return sum(1 for e in ((1, 0), (0, 1)) if _negative(_g2_apply(w, e)))


def poly_add(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def poly_sub(p, q):
    return poly_add(p, [-c for c in q])


def poly_trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


poly_mul = _poly_mul


def geometric(n, step=1):
    """1 + q^step + ... + q^(step(n-1))."""
    p = [0] * (step * (n - 1) + 1)
    for i in range(n):
        p[step * i] = 1
    return p


@dataclass(frozen=True)
class PoincarePolynomial:
    """Even Betti numbers: ``coeffs[i] = b_{2i}``."""

    coeffs: tuple

    @property
    def euler(self):
        return sum(self.coeffs)

    def is_palindromic(self):
        return self.coeffs == self.coeffs[::-1]


def wonderful_betti():
    w = g2_weyl_group()
    counts = {}
    for u in w:
        for v in w:
            i = g2_length(u) + g2_length(v) + g2_simple_length(v)
            counts[i] = counts.get(i, 0) + 1
    top = max(counts)
    return PoincarePolynomial(tuple(counts.get(i, 0) for i in range(top + 1)))


Q5 = geometric(6)


def dg_betti_from_blowup(wonderful=None):
    """P_DG = P_wonderful - (q + q^2 + q^3) P_Q5^2."""
    wonderful = wonderful or wonderful_betti()
    correction = poly_mul([0, 1, 1, 1], poly_mul(Q5, Q5))
    return PoincarePolynomial(tuple(poly_trim(poly_sub(list(wonderful.coeffs), correction))))


def dg_betti_product_formula():
    return PoincarePolynomial(tuple(poly_mul(geometric(6), [1, 0, 0, 1, 1, 1, 1, 0, 0, 1])))


def sg_betti():
    inner_part = poly_add(poly_mul(geometric(4, 2), [1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1]),
                          [0] * 8 + [1])
    p = poly_mul(poly_mul(geometric(5), poly_mul([1, 0, 0, 1], [1, 0, 0, 1])), inner_part)
    return PoincarePolynomial(tuple(p))


WONDERFUL_EXPECTED = (1, 2, 4, 8, 12, 16, 19, 20, 19, 16, 12, 8, 4, 2, 1)
DG_EXPECTED = (1, 1, 1, 2, 3, 4, 4, 4, 4, 4, 3, 2, 1, 1, 1)
SG_EXPECTED = (1, 1, 2, 4, 6, 8, 12, 16, 20, 25, 29, 33, 35, 36, 35, 33, 29, 25, 20, 16, 12, 8, 6,
               4, 2, 1, 1)


def segre_degree(dim_x, deg_x, dim_y, deg_y):
    return comb(dim_x + dim_y, dim_x) * deg_x * deg_y


@dataclass(frozen=True)
class BettiReport:
    wonderful: PoincarePolynomial
    dg: PoincarePolynomial
    dg_product: PoincarePolynomial
    sg: PoincarePolynomial
    weyl_order: int
    closed_orbit_degree: int
    chi_minimal: int
    chi_formula: int


def betti_suite(strict=True):
    wond = wonderful_betti()
    dg = dg_betti_from_blowup(wond)
    report = BettiReport(
        wonderful=wond,
        dg=dg,
        dg_product=dg_betti_product_formula(),
        sg=sg_betti(),
        weyl_order=len(g2_weyl_group()),
        # Q5 x Q5 under the Segre embedding, deg Q5 = 2
        closed_orbit_degree=segre_degree(5, 2, 5, 2),
        chi_minimal=dg.euler,
        chi_formula=(4 + 2) ** 2,
    )
    if strict:
        for label, got, want in (("wonderful", wond.coeffs, WONDERFUL_EXPECTED),
                                 ("DG", dg.coeffs, DG_EXPECTED),
                                 ("DG product formula", report.dg_product.coeffs, DG_EXPECTED),
                                 ("SG", report.sg.coeffs, SG_EXPECTED)):
            if got != want:
                bad = next((i for i in range(max(len(got), len(want)))
                            if i >= len(got) or i >= len(want) or got[i] != want[i]))
                raise CheckFailure(f"{label} Betti numbers differ at index {bad}")
        if report.sg.euler != 420 or report.closed_orbit_degree != 1008:
            raise CheckFailure("SG Euler characteristic or closed-orbit degree mismatch")
        if report.chi_minimal != report.chi_formula or wond.euler != report.weyl_order ** 2:
            raise CheckFailure("Euler characteristic numerology mismatch")
    return report
