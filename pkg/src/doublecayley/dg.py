"""The double Cayley Grassmannian inside the spinor variety S14.

Everything hangs off the canonical generic spinor
``z = 1 + e1237 + e4567 + e123456``: the 14 odd spinors ``L_z = V14 . z``,
their orthogonal ``D_z`` (the linear span of DG, dimension 50), and the
G2 x G2 structure through the splitting ``V14 = V7 + V7'``.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .clifford import (
    BASIS14,
    BASIS14_NAMES,
    EVEN_MASKS,
    F_SPAN,
    N,
    ExteriorElement,
    Vector14,
    annihilator,
    clifford_form_B,
    clifford_mul,
    degree_of,
    f_intersection_dim,
    indices_of,
    is_isotropic,
    is_pure,
    pairing,
    span14,
)
from .errors import NotInDGError, ZeroSpinorError
from .linalg import Subspace, determinant, nullspace, rank, rref
from .parsing import parse_spinor

Z_TEXT = "1 + e1237 + e4567 + e123456"

# u.z for the 14 basis vectors, as printed in the literature
CLIFFORD_TABLE = (
    ("e1", "e1 + e14567"),
    ("e2", "e2 + e24567"),
    ("e3", "e3 + e34567"),
    ("e4", "e4 - e12347"),
    ("e5", "e5 - e12357"),
    ("e6", "e6 - e12367"),
    ("e7", "e7 + e1234567"),
    ("f1", "e237 + e23456"),
    ("f2", "-e137 - e13456"),
    ("f3", "e127 + e12456"),
    ("f4", "e567 - e12356"),
    ("f5", "-e467 + e12346"),
    ("f6", "e457 - e12345"),
    ("f7", "-e123 - e456"),
)


def _vec(text):
    return parse_spinor(text, as_vector=True)


def even_coords(x):
    return x.vector(EVEN_MASKS)


def from_even_coords(coords):
    return ExteriorElement({m: c for m, c in zip(EVEN_MASKS, coords)})


@dataclass(frozen=True)
class CanonicalData:
    z: ExteriorElement
    lz: tuple
    v7: Subspace
    v7p: Subspace
    n: Subspace
    np: Subspace
    delta: ExteriorElement
    deltap: ExteriorElement
    dz: Subspace = field(repr=False)

    def check(self):
        problems = []
        for (name, text), row in zip(CLIFFORD_TABLE, self.lz):
            if row != parse_spinor(text):
                problems.append(f"{name}.z = {row}, expected {text}")
        if rank([l.vector() for l in self.lz]) != 14:
            problems.append("L_z is not 14-dimensional")
        if any(clifford_form_B(u, v) for u in _basis(self.v7) for v in _basis(self.v7p)):
            problems.append("V7 and V7' are not orthogonal")
        if (self.v7 + self.v7p).dim != 2 * N:
            problems.append("V7 + V7' is not all of V14")
        if not (is_isotropic(self.n) and is_isotropic(self.np)):
            problems.append("null planes are not isotropic")
        if not (self.v7.contains_subspace(self.n) and self.v7p.contains_subspace(self.np)):
            problems.append("null planes not inside their summands")
        if self.dz.dim != 50 or not self.dz.contains(even_coords(self.z)):
            problems.append("D_z is not a 50-dimensional space containing z")
        return problems


def _basis(subspace):
    return [Vector14.from_coords(r) for r in subspace.basis]


@lru_cache(maxsize=None)
def canonical_data():
    z = parse_spinor(Z_TEXT)
    lz = tuple(clifford_mul(v, z) for v in BASIS14)
    # D_z: even y with <l, y> = 0 for every l in L_z
    rows = [[pairing(l, ExteriorElement({m: 1})) for m in EVEN_MASKS] for l in lz]
    dz = Subspace(nullspace(rows, len(EVEN_MASKS)), len(EVEN_MASKS))
    data = CanonicalData(
        z=z,
        lz=lz,
        v7=span14([_vec(s) for s in ("e1", "e2", "e3", "f1", "f2", "f3", "e7 - f7")]),
        v7p=span14([_vec(s) for s in ("e4", "e5", "e6", "f4", "f5", "f6", "e7 + f7")]),
        n=span14([_vec("e1 + e2"), _vec("f1 - f2")]),
        np=span14([_vec("e4 + e5"), _vec("f4 - f5")]),
        delta=parse_spinor("1 + e123"),
        deltap=parse_spinor("1 + e456"),
        dz=dz,
    )
    problems = data.check()
    if problems:
        raise AssertionError("; ".join(problems))
    return data


def clifford_table():
    """[(vector name, computed u.z, expected text)] for the 14 basis vectors."""
    data = canonical_data()
    return [(name, row, text) for (name, text), row in zip(CLIFFORD_TABLE, data.lz)]


def orthogonal_to_lz(y):
    return all(pairing(l, y) == 0 for l in canonical_data().lz)


def in_DG(y):
    if y.is_zero():
        raise ZeroSpinorError("membership of the zero spinor")
    if not y.is_even():
        return False
    return orthogonal_to_lz(y) and is_pure(y)


def orbit_type(y):
    if not in_DG(y):
        raise NotInDGError(f"{y} is not a point of DG")
    data = canonical_data()
    ann = annihilator(y)
    return ann.intersect(data.v7).dim, ann.intersect(data.v7p).dim


# -- the family P(N x N') -------------------------------------------------------

def _lemma8_basis():
    y1 = parse_spinor("e1 + e2") ^ parse_spinor("e4 + e5")
    return (
        y1,
        y1 ^ ExteriorElement.blade(6, 7),
        y1 ^ ExteriorElement.blade(3, 7),
        y1 ^ ExteriorElement.blade(3, 6),
    )


LEMMA8_BASIS = _lemma8_basis()


def lemma8_family(t1, t2, t3, t4):
    t = [Fraction(x) for x in (t1, t2, t3, t4)]
    if not any(t):
        raise ZeroSpinorError("all four tensor coordinates vanish")
    y = ExteriorElement()
    for c, b in zip(t, LEMMA8_BASIS):
        if c:
            y = y + b * c
    return y


def lemma8_generators(t1, t2, t3, t4):
    """The seven listed annihilating vectors of y(t)."""
    t1, t2, t3, t4 = (Fraction(x) for x in (t1, t2, t3, t4))
    e, f = Vector14.e, Vector14.f
    return [
        e(1) + e(2),
        f(1) - f(2),
        e(4) + e(5),
        f(4) - f(5),
        e(6) * t4 + e(7) * t3 - f(3) * t1,
        e(3) * t4 - e(7) * t2 + f(6) * t1,
        e(3) * t3 + e(6) * t2 + f(7) * t1,
    ]


def lemma8_span(t1, t2, t3, t4):
    return span14(lemma8_generators(t1, t2, t3, t4))


def tensor_rank(t1, t2, t3, t4):
    """Rank of the 2x2 matrix [[t1, t2], [t3, t4]] (N basis by N' basis)."""
    if not any((t1, t2, t3, t4)):
        return 0
    return 2 if Fraction(t1) * t4 - Fraction(t2) * t3 else 1


# -- torus weights ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class TorusWeight:
    """a alpha_1 + b alpha_2 + a' alpha'_1 + b' alpha'_2, alpha_3 = -alpha_1 - alpha_2."""

    g: tuple = (0, 0)
    gp: tuple = (0, 0)

    def __add__(self, other):
        return TorusWeight((self.g[0] + other.g[0], self.g[1] + other.g[1]),
                           (self.gp[0] + other.gp[0], self.gp[1] + other.gp[1]))

    def __neg__(self):
        return TorusWeight((-self.g[0], -self.g[1]), (-self.gp[0], -self.gp[1]))

    def is_zero(self):
        return self.g == (0, 0) and self.gp == (0, 0)

    def __str__(self):
        parts = []
        for (a, b), tag in ((self.g, ""), (self.gp, "'")):
            for c, name in ((a, f"a1{tag}"), (b, f"a2{tag}")):
                if c:
                    parts.append(f"{c:+d}{name}" if abs(c) != 1 else f"{'+' if c > 0 else '-'}{name}")
        return "".join(parts).lstrip("+") or "0"


_ALPHA = {1: (1, 0), 2: (0, 1), 3: (-1, -1)}
GENERATOR_WEIGHTS = {
    **{i: TorusWeight(g=_ALPHA[i]) for i in (1, 2, 3)},
    **{i: TorusWeight(gp=_ALPHA[i - 3]) for i in (4, 5, 6)},
    7: TorusWeight(),
}


def blade_weight(mask):
    w = TorusWeight()
    for i in indices_of(mask):
        w = w + GENERATOR_WEIGHTS[i]
    return w


def _v7_weights(prime):
    ws = [TorusWeight()]
    for a in _ALPHA.values():
        for s in (1, -1):
            g = (s * a[0], s * a[1])
            ws.append(TorusWeight(gp=g) if prime else TorusWeight(g=g))
    return ws


def restrict_character():
    """Compare the blade weights of the even spinors with V7 x V7' + V7 + V7' + C."""
    actual = Counter(blade_weight(m) for m in EVEN_MASKS)
    w, wp = _v7_weights(False), _v7_weights(True)
    expected = Counter(a + b for a in w for b in wp)
    expected.update(w)
    expected.update(wp)
    expected.update([TorusWeight()])
    return {
        "actual": dict(actual),
        "expected": dict(expected),
        "total": sum(actual.values()),
        "zero_multiplicity": actual[TorusWeight()],
        "equal": actual == expected,
    }


def weight_spaces():
    spaces = {}
    for m in EVEN_MASKS:
        spaces.setdefault(blade_weight(m), []).append(m)
    return dict(sorted(spaces.items()))


# -- purity on a pencil ------------------------------------------------------------

def _clifford_matrix(x):
    """Rows indexed by all 128 blades, columns by the 14 basis vectors."""
    images = [clifford_mul(v, x) for v in BASIS14]
    return [[img.coefficient(indices_of(m)) for img in images] for m in range(1 << N)]


def _interpolate(xs, ys):
    """Coefficients (low to high) of the polynomial through the points."""
    import sympy

    s = sympy.Symbol("s")
    poly = sympy.interpolate(list(zip([sympy.Rational(x) for x in xs],
                                      [sympy.Rational(y.numerator, y.denominator) for y in ys])), s)
    return sympy.Poly(poly, s, domain="QQ")


def pencil_pure_points(p, q, samples=4):
    """Decide exactly whether the line {s p + q} ∪ {p} contains a pure spinor.

    Purity means rank 7 of the 128x14 Clifford matrix.  On the chart
    x(s) = s p + q that matrix is A + s B; for several rational s0 with rank
    above 7 an 8x8 non-vanishing minor is selected and the polynomial
    determinant is interpolated.  A constant gcd of these minors rules out
    every finite s; the point at infinity is p itself.

    Returns a dict with the gcd degree and the annihilator dimensions found
    at the chart origins.
    """
    import sympy

    A = _clifford_matrix(q)
    B = _clifford_matrix(p)

    def at(s0):
        return [[a + s0 * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]

    g = None
    minors = []
    for s0 in range(samples):
        m = at(Fraction(s0))
        _, rows_r = rref([list(col) for col in zip(*m)], len(m))
        if len(rows_r) <= N:
            continue
        for k in range(len(rows_r) - N):
            rows = rows_r[k:k + N + 1]
            cols = _independent_columns([m[r] for r in rows], N + 1)
            key = (tuple(rows), tuple(cols))
            if key in {mk for mk, _ in minors}:
                continue
            ys = []
            for x in range(N + 2):
                mx = at(Fraction(x))
                ys.append(determinant([[mx[r][c] for c in cols] for r in rows]))
            poly = _interpolate(range(N + 2), ys)
            minors.append((key, poly))
            g = poly if g is None else sympy.gcd(g, poly)
            if g.degree() == 0:
                break
        if g is not None and g.degree() == 0:
            break
    if g is None:
        # rank <= 7 at every sample: the rank locus is all of the line
        if all(rank(at(Fraction(x)), 14) <= N for x in range(N + 2)):
            return {"gcd_degree": None, "minors_used": 0, "candidate_roots": [],
                    "pure_finite": ["all"], "pure_at_infinity": is_pure(p)}
        raise AssertionError("no nonsingular 8x8 minor found on the pencil")
    confirmed = []
    candidates = []
    if g.degree() > 0:
        for r in sympy.Poly(g).ground_roots():
            candidates.append(str(r))
            x = q + p * Fraction(int(r.p), int(r.q))
            if not x.is_zero() and is_pure(x):
                confirmed.append(str(r))
    return {
        "gcd_degree": int(g.degree()),
        "minors_used": len(minors),
        "candidate_roots": candidates,
        "pure_finite": confirmed,
        "pure_at_infinity": is_pure(p),
    }


def _independent_columns(rows, want):
    cols = [list(c) for c in zip(*rows)]
    chosen = []
    for j, c in enumerate(cols):
        if rank([cols[k] for k in chosen] + [c], len(rows)) > len(chosen):
            chosen.append(j)
            if len(chosen) == want:
                break
    return chosen


def pencil_has_pure_point(p, q):
    """Two affine charts: s p + q and p + s q."""
    first = pencil_pure_points(p, q)
    second = pencil_pure_points(q, p)
    found = bool(first["pure_finite"] or first["pure_at_infinity"]
                 or second["pure_finite"] or second["pure_at_infinity"])
    undecided = any(c["gcd_degree"] and not c["pure_finite"] for c in (first, second))
    return found, undecided, (first, second)


# -- fixed points ---------------------------------------------------------------------

@dataclass
class Rejection:
    weight: TorusWeight
    weight_space_dim: int
    dz_dim: int
    reason: str
    annihilator_dims: tuple = ()


@dataclass
class FixedPointScan:
    points: list
    rejections: list

    def rejected_weights(self):
        return [r.weight for r in self.rejections]


def _dz_part(masks):
    """Intersection of span(blades) with D_z, as ExteriorElements."""
    dz = canonical_data().dz
    ws = Subspace([[int(m == e) for e in EVEN_MASKS] for m in masks], len(EVEN_MASKS))
    return [from_even_coords(v) for v in ws.intersect(dz).basis]


@lru_cache(maxsize=None)
def fixed_points():
    points, rejections = [], []
    for w, masks in weight_spaces().items():
        line = _dz_part(masks)
        if not line:
            rejections.append(Rejection(w, len(masks), 0, "weight space misses D_z"))
            continue
        if len(line) == 1:
            x = line[0]
            dim = annihilator(x).dim
            if dim == N and orthogonal_to_lz(x):
                points.append(x)
            else:
                rejections.append(Rejection(w, len(masks), 1, "not pure", (dim,)))
            continue
        if len(line) == 2:
            p, q = line
            found, undecided, charts = pencil_has_pure_point(p, q)
            if found or undecided:
                raise AssertionError(f"unexpected pure spinor in the pencil of weight {w}")
            dims = (annihilator(p).dim, annihilator(q).dim)
            reason = "no pure spinor on the pencil (gcd degrees {}, {})".format(
                charts[0]["gcd_degree"], charts[1]["gcd_degree"])
            rejections.append(Rejection(w, len(masks), 2, reason, dims))
            continue
        raise AssertionError(f"weight {w} meets D_z in dimension {len(line)}")
    points.sort(key=lambda x: (len(x.items()), [(degree_of(m), indices_of(m)) for m, _ in x.items()]))
    return FixedPointScan(points, rejections)


def expected_fixed_blades():
    """e_ij, e_ii'j7, e_ijj'7 and e_ii'jj' with 1<=i<i'<=3, 4<=j<j'<=6."""
    a, ap = (1, 2, 3), (4, 5, 6)
    out = []
    for i in a:
        for j in ap:
            out.append((i, j))
    for i, i2 in combinations(a, 2):
        for j in ap:
            out.append(tuple(sorted((i, i2, j, 7))))
    for i in a:
        for j, j2 in combinations(ap, 2):
            out.append((i, j, j2, 7))
    for i, i2 in combinations(a, 2):
        for j, j2 in combinations(ap, 2):
            out.append((i, i2, j, j2))
    return out


def blade_of(x):
    """Index tuple of x when x is a multiple of a single blade, else None."""
    items = x.items()
    if len(items) != 1:
        return None
    return indices_of(items[0][0])


@dataclass
class FixedPointGraph:
    vertices: list
    edges: set

    def adjacent(self, a, b):
        return frozenset((tuple(a), tuple(b))) in self.edges

    def degree(self, v):
        return sum(1 for e in self.edges if tuple(v) in e)


def _edge(a, b):
    sa, sb = set(a), set(b)
    if len(a) == 2 and len(b) == 2:
        return False
    if len(a) == 2:
        return sa <= sb
    if len(b) == 2:
        return sb <= sa
    return len(sa & sb) == 3


def fixed_point_graph():
    vertices = [blade_of(x) for x in fixed_points().points]
    edges = {frozenset((a, b)) for a, b in combinations(vertices, 2) if _edge(a, b)}
    return FixedPointGraph(vertices, edges)


def zero_weight_pencil():
    """The two spanning spinors of W0 and the exact purity analysis."""
    p = parse_spinor("1 + e123456")
    q = parse_spinor("e1237 + e4567")
    found, undecided, charts = pencil_has_pure_point(p, q)
    return {
        "basis": (p, q),
        "in_dz": all(canonical_data().dz.contains(even_coords(x)) for x in (p, q)),
        "annihilator_dims": (annihilator(p).dim, annihilator(q).dim),
        "has_pure": found,
        "undecided": undecided,
        "charts": charts,
    }


def f_dim(y):
    return f_intersection_dim(y)


__all__ = [
    "CLIFFORD_TABLE", "CanonicalData", "FixedPointGraph", "FixedPointScan", "Rejection",
    "TorusWeight", "BASIS14_NAMES", "F_SPAN", "blade_of", "blade_weight", "canonical_data",
    "clifford_table", "expected_fixed_blades", "f_dim", "fixed_point_graph", "fixed_points",
    "in_DG", "lemma8_family", "lemma8_generators", "lemma8_span", "orbit_type",
    "pencil_has_pure_point", "restrict_character", "tensor_rank", "weight_spaces",
    "zero_weight_pencil",
]
