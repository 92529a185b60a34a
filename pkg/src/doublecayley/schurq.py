"""Schur Q- and P-functions as exact polynomials in the odd power sums.

This is the multiplication oracle for the Chow ring of S14.  It never looks
at tableaux or Pieri rules: one-row functions come from the generating series
``sum Q_r t^r = exp(2 sum_{k odd} p_k t^k / k)``, longer ones from the
two-row rule and a Pfaffian, and products are expanded back in the P-basis by
an exact linear solve.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm
from itertools import combinations

from .errors import DomainError, OracleIntegrityError
from .linalg import inverse

MAX_DEGREE = 42
STAIRCASE = 6


class GammaElement:
    """Element of the ring generated by p1, p3, p5, ...

    Monomials are tuples of odd parts in decreasing order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {m: Fraction(v) for m, v in (coeffs or {}).items() if v}

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def power_sum(cls, k):
        if k <= 0 or k % 2 == 0:
            raise DomainError(f"p_{k} is not an odd power sum")
        return cls({(k,): 1})

    def degrees(self):
        return {sum(m) for m in self.coeffs}

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, GammaElement) and self.coeffs == other.coeffs

    def __add__(self, other):
        c = dict(self.coeffs)
        for m, v in other.coeffs.items():
            c[m] = c.get(m, 0) + v
        return GammaElement(c)

    def __neg__(self):
        return GammaElement({m: -v for m, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = Fraction(s)
        return GammaElement({m: s * v for m, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, GammaElement):
            return self.scale(other)
        c = {}
        for m1, v1 in self.coeffs.items():
            for m2, v2 in other.coeffs.items():
                m = tuple(sorted(m1 + m2, reverse=True))
                c[m] = c.get(m, 0) + v1 * v2
        return GammaElement(c)

    __rmul__ = scale

    def __repr__(self):
        if not self.coeffs:
            return "GammaElement(0)"
        terms = []
        for m, v in sorted(self.coeffs.items()):
            mono = "*".join(f"p{k}" for k in m) or "1"
            terms.append(f"{v}*{mono}")
        return "GammaElement(" + " + ".join(terms) + ")"


@lru_cache(maxsize=None)
def q_one_row(r):
    """Q_r, from ``r Q_r = 2 sum_{k odd <= r} p_k Q_{r-k}``."""
    if r < 0:
        return GammaElement()
    if r == 0:
        return GammaElement.one()
    total = GammaElement()
    for k in range(1, r + 1, 2):
        total = total + GammaElement.power_sum(k) * q_one_row(r - k)
    return total.scale(Fraction(2, r))


@lru_cache(maxsize=None)
def q_two_row(a, b):
    """Q_(a,b) = Q_a Q_b + 2 sum_{i=1}^{b} (-1)^i Q_{a+i} Q_{b-i}."""
    total = q_one_row(a) * q_one_row(b)
    for i in range(1, b + 1):
        total = total + (q_one_row(a + i) * q_one_row(b - i)).scale(2 * (-1) ** i)
    return total


def _check_strict(lam):
    lam = tuple(lam)
    if any(p <= 0 for p in lam) or any(x <= y for x, y in zip(lam, lam[1:])):
        raise DomainError(f"{lam} is not a strict partition")
    if sum(lam) > MAX_DEGREE:
        raise DomainError(f"{lam} exceeds the degree cap {MAX_DEGREE}")
    return lam


def _pfaffian(table, indices):
    """Pfaffian of the skew matrix with upper entries ``table[(i, j)]``."""
    if not indices:
        return GammaElement.one()
    first, rest = indices[0], indices[1:]
    total = GammaElement()
    for pos, j in enumerate(rest):
        term = table[(first, j)] * _pfaffian(table, rest[:pos] + rest[pos + 1:])
        total = total + (term if pos % 2 == 0 else -term)
    return total


@lru_cache(maxsize=None)
def q_lambda(lam):
    """Schur Q-function of a strict partition."""
    lam = _check_strict(lam)
    if len(lam) == 0:
        return GammaElement.one()
    if len(lam) == 1:
        return q_one_row(lam[0])
    if len(lam) == 2:
        return q_two_row(*lam)
    parts = lam + (0,) if len(lam) % 2 else lam
    table = {(i, j): q_two_row(parts[i], parts[j]) for i, j in combinations(range(len(parts)), 2)}
    return _pfaffian(table, tuple(range(len(parts))))


@lru_cache(maxsize=None)
def p_lambda(lam):
    lam = _check_strict(lam)
    return q_lambda(lam).scale(Fraction(1, 2 ** len(lam)))


@lru_cache(maxsize=None)
def strict_partitions(d, max_part=None):
    """Strict partitions of d (optionally with parts <= max_part), decreasing lex."""
    if max_part is None:
        max_part = d

    def gen(n, cap):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in gen(n - first, first - 1):
                yield (first,) + rest

    return tuple(gen(d, max_part))


@lru_cache(maxsize=None)
def odd_partitions(d):
    def gen(n, cap):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            if first % 2:
                for rest in gen(n - first, first):
                    yield (first,) + rest

    return tuple(gen(d, d))


def _common_denominator(values):
    d = 1
    for v in values:
        d = lcm(d, Fraction(v).denominator)
    return d


def _integer_matrix(rows):
    """(integer rows, D) with rows == integer rows / D."""
    d = _common_denominator(x for r in rows for x in r)
    return [[int(x * d) for x in r] for r in rows], d


class _DegreeBasis:
    """Q-basis of the degree-d part together with its inverse change of basis.

    Both the matrix and its inverse are kept as integer matrices over a
    common denominator so that solving is pure integer arithmetic.
    """

    def __init__(self, d):
        self.degree = d
        self.partitions = strict_partitions(d)
        self.monomials = odd_partitions(d)
        if len(self.partitions) != len(self.monomials):
            raise OracleIntegrityError(f"dimension mismatch in degree {d}")
        self.index = {m: i for i, m in enumerate(self.monomials)}
        # columns: Q_lambda in monomial coordinates
        cols = [self._coords(q_lambda(lam)) for lam in self.partitions]
        matrix = [[col[r] for col in cols] for r in range(len(self.monomials))]
        try:
            inv = inverse(matrix) if matrix else []
        except ZeroDivisionError:
            raise OracleIntegrityError(f"Q-functions of degree {d} are not independent") from None
        self.rank = len(self.partitions)
        self.matrix, self.matrix_den = _integer_matrix(matrix)
        self.inv, self.inv_den = _integer_matrix(inv)

    def _coords(self, f):
        v = [Fraction(0)] * len(self.monomials)
        for m, c in f.coeffs.items():
            try:
                v[self.index[m]] = c
            except KeyError:
                raise OracleIntegrityError(f"monomial {m} not of degree {self.degree}") from None
        return v

    def int_coords(self, f):
        """(integer vector, D) with coordinates of f equal to vector / D."""
        d = _common_denominator(f.coeffs.values())
        v = [0] * len(self.monomials)
        for m, c in f.coeffs.items():
            try:
                v[self.index[m]] = int(c * d)
            except KeyError:
                raise OracleIntegrityError(f"monomial {m} not of degree {self.degree}") from None
        return v, d

    def solve_int(self, v, den):
        """Q-coordinates of the element with monomial coordinates v / den."""
        w = [sum(a * b for a, b in zip(row, v) if b) for row in self.inv]
        # residual: matrix . (inv . v) must give back v exactly
        back = [sum(a * b for a, b in zip(row, w) if b) for row in self.matrix]
        scale = self.matrix_den * self.inv_den
        if any(x != scale * y for x, y in zip(back, v)):
            raise OracleIntegrityError(f"nonzero residual in degree {self.degree}")
        total = self.inv_den * den
        return [Fraction(x, total) for x in w]

    def solve_q(self, f):
        return self.solve_int(*self.int_coords(f))


@lru_cache(maxsize=None)
def degree_basis(d):
    if not 0 <= d <= MAX_DEGREE:
        raise DomainError(f"degree {d} outside 0..{MAX_DEGREE}")
    return _DegreeBasis(d)


def expand_in_P(f, d):
    """Coefficients of f in the P-basis of degree d (zero coefficients dropped)."""
    if f.is_zero():
        return {}
    if f.degrees() != {d}:
        raise DomainError(f"element is not homogeneous of degree {d}")
    basis = degree_basis(d)
    qcoeffs = basis.solve_q(f)
    return {lam: c * 2 ** len(lam) for lam, c in zip(basis.partitions, qcoeffs) if c}


@lru_cache(maxsize=None)
def _p_integer(lam):
    """P_lambda as ({monomial: int}, D)."""
    f = p_lambda(lam)
    d = _common_denominator(f.coeffs.values())
    return {m: int(c * d) for m, c in f.coeffs.items()}, d


def _product_coords(mu, nu, basis):
    a, da = _p_integer(mu)
    b, db = _p_integer(nu)
    index = basis.index
    v = [0] * len(basis.monomials)
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            v[index[tuple(sorted(m1 + m2, reverse=True))]] += c1 * c2
    return v, da * db


@lru_cache(maxsize=None)
def structure_constants(mu, nu):
    """Untruncated expansion of P_mu P_nu in the P-basis."""
    mu, nu = _check_strict(mu), _check_strict(nu)
    basis = degree_basis(sum(mu) + sum(nu))
    q = basis.solve_int(*_product_coords(mu, nu, basis))
    out = {lam: c * 2 ** len(lam) for lam, c in zip(basis.partitions, q) if c}
    for lam, c in out.items():
        if c.denominator != 1 or c < 0:
            raise OracleIntegrityError(f"coefficient {c} of P{lam} in P{mu} P{nu}")
    return {lam: int(c) for lam, c in out.items()}


def product_oracle(mu, nu, max_part=STAIRCASE):
    """P_mu P_nu with every term having a part > max_part deleted."""
    from .schubert import ChowClass

    terms = {lam: c for lam, c in structure_constants(tuple(mu), tuple(nu)).items()
             if not lam or lam[0] <= max_part}
    return ChowClass(terms, grade=sum(mu) + sum(nu), check=False)
