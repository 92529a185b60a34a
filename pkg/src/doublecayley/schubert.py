"""Chow ring of the spinor variety S14 in the Schubert basis.

Schubert classes ``tau_mu`` are indexed by strict partitions inside the
staircase (6,5,4,3,2,1).  The ring is the quotient of the ring of Schur
P-functions by the span of ``P_lambda`` with ``lambda_1 >= 7``.

Two independent multiplication routes live here:

* :func:`multiply`, which delegates to :mod:`doublecayley.schurq`;
* :func:`pieri_product`, built only from :func:`pieri_special` via a
  Giambelli-type recursion.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import CheckFailure, DomainError, GradeError, OracleIntegrityError

MAX_PART = 6
TOP_GRADE = MAX_PART * (MAX_PART + 1) // 2
STAIRCASE = tuple(range(MAX_PART, 0, -1))


def is_strict(mu):
    return all(p > 0 for p in mu) and all(a > b for a, b in zip(mu, mu[1:]))


def in_staircase(mu):
    return is_strict(mu) and (not mu or mu[0] <= MAX_PART)


@lru_cache(maxsize=None)
def schubert_partitions(grade=None):
    """Strict partitions in the staircase, decreasing lex within each grade."""
    out = []
    for mask in range(1 << MAX_PART):
        mu = tuple(p for p in range(MAX_PART, 0, -1) if mask >> (p - 1) & 1)
        if grade is None or sum(mu) == grade:
            out.append(mu)
    out.sort(key=lambda m: (sum(m), tuple(-p for p in m)))
    return tuple(out)


def complement(mu):
    """Poincare dual index: the staircase parts missing from mu."""
    mu = _check_partition(mu)
    return tuple(p for p in STAIRCASE if p not in mu)


def _check_partition(mu):
    mu = tuple(mu)
    if not is_strict(mu):
        raise DomainError(f"{mu} is not a strict partition")
    if mu and mu[0] > MAX_PART:
        raise DomainError(f"{mu} has a part larger than {MAX_PART}")
    return mu


class ChowClass:
    """Homogeneous integer combination of Schubert classes."""

    __slots__ = ("terms", "grade")

    def __init__(self, terms=None, grade=None, check=True):
        terms = {tuple(mu): c for mu, c in (terms or {}).items() if c}
        grades = {sum(mu) for mu in terms}
        if len(grades) > 1:
            raise GradeError(f"mixed grades {sorted(grades)}")
        if grade is None:
            grade = grades.pop() if grades else 0
        elif grades and grades != {grade}:
            raise GradeError(f"terms of grade {grades.pop()} in a class of grade {grade}")
        if not 0 <= grade <= TOP_GRADE:
            raise GradeError(f"grade {grade} outside 0..{TOP_GRADE}")
        if check:
            for mu, c in terms.items():
                _check_partition(mu)
                if int(c) != c:
                    raise DomainError(f"non-integer coefficient {c}")
        self.terms = {mu: int(c) for mu, c in terms.items()}
        self.grade = grade

    @classmethod
    def zero(cls, grade=0):
        return cls({}, grade=grade)

    @classmethod
    def unit(cls):
        return cls({(): 1})

    @classmethod
    def schubert(cls, mu):
        return cls({tuple(mu): 1})

    def items(self):
        """Terms sorted by decreasing lex order of the partition."""
        return sorted(self.terms.items(), key=lambda kv: tuple(-p for p in kv[0]))

    def coefficient(self, mu):
        return self.terms.get(tuple(mu), 0)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.grade == other.grade and self.terms == other.terms

    def __hash__(self):
        return hash((self.grade, frozenset(self.terms.items())))

    def _same_grade(self, other):
        if self.grade != other.grade:
            raise GradeError(f"cannot add classes of grades {self.grade} and {other.grade}")

    def __add__(self, other):
        self._same_grade(other)
        t = dict(self.terms)
        for mu, c in other.terms.items():
            t[mu] = t.get(mu, 0) + c
        return ChowClass(t, grade=self.grade, check=False)

    def __neg__(self):
        return ChowClass({mu: -c for mu, c in self.terms.items()}, grade=self.grade, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ChowClass):
            return multiply(self, other)
        if int(other) != other:
            raise DomainError(f"non-integer scalar {other}")
        n = int(other)
        return ChowClass({mu: n * c for mu, c in self.terms.items()}, grade=self.grade, check=False)

    def __rmul__(self, other):
        return self * other

    def __str__(self):
        from .parsing import format_chow

        return format_chow(self)

    def __repr__(self):
        return f"ChowClass({str(self)!r}, grade={self.grade})"


def _budget(grade, extra):
    if grade + extra > TOP_GRADE:
        raise GradeError(f"grade {grade} + {extra} exceeds {TOP_GRADE}")


# -- Pieri rules ---------------------------------------------------------------

def pieri1(c):
    """Multiplication by tau_1: raise one part or append a part 1."""
    _budget(c.grade, 1)
    out = {}
    for mu, coeff in c.terms.items():
        for i in range(len(mu) + 1):
            if i < len(mu):
                nu = mu[:i] + (mu[i] + 1,) + mu[i + 1:]
            else:
                nu = mu + (1,)
            if is_strict(nu) and nu[0] <= MAX_PART:
                out[nu] = out.get(nu, 0) + coeff
    return ChowClass(out, grade=c.grade + 1, check=False)


def horizontal_strips(mu, p, max_part=MAX_PART):
    """Strict nu with |nu/mu| = p and nu_1 >= mu_1 >= nu_2 >= mu_2 >= ..."""
    mu = tuple(mu)
    k = len(mu)
    out = []

    def rec(i, left, acc):
        if i == k + 1:
            if left == 0:
                nu = tuple(x for x in acc if x)
                if is_strict(nu):
                    out.append(nu)
            return
        low = mu[i] if i < k else 0
        high = max_part if i == 0 else mu[i - 1]
        for x in range(max(low, 0), high + 1):
            if x - low > left:
                break
            rec(i + 1, left - (x - low), acc + [x])

    rec(0, p, [])
    return out


def _shifted_cells(lam):
    return {(r, r + c) for r, part in enumerate(lam) for c in range(part)}


def _components(cells):
    cells = set(cells)
    n = 0
    while cells:
        n += 1
        stack = [cells.pop()]
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells:
                    cells.remove(nb)
                    stack.append(nb)
    return n


def _exp_shifted_components(mu, nu):
    """Edge-connected components of the shifted skew diagram, minus one."""
    return _components(_shifted_cells(nu) - _shifted_cells(mu)) - 1


def _exp_shifted_components_raw(mu, nu):
    return _components(_shifted_cells(nu) - _shifted_cells(mu))


def _exp_column_runs(mu, nu):
    """Maximal runs of occupied columns in the shifted skew diagram, minus one."""
    cols = sorted({c for _, c in _shifted_cells(nu) - _shifted_cells(mu)})
    runs = sum(1 for i, c in enumerate(cols) if i == 0 or cols[i - 1] != c - 1)
    return runs - 1


def _exp_column_runs_unshifted(mu, nu):
    """Columns i of the unshifted strip with no box in column i+1, minus one."""
    cols = set()
    for r, part in enumerate(nu):
        lo = mu[r] if r < len(mu) else 0
        cols.update(range(lo, part))
    return sum(1 for c in cols if c + 1 not in cols) - 1


PIERI_VARIANTS = {
    "shifted-components-minus-one": _exp_shifted_components,
    "shifted-components": _exp_shifted_components_raw,
    "shifted-column-runs-minus-one": _exp_column_runs,
    "unshifted-column-ends-minus-one": _exp_column_runs_unshifted,
}
PIERI_VARIANT = "shifted-components-minus-one"


def pieri_special(c, p, variant=None):
    """Multiplication by the special class tau_p.

    Coefficient of tau_nu in tau_mu * tau_p is 2^e(mu, nu) for every shifted
    horizontal strip nu/mu of size p, with e given by the selected variant.
    """
    if not 1 <= p <= MAX_PART:
        raise DomainError(f"special class index {p} outside 1..{MAX_PART}")
    _budget(c.grade, p)
    exponent = PIERI_VARIANTS[variant or PIERI_VARIANT]
    out = {}
    for mu, coeff in c.terms.items():
        for nu in horizontal_strips(mu, p):
            e = exponent(mu, nu)
            if e < 0:
                raise OracleIntegrityError(f"negative Pieri exponent for {nu}/{mu}")
            out[nu] = out.get(nu, 0) + coeff * 2 ** e
    return ChowClass(out, grade=c.grade + p, check=False)


def calibrate_pieri(variants=None):
    """Which exponent variants agree with the oracle on every special product."""
    from .schurq import product_oracle

    survivors = []
    for name in variants or PIERI_VARIANTS:
        ok = True
        for mu in schubert_partitions():
            for p in range(1, MAX_PART + 1):
                if sum(mu) + p > TOP_GRADE:
                    continue
                if pieri_special(ChowClass.schubert(mu), p, variant=name) != product_oracle(mu, (p,)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            survivors.append(name)
    return survivors


# -- products ------------------------------------------------------------------

CROSS_CHECK = True


@lru_cache(maxsize=None)
def _oracle_pair(mu, nu):
    from .schurq import product_oracle

    return product_oracle(mu, nu)


def multiply(x, y):
    """Product in the Chow ring (oracle route, Pieri cross-check for specials)."""
    _budget(x.grade, y.grade)
    grade = x.grade + y.grade
    special = len(y.terms) == 1 and len(next(iter(y.terms))) == 1
    out = {}
    for mu, a in x.terms.items():
        for nu, b in y.terms.items():
            for lam, c in _oracle_pair(mu, nu).terms.items():
                out[lam] = out.get(lam, 0) + a * b * c
    result = ChowClass(out, grade=grade, check=False)
    if CROSS_CHECK and special:
        (nu, b), = y.terms.items()
        via_pieri = pieri_special(x, nu[0]) * b
        if via_pieri != result:
            raise OracleIntegrityError(f"Pieri and oracle disagree on ({x}) * ({y})")
    return result


@lru_cache(maxsize=None)
def _pieri_pair(mu, nu):
    """tau_mu * tau_nu computed from Pieri rules alone, as {lambda: Fraction}."""
    if sum(mu) + sum(nu) > TOP_GRADE:
        return {}
    if not nu:
        return {mu: Fraction(1)}
    if len(nu) == 1:
        return {k: Fraction(v) for k, v in pieri_special(ChowClass.schubert(mu), nu[0]).terms.items()}
    # tau_{nu_1} * tau_{nu'} = c tau_nu + (terms with larger first part)
    head, tail = nu[0], nu[1:]
    expansion = pieri_special(ChowClass.schubert(tail), head).terms
    lead = expansion.get(nu)
    if not lead:
        raise OracleIntegrityError(f"{nu} missing from tau_{head} * tau_{tail}")
    acc = {}
    for lam, c in _pieri_pair(mu, tail).items():
        for k, v in pieri_special(ChowClass.schubert(lam), head).terms.items():
            acc[k] = acc.get(k, 0) + c * v
    for lam, c in expansion.items():
        if lam == nu:
            continue
        if lam[0] <= nu[0]:
            raise OracleIntegrityError(f"recursion not well founded at {lam} for {nu}")
        for k, v in _pieri_pair(mu, lam).items():
            acc[k] = acc.get(k, 0) - c * v
    return {k: Fraction(v, lead) for k, v in acc.items() if v}


def pieri_product(x, y):
    """Product computed purely by Pieri rules (independent of the oracle)."""
    _budget(x.grade, y.grade)
    out = {}
    for mu, a in x.terms.items():
        for nu, b in y.terms.items():
            for lam, c in _pieri_pair(mu, nu).items():
                out[lam] = out.get(lam, 0) + a * b * c
    for lam, c in out.items():
        if c.denominator != 1:
            raise OracleIntegrityError(f"non-integral Pieri coefficient {c} at {lam}")
    return ChowClass(out, grade=x.grade + y.grade, check=False)


def hyperplane_power(c, n):
    """c * tau_1^n by n successive applications of pieri1."""
    for _ in range(n):
        c = pieri1(c)
    return c


def integrate(c):
    if c.grade != TOP_GRADE:
        raise GradeError(f"can only integrate classes of grade {TOP_GRADE}, got {c.grade}")
    return c.coefficient(STAIRCASE)


# -- the double Cayley Grassmannian ---------------------------------------------

DG_PARTITIONS = ((6, 1), (5, 2), (4, 3), (4, 2, 1))


def class_DG():
    return ChowClass({mu: 1 for mu in DG_PARTITIONS})


def special_polynomial_DG():
    """2 t1 t3^2 + 2 t1^2 t5 - 6 t1^4 t3 + 3 t1^7, evaluated in the ring."""
    t = {p: ChowClass.schubert((p,)) for p in range(1, MAX_PART + 1)}

    def power(x, n):
        out = ChowClass.unit()
        for _ in range(n):
            out = multiply(out, x)
        return out

    return (multiply(t[1], power(t[3], 2)) * 2
            + multiply(power(t[1], 2), t[5]) * 2
            - multiply(power(t[1], 4), t[3]) * 6
            + power(t[1], 7) * 3)


def chern_class_U(i, sign):
    """c_i of the tautological bundle under the convention c_i = sign^i * 2 tau_i."""
    if i == 0:
        return ChowClass.unit()
    if i > MAX_PART:
        return ChowClass.zero(grade=i)
    return ChowClass.schubert((i,)) * (2 * sign ** i)


def chern_top_twist(sign):
    """c_7(U x L) = sum_i c_i(U) c_1(L)^(7-i), with c_1(L) = tau_1."""
    total = ChowClass.zero(grade=7)
    for i in range(8):
        total = total + hyperplane_power(chern_class_U(i, sign), 7 - i)
    return total


CHERN_SIGNS = {"c_i(U) = (-1)^i 2 tau_i": -1, "c_i(U) = 2 tau_i": 1}
CHERN_CONVENTION = "c_i(U) = (-1)^i 2 tau_i"


def chern_expansion_check():
    """Return (survivor labels, per-convention classes); raises if none or the identity fails."""
    target = class_DG()
    results = {label: chern_top_twist(s) for label, s in CHERN_SIGNS.items()}
    survivors = [label for label, c in results.items() if c == target]
    if not survivors:
        raise CheckFailure("no Chern convention reproduces the class of DG")
    if special_polynomial_DG() != target:
        raise CheckFailure("special-class expression of [DG] fails")
    return survivors, results


def deg_DG():
    return integrate(hyperplane_power(class_DG(), 14))


def dg_integral(mu, hyperplane):
    """Integral over DG of tau_mu times h^hyperplane."""
    c = multiply(class_DG(), ChowClass.schubert(mu))
    return integrate(hyperplane_power(c, hyperplane))
