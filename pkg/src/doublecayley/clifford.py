"""Exterior algebra of a 7-dimensional space E and its Clifford module structure.

Blades ``e_S`` are stored under the bitmask of ``S`` (bit ``i-1`` for ``e_i``).
The split quadratic space ``V14 = E + F`` acts on the exterior algebra by
left wedge with ``e_i`` and by contraction with ``f_i``.  Spinors in the
half-spin representation are the even elements (64 coordinates).

Sign conventions are fixed so that ``f_7 . z = -e_123 - e_456`` for the
canonical generic spinor; see :mod:`doublecayley.dg`.
"""

from fractions import Fraction
from itertools import combinations

from .errors import NotPureError, ParityError, ZeroSpinorError
from .linalg import Subspace, nullspace

N = 7
TOP = (1 << N) - 1


def mask_of(indices):
    m = 0
    for i in indices:
        if not 1 <= i <= N:
            raise ValueError(f"index {i} outside 1..{N}")
        bit = 1 << (i - 1)
        if m & bit:
            raise ValueError(f"repeated index {i}")
        m |= bit
    return m


def indices_of(mask):
    return tuple(i + 1 for i in range(N) if mask >> i & 1)


def degree_of(mask):
    return bin(mask).count("1")


def _below(mask, i):
    """Number of indices of ``mask`` strictly below ``i``."""
    return degree_of(mask & ((1 << (i - 1)) - 1))


def _wedge_sign(s, t):
    """Sign of e_S ^ e_T relative to e_{S union T} (S, T disjoint)."""
    n = 0
    for j in indices_of(t):
        # every index of S above j must be jumped over
        n += degree_of(s >> j)
    return -1 if n & 1 else 1


def _alpha_sign(k):
    # anti-involution twist on degree k: (-1)^(k(k-1)/2)
    return -1 if (k * (k - 1) // 2) & 1 else 1


class ExteriorElement:
    """Immutable exact element of the exterior algebra of E.

    >>> z = ExteriorElement.from_blades({(): 1, (1, 2, 3, 7): 1})
    >>> z
    ExteriorElement('1 + e1237')
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients=None):
        c = {}
        for m, v in (coefficients or {}).items():
            v = Fraction(v)
            if v:
                if not 0 <= m <= TOP:
                    raise ValueError(f"blade mask {m} out of range")
                c[m] = v
        self._c = c
        self._hash = None

    @classmethod
    def from_blades(cls, mapping):
        return cls({mask_of(k): v for k, v in mapping.items()})

    @classmethod
    def blade(cls, *indices, coefficient=1):
        return cls({mask_of(indices): coefficient})

    @classmethod
    def scalar(cls, value=1):
        return cls({0: value})

    @property
    def coefficients(self):
        return dict(self._c)

    def coefficient(self, indices=()):
        return self._c.get(mask_of(indices), Fraction(0))

    def items(self):
        """(mask, coefficient) pairs in increasing mask order."""
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    @property
    def parity(self):
        """0 for even, 1 for odd, ``None`` when mixed or zero."""
        ps = {degree_of(m) & 1 for m in self._c}
        return ps.pop() if len(ps) == 1 else None

    def is_even(self):
        return all(degree_of(m) % 2 == 0 for m in self._c)

    def is_odd(self):
        return all(degree_of(m) % 2 == 1 for m in self._c)

    def degrees(self):
        return sorted({degree_of(m) for m in self._c})

    def component(self, k):
        return ExteriorElement({m: v for m, v in self._c.items() if degree_of(m) == k})

    def __eq__(self, other):
        if isinstance(other, ExteriorElement):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other):
        c = dict(self._c)
        for m, v in other._c.items():
            c[m] = c.get(m, 0) + v
        return ExteriorElement(c)

    def __neg__(self):
        return ExteriorElement({m: -v for m, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return ExteriorElement({m: s * v for m, v in self._c.items()})

    __rmul__ = __mul__

    def wedge(self, other):
        c = {}
        for s, a in self._c.items():
            for t, b in other._c.items():
                if s & t:
                    continue
                m = s | t
                c[m] = c.get(m, 0) + _wedge_sign(s, t) * a * b
        return ExteriorElement(c)

    def __xor__(self, other):
        return self.wedge(other)

    def vector(self, masks=None):
        """Coordinate list over ``masks`` (default: all 128 blades)."""
        if masks is None:
            masks = range(TOP + 1)
        return [self._c.get(m, Fraction(0)) for m in masks]

    def __str__(self):
        from .parsing import format_spinor

        return format_spinor(self)

    def __repr__(self):
        return f"ExteriorElement({str(self)!r})"


EVEN_MASKS = tuple(m for m in range(TOP + 1) if degree_of(m) % 2 == 0)
ODD_MASKS = tuple(m for m in range(TOP + 1) if degree_of(m) % 2 == 1)


class Vector14:
    """``sum a_i e_i + sum b_i f_i`` in the split space V14."""

    __slots__ = ("a", "b")

    def __init__(self, a=(0,) * N, b=(0,) * N):
        if len(a) != N or len(b) != N:
            raise ValueError("Vector14 needs 7 + 7 coordinates")
        self.a = tuple(Fraction(x) for x in a)
        self.b = tuple(Fraction(x) for x in b)

    @classmethod
    def e(cls, i):
        a = [0] * N
        a[i - 1] = 1
        return cls(a=a)

    @classmethod
    def f(cls, i):
        b = [0] * N
        b[i - 1] = 1
        return cls(b=b)

    @classmethod
    def from_coords(cls, coords):
        coords = list(coords)
        return cls(coords[:N], coords[N:])

    @property
    def coords(self):
        return self.a + self.b

    def __add__(self, other):
        return Vector14([x + y for x, y in zip(self.a, other.a)],
                        [x + y for x, y in zip(self.b, other.b)])

    def __neg__(self):
        return Vector14([-x for x in self.a], [-x for x in self.b])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return Vector14([s * x for x in self.a], [s * x for x in self.b])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Vector14) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __str__(self):
        from .parsing import format_vector

        return format_vector(self)

    def __repr__(self):
        return f"Vector14({str(self)!r})"


BASIS14 = tuple([Vector14.e(i) for i in range(1, N + 1)] + [Vector14.f(i) for i in range(1, N + 1)])
BASIS14_NAMES = tuple([f"e{i}" for i in range(1, N + 1)] + [f"f{i}" for i in range(1, N + 1)])


def _e_wedge(i, mask):
    """(sign, new mask) for e_i ^ e_S, or None."""
    bit = 1 << (i - 1)
    if mask & bit:
        return None
    return (-1 if _below(mask, i) & 1 else 1), mask | bit


def _contract(i, mask):
    """(sign, new mask) for iota_i(e_S), or None."""
    bit = 1 << (i - 1)
    if not mask & bit:
        return None
    return (-1 if _below(mask, i) & 1 else 1), mask ^ bit


def clifford_mul(v, x):
    """Clifford action of a vector of V14 on an exterior element."""
    c = {}
    for i in range(1, N + 1):
        ai, bi = v.a[i - 1], v.b[i - 1]
        if not (ai or bi):
            continue
        for m, val in x._c.items():
            if ai:
                r = _e_wedge(i, m)
                if r:
                    c[r[1]] = c.get(r[1], 0) + r[0] * ai * val
            if bi:
                r = _contract(i, m)
                if r:
                    c[r[1]] = c.get(r[1], 0) + r[0] * bi * val
    return ExteriorElement(c)


def clifford_form_B(u, v):
    """Symmetric form with ``u.(v.x) + v.(u.x) = 2 B(u, v) x``."""
    return sum((x * y for x, y in zip(u.a, v.b)), Fraction(0)) / 2 + \
        sum((x * y for x, y in zip(u.b, v.a)), Fraction(0)) / 2


def spinor_form(x, y):
    """Top coefficient of alpha(x) ^ y, for arbitrary x and y.

    alpha multiplies the degree-k part by (-1)^(k(k-1)/2).  With this twist
    the form satisfies ``spinor_form(u.x, y) == spinor_form(x, u.y)``; if a
    downstream count (notably the 36 torus fixed points) ever disagrees, the
    twist is the first thing to re-examine.
    """
    total = Fraction(0)
    for s, a in x._c.items():
        t = TOP ^ s
        b = y._c.get(t)
        if b:
            total += _alpha_sign(degree_of(s)) * _wedge_sign(s, t) * a * b
    return total


def pairing(x, y):
    """Duality pairing between an odd element (dual half-spin) and an even one."""
    if not x.is_odd():
        raise ParityError("first argument of pairing must be odd")
    if not y.is_even():
        raise ParityError("second argument of pairing must be even")
    return spinor_form(x, y)


def span14(vectors):
    return Subspace([v.coords if isinstance(v, Vector14) else v for v in vectors], 2 * N)


def subspace_vectors(subspace):
    return [Vector14.from_coords(row) for row in subspace.basis]


E_SPAN = span14(BASIS14[:N])
F_SPAN = span14(BASIS14[N:])


def annihilator(x):
    """Kernel of ``v -> v.x`` inside V14."""
    if x.is_zero():
        raise ZeroSpinorError("annihilator of the zero spinor")
    images = [clifford_mul(v, x)._c for v in BASIS14]
    masks = sorted(set().union(*images))
    rows = [[img.get(m, 0) for img in images] for m in masks]
    return span14(nullspace(rows, 2 * N))


def is_isotropic(subspace):
    vecs = subspace_vectors(subspace)
    return all(clifford_form_B(u, v) == 0 for u in vecs for v in vecs)


def orthogonal_complement(subspace):
    """B-orthogonal of a subspace of V14."""
    rows = [[clifford_form_B(u, w) for w in BASIS14] for u in subspace_vectors(subspace)]
    return span14(nullspace(rows, 2 * N))


def is_pure(x):
    return annihilator(x).dim == N


def f_intersection_dim(x):
    ann = annihilator(x)
    if ann.dim != N:
        raise NotPureError(f"{x} is not a pure spinor")
    return ann.intersect(F_SPAN).dim


def blade_annihilator(indices):
    """Expected annihilator of a coordinate blade e_S."""
    s = set(indices)
    return span14([Vector14.e(i) for i in s] + [Vector14.f(j) for j in range(1, N + 1) if j not in s])


def all_blades(parity=None):
    out = []
    for k in range(N + 1):
        if parity is not None and k % 2 != parity:
            continue
        for idx in combinations(range(1, N + 1), k):
            out.append(idx)
    return out
