"""Exact linear algebra over the rationals.

Matrices are plain lists of rows; entries are anything ``Fraction`` accepts.
Nothing here ever touches floating point.
"""

from fractions import Fraction


def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols=None):
    """Reduced row-echelon form.

    Returns ``(reduced, pivots)`` where ``reduced`` holds only the nonzero
    rows and ``pivots`` lists the pivot column of each of them.
    """
    m = _as_fraction_rows(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        if inv != 1:
            m[r] = [x * inv for x in m[r]]
        pr = m[r]
        support = [j for j in range(c, ncols) if pr[j]]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    for j in support:
                        row[j] -= f * pr[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of ``A x = rhs``, or ``None`` when inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def inverse(rows):
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def determinant(rows):
    m = _as_fraction_rows(rows)
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


class Subspace:
    """A linear subspace of Q^n kept as its reduced row-echelon basis.

    Two subspaces are equal exactly when their bases coincide.
    """

    __slots__ = ("n", "basis")

    def __init__(self, vectors, n):
        self.n = n
        vecs = [list(v) for v in vectors]
        if any(len(v) != n for v in vecs):
            raise ValueError(f"vectors must have length {n}")
        red, _ = rref(vecs, n) if vecs else ([], [])
        self.basis = tuple(tuple(row) for row in red)

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n})"

    def contains(self, v):
        v = [Fraction(x) for x in v]
        if not any(v):
            return True
        return rank(list(self.basis) + [v], self.n) == self.dim

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other):
        return Subspace(list(self.basis) + list(other.basis), self.n)

    def intersect(self, other):
        if self.dim == 0 or other.dim == 0:
            return Subspace([], self.n)
        # solve sum a_i u_i - sum b_j w_j = 0 coordinate-wise
        k = self.dim
        cols = list(self.basis) + [[-x for x in w] for w in other.basis]
        system = [[col[c] for col in cols] for c in range(self.n)]
        coeffs = nullspace(system, len(cols))
        vecs = []
        for a in coeffs:
            v = [Fraction(0)] * self.n
            for ai, u in zip(a[:k], self.basis):
                if ai:
                    v = [x + ai * y for x, y in zip(v, u)]
            vecs.append(v)
        return Subspace(vecs, self.n)
