"""Exact dense matrices over fields, polynomial rings and rational functions.

Field-valued algorithms (row reduction, null spaces, solving) need ``K`` to
be a field.  Rank and determinant use fraction-free Bareiss elimination and
work over any exact integral domain with an ``exquo`` method; over K(x) the
denominators are cleared row by row before eliminating.
"""

from __future__ import annotations

from itertools import combinations

from .errors import SingularInput, ValidationError
from .poly import BiPoly, BiPolyRing, Poly, PolyRing, RatFun, RatFunField, poly_gcd, poly_lcm


class Matrix:
    __slots__ = ("rows", "K", "nrows", "ncols")

    def __init__(self, rows, K, ncols: int | None = None):
        self.rows = tuple(tuple(K(v) for v in r) for r in rows)
        self.K = K
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValidationError("ragged matrix")
        else:
            self.ncols = ncols or 0

    @classmethod
    def zeros(cls, m: int, n: int, K):
        return cls([[K.zero] * n for _ in range(m)], K, ncols=n)

    @classmethod
    def identity(cls, n: int, K):
        return cls([[K.one if i == j else K.zero for j in range(n)] for i in range(n)], K, ncols=n)

    @classmethod
    def from_columns(cls, cols, K, nrows: int):
        cols = list(cols)
        if not cols:
            return cls.zeros(nrows, 0, K)
        return cls([[c[i] for c in cols] for i in range(nrows)], K, ncols=len(cols))

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    @property
    def T(self) -> "Matrix":
        return Matrix([[r[j] for r in self.rows] for j in range(self.ncols)], self.K,
                      ncols=self.nrows)

    def transpose(self):
        return self.T

    def map(self, f, K=None) -> "Matrix":
        return Matrix([[f(v) for v in r] for r in self.rows], K or self.K, ncols=self.ncols)

    def submatrix(self, rows, cols) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], self.K, ncols=len(cols))

    def is_zero(self) -> bool:
        return not any(v for r in self.rows for v in r)

    def __add__(self, other):
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.K, ncols=self.ncols)

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.K, ncols=self.ncols)

    def __neg__(self):
        return self.map(lambda v: -v)

    def scale(self, s) -> "Matrix":
        return self.map(lambda v: s * v)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValidationError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = self.K.zero
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out, self.K, ncols=other.ncols)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValidationError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in r) for r in self.rows)
        return f"Matrix[{body}]"

    def tolist(self):
        return [list(r) for r in self.rows]

    # algorithms
    def rank(self) -> int:
        return mat_rank(self)

    def det(self):
        return det(self)

    def trace(self):
        acc = self.K.zero
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc


def hstack(*mats: Matrix) -> Matrix:
    K = mats[0].K
    n = mats[0].nrows
    return Matrix([sum((list(m.rows[i]) for m in mats), []) for i in range(n)], K,
                  ncols=sum(m.ncols for m in mats))


def vstack(*mats: Matrix) -> Matrix:
    K = mats[0].K
    return Matrix([r for m in mats for r in m.rows], K, ncols=mats[0].ncols)


def block_diag(mats, K) -> Matrix:
    n = sum(m.ncols for m in mats)
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            rows.append([K.zero] * off + list(r) + [K.zero] * (n - off - m.ncols))
        off += m.ncols
    return Matrix(rows, K, ncols=n)


# row reduction over a field ------------------------------------------------

def rref(rows, K):
    """Reduced row echelon form of a list of rows.  Returns (rows, pivots)."""
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = K.one / A[r][c]
        A[r] = [v * inv if v else v for v in A[r]]
        A[r][c] = K.one
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                Ai, Ar = A[i], A[r]
                for j in range(c, n):
                    if Ar[j]:
                        Ai[j] = Ai[j] - f * Ar[j]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(M: Matrix) -> list[list]:
    """Basis of {v : M v = 0}, one vector per free column (free entry = 1)."""
    K = M.K
    n = M.ncols
    R, pivots = rref(M.rows, K) if M.nrows else ([], [])
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [K.zero] * n
        v[f] = K.one
        for row, p in zip(R, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def solve(M: Matrix, b) -> list | None:
    """A particular solution of M v = b (free variables set to 0), or None."""
    K = M.K
    n = M.ncols
    aug = [list(r) + [bi] for r, bi in zip(M.rows, b)]
    if not aug:
        return [K.zero] * n
    R, pivots = rref(aug, K)
    if pivots and pivots[-1] == n:
        return None
    v = [K.zero] * n
    for row, p in zip(R, pivots):
        v[p] = row[n]
    return v


def inverse(M: Matrix) -> Matrix:
    if M.nrows != M.ncols:
        raise ValidationError("inverse of a non-square matrix")
    n = M.nrows
    K = M.K
    aug = [list(r) + [K.one if i == j else K.zero for j in range(n)] for i, r in enumerate(M.rows)]
    R, pivots = rref(aug, K)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularInput("matrix is singular")
    return Matrix([row[n:] for row in R], K, ncols=n)


# fraction-free elimination -------------------------------------------------

def _clear_denominators(M: Matrix):
    """Rows of a K(x) matrix scaled to polynomial rows over K[x].

    Returns (rows, ring, dens) with row i multiplied by dens[i].
    """
    ring = PolyRing(M.K.ground)
    rows, dens = [], []
    for r in M.rows:
        den = ring.one
        for v in r:
            if v and v.den.degree > 0:
                den = poly_lcm(den, v.den)
        rows.append([(v.num * (den // v.den)) if v else ring.zero for v in r])
        dens.append(den)
    return rows, ring, dens


def bareiss(rows, K):
    """Fraction-free echelon form; returns (rank, last pivot, sign)."""
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    prev = K.one
    sign = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            sign = -sign
        p = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            for j in range(c + 1, n):
                v = p * A[i][j]
                if a and A[r][j]:
                    v = v - a * A[r][j]
                A[i][j] = K.exquo(v, prev) if v else v
            A[i][c] = K.zero
        prev = p
        r += 1
    return r, prev, sign


def mat_rank(M: Matrix) -> int:
    if not M.nrows or not M.ncols:
        return 0
    if isinstance(M.K, RatFunField):
        rows, ring, _ = _clear_denominators(M)
        return bareiss(rows, ring)[0]
    return bareiss(M.rows, M.K)[0]


def det(M: Matrix):
    if M.nrows != M.ncols:
        raise ValidationError("determinant of a non-square matrix")
    K = M.K
    if M.nrows == 0:
        return K.one
    if isinstance(K, RatFunField):
        rows, ring, dens = _clear_denominators(M)
        rk, last, sign = bareiss(rows, ring)
        if rk < M.nrows:
            return K.zero
        scale = ring.one
        for d in dens:
            scale = scale * d
        return RatFun(last * sign, scale)
    rk, last, sign = bareiss(M.rows, K)
    if rk < M.nrows:
        return K.zero
    return last if sign == 1 else -last


def minors(M: Matrix, k: int):
    """Yield (row_idx, col_idx, det) for every k x k minor."""
    for rows in combinations(range(M.nrows), k):
        for cols in combinations(range(M.ncols), k):
            yield rows, cols, det(M.submatrix(rows, cols))


def solve_left_inverse(C: Matrix) -> Matrix | None:
    """D with D @ C = I when C (c1 x c0) has full column rank, else None.

    D inverts a maximal independent set of rows of C and is zero elsewhere.
    """
    c1, c0 = C.shape
    K = C.K
    if c0 == 0:
        return Matrix.zeros(0, c1, K)
    if c1 < c0 or mat_rank(C) < c0:
        return None
    _, rows = rref(C.T.rows, K)
    sub = C.submatrix(rows, range(c0))
    inv = inverse(sub)
    D = [[K.zero] * c1 for _ in range(c0)]
    for k, r in enumerate(rows):
        for i in range(c0):
            D[i][r] = inv.rows[i][k]
    D = Matrix(D, K, ncols=c1)
    if D @ C != Matrix.identity(c0, K):
        raise ArithmeticError("left inverse failed verification")
    return D


def evaluate(M: Matrix, lam) -> Matrix:
    """Entrywise evaluation of a K(x) or K[x] matrix at a ground-field point."""
    ground = M.K.ground
    return M.map(lambda v: v(lam) if v else ground.zero, ground)


# Hermite triangularization over k(y)[x] ---------------------------------

def bipoly_to_kyx(b: BiPoly, Ky: RatFunField) -> Poly:
    """View c(x, y) as a polynomial in x with coefficients in k(y)."""
    return Poly([RatFun(a) for a in b.x_coeffs()], Ky)


def kyx_to_bipoly(p: Poly) -> BiPoly:
    """Inverse of bipoly_to_kyx; every coefficient must be a polynomial in y."""
    K = p.K.ground
    terms = {}
    for i, r in enumerate(p.c):
        if not r.is_polynomial():
            raise ValidationError(f"coefficient {r} is not a polynomial in y")
        for j, v in enumerate(r.num.c):
            if v:
                terms[(i, j)] = v
    return BiPoly(terms, K)


# Entries of k[y][x] as lists of y-polynomials indexed by x-degree; the
# elimination runs fraction-free there and only the final monic step divides.

def _xtrim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _xcombine(a: list, l: Poly, b: list, t: Poly, shift: int) -> list:
    """l * a - t * x^shift * b."""
    out = [l * v for v in a]
    out += [Poly((), l.K)] * max(0, len(b) + shift - len(out))
    for i, v in enumerate(b):
        if v:
            out[i + shift] = out[i + shift] - t * v
    return _xtrim(out)


def _row_content(row: list) -> Poly | None:
    g = None
    for entry in row:
        for v in entry:
            if v:
                g = v if g is None else poly_gcd(g, v)
                if g.degree == 0:
                    return None
    return g


def hermite_triangularize(C0: Matrix):
    """Unimodular A over k(y)[x] with A @ C0 upper triangular.

    C0 is a square matrix of BiPoly entries.  Pivoting takes the entry of
    lowest x-degree in the current column (ties by row index) and clears the
    rest of the column with Euclidean row operations; each diagonal entry is
    then made monic in x.  Returns ``(A, detA, g)`` where A has entries in
    k(y)[x], ``detA`` lies in k(y) and every k(y) coefficient of A lies in
    k[y]_g.
    """
    n = C0.nrows
    if C0.ncols != n:
        raise ValidationError("hermite_triangularize needs a square matrix")
    ground = C0.K.ground
    Ky = RatFunField(ground)
    ring = PolyRing(Ky)
    one_y = Poly.const(1, ground)
    # row i is M[i] + A[i]: n entries of the matrix, then n of the transform
    rows = [[_xtrim(list(v.x_coeffs())) for v in r] + [[one_y] if i == j else [] for j in range(n)]
            for i, r in enumerate(C0.rows)]
    det_a = Ky.one
    for k in range(n):
        while True:
            live = [i for i in range(k, n) if rows[i][k]]
            if not live:
                raise SingularInput("determinant of C0 vanishes")
            piv = min(live, key=lambda i: (len(rows[i][k]), i))
            if piv != k:
                rows[k], rows[piv] = rows[piv], rows[k]
                det_a = -det_a
            rest = [i for i in range(k + 1, n) if rows[i][k]]
            if not rest:
                break
            lead = rows[k][k]
            for i in rest:
                # pseudo-remainder of rows[i][k] by the pivot, one x-degree at a time
                while rows[i][k] and len(rows[i][k]) >= len(lead):
                    t = rows[i][k][-1]
                    g = poly_gcd(lead[-1], t)
                    l, t = lead[-1] // g, t // g
                    shift = len(rows[i][k]) - len(lead)
                    rows[i] = [_xcombine(a, l, b, t, shift) for a, b in zip(rows[i], rows[k])]
                    det_a = det_a * RatFun(l)
                    c = _row_content(rows[i])
                    if c is not None:
                        rows[i] = [[v // c for v in e] for e in rows[i]]
                        det_a = det_a / RatFun(c)
    zero_y = Poly((), ground)
    C = [[_xtrim(list(v.x_coeffs())) for v in r] for r in C0.rows]
    for i in range(n):
        for j in range(i + 1):
            acc = []
            for k in range(n):
                a, c = rows[i][n + k], C[k][j]
                if not a or not c:
                    continue
                prod = [zero_y] * (len(a) + len(c) - 1)
                for s, u in enumerate(a):
                    for t, w in enumerate(c):
                        prod[s + t] = prod[s + t] + u * w
                acc = _xcombine(acc, one_y, prod, -one_y, 0)
            if acc != rows[i][j] or (j < i and acc) or (j == i and not acc):
                raise ArithmeticError("hermite_triangularize failed verification")
    A, g = [], Poly.const(1, ground)
    for k in range(n):
        lead = rows[k][k][-1]
        g = poly_lcm(g, lead)
        det_a = det_a / RatFun(lead)
        A.append([Poly([RatFun(v, lead) for v in e], Ky) for e in rows[k][n:]])
    Am = Matrix(A, ring, ncols=n)
    g = poly_lcm(g, det_a.num)
    g = poly_lcm(g, det_a.den)
    return Am, det_a, g
