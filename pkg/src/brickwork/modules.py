"""Hom spaces, endomorphism algebras and brick tests for representations."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Representation
from .errors import ScalarMismatch, UnsupportedCharacteristic, ValidationError, ZeroModule
from .linalg import Matrix, nullspace, solve


@dataclass
class HomBasis:
    source: Representation
    target: Representation
    basis: list  # list of {vertex: Matrix}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def coordinates(self, f: dict) -> list | None:
        """Coordinates of f in this basis, or None when f is not in the span."""
        K = self.source.K
        cols = [_flatten(b, self.source, self.target) for b in self.basis]
        n = len(_flatten(f, self.source, self.target))
        M = Matrix.from_columns(cols, K, n) if cols else Matrix.zeros(n, 0, K)
        return solve(M, _flatten(f, self.source, self.target))


def _layout(X: Representation, Y: Representation):
    offsets = {}
    pos = 0
    for v in X.alg.vertices:
        offsets[v] = pos
        pos += Y.dims[v] * X.dims[v]
    return offsets, pos


def _flatten(f: dict, X: Representation, Y: Representation) -> list:
    out = []
    for v in X.alg.vertices:
        for r in f[v].rows:
            out.extend(r)
    return out


def hom_basis(X: Representation, Y: Representation) -> HomBasis:
    """Basis of Hom(X, Y) as the solutions of f_t X_a = Y_a f_s."""
    if X.alg is not Y.alg:
        raise ValidationError("representations of different algebras")
    if X.K != Y.K:
        raise ScalarMismatch(f"scalar domains differ: {X.K!r} vs {Y.K!r}")
    K = X.K
    offsets, n = _layout(X, Y)
    rows = []
    for a in X.alg.quiver.arrows:
        s, t = a.source, a.target
        XA, YA = X.maps[a.name], Y.maps[a.name]
        for i in range(Y.dims[t]):
            for j in range(X.dims[s]):
                row = [K.zero] * n
                # (f_t X_a)[i, j]
                for k in range(X.dims[t]):
                    c = XA.rows[k][j]
                    if c:
                        idx = offsets[t] + i * X.dims[t] + k
                        row[idx] = row[idx] + c
                # -(Y_a f_s)[i, j]
                for k in range(Y.dims[s]):
                    c = YA.rows[i][k]
                    if c:
                        idx = offsets[s] + k * X.dims[s] + j
                        row[idx] = row[idx] - c
                if any(row):
                    rows.append(row)
    M = Matrix(rows, K, ncols=n) if rows else Matrix.zeros(0, n, K)
    basis = []
    for vec in nullspace(M):
        f = {}
        for v in X.alg.vertices:
            r, c = Y.dims[v], X.dims[v]
            o = offsets[v]
            f[v] = Matrix([vec[o + i * c:o + (i + 1) * c] for i in range(r)], K, ncols=c)
        basis.append(f)
    return HomBasis(X, Y, basis)


def compose(g: dict, f: dict) -> dict:
    """g after f, vertexwise."""
    return {v: g[v] @ f[v] for v in f}


def is_brick(X: Representation) -> bool:
    if X.total_dim == 0:
        raise ZeroModule("brick test on the zero module")
    return hom_basis(X, X).dim == 1


def end_dimension(X: Representation) -> int:
    return hom_basis(X, X).dim


def trace_radical(ops: list, K) -> list:
    """Radical of the span of ``ops`` via the kernel of the trace form.

    Each op is a list of square blocks (one per vertex or summand) acting on a
    faithful module.  Valid in characteristic 0: an ideal on which the trace
    form vanishes consists of nilpotent operators.  Returns coefficient
    vectors in terms of ``ops``.
    """
    if K.characteristic:
        raise UnsupportedCharacteristic("trace-form radical needs characteristic 0")
    n = len(ops)
    T = [[K.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = K.zero
            for A, B in zip(ops[i], ops[j]):
                if A.nrows:
                    t = t + (A @ B).trace()
            T[i][j] = T[j][i] = t
    return nullspace(Matrix(T, K, ncols=n))


def _combine(ops, coeffs, K):
    out = None
    for c, op in zip(coeffs, ops):
        if not c:
            continue
        term = [A.scale(c) for A in op]
        out = term if out is None else [a + b for a, b in zip(out, term)]
    if out is None:
        out = [A.scale(K.zero) for A in ops[0]]
    return out


def _is_nilpotent(op, K) -> bool:
    for A in op:
        P = A
        for _ in range(max(A.nrows, 1)):
            P = P @ A
        if A.nrows and not P.is_zero():
            return False
    return True


@dataclass
class EndAlgebra:
    hom: HomBasis
    radical: list  # list of {vertex: Matrix}

    @property
    def dim(self) -> int:
        return self.hom.dim

    @property
    def is_local(self) -> bool:
        return self.hom.dim - len(self.radical) == 1


def end_algebra(X: Representation) -> EndAlgebra:
    H = hom_basis(X, X)
    return EndAlgebra(H, rad_end_basis(X, H))


def rad_end_basis(X: Representation, H: HomBasis | None = None) -> list:
    """Basis of rad End(X); each element is checked to be nilpotent."""
    K = X.K
    if K.characteristic:
        raise UnsupportedCharacteristic("rad End is only computed in characteristic 0")
    H = H or hom_basis(X, X)
    verts = X.alg.vertices
    ops = [[f[v] for v in verts] for f in H.basis]
    out = []
    for vec in trace_radical(ops, K):
        op = _combine(ops, vec, K)
        if not _is_nilpotent(op, K):
            raise ArithmeticError("trace-form radical element is not nilpotent")
        out.append(dict(zip(verts, op)))
    return out


def is_local_end(X: Representation) -> bool:
    return end_algebra(X).is_local
