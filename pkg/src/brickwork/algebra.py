"""Bound quiver algebras kQ/I and their finite-dimensional representations.

Paths follow the left-module convention.  A path is stored as a tuple of
arrow names in the order they are traversed, so a path from t to s lies in
e_s Lambda e_t.  Products are written right to left: ``p * q`` traverses q
first and then p, and is zero unless q ends where p starts.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import NotAdmissible, ScalarMismatch, ValidationError, WrongIdempotents
from .fields import GroundField
from .linalg import Matrix, rref
from .parsing import _Parser
from .poly import RatFun, RatFunField, ground_of


@dataclass(frozen=True)
class Arrow:
    name: str
    source: object
    target: object


class Path(NamedTuple):
    source: object
    target: object
    arrows: tuple

    @property
    def length(self) -> int:
        return len(self.arrows)

    def then(self, arrow: Arrow) -> "Path":
        return Path(self.source, arrow.target, self.arrows + (arrow.name,))


class Quiver:
    def __init__(self, vertices: Iterable, arrows: Iterable):
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValidationError("duplicate vertex ids")
        self.arrows: list[Arrow] = []
        names = set()
        for a in arrows:
            a = a if isinstance(a, Arrow) else Arrow(*a)
            if a.name in names:
                raise ValidationError(f"duplicate arrow name {a.name!r}")
            if a.source not in self.vertices or a.target not in self.vertices:
                raise ValidationError(f"arrow {a.name!r} has an unknown endpoint")
            names.add(a.name)
            self.arrows.append(a)
        self.arrow = {a.name: a for a in self.arrows}

    def arrows_from(self, v) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def trivial_path(self, v) -> Path:
        return Path(v, v, ())

    def path(self, names) -> Path:
        names = tuple(names)
        if not names:
            raise ValidationError("empty arrow list does not name a path")
        try:
            arrows = [self.arrow[n] for n in names]
        except KeyError as exc:
            raise ValidationError(f"unknown arrow {exc.args[0]!r}") from None
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise ValidationError(f"arrows {a.name!r} and {b.name!r} are not composable")
        return Path(arrows[0].source, arrows[-1].target, names)

    def paths_up_to(self, max_len: int) -> list[Path]:
        """All paths of length <= max_len, grouped by length."""
        layer = [self.trivial_path(v) for v in self.vertices]
        out = list(layer)
        for _ in range(max_len):
            layer = [p.then(a) for p in layer for a in self.arrows_from(p.target)]
            out.extend(layer)
        return out

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for a in self.arrows:
                for u, w in ((a.source, a.target), (a.target, a.source)):
                    if u == v and w not in seen:
                        seen.add(w)
                        stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass
class AlgebraPresentation:
    quiver: Quiver
    relations: list = field(default_factory=list)   # list of [(coef, Path)]
    nilpotency_bound: int = 2
    field: GroundField = None


def _concat(p: Path, q: Path) -> Path | None:
    """p * q: traverse q then p."""
    if q.target != p.source:
        return None
    return Path(q.source, p.target, q.arrows + p.arrows)


class Algebra:
    """A basis of kQ/I by standard paths, with structure constants.

    Build instances with ``build_algebra``.
    """

    def __init__(self, presentation: AlgebraPresentation, basis, normal_forms, table):
        self.presentation = presentation
        self.quiver = presentation.quiver
        self.K = presentation.field
        self.m = presentation.nilpotency_bound
        self.basis: list[Path] = basis
        self.index = {p: i for i, p in enumerate(basis)}
        self._nf = normal_forms            # Path -> {basis index: coef}
        self._table = table                # (i, j) -> [(k, coef)]
        self._block: dict = {}
        for i, p in enumerate(basis):
            self._block.setdefault((p.target, p.source), []).append(i)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertices(self):
        return self.quiver.vertices

    def block(self, s, t) -> list[int]:
        """Basis indices of e_s Lambda e_t (paths from t to s)."""
        return self._block.get((s, t), [])

    def idempotent(self, v, K=None) -> "AlgebraElement":
        return AlgebraElement(self, {self.index[self.quiver.trivial_path(v)]: (K or self.K).one}, K)

    def arrow(self, name, K=None) -> "AlgebraElement":
        return self.path_element(self.quiver.path([name]), K)

    def path_element(self, path: Path, K=None) -> "AlgebraElement":
        K = K or self.K
        nf = self._nf.get(path)
        if nf is None:
            if path.length < self.m:
                raise ValidationError(f"unknown path {path}")
            nf = {}
        return AlgebraElement(self, {i: K(c) for i, c in nf.items()}, K)

    def zero(self, K=None) -> "AlgebraElement":
        return AlgebraElement(self, {}, K or self.K)

    def basis_element(self, i, K=None) -> "AlgebraElement":
        K = K or self.K
        return AlgebraElement(self, {i: K.one}, K)

    def mul_basis(self, i: int, j: int):
        return self._table.get((i, j), ())

    def rad_basis(self) -> list[int]:
        return [i for i, p in enumerate(self.basis) if p.length >= 1]

    def name(self, i: int) -> str:
        p = self.basis[i]
        if not p.arrows:
            return f"e{p.source}"
        return "*".join(reversed(p.arrows))

    def parse_element(self, text, K=None) -> "AlgebraElement":
        """Parse e.g. ``"2*b*a - 1/2*e1"``; ``b*a`` traverses a first."""
        K = K or self.K
        env = {f"e{v}": self.idempotent(v, K) for v in self.vertices}
        for a in self.quiver.arrows:
            env[a.name] = self.arrow(a.name, K)
        if isinstance(K, RatFunField) and "x" not in env:
            env["x"] = RatFun.x(K.ground)
        text = str(text)
        value = _Parser(text, lambda n: K(n), env).parse()
        if not isinstance(value, AlgebraElement):
            value = AlgebraElement(self, {}, K) if not value else self.one(K) * value
        return value

    def one(self, K=None) -> "AlgebraElement":
        K = K or self.K
        return AlgebraElement(self, {self.index[self.quiver.trivial_path(v)]: K.one
                                     for v in self.vertices}, K)


def build_algebra(p: AlgebraPresentation) -> Algebra:
    """Linear algebra on paths of length < m modulo the span of p*r*q."""
    Q = p.quiver
    K = p.field
    m = p.nilpotency_bound
    if m < 2:
        raise NotAdmissible("nilpotency bound must be at least 2")
    if not Q.is_connected():
        warnings.warn("quiver is not connected", stacklevel=2)
    relations = []
    for rel in p.relations:
        terms = [(K(c), path) for c, path in rel if K(c)]
        if not terms:
            continue
        for _, path in terms:
            if path.length < 2:
                raise NotAdmissible(f"relation term {path.arrows} has length < 2")
        ends = {(path.source, path.target) for _, path in terms}
        if len(ends) != 1:
            raise NotAdmissible("relation terms do not share source and target")
        relations.append(terms)

    paths = Q.paths_up_to(m - 1)
    # leading paths are the longest ones, so the surviving basis is short paths
    order = sorted(paths, key=lambda q: (-q.length, str(q.source), str(q.target), q.arrows))
    col = {q: i for i, q in enumerate(order)}
    gens = []
    for rel in relations:
        shortest = min(path.length for _, path in rel)
        for left in paths:
            for right in paths:
                if left.length + right.length + shortest >= m:
                    continue
                vec = {}
                for c, path in rel:
                    a = _concat(path, right)
                    b = a and _concat(left, a)
                    if b is not None and b.length < m:
                        vec[col[b]] = vec.get(col[b], K.zero) + c
                vec = {k: v for k, v in vec.items() if v}
                if vec:
                    gens.append(vec)
    if gens:
        dense = [[g.get(i, K.zero) for i in range(len(order))] for g in gens]
        R, pivots = rref(dense, K)
    else:
        R, pivots = [], []
    pivset = set(pivots)
    survivors = [q for q in order if col[q] not in pivset]
    basis = sorted(survivors, key=lambda q: (q.length, Q.vertices.index(q.source),
                                              Q.vertices.index(q.target), q.arrows))
    bidx = {q: i for i, q in enumerate(basis)}
    nf = {}
    for q in basis:
        nf[q] = {bidx[q]: K.one}
    for row, pc in zip(R, pivots):
        q = order[pc]
        nf[q] = {bidx[order[j]]: -row[j] for j in range(len(order))
                 if j not in pivset and row[j]}
    table = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            prod = _concat(a, b)
            if prod is None or prod.length >= m:
                continue
            coords = nf[prod]
            if coords:
                table[(i, j)] = tuple(sorted(coords.items()))
    return Algebra(p, basis, nf, table)


class AlgebraElement:
    """Sparse coordinates in an algebra basis; scalars from ``K``."""

    __slots__ = ("alg", "coeffs", "K")

    def __init__(self, alg: Algebra, coeffs: dict, K=None):
        self.alg = alg
        self.K = K or alg.K
        self.coeffs = {i: c for i, c in coeffs.items() if c}

    def _check(self, other):
        if other.alg is not self.alg:
            raise ValidationError("elements of different algebras")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            if not other:
                return self
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out[i] + c if i in out else c
        return AlgebraElement(self.alg, out, self.K)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.alg, {i: -c for i, c in self.coeffs.items()}, self.K)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            out = {}
            for i, a in self.coeffs.items():
                for j, b in other.coeffs.items():
                    ab = a * b
                    for k, c in self.alg.mul_basis(i, j):
                        v = ab * c
                        out[k] = out[k] + v if k in out else v
            return AlgebraElement(self.alg, out, self.K)
        s = self.K(other)
        return AlgebraElement(self.alg, {i: c * s for i, c in self.coeffs.items()}, self.K)

    def __rmul__(self, other):
        s = self.K(other)
        return AlgebraElement(self.alg, {i: s * c for i, c in self.coeffs.items()}, self.K)

    def __truediv__(self, other):
        return self * (self.K.one / self.K(other))

    def __pow__(self, e: int):
        out = self.alg.one(self.K)
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.alg is other.alg and self.coeffs == other.coeffs
        return not other and not self.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def coordinate(self, i):
        return self.coeffs.get(i, self.K.zero)

    def in_block(self, s, t) -> bool:
        """True when the element lies in e_s Lambda e_t."""
        allowed = set(self.alg.block(s, t))
        return all(i in allowed for i in self.coeffs)

    def in_radical(self) -> bool:
        return all(self.alg.basis[i].length >= 1 for i in self.coeffs)

    def with_scalars(self, K) -> "AlgebraElement":
        return AlgebraElement(self.alg, {i: K(c) for i, c in self.coeffs.items()}, K)

    def __repr__(self):
        return f"AlgebraElement({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def format_element(a: AlgebraElement) -> str:
    from .poly import _format_terms
    items = [(a.coeffs[i], a.alg.name(i)) for i in sorted(a.coeffs)]
    return _format_terms(items)


# representations -----------------------------------------------------------

class Representation:
    """A representation of the bound quiver with matrices over ``K``.

    ``K`` is the ground field, or ``RatFunField`` for modules over
    Lambda tensor k(x).
    """

    def __init__(self, alg: Algebra, dims: dict, maps: dict, K=None, check: bool = True):
        self.alg = alg
        self.K = K or alg.K
        self.dims = {v: int(dims.get(v, 0)) for v in alg.vertices}
        self.maps = {}
        for a in alg.quiver.arrows:
            M = maps.get(a.name)
            if M is None:
                M = Matrix.zeros(self.dims[a.target], self.dims[a.source], self.K)
            if not isinstance(M, Matrix):
                M = Matrix(M, self.K, ncols=self.dims[a.source])
            if M.shape != (self.dims[a.target], self.dims[a.source]):
                raise ValidationError(
                    f"arrow {a.name!r}: matrix shape {M.shape} does not match dims "
                    f"({self.dims[a.target]}, {self.dims[a.source]})")
            if M.K != self.K:
                raise ScalarMismatch(f"arrow {a.name!r} has scalars {M.K!r}, expected {self.K!r}")
            self.maps[a.name] = M
        if check:
            self.check_relations()

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def path_matrix(self, path: Path) -> Matrix:
        M = Matrix.identity(self.dims[path.source], self.K)
        for name in path.arrows:
            M = self.maps[name] @ M
        return M

    def check_relations(self):
        pres = self.alg.presentation
        for rel in pres.relations:
            s, t = rel[0][1].source, rel[0][1].target
            acc = Matrix.zeros(self.dims[t], self.dims[s], self.K)
            for c, path in rel:
                acc = acc + self.path_matrix(path).scale(self.K(c))
            if not acc.is_zero():
                raise ValidationError("representation violates a relation")
        for path in self.alg.quiver.paths_up_to(self.alg.m):
            if path.length == self.alg.m and not self.path_matrix(path).is_zero():
                raise ValidationError(f"path {path.arrows} of length m acts nonzero")

    def direct_sum(self, other: "Representation") -> "Representation":
        from .linalg import block_diag
        maps = {a: block_diag([self.maps[a], other.maps[a]], self.K) for a in self.maps}
        dims = {v: self.dims[v] + other.dims[v] for v in self.dims}
        return Representation(self.alg, dims, maps, self.K, check=False)

    def base_change(self, K) -> "Representation":
        maps = {a: M.map(K, K) for a, M in self.maps.items()}
        return Representation(self.alg, self.dims, maps, K, check=False)

    def __repr__(self):
        return f"Representation(dims={self.dims})"


def projective_module(alg: Algebra, t, K=None) -> Representation:
    """Lambda e_t: the space at s has basis e_s Lambda e_t (paths t -> s)."""
    K = K or alg.K
    dims = {s: len(alg.block(s, t)) for s in alg.vertices}
    maps = {}
    for a in alg.quiver.arrows:
        src = alg.block(a.source, t)
        tgt = alg.block(a.target, t)
        pos = {k: r for r, k in enumerate(tgt)}
        arrow = alg.arrow(a.name, K)
        cols = []
        for j in src:
            img = arrow * alg.basis_element(j, K)
            col = [K.zero] * len(tgt)
            for k, c in img.coeffs.items():
                col[pos[k]] = c
            cols.append(col)
        maps[a.name] = Matrix.from_columns(cols, K, len(tgt))
    return Representation(alg, dims, maps, K, check=False)


def right_multiplication(alg: Algebra, a: AlgebraElement, s, t) -> dict:
    """Vertexwise matrices of rho_a: Lambda e_s -> Lambda e_t, x -> x*a.

    Requires a in e_s Lambda e_t.
    """
    if not a.in_block(s, t):
        raise WrongIdempotents(f"{a} is not in e_{s} Lambda e_{t}")
    K = a.K
    out = {}
    for v in alg.vertices:
        src = alg.block(v, s)
        tgt = alg.block(v, t)
        pos = {k: r for r, k in enumerate(tgt)}
        cols = []
        for j in src:
            img = alg.basis_element(j, K) * a
            col = [K.zero] * len(tgt)
            for k, c in img.coeffs.items():
                col[pos[k]] = c
            cols.append(col)
        out[v] = Matrix.from_columns(cols, K, len(tgt))
    return out


def is_rep_morphism(X: Representation, Y: Representation, f: dict) -> bool:
    for a in X.alg.quiver.arrows:
        if f[a.target] @ X.maps[a.name] != Y.maps[a.name] @ f[a.source]:
            return False
    return True


def scalar_domain(K):
    """Ground field or K(x) check used by module-level operations."""
    if isinstance(K, GroundField) or isinstance(K, RatFunField):
        return K
    raise ScalarMismatch(f"unsupported scalar domain {K!r}")


__all__ = [
    "Algebra", "AlgebraElement", "AlgebraPresentation", "Arrow", "Path", "Quiver",
    "Representation", "build_algebra", "format_element", "ground_of", "is_rep_morphism",
    "projective_module", "right_multiplication",
]
