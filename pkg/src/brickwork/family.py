"""One-parameter families M(lambda) cut out of a realization over k[x]_h.

A realization is a representation whose matrices have entries in the
localized ring k[x]_h.  Evaluating at a point lambda with h(lambda) != 0 gives
the family member M(lambda); reading the same matrices over k(x) gives the
generic module.  ``theorem_verdict`` compares "generic brick" against "brick
at the sampled points".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice

from .algebra import Algebra, Representation
from .errors import OutsideDh, ValidationError, ZeroModule
from .linalg import Matrix
from .modules import end_dimension
from .poly import LocalizedRing, Poly, RatFun, RatFunField

CONSISTENT = "CONSISTENT"
INCONSISTENT = "INCONSISTENT"


class Realization:
    def __init__(self, alg: Algebra, h: Poly, dims: dict, maps: dict):
        self.alg = alg
        self.gamma = LocalizedRing(h)
        self.field = RatFunField(alg.K)
        self.dims = {v: int(dims.get(v, 0)) for v in alg.vertices}
        if not any(self.dims.values()):
            raise ZeroModule("realization has rank 0 at every vertex")
        self.maps = {}
        for a in alg.quiver.arrows:
            M = maps.get(a.name)
            if M is None:
                M = Matrix.zeros(self.dims[a.target], self.dims[a.source], self.field)
            M = M if isinstance(M, Matrix) else Matrix(M, self.field, ncols=self.dims[a.source])
            M = Matrix(M.rows, self.field, ncols=M.ncols)
            for r in M.rows:
                for e in r:
                    if not self.gamma.contains(e):
                        raise ValidationError(f"entry {e} of {a.name} is not in k[x]_h")
            self.maps[a.name] = M
        # Relations must hold over k(x); Representation checks shapes and relations.
        self._generic = Representation(alg, self.dims, self.maps, self.field)

    @property
    def h(self) -> Poly:
        return self.gamma.h

    @property
    def rank(self) -> int:
        return sum(self.dims.values())

    def is_constant(self) -> bool:
        return all(e.is_constant() for M in self.maps.values() for r in M.rows for e in r)

    def direct_sum(self, other: "Realization") -> "Realization":
        g = self._generic.direct_sum(other._generic)
        return Realization(self.alg, self.h * other.h, g.dims, g.maps)


def specialize(M: Realization, lam) -> Representation:
    K = M.alg.K
    lam = K(lam)
    if not M.gamma.admits(lam):
        raise OutsideDh(f"h({lam}) = 0")
    maps = {name: A.map(lambda e: e(lam), K) for name, A in M.maps.items()}
    return Representation(M.alg, M.dims, maps, K)


def genericize(M: Realization) -> Representation:
    return M._generic


def sample_points(M: Realization, count: int) -> list:
    pts = (lam for lam in M.alg.K.sample_points() if M.gamma.admits(lam))
    return list(islice(pts, count))


@dataclass
class FamilyReport:
    sampled: list
    brick: list
    end_dims: list
    generic_end_dim: int
    constant_family: bool
    max_exceptions: int = 0
    verdict: str | None = None

    @property
    def generic_brick(self) -> bool:
        return self.generic_end_dim == 1

    @property
    def exceptions(self) -> list:
        return [lam for lam, b in zip(self.sampled, self.brick) if not b]

    @property
    def all_bricks(self) -> bool:
        """All sampled points are bricks, up to ``max_exceptions`` failures."""
        return len(self.exceptions) <= self.max_exceptions

    @property
    def some_brick(self) -> bool:
        return any(self.brick)

    @property
    def label(self) -> str | None:
        """Verdict tagged with the generic flag, e.g. ``CONSISTENT-positive``."""
        if self.verdict is None:
            return None
        return f"{self.verdict}-{'positive' if self.generic_brick else 'negative'}"

    def summary(self) -> str:
        n = len(self.sampled)
        lines = [
            f"sampled {n} points in D(h): {sum(self.brick)}/{n} bricks",
            f"generic End dimension over k(x): {self.generic_end_dim}",
        ]
        if self.constant_family:
            lines.append("constant family: every member is the same module")
        if self.verdict:
            lines.append(f"verdict: {self.label}")
        return "\n".join(lines)


def brick_scan(M: Realization, count: int, max_exceptions: int = 0) -> FamilyReport:
    if count < 1:
        raise ValidationError("count must be at least 1")
    pts = sample_points(M, count)
    end_dims = [end_dimension(specialize(M, lam)) for lam in pts]
    return FamilyReport(
        sampled=pts,
        brick=[d == 1 for d in end_dims],
        end_dims=end_dims,
        generic_end_dim=end_dimension(genericize(M)),
        constant_family=M.is_constant(),
        max_exceptions=max_exceptions,
    )


def theorem_verdict(M: Realization, count: int, max_exceptions: int = 0) -> FamilyReport:
    """CONSISTENT iff the generic brick flag equals the all-sampled flag."""
    report = brick_scan(M, count, max_exceptions)
    report.verdict = CONSISTENT if report.generic_brick == report.all_bricks else INCONSISTENT
    return report


def ratfun_matrix(rows, K) -> Matrix:
    F = RatFunField(K)
    return Matrix([[e if isinstance(e, RatFun) else F(e) for e in r] for r in rows], F,
                  ncols=len(rows[0]) if rows else 0)
