"""Seeded random generators for objects and morphisms used by tests and demos."""

from __future__ import annotations

import random

from .algebra import Algebra, AlgebraElement
from .linalg import Matrix, nullspace
from .p1 import P1Morphism, P1Object, ProjMap, _basis_maps, _linear_map_matrix, from_vector, hom_coords
from .parsing import dump_bipoly
from .poly import BiPoly, Poly, RatFun, RatFunField


def scalar_sampler(K, bound: int = 3, degree: int = 1):
    """Small random scalars; over K(x) these are polynomials of bounded degree."""
    if isinstance(K, RatFunField):
        F = K.ground

        def draw(rng):
            coeffs = [F(rng.randint(-bound, bound)) for _ in range(degree + 1)]
            return RatFun(Poly(coeffs, F), Poly.const(1, F))
        return draw
    return lambda rng: K(rng.randint(-bound, bound))


def random_element(alg: Algebra, s, t, rng, K=None, radical: bool = False) -> AlgebraElement:
    K = K or alg.K
    draw = scalar_sampler(K)
    coeffs = {}
    for k in alg.block(s, t):
        if radical and not alg.basis[k].arrows:
            continue
        coeffs[k] = draw(rng)
    return AlgebraElement(alg, coeffs, K)


def random_projmap(alg, src, tgt, rng, K=None, radical: bool = False) -> ProjMap:
    K = K or alg.K
    return ProjMap(alg, src, tgt,
                   [[random_element(alg, s, t, rng, K, radical) for s in src] for t in tgt], K,
                   check=False)


def random_object(alg: Algebra, rng: random.Random, K=None, max_summands: int = 2) -> P1Object:
    K = K or alg.K
    verts = list(alg.vertices)
    P1 = tuple(sorted(rng.choices(verts, k=rng.randint(0, max_summands)), key=verts.index))
    P2 = tuple(sorted(rng.choices(verts, k=rng.randint(1, max_summands)), key=verts.index))
    return P1Object(alg, P1, P2, random_projmap(alg, P1, P2, rng, K, radical=True), K)


def random_zero_coker_morphism(X: P1Object, Y: P1Object, rng: random.Random) -> P1Morphism:
    """u = (s o phi + k, phi' o s) with phi' o k = 0; Coker(u) = 0 by construction."""
    alg, K = X.alg, X.K
    draw = scalar_sampler(K)
    s = random_projmap(alg, X.P2, Y.P1, rng, K)
    coords, basis = _basis_maps(alg, X.P1, Y.P1, K)
    out = hom_coords(alg, X.P1, Y.P2)
    if out and basis:
        kernel = nullspace(_linear_map_matrix(basis, lambda f: Y.phi.after(f), out, K))
    else:
        kernel = [[K.one if i == j else K.zero for i in range(len(coords))] for j in range(len(coords))]
    k = ProjMap.zero(alg, X.P1, Y.P1, K)
    for vec in kernel:
        k = k + from_vector(alg, X.P1, Y.P1, coords, vec, K).scale(draw(rng))
    return P1Morphism(X, Y, s.after(X.phi) + k, Y.phi.after(s))


def random_matrix(K, rows: int, cols: int, rng: random.Random, bound: int = 3) -> Matrix:
    draw = scalar_sampler(K, bound)
    return Matrix([[draw(rng) for _ in range(cols)] for _ in range(rows)], K, ncols=cols)


def random_bipoly(K, rng: random.Random, degree: int = 2, bound: int = 3, density: float = 0.5) -> BiPoly:
    terms = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            if rng.random() < density:
                v = K(rng.randint(-bound, bound))
                if v:
                    terms[(i, j)] = v
    return BiPoly(terms, K)


def random_ditalgebra_spec(rng: random.Random, c0: int, c1: int, degree: int = 2, K=None) -> dict:
    """One unmarked point z; rows v_i in B[z0, z0], columns b (x) a_j with a_j in B[z, z0]."""
    from .fields import QQ
    K = K or QQ
    rows = [f"v{i + 1}" for i in range(c0)]
    arrows = [f"a{j + 1}" for j in range(c1)]
    delta = {}
    for v in rows:
        comps = {}
        for a in arrows:
            c = random_bipoly(K, rng, degree)
            if c:
                comps[f"b,{a}"] = dump_bipoly(c)
        delta[v] = comps
    return {
        "field": K.spec(),
        "h": "1",
        "points": {"marked": "z0", "unmarked": ["z"]},
        "basis": {"z0|z0": rows, "z|z0": arrows, "z0|z": ["b"]},
        "delta": delta,
        "designated": {"z": ["z"]},
    }


def random_linear_map(seed, K=None) -> "LazyLinearMap":
    """A reproducible endomorphism of k(x): each basis value comes from an rng seeded by (seed, element)."""
    from .convolution import LazyLinearMap
    from .fields import QQ
    K = K or QQ

    def rule(b):
        rng = random.Random(f"{seed}:{b}")
        num = Poly([K(rng.randint(-4, 4)) for _ in range(3)], K)
        pole = rng.choice([None, 0, 1, -1, 2])
        den = Poly.const(1, K) if pole is None else Poly.from_roots([K(pole)], K)
        return RatFun(num, den)
    return LazyLinearMap(rule, K, f"p{seed}")
