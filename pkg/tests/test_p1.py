"""Projective presentations: special objects, cokernels and the zero-cokernel decomposition."""
import random

import pytest
from hypothesis import given, settings, strategies as st

from brickwork.errors import NotInRadical, NotZeroCokernel, ValidationError
from brickwork.fields import QQ
from brickwork.linalg import Matrix
from brickwork.modules import compose, end_dimension
from brickwork.p1 import (P1Morphism, P1Object, ProjMap, S, U, build_special, canonical_decomposition,
                          cokernel, cokernel_map, factor_alpha, factor_beta, is_isomorphic, is_zero_coker,
                          lift_and_split, p1_end_is_local, p1_hom, random_combination)
from brickwork.poly import RatFunField
from brickwork.sampling import random_object, random_zero_coker_morphism


def X_lam(alg, lam):
    """(Lambda e2 -> Lambda e1, right multiplication by b - lam a)."""
    phi = ProjMap(alg, (2,), (1,), [[alg.parse_element(f"b - {lam}*a")]])
    return P1Object(alg, (2,), (1,), phi)


def draw(rng):
    return QQ(rng.randint(-5, 5))


# objects and cokernels ----------------------------------------------------------

def test_radical_condition(kronecker):
    phi = ProjMap(kronecker, (1,), (1,), [[kronecker.idempotent(1)]])
    with pytest.raises(ValidationError):
        P1Object(kronecker, (1,), (1,), phi)


def test_cokernel_is_the_regular_module(kronecker):
    for lam in (0, 3, -2):
        C = cokernel(X_lam(kronecker, lam)).module
        assert C.dims == {1: 1, 2: 1}
        assert C.maps["a"] == Matrix([[QQ(1)]], QQ, ncols=1)
        assert C.maps["b"] == Matrix([[QQ(lam)]], QQ, ncols=1)


def test_cokernels_of_S_and_U_vanish(kronecker):
    for t in kronecker.vertices:
        assert sum(cokernel(S(kronecker, (t,))).module.dims.values()) == 0
        assert sum(cokernel(U(kronecker, (t,))).module.dims.values()) == 0


def test_special_objects_kronecker(kronecker):
    sp1 = build_special(kronecker, 1)
    assert sp1.L.P1 == (2, 2) and sp1.L.P2 == (1,)
    C = cokernel(sp1.L).module
    assert C.dims == {1: 1, 2: 0}
    sp2 = build_special(kronecker, 2)
    assert sp2.L.P1 == () and sp2.L.P2 == (2,)
    assert sp1.R.P1 == (1,) and sp1.R.P2 == ()
    for sp in (sp1, sp2):
        assert sp.beta.after(sp.alpha) == sp.gamma


@pytest.mark.parametrize("t", [1, 2, 3])
def test_simple_presentation_example25(example25, t):
    sp = build_special(example25, t)
    C = cokernel(sp.L).module
    assert C.dims == {v: int(v == t) for v in example25.vertices}
    assert p1_end_is_local(sp.L) and p1_end_is_local(sp.R)


def test_example25_isomorphisms(example25):
    sp = {t: build_special(example25, t) for t in example25.vertices}
    assert is_isomorphic(sp[1].L, sp[2].R)
    for t in example25.vertices:
        assert not is_isomorphic(sp[t].L, sp[t].R)


# hom spaces -------------------------------------------------------------------------

def test_hom_contains_identity(kronecker):
    X = X_lam(kronecker, 2)
    basis = p1_hom(X, X)
    ident = P1Morphism.identity(X)
    from brickwork.p1 import hom_coords, to_vector
    from brickwork.linalg import solve
    cols = [to_vector(b.u1, hom_coords(kronecker, X.P1, X.P1)) + to_vector(b.u2, hom_coords(kronecker, X.P2, X.P2))
            for b in basis]
    target = to_vector(ident.u1, hom_coords(kronecker, X.P1, X.P1)) + \
        to_vector(ident.u2, hom_coords(kronecker, X.P2, X.P2))
    assert solve(Matrix.from_columns(cols, QQ, len(target)), target) is not None


def test_hom_of_S_is_end_of_projective(example25):
    for t in example25.vertices:
        St = S(example25, (t,))
        assert len(p1_hom(St, St)) == len(example25.block(t, t))


def test_hom_between_regulars_has_zero_cokernel(kronecker):
    X0, X1 = X_lam(kronecker, 0), X_lam(kronecker, 1)
    for u in p1_hom(X0, X1):
        assert is_zero_coker(u)
        canonical_decomposition(u)


# splitting and factorizations -----------------------------------------------------

def test_split_of_zero(kronecker):
    X = X_lam(kronecker, 1)
    sp = lift_and_split(P1Morphism.zero(X, X))
    assert not sp.s and not sp.v and not sp.w


def test_split_identity_on_S(kronecker):
    St = S(kronecker, (1,))
    sp = lift_and_split(P1Morphism.identity(St))
    assert not sp.s and sp.v == P1Morphism.identity(St) and not sp.w


def test_factor_alpha_examples(kronecker):
    sp = build_special(kronecker, 1)
    zeta = factor_alpha(sp.alpha, 1, sp)
    assert sp.alpha.after(zeta) == sp.alpha
    X = X_lam(kronecker, 2)
    rng = random.Random(1)
    for _ in range(5):
        u2 = ProjMap(kronecker, (1,), (1,), [[kronecker.idempotent(1).with_scalars(QQ) * draw(rng)]])
        u = P1Morphism(X, sp.U, u2.after(X.phi), u2)
        zeta = factor_alpha(u, 1, sp)
        assert sp.alpha.after(zeta) == u
    assert not factor_alpha(P1Morphism.zero(X, sp.U), 1, sp)


def test_factor_beta_examples(kronecker):
    sp = build_special(kronecker, 1)
    xi = factor_beta(sp.beta, 1, sp)
    assert xi.after(sp.beta) == sp.beta
    assert not factor_beta(P1Morphism.zero(sp.U, sp.R), 1, sp)
    X = X_lam(kronecker, 2)
    for v in p1_hom(sp.U, X):
        xi = factor_beta(v, 1, sp)
        assert xi.after(sp.beta) == v


def test_factor_beta_rejects_nonradical(kronecker):
    sp = build_special(kronecker, 1)
    v = P1Morphism.identity(sp.U)
    with pytest.raises(NotInRadical):
        factor_beta(v, 1, sp)


def test_decomposition_examples(kronecker, example25):
    X = X_lam(kronecker, 1)
    dec = canonical_decomposition(P1Morphism.zero(X, X))
    assert dec.gamma_terms == [] and dec.s_terms == []
    for alg in (kronecker, example25):
        for t in alg.vertices:
            sp = build_special(alg, t)
            if not sp.gamma:
                continue
            dec = canonical_decomposition(sp.gamma)
            assert dec.s_terms == [] and len(dec.gamma_terms) == 1
            term = dec.gamma_terms[0]
            assert term.t == t
            assert term.g == P1Morphism.identity(sp.R) and term.h == P1Morphism.identity(sp.L)


def test_identity_with_nonzero_cokernel(kronecker):
    X = X_lam(kronecker, 0)
    assert not is_zero_coker(P1Morphism.identity(X))
    with pytest.raises(NotZeroCokernel):
        canonical_decomposition(P1Morphism.identity(X))


def test_anything_into_S_has_zero_cokernel(kronecker):
    St = S(kronecker, (1,))
    X = X_lam(kronecker, 3)
    for u in p1_hom(X, St):
        assert is_zero_coker(u)


# properties ---------------------------------------------------------------------------

def _alg(name, kronecker, example25):
    return kronecker if name == "kronecker" else example25


@pytest.mark.parametrize("name", ["kronecker", "example25"])
@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=25)
def test_cokernel_functorial(name, kronecker, example25, seed):
    alg = _alg(name, kronecker, example25)
    rng = random.Random(seed)
    X, Y, Z = (random_object(alg, rng) for _ in range(3))
    u = random_combination(p1_hom(X, Y), X, Y, rng, draw)
    v = random_combination(p1_hom(Y, Z), Y, Z, rng, draw)
    cx, cy, cz = cokernel(X), cokernel(Y), cokernel(Z)
    lhs = cokernel_map(v.after(u), cx, cz)
    rhs = compose(cokernel_map(v, cy, cz), cokernel_map(u, cx, cy))
    assert all(lhs[w] == rhs[w] for w in alg.vertices)


@pytest.mark.parametrize("name", ["kronecker", "example25"])
@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=25)
def test_factored_sums_have_zero_cokernel(name, kronecker, example25, seed):
    alg = _alg(name, kronecker, example25)
    rng = random.Random(seed)
    X, Y = random_object(alg, rng), random_object(alg, rng)
    total = P1Morphism.zero(X, Y)
    for t in alg.vertices:
        sp = build_special(alg, t)
        h = random_combination(p1_hom(X, sp.L), X, sp.L, rng, draw)
        g = random_combination(p1_hom(sp.R, Y), sp.R, Y, rng, draw)
        total = total + g.after(sp.gamma.after(h))
        St = sp.S
        h2 = random_combination(p1_hom(X, St), X, St, rng, draw)
        g2 = random_combination(p1_hom(St, Y), St, Y, rng, draw)
        total = total + g2.after(h2)
    assert is_zero_coker(total)


@pytest.mark.parametrize("scalars", ["ground", "kx"])
@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=25)
def test_decomposition_terms_have_zero_cokernel(example25, scalars, seed):
    K = RatFunField(QQ) if scalars == "kx" else QQ
    rng = random.Random(seed)
    X, Y = random_object(example25, rng, K), random_object(example25, rng, K)
    u = random_zero_coker_morphism(X, Y, rng)
    dec = canonical_decomposition(u)
    assert dec.recompose(X, Y) == u
    for term in dec.gamma_terms:
        assert is_zero_coker(term.g.after(dec.specials[term.t].gamma.after(term.h)))
    for term in dec.s_terms:
        assert is_zero_coker(term.g.after(term.h))


def test_end_dimension_of_presented_module_matches(kronecker):
    # the cokernel of X_lam is a brick
    for lam in range(-2, 3):
        assert end_dimension(cokernel(X_lam(kronecker, lam)).module) == 1
