"""Bound quiver algebras, projectives and right multiplication."""
import itertools
import random

import pytest

from brickwork.algebra import (AlgebraPresentation, Quiver, Representation, build_algebra,
                               is_rep_morphism, projective_module, right_multiplication)
from brickwork.errors import NotAdmissible, ValidationError, WrongIdempotents
from brickwork.fields import QQ
from brickwork.linalg import Matrix
from brickwork.modules import hom_basis
from brickwork.sampling import random_matrix


def dual_numbers():
    Q = Quiver([1], [("alpha", 1, 1)])
    return build_algebra(AlgebraPresentation(Q, [[(1, Q.path(["alpha", "alpha"]))]], 2, QQ))


def names(alg):
    return sorted(alg.name(i) for i in range(alg.dim))


def test_kronecker_basis(kronecker):
    assert kronecker.dim == 4
    assert names(kronecker) == ["a", "b", "e1", "e2"]


def test_dual_numbers():
    assert dual_numbers().dim == 2


def test_example25_basis(example25):
    assert example25.dim == 6
    assert names(example25) == ["a", "b", "e1", "e2", "e3", "g"]


def test_relation_with_long_paths_only():
    # a cubic relation on a loop with bound m = 4
    Q = Quiver([1], [("t", 1, 1)])
    alg = build_algebra(AlgebraPresentation(Q, [[(1, Q.path(["t"] * 3))]], 4, QQ))
    assert alg.dim == 3


def test_short_relation_rejected():
    Q = Quiver([1, 2], [("a", 1, 2)])
    with pytest.raises(NotAdmissible):
        build_algebra(AlgebraPresentation(Q, [[(1, Q.path(["a"]))]], 2, QQ))


def test_bad_quivers():
    with pytest.raises(ValidationError):
        Quiver([1, 1], [])
    with pytest.raises(ValidationError):
        Quiver([1], [("a", 1, 2)])


def test_products(kronecker, example25):
    e1 = kronecker.idempotent(1)
    a = kronecker.arrow("a")
    assert e1 * e1 == e1
    assert a * e1 == a
    assert not e1 * a
    assert not example25.arrow("g") * example25.arrow("a")
    assert not example25.arrow("a") * example25.arrow("g")   # rad^2 = 0


@pytest.mark.parametrize("name", ["kronecker", "example25", "dual"])
def test_associativity_and_radical(name, kronecker, example25):
    alg = {"kronecker": kronecker, "example25": example25, "dual": dual_numbers()}[name]
    basis = [alg.basis_element(i) for i in range(alg.dim)]
    for x, y, z in itertools.product(basis, repeat=3):
        assert (x * y) * z == x * (y * z)
    assert sum((alg.idempotent(v) for v in alg.vertices), alg.zero()) == alg.one()
    assert alg.dim == sum(len(alg.block(s, t)) for s in alg.vertices for t in alg.vertices)
    rad = [b for b in basis if b.in_radical()]
    for x in rad:
        for y in rad:
            assert (x * y).in_radical()
    # rad^m = 0 with m = 2 for all three
    for x, y in itertools.product(rad, repeat=2):
        assert not x * y


def test_projectives(kronecker, example25):
    P1 = projective_module(kronecker, 1)
    assert P1.dims == {1: 1, 2: 2}
    assert P1.maps["a"] == Matrix([[QQ(1)], [QQ(0)]], QQ, ncols=1)
    assert P1.maps["b"] == Matrix([[QQ(0)], [QQ(1)]], QQ, ncols=1)
    assert projective_module(kronecker, 2).dims == {1: 0, 2: 1}
    assert projective_module(example25, 1).dims == {1: 1, 2: 1, 3: 0}
    P1.check_relations()


def test_right_multiplication(kronecker):
    rho = right_multiplication(kronecker, kronecker.idempotent(1), 1, 1)
    for v, M in rho.items():
        assert M == Matrix.identity(M.nrows, QQ)
    rho_a = right_multiplication(kronecker, kronecker.arrow("a"), 2, 1)
    assert rho_a[2] == Matrix([[QQ(1)], [QQ(0)]], QQ, ncols=1)
    assert is_rep_morphism(projective_module(kronecker, 2), projective_module(kronecker, 1), rho_a)
    with pytest.raises(WrongIdempotents):
        right_multiplication(kronecker, kronecker.arrow("a"), 1, 2)


def test_right_multiplication_functorial(example25):
    alg = example25
    basis = [alg.basis_element(i) for i in range(alg.dim)]
    for x in basis:
        for y in basis:
            xy = x * y
            if not xy:
                continue
            (s, t), (s2, t2) = _ends(alg, x), _ends(alg, y)
            # x in e_s L e_t, y in e_t L e_t2: rho_{x y} = rho_y o rho_x
            rx = right_multiplication(alg, x, s, t)
            ry = right_multiplication(alg, y, s2, t2)
            rxy = right_multiplication(alg, xy, s, t2)
            for v in alg.vertices:
                assert rxy[v] == ry[v] @ rx[v]


def _ends(alg, elem):
    (k,) = elem.coeffs
    p = alg.basis[k]
    return p.target, p.source


def random_kronecker_module(alg, rng):
    d1, d2 = rng.randint(0, 3), rng.randint(0, 3)
    maps = {a: random_matrix(QQ, d2, d1, rng) for a in ("a", "b")}
    return Representation(alg, {1: d1, 2: d2}, maps)


def test_hom_from_projective_counts_vertex_space(kronecker):
    rng = random.Random(4)
    for _ in range(10):
        X = random_kronecker_module(kronecker, rng)
        for t in kronecker.vertices:
            assert hom_basis(projective_module(kronecker, t), X).dim == X.dims[t]
