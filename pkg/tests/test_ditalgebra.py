import random
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from brickwork import io
from brickwork.convolution import Monomial, Pole, apply_c, identity_map, mu, zero_map
from brickwork.ditalgebra import (check_normal, coassociativity_defects, coefficient_matrices, compose_lambda,
                                  compose_x, dump_ditalgebra, factor_radical_generic, load_ditalgebra,
                                  normalize_by_localization, rad_dimension, rank_criterion,
                                  solve_brick_equations, term_operator)
from brickwork.errors import MalformedSpec, NotNormal, OutsideDh, RankDeficient, ValidationError
from brickwork.family import theorem_verdict
from brickwork.fields import QQ
from brickwork.linalg import Matrix, det
from brickwork.parsing import parse_bipoly, parse_ratfun
from brickwork.poly import BiPolyRing, PolyRing, RatFunField
from brickwork.sampling import random_ditalgebra_spec

DIT_FIXTURES = ["dit_xy", "dit_xminusy", "dit_kronecker", "dit_jordan", "dit_two_generator",
                "dit_two_row", "dit_swap", "dit_skew", "dit_triple"]
DEMANDS = [Monomial(0), Monomial(1), Monomial(2), Pole(QQ(1), 1), Pole(QQ(1), 2)]


def dit(name):
    return load_ditalgebra(io.load_fixture(f"{name}.json"))


def B(text):
    return parse_bipoly(text, QQ)


def R(text):
    return parse_ratfun(text, QQ)


def cells(M):
    return [list(r) for r in M.rows]


# loading ------------------------------------------------------------------------------

def test_smallest_instance():
    d = dit("dit_xminusy")
    assert d.c0 == 1 and len(d.column_keys) == 1
    assert d.pair("v", "v2", "v1") == B("x - y")
    assert dit("dit_xy").pair("v", "v2", "v1") == B("x*y")


def test_designated_u_outside_its_block():
    spec = io.load_fixture("dit_triple.json")
    spec["designated"]["u"] = ["a"]
    with pytest.raises(MalformedSpec):
        load_ditalgebra(spec)


@pytest.mark.parametrize("edit", [
    lambda s: s["delta"]["v"].update({"v2,nope": "1"}),
    lambda s: s["delta"]["v"].update({"v1,v2": "1"}),
    lambda s: s["delta"].update({"v1": {"v1,v": "y"}}),
    lambda s: s["basis"].update({"z0-z": ["w"]}),
    lambda s: s.update(h="0"),
    lambda s: s["points"].update(marked=["z0", "z1"]),
    lambda s: s.update(field="Fp:4"),
])
def test_malformed_specs(edit):
    spec = io.load_fixture("dit_xy.json")
    edit(spec)
    with pytest.raises(MalformedSpec):
        load_ditalgebra(spec)


def test_y_only_on_marked_left_leg():
    spec = io.load_fixture("dit_triple.json")
    spec["delta"]["m"] = {"b,u": "y"}
    with pytest.raises(MalformedSpec):
        load_ditalgebra(spec)


def test_derived_triples_are_coassociative():
    d = dit("dit_triple")
    assert coassociativity_defects(d) == []
    assert d.triple("v", "b", "u", "a") == B("x + y")


def test_coassociativity_failure_is_an_error_when_derived():
    spec = io.load_fixture("dit_triple.json")
    spec["delta"]["n"] = {"u,a": "2"}
    with pytest.raises(MalformedSpec):
        load_ditalgebra(spec)
    spec["triples"] = {"v": {"b,u,a": "x + y"}}
    with pytest.warns(UserWarning):
        d = load_ditalgebra(spec)
    assert d.notes
    assert d.triple("v", "b", "u", "a") == B("x + y")


def test_dump_roundtrip():
    for name in DIT_FIXTURES:
        d = dit(name)
        d2 = load_ditalgebra(dump_ditalgebra(d))
        assert coefficient_matrices(d2).Cxy == coefficient_matrices(d).Cxy


def test_rad_dimensions_match_blocks():
    d = dit("dit_triple")
    assert rad_dimension(d, "z0", "z0") == 1
    assert rad_dimension(d, "r", "l") == 1
    assert rad_dimension(d, "l", "r") == 0
    for (left, right), names in d.blocks.items():
        assert rad_dimension(d, left, right) == len(names)


# compositions --------------------------------------------------------------------------

@pytest.mark.parametrize("lam", [0, 1, -3, 7])
def test_diagonal_kills_x_minus_y(lam):
    assert compose_lambda(dit("dit_xminusy"), ("v2", "v1"), lam) == {"v": QQ(0)}


def test_xy_evaluations():
    d = dit("dit_xy")
    assert compose_lambda(d, ("v2", "v1"), 2) == {"v": QQ(4)}
    assert compose_x(d, ("v2", "v1")) == {"v": R("x^2")}


def test_compose_outside_domain():
    with pytest.raises(OutsideDh):
        compose_lambda(dit("dit_triple"), ("b", "n"), 1)


@pytest.mark.parametrize("name", DIT_FIXTURES)
def test_x_form_specializes_to_lambda_form(name):
    d = dit(name)
    lams = [lam for lam in (QQ(v) for v in range(-10, 11)) if d.admits(lam)][:20]
    for col in d.column_keys:
        term = col[1:]
        xs = compose_x(d, term)
        for lam in lams:
            ls = compose_lambda(d, term, lam)
            assert {v: r(lam) for v, r in xs.items()} == ls


# matrices and the rank criterion ------------------------------------------------------

def test_matrices_x_minus_y():
    cm = coefficient_matrices(dit("dit_xminusy"))
    assert cells(cm.Cxy) == [[B("x - y")]]
    assert cells(cm.Cx) == [[R("0")]]


def test_matrices_xy():
    cm = coefficient_matrices(dit("dit_xy"))
    assert cells(cm.Cx) == [[R("x^2")]]
    assert cells(cm.at(2)) == [[QQ(4)]]


def test_matrices_two_generator():
    cm = coefficient_matrices(dit("dit_two_generator"))
    assert cm.Cx.shape == (1, 2)
    assert cells(cm.Cx) == [[R("1"), R("x")]]
    rep = rank_criterion(dit("dit_two_generator"), 5)
    assert rep.exact_rank == 1 and rep.c0 == 2 and not rep.generic_brick_flag


def test_brick_equations_xy():
    d = dit("dit_xy")
    assert cells(solve_brick_equations(d, 2)) == [[QQ("1/4")]]
    assert cells(solve_brick_equations(d)) == [[R("1/x^2")]]
    assert solve_brick_equations(d, 0) is None


def test_brick_equations_x_minus_y():
    d = dit("dit_xminusy")
    assert solve_brick_equations(d) is None
    assert all(solve_brick_equations(d, lam) is None for lam in range(-3, 4))


def test_rank_xy():
    rep = rank_criterion(dit("dit_xy"), 10)
    assert rep.exact_rank == 1 and rep.generic_brick_flag
    assert set(rep.exceptional) <= {QQ(0)}
    assert rep.sampled_agreement
    assert (QQ(0), 0) in rep.sampled


def test_rank_x_minus_y():
    rep = rank_criterion(dit("dit_xminusy"), 10)
    assert rep.exact_rank == 0 and not rep.generic_brick_flag
    with pytest.raises(ValidationError):
        rank_criterion(dit("dit_xy"), 0)


def test_check_normal_examples():
    R2 = BiPolyRing(QQ)
    assert check_normal(Matrix([[B("x")]], R2, ncols=1))
    assert check_normal(Matrix([[B("1"), B("0"), B("0")], [B("0"), B("1"), B("0")]], R2, ncols=3))
    assert not check_normal(Matrix([[B("0"), B("1")], [B("1"), B("0")]], R2, ncols=2))
    assert not check_normal(Matrix([[B("1")], [B("0")]], R2, ncols=1))


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=50)
def test_brick_equation_chain(seed):
    rng = random.Random(seed)
    d = load_ditalgebra(random_ditalgebra_spec(rng, rng.randint(1, 3), rng.randint(1, 5)))
    cm = coefficient_matrices(d)
    rep = rank_criterion(d, 20, cm)
    assert rep.sampled_agreement
    solved = {lam: solve_brick_equations(d, lam, cm) is not None for lam, _ in rep.sampled}
    assert (solve_brick_equations(d, None, cm) is not None) == rep.generic_brick_flag
    if rep.generic_brick_flag:
        assert all(ok or lam in rep.exceptional for lam, ok in solved.items())
    else:
        assert not any(solved.values())


def test_rank_disagreements_sit_at_determinant_roots():
    # C(x) = diag(x - 1, x + 2): the rank drops exactly at 1 and -2
    spec = random_ditalgebra_spec(random.Random(0), 2, 2)
    spec["delta"] = {"v1": {"b,a1": "x - 1"}, "v2": {"b,a2": "y + 2"}}
    rep = rank_criterion(load_ditalgebra(spec), 8)
    assert sorted(rep.exceptional) == [QQ(-2), QQ(1)]
    assert [lam for lam, rk in rep.sampled if rk != 2] == [QQ(1), QQ(-2)]


# normalization ------------------------------------------------------------------------

def test_normalize_already_normal():
    n = normalize_by_localization(dit("dit_two_row"))
    assert n.A == Matrix.identity(2, PolyRing(RatFunField(QQ)))
    assert n.g.degree == 0 and n.permutation == [0, 1]


def test_normalize_swap():
    n = normalize_by_localization(dit("dit_swap"))
    assert n.permutation == [1, 0]
    assert n.g.degree == 0 and n.exponents == [0, 0]
    assert check_normal(coefficient_matrices(n.data).Cxy)


def test_normalize_skew():
    d = dit("dit_skew")
    assert not check_normal(coefficient_matrices(d).Cxy)
    n = normalize_by_localization(d)
    C = coefficient_matrices(n.data).Cxy
    assert check_normal(C)
    assert n.data.h == (d.h * n.g).monic()


def test_normalize_rank_deficient():
    with pytest.raises(RankDeficient):
        normalize_by_localization(dit("dit_two_generator"))


def _recomposition_holds(d, n):
    C = coefficient_matrices(d).Cxy
    C2 = coefficient_matrices(n.data).Cxy
    assert C2 == n.scaled @ C.submatrix(range(d.c0), n.permutation)
    assert check_normal(C2)
    assert n.det
    # independent check that A is invertible: evaluate at a ground point outside the zeros of g
    y0 = next(QQ(v) for v in range(2, 50) if n.g(QQ(v)))
    A0 = Matrix([[p.map_coeffs(lambda r: r(y0), QQ)(QQ(3)) for p in row] for row in n.A.rows], QQ, ncols=d.c0)
    assert det(A0) == n.det(y0) != 0


def test_normalize_random_fixtures():
    rng = random.Random(7)
    done = 0
    while done < 50:
        c0 = rng.randint(1, 4)
        d = load_ditalgebra(random_ditalgebra_spec(rng, c0, rng.randint(c0, c0 + 2)))
        try:
            n = normalize_by_localization(d)
        except RankDeficient:
            continue
        _recomposition_holds(d, n)
        done += 1


# factorization -------------------------------------------------------------------------

def test_factor_xy_identity():
    d = dit("dit_xy")
    terms = factor_radical_generic(d, 1, identity_map(QQ), [Monomial(0)])
    assert len(terms) == 1
    t = terms[0]
    assert t.column == ("pair", "v2", "v1") and t.sign == 1 and t.through == "S"
    assert apply_c(t.p, B("x*y"))(Monomial(0)) == R("1")


def test_factor_zero_is_empty():
    for name in ("dit_xy", "dit_two_row"):
        assert factor_radical_generic(dit(name), 1, zero_map(QQ), DEMANDS) == []


def test_factor_row_two_has_corrections():
    d = dit("dit_two_row")
    terms = factor_radical_generic(d, 2, identity_map(QQ), DEMANDS)
    assert [t.row for t in terms] == [2, 1]
    assert [t.sign for t in terms] == [1, -1]
    op = term_operator(d, terms)
    for z in DEMANDS:
        assert op.coeffs["v2"](z) == z.to_ratfun(QQ)
        assert not op.coeffs["v1"](z)


def test_factor_requires_normal():
    with pytest.raises(NotNormal):
        factor_radical_generic(dit("dit_skew"), 1, identity_map(QQ), DEMANDS)
    with pytest.raises(ValidationError):
        factor_radical_generic(dit("dit_xy"), 2, identity_map(QQ), DEMANDS)


def test_factor_through_gamma():
    d = dit("dit_triple")
    terms = factor_radical_generic(d, 1, mu(R("x + 3"), QQ), DEMANDS)
    assert terms[0].through == "gamma"


@pytest.mark.parametrize("name", ["dit_xy", "dit_two_row", "dit_swap", "dit_skew", "dit_triple"])
def test_factor_every_normalized_fixture(name):
    d = normalize_by_localization(dit(name)).data
    for row in range(1, d.c0 + 1):
        for q in (identity_map(QQ), mu(R("x^2 - 1"), QQ)):
            terms = factor_radical_generic(d, row, q, DEMANDS)
            op = term_operator(d, terms)
            for s, v in enumerate(d.rows, 1):
                for z in DEMANDS:
                    want = q(z) if s == row else R("0")
                    assert op.coeffs[v](z) == want


@given(seed=st.integers(0, 10 ** 6))
@settings(max_examples=15)
def test_factor_random_normalized(seed):
    rng = random.Random(seed)
    d = load_ditalgebra(random_ditalgebra_spec(rng, rng.randint(1, 3), 3, degree=1))
    try:
        d = normalize_by_localization(d).data
    except RankDeficient:
        return
    row = rng.randint(1, d.c0)
    factor_radical_generic(d, row, identity_map(QQ), DEMANDS[:3])


# the two sides of the main equivalence ---------------------------------------------------

@pytest.mark.parametrize("name", ["dit_kronecker", "dit_jordan"])
def test_companion_flags_agree(name):
    spec = io.load_fixture(f"{name}.json")
    d = load_ditalgebra(spec)
    alg = io.load_algebra(io.load_fixture(spec["companion"]["algebra"]))
    M = io.load_realization(alg, io.load_fixture(spec["companion"]["realization"]))
    assert rank_criterion(d, 10).generic_brick_flag == theorem_verdict(M, 10).generic_brick
