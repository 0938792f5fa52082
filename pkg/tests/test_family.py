import pytest
from hypothesis import given, settings, strategies as st

from brickwork import io
from brickwork.errors import OutsideDh, ValidationError
from brickwork.family import (CONSISTENT, INCONSISTENT, brick_scan, genericize, sample_points, specialize,
                              theorem_verdict)
from brickwork.fields import GF, QQ
from brickwork.modules import end_dimension, hom_basis

# dims (1, 2): preprojective for lambda != 0, splits at lambda = 0
SPLITTING = {"h": "1", "dims": {"1": 1, "2": 2}, "maps": {"a": [["1"], ["0"]], "b": [["0"], ["x"]]}}


def realization(alg, spec):
    return io.load_realization(alg, spec)


def test_specialize_kronecker(kronecker_realization):
    M = specialize(kronecker_realization, 3)
    assert [list(r) for r in M.maps["a"].rows] == [[QQ(1)]]
    assert [list(r) for r in M.maps["b"].rows] == [[QQ(3)]]


def test_specialize_outside_domain(kronecker):
    M = realization(kronecker, io.load_fixture("localized.realization.json"))
    with pytest.raises(OutsideDh):
        specialize(M, 0)
    assert specialize(M, 2).maps["b"].rows[0][0] == QQ("1/2")
    assert QQ(0) not in sample_points(M, 5)


def test_entries_outside_localization_rejected(kronecker):
    spec = dict(io.load_fixture("localized.realization.json"), h="x-1")
    with pytest.raises(ValidationError):
        realization(kronecker, spec)


def test_sample_order(kronecker_realization):
    assert sample_points(kronecker_realization, 5) == [QQ(v) for v in (0, 1, -1, 2, -2)]


def test_sample_points_exhaust_prime_field(kronecker):
    alg = io.load_algebra(io.load_fixture("kronecker.algebra.json"), "Fp:5")
    M = realization(alg, io.load_fixture("kronecker.realization.json"))
    assert len(sample_points(M, 20)) == 5


def test_genericize_is_over_kx(jordan_realization):
    G = genericize(jordan_realization)
    assert G.dims == {1: 2, 2: 2}
    assert end_dimension(G) == 2


def test_kronecker_verdict(kronecker_realization):
    rep = theorem_verdict(kronecker_realization, 10)
    assert rep.verdict == CONSISTENT and rep.label == "CONSISTENT-positive"
    assert rep.end_dims == [1] * 10 and rep.generic_end_dim == 1
    assert not rep.constant_family


def test_jordan_verdict(jordan_realization):
    rep = theorem_verdict(jordan_realization, 10)
    assert rep.label == "CONSISTENT-negative"
    assert rep.end_dims == [2] * 10


def test_splitting_family(kronecker):
    M = realization(kronecker, SPLITTING)
    rep = theorem_verdict(M, 6)
    assert rep.generic_brick
    assert rep.exceptions == [QQ(0)]
    assert rep.verdict == INCONSISTENT
    assert theorem_verdict(M, 6, max_exceptions=1).verdict == CONSISTENT
    # N + S2 with Hom(S2, N) one-dimensional
    assert rep.end_dims[0] == 3


def test_constant_family(kronecker):
    spec = {"dims": {"1": 1, "2": 1}, "maps": {"a": [["1"]], "b": [["2"]]}}
    rep = theorem_verdict(realization(kronecker, spec), 4)
    assert rep.constant_family
    assert rep.label == "CONSISTENT-positive"


def test_direct_sum_is_not_a_brick(kronecker, kronecker_realization):
    shifted = realization(kronecker, {"dims": {"1": 1, "2": 1}, "maps": {"a": [["1"]], "b": [["x+1"]]}})
    S = kronecker_realization.direct_sum(shifted)
    rep = theorem_verdict(S, 6)
    assert rep.label == "CONSISTENT-negative"
    assert rep.generic_end_dim == 2


def test_scan_has_no_verdict(kronecker_realization):
    rep = brick_scan(kronecker_realization, 3)
    assert rep.verdict is None and rep.label is None
    with pytest.raises(ValidationError):
        brick_scan(kronecker_realization, 0)


@given(a=st.integers(-3, 3), b=st.integers(-3, 3), c=st.integers(-3, 3), lam=st.integers(-4, 4))
@settings(max_examples=40)
def test_specialized_dims_match_generic(kronecker, a, b, c, lam):
    spec = {"h": "x-5", "dims": {"1": 2, "2": 1},
            "maps": {"a": [["1", f"{a}"]], "b": [[f"{b}*x", f"1/(x-5) + {c}"]]}}
    M = realization(kronecker, spec)
    assert specialize(M, lam).dims == genericize(M).dims


@given(lam=st.integers(-6, 6))
def test_end_dimension_semicontinuous(kronecker, lam):
    # End dimension can only jump up at special points
    M = realization(kronecker, SPLITTING)
    generic = end_dimension(genericize(M))
    assert end_dimension(specialize(M, lam)) >= generic


def test_family_over_prime_field():
    alg = io.load_algebra(io.load_fixture("kronecker.algebra.json"), "Fp:7")
    M = realization(alg, io.load_fixture("jordan.realization.json"))
    rep = theorem_verdict(M, 7)
    assert rep.sampled == GF(7).elements()[:1] + rep.sampled[1:]
    assert rep.label == "CONSISTENT-negative"


def test_hom_between_distinct_generic_members(kronecker, kronecker_realization):
    shifted = realization(kronecker, {"dims": {"1": 1, "2": 1}, "maps": {"a": [["1"]], "b": [["x+1"]]}})
    assert len(hom_basis(genericize(kronecker_realization), genericize(shifted)).basis) == 0
