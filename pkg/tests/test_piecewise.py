import pytest

from klrcocenter import cyclotomic as cy
from klrcocenter import piecewise as pw
from klrcocenter.cartan import (DominantWeight, RootVector, default_q_matrix,
                                validate_datum)
from klrcocenter.fields import GF, QQ

RANK1 = validate_datum([[2]])
RANK2 = validate_datum([[2, -1], [-1, 2]])


def build(datum, lam, alpha, field=QQ):
    return cy.build(datum, default_q_matrix(datum), DominantWeight(lam),
                    RootVector(alpha), field)


def test_block_decompose():
    bd = pw.block_decompose((0, 0, 1), DominantWeight((2, 0)), RANK2)
    assert bd.values == (0, 1)
    assert bd.sizes == (2, 1)
    assert bd.bounds == (0, 2, 3)
    assert bd.levels == (2, 2)  # ⟨h_1, 2Λ_0 − 2α_0⟩ = 0 − 2·(−1) = 2
    bd = pw.block_decompose((0, 0), DominantWeight((3,)), RANK1)
    assert bd.levels == (3,)
    assert bd.maximal_positions == (2,)  # second branch of the max position


def test_dominance():
    assert not pw.is_piecewise_dominant((0, 0), DominantWeight((1,)), RANK1)
    assert pw.is_piecewise_dominant((0, 0), DominantWeight((2,)), RANK1)
    assert pw.is_piecewise_dominant((0, 0, 1), DominantWeight((2, 0)), RANK2)
    assert pw.enumerate_pd(RootVector((2,)), DominantWeight((2,)), RANK1) == [(0, 0)]
    assert pw.enumerate_pd(RootVector((2,)), DominantWeight((1,)), RANK1) == []
    assert pw.enumerate_pd(RootVector((1, 1)), DominantWeight((1, 0)),
                           RANK2) == [(0, 1)]


def test_refinements():
    refs = pw.refinements((0, 0, 1), DominantWeight((2, 0)), RANK2)
    assert sorted(r.sizes for r in refs) == [(1, 1, 1), (2, 1)]
    refs = pw.refinements((0, 1), DominantWeight((1, 1)), RANK2)
    assert [r.sizes for r in refs] == [(1, 1)]
    d = {r.sizes: r for r in pw.refinements((0, 0), DominantWeight((2,)), RANK1)}
    assert d[(2,)].positive and d[(2,)].lambdas == (2,)
    assert d[(1, 1)].lambdas == (2, 0) and not d[(1, 1)].positive


def test_distinguished_words():
    # top-degree element in the x-only case
    assert pw.z_lambda_word((0, 0), DominantWeight((3,)), RANK1) == \
        (("x", 1), ("x", 1))
    # pure divided-power case ℓ = b
    w = pw.z_lambda_word((0, 0), DominantWeight((2,)), RANK1)
    assert w == pw._word_interval(1, 2)
    # singleton blocks give e(ν)^(−) = e(ν)
    assert pw.e_minus_word((0, 1), DominantWeight((1, 1)), RANK2) == ()


def test_not_piecewise_dominant_raises():
    A = build(RANK1, (1,), (1,))
    with pytest.raises(pw.NotPiecewiseDominant):
        pw.z_lambda_word((0, 0), DominantWeight((1,)), RANK1)


def test_z_lambda_degree_is_top():
    for lam, alpha in [((3,), (2,)), ((2,), (2,)), ((3,), (3,))]:
        A = build(RANK1, lam, alpha)
        for nu in pw.enumerate_pd(A.alpha, A.lam, A.datum):
            img = pw.build_distinguished("Z_Lambda", A, nu)
            if img:
                assert A.coord_degree(img) == A.d_top


@pytest.mark.parametrize("field", [QQ, GF(2)])
def test_verify_spans_reference_instance(field):
    A = build(RANK1, (2,), (2,), field)
    rep = pw.verify_spans(A)
    assert all(rep.values()), rep


def test_spans_kill_non_dominant_family():
    A = build(RANK2, (1, 0), (1, 1))
    rep = pw.verify_spans(A)
    assert rep["e"] and rep["b"]


def test_zero_algebra_vacuous():
    A = build(RANK1, (1,), (2,))
    assert all(pw.verify_spans(A).values())
    assert pw.fullness_check(A, {})


def test_fullness():
    A = build(RANK1, (2,), (2,))
    assert pw.fullness_check(A, A.identity)
    es = pw.build_distinguished("e_sum", A)
    esm = pw.build_distinguished("e_sum_minus", A)
    assert A.is_idempotent(es) and A.is_idempotent(esm)
    assert pw.fullness_check(A, es)
    assert pw.fullness_check(A, esm)
    with pytest.raises(pw.NotIdempotent):
        non_idem = {k: A.field.from_int(2) for k in A.identity}
        if A.multiply(non_idem, non_idem) == non_idem:
            raise pw.NotIdempotent("degenerate")
        pw.fullness_check(A, non_idem)


def test_lemma_cocenter_cases():
    A = build(RANK1, (3,), (3,))
    rep = pw.verify_lemma_cocenter_cases(A)
    assert rep == {"case1": True, "case3": True, "case4": True}


def test_z_prime_proportionality_reported():
    A = build(RANK1, (2,), (2,))
    for nu in pw.enumerate_pd(A.alpha, A.lam, A.datum):
        prop, scalar = pw.z_prime_proportionality(A, nu)
        assert prop and scalar is not None


def test_divided_power_idempotent_commutes():
    A = build(RANK1, (3,), (2,))
    nu = (0, 0)
    em = pw.build_distinguished("e_minus", A, nu)
    e = A.idempotent_coords(nu)
    assert A.is_idempotent(em)
    assert A.multiply(em, e) == A.multiply(e, em)
