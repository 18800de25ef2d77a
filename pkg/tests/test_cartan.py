import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klrcocenter.cartan import (DominantWeight, QValidationError, RootVector,
                                bilinear_form, d_lambda_alpha,
                                default_q_matrix, enumerate_sequences,
                                multinomial, require_valid_q, root_of_sequence,
                                validate_datum, validate_q_matrix)
from klrcocenter.errors import InvalidDatum
from klrcocenter.fields import GF, QQ


def test_validate_rejects_bad_matrices():
    with pytest.raises(InvalidDatum):
        validate_datum([[1]])
    with pytest.raises(InvalidDatum):
        validate_datum([[2, 1], [1, 2]])
    with pytest.raises(InvalidDatum):
        validate_datum([[2, -1], [0, 2]])  # zero must be symmetric
    with pytest.raises(InvalidDatum):
        validate_datum([[2, -1]])  # not square


def test_minimal_symmetrizers():
    assert validate_datum([[2]]).symmetrizers == (1,)
    assert validate_datum([[2, -1], [-1, 2]]).symmetrizers == (1, 1)
    assert validate_datum([[2, -2], [-1, 2]]).symmetrizers == (1, 2)


def test_symmetrizer_override_validated():
    d = validate_datum([[2, -1], [-1, 2]], symmetrizers=[2, 2])
    assert d.symmetrizers == (2, 2)
    with pytest.raises(InvalidDatum):
        validate_datum([[2, -2], [-1, 2]], symmetrizers=[1, 1])


def test_bilinear_form_symmetric():
    d = validate_datum([[2, -2], [-1, 2]])
    a = RootVector((1, 0))
    b = RootVector((0, 1))
    assert bilinear_form(a, a, d) == 2
    assert bilinear_form(b, b, d) == 4
    assert bilinear_form(a, b, d) == bilinear_form(b, a, d) == -2


def test_d_lambda_alpha():
    d = validate_datum([[2]])
    # 2(α,Λ) − (α,α) for Λ = 3Λ_1, α = 2α_1: 2·6 − 8 = 4
    assert d_lambda_alpha(DominantWeight((3,)), RootVector((2,)), d) == 4


def test_enumerate_sequences_counts_and_content():
    d = validate_datum([[2, -1], [-1, 2]])
    alpha = RootVector((2, 1))
    seqs = enumerate_sequences(alpha, d)
    assert len(seqs) == multinomial(alpha) == 3
    assert seqs == sorted(seqs)
    for nu in seqs:
        assert root_of_sequence(nu, d).coefficients == alpha.coefficients


def test_default_q_validates_over_all_fields():
    for m in ([[2]], [[2, -1], [-1, 2]], [[2, -2], [-1, 2]]):
        d = validate_datum(m)
        q = default_q_matrix(d)
        for F in (QQ, GF(2), GF(3), GF(5)):
            require_valid_q(q, d, F)


def test_q_validation_rejects_asymmetry():
    d = validate_datum([[2, -1], [-1, 2]])
    q = default_q_matrix(d)
    bad = dict(q.coefficients)
    bad[(0, 1, 1, 0)] = bad.get((0, 1, 1, 0), 0) + 1  # breaks c_{ijkq}=c_{jiqk}
    from klrcocenter.cartan import QPolynomialMatrix

    errs = validate_q_matrix(QPolynomialMatrix(bad), d, QQ)
    assert errs


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=-3, max_value=0), st.integers(min_value=-3, max_value=0))
def test_rank2_validation_consistency(a, b):
    m = [[2, a], [b, 2]]
    if (a == 0) != (b == 0):
        with pytest.raises(InvalidDatum):
            validate_datum(m)
    else:
        d = validate_datum(m)
        di, dj = d.symmetrizers
        assert di * a == dj * b  # symmetrizability
