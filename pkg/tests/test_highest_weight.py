import pytest

from klrcocenter.cartan import (DominantWeight, RootVector, validate_datum)
from klrcocenter.highest_weight import gram_matrix, weight_multiplicity

RANK1 = validate_datum([[2]])
RANK2 = validate_datum([[2, -1], [-1, 2]])
RANK2B = validate_datum([[2, -2], [-1, 2]])
RANK3 = validate_datum([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])


def test_rank1_string_module():
    for ell in (1, 2, 3, 4):
        for n in range(0, ell + 3):
            m = weight_multiplicity(RANK1, DominantWeight((ell,)), RootVector((n,)))
            assert m == (1 if n <= ell else 0)


def total_dim(datum, lam, hmax):
    import itertools

    rank = len(datum.cartan_matrix)
    tot = 0
    for h in range(hmax + 1):
        for coef in itertools.product(range(h + 1), repeat=rank):
            if sum(coef) == h:
                tot += weight_multiplicity(datum, DominantWeight(lam),
                                           RootVector(coef))
    return tot


def test_small_module_dimensions():
    # fundamental and adjoint modules of the rank-2 symmetric datum
    assert total_dim(RANK2, (1, 0), 4) == 3
    assert total_dim(RANK2, (0, 1), 4) == 3
    assert total_dim(RANK2, (1, 1), 5) == 8
    assert total_dim(RANK2, (2, 0), 5) == 6
    # rank-3 symmetric datum, both fundamental endpoints
    assert total_dim(RANK3, (1, 0, 0), 5) == 4
    assert total_dim(RANK3, (0, 1, 0), 5) == 6


def test_rank2_asymmetric_module():
    assert total_dim(RANK2B, (1, 0), 5) == 4
    assert total_dim(RANK2B, (0, 1), 5) == 5


def test_gram_matrix_symmetric():
    seqs, m = gram_matrix(RANK2, DominantWeight((1, 1)), RootVector((1, 1)))
    assert len(seqs) == 2
    for i in range(2):
        for j in range(2):
            assert m[i, j] == m[j, i]


def test_weight_multiplicity_zero_weight_of_adjoint():
    assert weight_multiplicity(RANK2, DominantWeight((1, 1)),
                               RootVector((1, 1))) == 2
    assert weight_multiplicity(RANK3, DominantWeight((1, 0, 1)),
                               RootVector((1, 1, 1))) == 3
