import itertools

import pytest

from klrcocenter import cyclotomic as cy
from klrcocenter.cartan import (DominantWeight, RootVector, default_q_matrix,
                                validate_datum)
from klrcocenter.fields import GF, QQ

RANK1 = validate_datum([[2]])
RANK2_SYM = validate_datum([[2, -1], [-1, 2]])
RANK2_ASYM = validate_datum([[2, -2], [-1, 2]])

FIELDS = (QQ, GF(2), GF(3))


def roots_of_height(rank, hmax):
    out = []
    for h in range(1, hmax + 1):
        for coef in itertools.product(range(h + 1), repeat=rank):
            if sum(coef) == h:
                out.append(coef)
    return out


def acceptance_instances():
    """(datum, weight, alpha) triples for the build suite."""
    out = []
    for ell in (1, 2, 3):
        for n in (1, 2, 3):
            out.append((RANK1, (ell,), (n,)))
    for lam in ((1, 0), (1, 1)):
        for a in roots_of_height(2, 3):
            out.append((RANK2_SYM, lam, a))
    for a in roots_of_height(2, 2):
        out.append((RANK2_ASYM, (1, 0), a))
    return out


@pytest.fixture(scope="session")
def built_instances():
    """All acceptance-suite algebras over ℚ, F_2, F_3, built once."""
    out = []
    for datum, lam, alpha in acceptance_instances():
        q = default_q_matrix(datum)
        for F in FIELDS:
            out.append(cy.build(datum, q, DominantWeight(lam),
                                RootVector(alpha), F))
    return out


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.CONCLUSIONS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.CONCLUSIONS:
            terminalreporter.write_line(line)
