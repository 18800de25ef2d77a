"""Cartan data, weights, roots, sequence enumeration, Q-polynomial matrices.

Node indices are 0-based positions into index_set everywhere in code;
labels are only used at the config/report boundary.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd

from .errors import InvalidDatum, KLRError
from .fields import ScalarField


class IndexMismatch(KLRError):
    pass


class CartanDatum:
    """A symmetrizable generalized Cartan matrix with minimal symmetrizers."""

    def __init__(self, matrix, symmetrizers, index_set):
        self.cartan_matrix = tuple(tuple(row) for row in matrix)
        self.symmetrizers = tuple(symmetrizers)
        self.index_set = tuple(index_set)
        self.rank = len(self.cartan_matrix)

    def a(self, i: int, j: int) -> int:
        return self.cartan_matrix[i][j]

    def d(self, i: int) -> int:
        return self.symmetrizers[i]

    def root_form(self, i: int, j: int) -> int:
        """(alpha_i, alpha_j) = d_i a_{ij}."""
        return self.d(i) * self.a(i, j)

    def __repr__(self):
        return f"CartanDatum({self.cartan_matrix}, d={self.symmetrizers})"


def _components(matrix) -> list[list[int]]:
    n = len(matrix)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and not seen[j] and matrix[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def validate_datum(matrix, symmetrizers=None, index_set=None) -> CartanDatum:
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise InvalidDatum("Cartan matrix must be square")
        for x in row:
            if not isinstance(x, int):
                raise InvalidDatum("Cartan matrix entries must be integers")
    for i in range(n):
        if matrix[i][i] != 2:
            raise InvalidDatum(f"diagonal entry a_{i}{i} = {matrix[i][i]} != 2")
        for j in range(n):
            if i != j:
                if matrix[i][j] > 0:
                    raise InvalidDatum(f"off-diagonal a_{i}{j} > 0")
                if (matrix[i][j] == 0) != (matrix[j][i] == 0):
                    raise InvalidDatum(f"zero asymmetry at ({i},{j})")
    if symmetrizers is None:
        symmetrizers = _minimal_symmetrizers(matrix)
    else:
        symmetrizers = tuple(symmetrizers)
        if len(symmetrizers) != n or any(d < 1 for d in symmetrizers):
            raise InvalidDatum("symmetrizers must be positive, one per node")
    for i in range(n):
        for j in range(n):
            if symmetrizers[i] * matrix[i][j] != symmetrizers[j] * matrix[j][i]:
                raise InvalidDatum(f"DA not symmetric at ({i},{j})")
    if index_set is None:
        index_set = tuple(str(i + 1) for i in range(n))
    return CartanDatum(matrix, symmetrizers, index_set)


def _minimal_symmetrizers(matrix) -> tuple[int, ...]:
    """Per indecomposable block: solve d_i a_{ij} = d_j a_{ji}, minimal positive."""
    n = len(matrix)
    d = [Fraction(0)] * n
    for comp in _components(matrix):
        d[comp[0]] = Fraction(1)
        todo = [comp[0]]
        placed = {comp[0]}
        while todo:
            i = todo.pop()
            for j in comp:
                if j not in placed and matrix[i][j] != 0:
                    # d_j = d_i a_{ij} / a_{ji}
                    d[j] = d[i] * matrix[i][j] / matrix[j][i]
                    if d[j] <= 0:
                        raise InvalidDatum("no positive symmetrizer exists")
                    placed.add(j)
                    todo.append(j)
        den = 1
        for i in comp:
            den = den * d[i].denominator // gcd(den, d[i].denominator)
        ints = [int(d[i] * den) for i in comp]
        g = 0
        for x in ints:
            g = gcd(g, x)
        for i, x in zip(comp, ints):
            d[i] = x // g
    out = tuple(int(x) for x in d)
    for i in range(n):
        for j in range(n):
            if out[i] * matrix[i][j] != out[j] * matrix[j][i]:
                raise InvalidDatum("matrix is not symmetrizable")
    return out


# ---------------------------------------------------------------------------
# Weights and roots: plain integer coordinate tuples against Λ_i / α_i.


class DominantWeight:
    def __init__(self, coefficients):
        self.coefficients = tuple(coefficients)
        if any(c < 0 for c in self.coefficients):
            raise InvalidDatum("dominant weight needs nonnegative coefficients")

    def pairing(self, i: int) -> int:
        """⟨h_i, Λ⟩."""
        return self.coefficients[i]

    def __repr__(self):
        return f"DominantWeight{self.coefficients}"


class RootVector:
    def __init__(self, coefficients):
        self.coefficients = tuple(coefficients)
        if any(c < 0 for c in self.coefficients):
            raise InvalidDatum("root vector needs nonnegative coefficients")
        self.height = sum(self.coefficients)

    def __repr__(self):
        return f"RootVector{self.coefficients}"


def _check_rank(datum: CartanDatum, *objs):
    for o in objs:
        if len(o.coefficients) != datum.rank:
            raise IndexMismatch("coefficient length != datum rank")


def bilinear_form(alpha: RootVector, beta: RootVector, datum: CartanDatum) -> int:
    _check_rank(datum, alpha, beta)
    return sum(
        alpha.coefficients[i] * beta.coefficients[j] * datum.root_form(i, j)
        for i in range(datum.rank)
        for j in range(datum.rank)
    )


def weight_root_form(lam: DominantWeight, alpha: RootVector, datum: CartanDatum) -> int:
    """(alpha, Λ) = Σ k_i d_i ⟨h_i, Λ⟩."""
    _check_rank(datum, lam, alpha)
    return sum(
        alpha.coefficients[i] * datum.d(i) * lam.pairing(i)
        for i in range(datum.rank)
    )


def d_lambda_alpha(lam: DominantWeight, alpha: RootVector, datum: CartanDatum) -> int:
    """d_{Λ,α} = 2(α,Λ) − (α,α); always even."""
    return 2 * weight_root_form(lam, alpha, datum) - bilinear_form(alpha, alpha, datum)


def coweight_pairing(i: int, lam: DominantWeight, alpha: RootVector,
                     datum: CartanDatum) -> int:
    """⟨h_i, Λ − α⟩ = ⟨h_i,Λ⟩ − Σ_j k_j a_{ij}."""
    return lam.pairing(i) - sum(
        alpha.coefficients[j] * datum.a(i, j) for j in range(datum.rank)
    )


def enumerate_sequences(alpha: RootVector, datum: CartanDatum) -> list[tuple[int, ...]]:
    """All ν ∈ I^α, lexicographic in node position order."""
    _check_rank(datum, alpha)

    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining):
        if sum(remaining) == 0:
            out.append(tuple(prefix))
            return
        for i in range(datum.rank):
            if remaining[i]:
                remaining[i] -= 1
                prefix.append(i)
                rec(prefix, remaining)
                prefix.pop()
                remaining[i] += 1

    rec([], list(alpha.coefficients))
    return out


def multinomial(alpha: RootVector) -> int:
    m = factorial(alpha.height)
    for k in alpha.coefficients:
        m //= factorial(k)
    return m


def root_of_sequence(nu, datum: CartanDatum) -> RootVector:
    coeffs = [0] * datum.rank
    for i in nu:
        coeffs[i] += 1
    return RootVector(coeffs)


# ---------------------------------------------------------------------------
# Q-polynomial matrices


class QPolynomialMatrix:
    """Sparse coefficients c_{i,j,k,q} of Q_{ij}(u,v) = Σ c u^k v^q.

    Coefficients are integers; they are mapped into the working field at
    use time (validation re-checks unit leading coefficients per field).
    """

    def __init__(self, coefficients: dict):
        self.coefficients = {k: v for k, v in coefficients.items() if v != 0}

    def poly(self, i: int, j: int) -> dict:
        """{(k,q): int coefficient} of Q_{ij}."""
        return {
            (k, q): v
            for (a, b, k, q), v in self.coefficients.items()
            if (a, b) == (i, j)
        }


def default_q_matrix(datum: CartanDatum) -> QPolynomialMatrix:
    """Q_{ij}(u,v) = u^{−a_ij} + v^{−a_ji} for adjacent i ≠ j, else 1."""
    coeffs: dict = {}
    for i in range(datum.rank):
        for j in range(datum.rank):
            if i == j:
                continue
            if datum.a(i, j) == 0:
                coeffs[(i, j, 0, 0)] = 1
            else:
                coeffs[(i, j, -datum.a(i, j), 0)] = coeffs.get((i, j, -datum.a(i, j), 0), 0) + 1
                coeffs[(i, j, 0, -datum.a(j, i))] = coeffs.get((i, j, 0, -datum.a(j, i)), 0) + 1
    return QPolynomialMatrix(coeffs)


class QValidationError(InvalidDatum):
    pass


def validate_q_matrix(q: QPolynomialMatrix, datum: CartanDatum,
                      field: ScalarField) -> list[str]:
    """Return the list of violations (empty = valid)."""
    errs = []
    for (i, j, k, qe), v in q.coefficients.items():
        if i == j:
            errs.append(f"DiagonalNonzero: Q_{i}{i} has entry ({k},{qe})")
            continue
        if q.coefficients.get((j, i, qe, k), 0) != v:
            errs.append(f"SymmetryViolation: c_({i},{j},{k},{qe})")
        lhs = 2 * datum.root_form(i, j)
        rhs = -datum.root_form(i, i) * k - datum.root_form(j, j) * qe
        if lhs != rhs:
            errs.append(f"HomogeneitySupportViolation: c_({i},{j},{k},{qe})")
    for i in range(datum.rank):
        for j in range(datum.rank):
            if i == j:
                continue
            lead = q.coefficients.get((i, j, -datum.a(i, j), 0), 0)
            if field.is_zero(field.from_int(lead)):
                errs.append(f"LeadingCoefficientNotUnit: Q_{i}{j}")
    return errs


def require_valid_q(q: QPolynomialMatrix, datum: CartanDatum, field: ScalarField):
    errs = validate_q_matrix(q, datum, field)
    if errs:
        raise QValidationError("; ".join(errs))
    return q
