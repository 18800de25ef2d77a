"""Cocenter Tr(A) = A/[A,A] and center Z(A) of a graded algebra.

Both are computed degreewise by exact linear algebra from the structure
constants.  Grading conventions: for the duality check the center is read
against the shifted cocenter, dim Tr_d = dim Z_{d_top − d} with
d_top = 2(α, Λ) − (α, α).
"""
from __future__ import annotations

from .cartan import d_lambda_alpha
from .cyclotomic import CyclotomicAlgebra
from .errors import NonHomogeneous
from .linalg import make_echelon, rank_of


def commutator_echelon(A: CyclotomicAlgebra):
    """Echelon of span{b_i b_j − b_j b_i} in basis coordinates."""
    F = A.field
    ech = make_echelon(F, A.dim)
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            ij = A.structure.get((i, j), {})
            ji = A.structure.get((j, i), {})
            vec = dict(ij)
            for k, v in ji.items():
                w = F.sub(vec.get(k, F.zero), v)
                if F.is_zero(w):
                    vec.pop(k, None)
                else:
                    vec[k] = w
            if vec:
                ech.insert(vec)
    return ech


def cocenter_dims(A: CyclotomicAlgebra) -> dict[int, int]:
    """Graded dimensions of Tr(A) = A/[A, A]."""
    out = dict(A.graded_dims())
    for p in commutator_echelon(A).pivots:
        d = A.degrees[p]
        out[d] -= 1
        if out[d] == 0:
            del out[d]
    return dict(sorted(out.items()))


def project_to_cocenter(A: CyclotomicAlgebra, coords: dict) -> dict:
    """Image of a homogeneous element in Tr(A), on non-pivot coordinates."""
    A.coord_degree(coords)  # raises NonHomogeneous when mixed
    return commutator_echelon(A).residual(coords)


def trace_equal(A: CyclotomicAlgebra, a: dict, b: dict) -> bool:
    F = A.field
    diff = dict(a)
    for k, v in b.items():
        w = F.sub(diff.get(k, F.zero), v)
        if F.is_zero(w):
            diff.pop(k, None)
        else:
            diff[k] = w
    if not diff:
        return True
    return commutator_echelon(A).contains(diff)


def algebra_generators(A: CyclotomicAlgebra) -> list[dict]:
    """Images of the presentation generators e(ν), x_k e(ν), τ_l e(ν)."""
    gens = []
    n = A.ctx.n
    for nu in A.ctx.sequences:
        gens.append(A.element_of_word((), nu))
        for k in range(1, n + 1):
            gens.append(A.element_of_word((("x", k),), nu))
        for l in range(1, n):
            gens.append(A.element_of_word((("t", l),), nu))
    return [g for g in gens if g]


def center_dims(A: CyclotomicAlgebra) -> dict[int, int]:
    """Graded dimensions of Z(A) = {z : zg = gz for all generators g}."""
    F = A.field
    gens = algebra_generators(A)
    by_degree: dict[int, list[int]] = {}
    for k, d in enumerate(A.degrees):
        by_degree.setdefault(d, []).append(k)
    out: dict[int, int] = {}
    for d, cols in sorted(by_degree.items()):
        rows = []
        for g in gens:
            # one constraint row per output coordinate of z·g − g·z
            cons: dict[int, dict] = {}
            for pos, k in enumerate(cols):
                zg = A.multiply({k: F.one}, g)
                gz = A.multiply(g, {k: F.one})
                for m, v in zg.items():
                    cons.setdefault(m, {})[pos] = v
                for m, v in gz.items():
                    row = cons.setdefault(m, {})
                    w = F.sub(row.get(pos, F.zero), v)
                    if F.is_zero(w):
                        row.pop(pos, None)
                    else:
                        row[pos] = w
            rows.extend(r for r in cons.values() if r)
        dim_d = len(cols) - rank_of(rows, F)
        if dim_d:
            out[d] = dim_d
    return out


# ---------------------------------------------------------------------------
# verification wrappers (report-oriented: each returns (ok, details))


def verify_degree_support(A: CyclotomicAlgebra):
    """Cocenter concentrated in even degrees within [0, d_top]."""
    tr = cocenter_dims(A)
    d_top = A.d_top
    bad = [d for d in tr if d < 0 or d > d_top or d % 2 != 0]
    return not bad, {"cocenter_dims": tr, "d_top": d_top, "violations": bad}


def verify_duality(A: CyclotomicAlgebra):
    """dim Tr_d = dim Z_{d_top − d} for every degree d."""
    tr = cocenter_dims(A)
    z = center_dims(A)
    d_top = A.d_top
    shifted = {d_top - d: m for d, m in z.items()}
    return tr == shifted, {"cocenter_dims": tr, "center_dims": z,
                           "d_top": d_top}


def verify_tr0_dimension(A: CyclotomicAlgebra):
    """dim Tr_0 equals the weight-space multiplicity dim V(Λ)_{Λ−α}."""
    from .highest_weight import weight_multiplicity

    tr = cocenter_dims(A)
    expected = weight_multiplicity(A.datum, A.lam, A.alpha)
    got = tr.get(0, 0)
    return got == expected, {"tr0": got, "weight_multiplicity": expected}


def is_symmetric_finite_type(datum) -> bool:
    """Symmetric Cartan matrix with positive leading principal minors."""
    m = datum.cartan_matrix
    r = len(m)
    if any(m[i][j] != m[j][i] for i in range(r) for j in range(r)):
        return False
    from fractions import Fraction

    for k in range(1, r + 1):
        rows = [[Fraction(m[i][j]) for j in range(k)] for i in range(k)]
        det = Fraction(1)
        for c in range(k):
            piv = next((i for i in range(c, k) if rows[i][c]), None)
            if piv is None:
                return False
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = -det
            det *= rows[c][c]
            for i in range(c + 1, k):
                f = rows[i][c] / rows[c][c]
                for j in range(c, k):
                    rows[i][j] -= f * rows[c][j]
        if det <= 0:
            return False
    return True


def top_degree_probe(A: CyclotomicAlgebra):
    """dim Tr_{d_top}; expected 1 in symmetric finite type over ℚ when A ≠ 0."""
    tr = cocenter_dims(A)
    got = tr.get(A.d_top, 0)
    asserted = (A.dim > 0 and A.field.char == 0
                and is_symmetric_finite_type(A.datum))
    ok = (got == 1) if asserted else True
    return ok, {"top_dim": got, "d_top": A.d_top, "asserted": asserted}
