"""Block combinatorics of sequences and the distinguished cocenter elements.

A sequence ν decomposes uniquely into maximal constant runs ("blocks").
Each block carries a level ℓ_j = ⟨h_{ν^j}, Λ − Σ_{t ≤ c_{j−1}} α_{ν_t}⟩;
ν is piecewise dominant when ℓ_j ≥ b_j for every block.  From the blocks
we build the distinguished elements whose cocenter images span the top
degree (Z^Λ(ν)), degree zero (the divided-power idempotents e(ν)^(−)),
and the whole cocenter (the sets R^Λ(ν) and the spanning families).

Index normalization: products attached to block t always use block t's
own positions [c_{t−1}+1, c_t].
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dfield

from .cartan import (CartanDatum, DominantWeight, RootVector,
                     coweight_pairing, enumerate_sequences)
from .cyclotomic import CyclotomicAlgebra
from .errors import CriterionMismatch, KLRError
from .linalg import make_echelon


class NotPiecewiseDominant(KLRError):
    pass


class NotIdempotent(KLRError):
    pass


# ---------------------------------------------------------------------------
# block combinatorics


def _partial_alpha(datum: CartanDatum, nu, upto: int) -> RootVector:
    """Σ_{t=1}^{upto} α_{ν_t} as a root vector."""
    coef = [0] * len(datum.cartan_matrix)
    for t in range(upto):
        coef[nu[t]] += 1
    return RootVector(tuple(coef))


@dataclass(frozen=True)
class BlockDecomposition:
    values: tuple      # ν^1..ν^m
    sizes: tuple       # b_1..b_m
    bounds: tuple      # c_0..c_m
    levels: tuple      # ℓ_1..ℓ_m
    maximal_positions: tuple  # k_1..k_m

    @property
    def m(self):
        return len(self.sizes)


def block_decompose(nu, lam: DominantWeight, datum: CartanDatum) -> BlockDecomposition:
    values, sizes = [], []
    for v, run in itertools.groupby(nu):
        values.append(v)
        sizes.append(sum(1 for _ in run))
    bounds = [0]
    for b in sizes:
        bounds.append(bounds[-1] + b)
    levels = [
        coweight_pairing(values[j], lam, _partial_alpha(datum, nu, bounds[j]), datum)
        for j in range(len(sizes))
    ]
    kpos = [
        bounds[i + 1] if levels[i] - 2 * sizes[i] >= 0
        else levels[i] + 2 * bounds[i] - bounds[i + 1] + 1
        for i in range(len(sizes))
    ]
    return BlockDecomposition(tuple(values), tuple(sizes), tuple(bounds),
                              tuple(levels), tuple(kpos))


def is_piecewise_dominant(nu, lam: DominantWeight, datum: CartanDatum) -> bool:
    bd = block_decompose(nu, lam, datum)
    direct = all(l >= b for l, b in zip(bd.levels, bd.sizes))
    # alternative criterion: each block admits a position k' with
    # ⟨h_{ν^i}, Λ − Σ_{j<k'} α_{ν_j}⟩ ≥ c_i − k' + 1
    alt = True
    for i in range(bd.m):
        c_lo, c_hi = bd.bounds[i], bd.bounds[i + 1]
        found = any(
            coweight_pairing(bd.values[i], lam,
                             _partial_alpha(datum, nu, kp - 1), datum)
            >= c_hi - kp + 1
            for kp in range(c_lo + 1, c_hi + 1)
        )
        if not found:
            alt = False
            break
    if direct != alt:
        raise CriterionMismatch(f"dominance criteria disagree on {nu}")
    return direct


def enumerate_pd(alpha: RootVector, lam: DominantWeight,
                 datum: CartanDatum) -> list[tuple]:
    return [nu for nu in enumerate_sequences(alpha, datum)
            if is_piecewise_dominant(nu, lam, datum)]


@dataclass(frozen=True)
class Refinement:
    sizes: tuple       # b_1..b_m (composition refining the constant runs)
    bounds: tuple      # c_0..c_m
    lambdas: tuple     # λ_{c_0,ν} .. λ_{c_{m−1},ν}
    positive: bool     # all λ > 0, i.e. member of C^Λ(ν)


def refinements(nu, lam: DominantWeight, datum: CartanDatum) -> list[Refinement]:
    """All compositions of ν into constant blocks, with λ values."""
    n = len(nu)
    runs = block_decompose(nu, lam, datum) if n else None
    out = []

    def splits(run_sizes):
        if not run_sizes:
            yield ()
            return
        b0 = run_sizes[0]
        for comp in _compositions(b0):
            for rest in splits(run_sizes[1:]):
                yield comp + rest

    run_sizes = runs.sizes if n else ()
    for sizes in splits(run_sizes):
        bounds = [0]
        for b in sizes:
            bounds.append(bounds[-1] + b)
        lambdas = tuple(
            coweight_pairing(nu[bounds[i]], lam,
                             _partial_alpha(datum, nu, bounds[i]), datum)
            for i in range(len(sizes))
        )
        out.append(Refinement(tuple(sizes), tuple(bounds), lambdas,
                              all(l > 0 for l in lambdas)))
    return out


def _compositions(n: int):
    """Compositions of n with positive parts, deterministic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# distinguished elements (as generator words acting on e(ν))


def _word_x(k: int, e: int = 1) -> tuple:
    return (("x", k),) * e


def _word_taus(a: int, b: int) -> tuple:
    return tuple(("t", l) for l in range(a, b + 1))


def _word_interval(u: int, v: int) -> tuple:
    """Word of e_{[u,v]}: τ-rows then x_{u+1}¹ ⋯ x_v^{v−u}."""
    word: tuple = ()
    for end in range(v - 1, u - 1, -1):
        word += _word_taus(u, end)
    for j in range(u + 1, v + 1):
        word += _word_x(j, j - u)
    return word


def z_lambda_word(nu, lam: DominantWeight, datum: CartanDatum) -> tuple:
    """Word of Z^Λ(ν) = Π_t Z^Λ(ν)_t; requires ν piecewise dominant."""
    bd = _require_pd(nu, lam, datum)
    word: tuple = ()
    for t in range(bd.m):
        lo, b, l = bd.bounds[t], bd.sizes[t], bd.levels[t]
        if l >= 2 * b - 1:
            for r in range(1, b + 1):
                word += _word_x(lo + r, l - (2 * r - 1))
        elif b < l:
            p = l + 2 * lo - bd.bounds[t + 1]  # = lo + (l − b)
            for r in range(1, p - lo + 1):
                word += _word_x(lo + r, l - (2 * r - 1))
            word += _word_interval(p + 1, bd.bounds[t + 1])
        else:  # l == b
            word += _word_interval(lo + 1, bd.bounds[t + 1])
    return word


def z_prime_word(nu, lam: DominantWeight, datum: CartanDatum) -> tuple:
    """Word of Z'(ν) = Π_i Z'(ν)_i; requires ν piecewise dominant."""
    bd = _require_pd(nu, lam, datum)
    word: tuple = ()
    for i in range(bd.m):
        lo, hi, b, l = bd.bounds[i], bd.bounds[i + 1], bd.sizes[i], bd.levels[i]
        if l >= 2 * b:
            for r in range(1, b + 1):
                word += _word_x(lo + r, l - (2 * r - 1))
        else:
            ki = bd.maximal_positions[i]
            for r in range(1, ki - lo + 1):
                word += _word_x(lo + r, l - (2 * r - 1))
            word += _word_taus(ki, hi - 1)
    return word


def e_minus_word(nu, lam: DominantWeight, datum: CartanDatum) -> tuple:
    bd = block_decompose(nu, lam, datum)
    word: tuple = ()
    for t in range(bd.m):
        word += _word_interval(bd.bounds[t] + 1, bd.bounds[t + 1])
    return word


def r_lambda_words(nu, lam: DominantWeight, datum: CartanDatum) -> list[tuple]:
    """Words of the set R^Λ(ν) = Π_t R^Λ(ν)_t; requires ν piecewise dominant."""
    bd = _require_pd(nu, lam, datum)
    per_block = []
    for t in range(bd.m):
        lo, hi, l = bd.bounds[t], bd.bounds[t + 1], bd.levels[t]
        block_words = []
        # chains lo+1 = a_1 < a_2 < ⋯ < a_d < a_{d+1} = hi+1
        for inner in _chains(lo + 1, hi + 1):
            a = (lo + 1,) + inner + (hi + 1,)
            d = len(a) - 1
            for ls in itertools.product(range(l), repeat=d):
                w: tuple = ()
                for j in range(d):
                    w += _word_interval(a[j], a[j + 1] - 1)
                    w += _word_x(a[j + 1] - 1, ls[j])
                block_words.append(w)
        per_block.append(block_words)
    return [sum(choice, ()) for choice in itertools.product(*per_block)]


def _chains(lo_excl: int, hi_excl: int):
    """All strictly increasing tuples inside the open interval (lo, hi)."""
    pool = range(lo_excl + 1, hi_excl)
    for d in range(len(pool) + 1):
        yield from itertools.combinations(pool, d)


def spanning_family_words(nu, lam: DominantWeight,
                          datum: CartanDatum) -> list[tuple]:
    """Words spanning R^Λ_{ν,1}: over b ∈ C^Λ(ν), the products
    Π_i x_{c_i+1}^{n_i} τ_{c_i+1} ⋯ τ_{c_{i+1}−1} e(ν), 0 ≤ n_i < λ_{c_i,ν}."""
    out = []
    for ref in refinements(nu, lam, datum):
        if not ref.positive:
            continue
        m = len(ref.sizes)
        for ns in itertools.product(*[range(ref.lambdas[i]) for i in range(m)]):
            w: tuple = ()
            for i in range(m):
                w += _word_x(ref.bounds[i] + 1, ns[i])
                w += _word_taus(ref.bounds[i] + 1, ref.bounds[i + 1] - 1)
            out.append(w)
    return out


def _require_pd(nu, lam, datum) -> BlockDecomposition:
    if not is_piecewise_dominant(nu, lam, datum):
        raise NotPiecewiseDominant(f"{nu}")
    return block_decompose(nu, lam, datum)


def build_distinguished(kind: str, A: CyclotomicAlgebra, nu=None) -> dict | list[dict]:
    """Images in A of the distinguished elements; coordinates on A's basis."""
    lam, datum = A.lam, A.datum
    if kind == "Z_Lambda":
        return A.element_of_word(z_lambda_word(nu, lam, datum), nu)
    if kind == "Z_prime":
        return A.element_of_word(z_prime_word(nu, lam, datum), nu)
    if kind == "e_minus":
        return A.element_of_word(e_minus_word(nu, lam, datum), nu)
    if kind == "R_Lambda_set":
        return [A.element_of_word(w, nu) for w in r_lambda_words(nu, lam, datum)]
    if kind == "spanning_family":
        return [A.element_of_word(w, nu)
                for w in spanning_family_words(nu, lam, datum)]
    if kind == "e_sum":
        out: dict = {}
        for pd in enumerate_pd(A.alpha, lam, datum):
            _acc(A.field, out, A.idempotent_coords(pd))
        return out
    if kind == "e_sum_minus":
        out = {}
        for pd in enumerate_pd(A.alpha, lam, datum):
            _acc(A.field, out, A.element_of_word(e_minus_word(pd, lam, datum), pd))
        return out
    raise KLRError(f"unknown kind {kind!r}")


def _acc(F, out: dict, inc: dict):
    for k, v in inc.items():
        w = F.add(out.get(k, F.zero), v)
        if F.is_zero(w):
            out.pop(k, None)
        else:
            out[k] = w


# ---------------------------------------------------------------------------
# verification


def _comm_ech(A: CyclotomicAlgebra):
    ech = getattr(A, "_comm_ech", None)
    if ech is None:
        from .cocenter import commutator_echelon

        ech = commutator_echelon(A)
        A._comm_ech = ech
    return ech


def _span_covers(A, vectors, target_degrees=None) -> bool:
    """Do the cocenter images of `vectors` span Tr (restricted to degrees)?"""
    from .cocenter import cocenter_dims

    comm = _comm_ech(A)
    tr = cocenter_dims(A)
    if target_degrees is None:
        target = sum(tr.values())
    else:
        target = sum(m for d, m in tr.items() if d in target_degrees)
    ech = make_echelon(A.field, A.dim)
    got = 0
    for v in vectors:
        res = comm.residual(v)
        if res and ech.insert(res):
            got += 1
    return got == target


def verify_spans(A: CyclotomicAlgebra) -> dict:
    """Span and vanishing checks for the distinguished cocenter elements."""
    from .cocenter import trace_equal

    lam, datum = A.lam, A.datum
    seqs = A.ctx.sequences
    pds = enumerate_pd(A.alpha, lam, datum)
    report: dict = {}

    if A.dim == 0:
        return {k: True for k in "abcdefg"}

    z_imgs = [build_distinguished("Z_Lambda", A, nu) for nu in pds]
    report["a"] = _span_covers(A, z_imgs, {A.d_top})

    em_imgs = [build_distinguished("e_minus", A, nu) for nu in pds]
    report["b"] = _span_covers(A, em_imgs, {0})

    r_imgs = [v for nu in pds for v in build_distinguished("R_Lambda_set", A, nu)]
    report["c"] = _span_covers(A, r_imgs)

    fam = {nu: build_distinguished("spanning_family", A, nu) for nu in seqs}
    report["d"] = _span_covers(A, [v for vs in fam.values() for v in vs])

    comm = _comm_ech(A)
    report["e"] = all(
        not comm.residual(v)
        for nu in seqs if nu not in pds
        for v in fam[nu]
    )

    ok_f = True
    for nu, img in zip(pds, z_imgs):
        if img and A.coord_degree(img) != A.d_top:
            ok_f = False
    report["f"] = ok_f

    ok_g = True
    F = A.field
    for nu in seqs:
        n = len(nu)
        for u in range(1, n + 1):
            for v in range(u, n + 1):
                if len(set(nu[u - 1:v])) != 1:
                    continue
                lhs = A.element_of_word(_word_interval(u, v), nu)
                lhs = {k: F.mul(F.from_int(math.factorial(v - u + 1)), c)
                       for k, c in lhs.items()}
                lhs = {k: c for k, c in lhs.items() if not F.is_zero(c)}
                if not trace_equal(A, lhs, A.idempotent_coords(nu)):
                    ok_g = False
    report["g"] = ok_g
    return report


def fullness_check(A: CyclotomicAlgebra, e: dict) -> bool:
    """Does the two-sided ideal A·e·A equal A?"""
    if A.dim == 0:
        return True
    if not A.is_idempotent(e):
        raise NotIdempotent("fullness_check requires an idempotent")
    F = A.field
    ech = make_echelon(F, A.dim)
    rank = 0
    for i in range(A.dim):
        left = A.multiply({i: F.one}, e)
        if not left:
            continue
        for j in range(A.dim):
            v = A.multiply(left, {j: F.one})
            if v and ech.insert(v):
                rank += 1
                if rank == A.dim:
                    return True
    return rank == A.dim


def z_prime_proportionality(A: CyclotomicAlgebra, nu):
    """Cocenter images of Z'(ν) and Z^Λ(ν): (proportional?, scalar or None)."""
    comm = _comm_ech(A)
    zp = comm.residual(build_distinguished("Z_prime", A, nu))
    zl = comm.residual(build_distinguished("Z_Lambda", A, nu))
    F = A.field
    if not zp:
        return True, F.zero
    if not zl:
        return False, None
    k = next(iter(zl))
    if k not in zp:
        return False, None
    c = F.div(zp[k], zl[k])
    scaled = {m: F.mul(c, v) for m, v in zl.items()}
    return (scaled == zp), (c if scaled == zp else None)


def verify_lemma_cocenter_cases(A: CyclotomicAlgebra) -> dict:
    """Cocenter membership for run-local monomials.

    For every ν, refinement b ∈ C(ν), and block index t:
    (1) x_{c_t+1}^k τ_{c_t+1} ⋯ τ_{c_{t+1}−1} e(ν) dies in Tr when
        k < b_{t+1} − 1;
    (3) at k = b_{t+1} − 1 its image lies on the line of e_{[c_t+1,c_{t+1}]} e(ν);
    (4) every chain product Π_j e_{[a_j, a_{j+1}−1]} e(ν) lies on that line.
    """
    comm = _comm_ech(A)
    F = A.field
    ok1 = ok3 = ok4 = True
    for nu in A.ctx.sequences:
        for ref in refinements(nu, A.lam, A.datum):
            for t in range(len(ref.sizes)):
                lo, hi, b = ref.bounds[t], ref.bounds[t + 1], ref.sizes[t]
                line = comm.residual(A.element_of_word(_word_interval(lo + 1, hi), nu))
                for k in range(b):
                    w = _word_x(lo + 1, k) + _word_taus(lo + 1, hi - 1)
                    img = comm.residual(A.element_of_word(w, nu))
                    if k < b - 1:
                        ok1 = ok1 and not img
                    else:
                        ok3 = ok3 and _on_line(F, img, line)
                for inner in _chains(lo + 1, hi + 1):
                    a = (lo + 1,) + inner + (hi + 1,)
                    w = ()
                    for j in range(len(a) - 1):
                        w += _word_interval(a[j], a[j + 1] - 1)
                    img = comm.residual(A.element_of_word(w, nu))
                    ok4 = ok4 and _on_line(F, img, line)
    return {"case1": ok1, "case3": ok3, "case4": ok4}


def _on_line(F, img: dict, line: dict) -> bool:
    if not img:
        return True
    if not line:
        return False
    k = next(iter(line))
    if k not in img:
        return False
    c = F.div(img[k], line[k])
    return {m: F.mul(c, v) for m, v in line.items()} == img
