"""Contravariant form on a highest-weight module, over ℚ.

For a dominant integral weight Λ the module generated by a highest-weight
vector v_Λ carries a unique symmetric bilinear form with ⟨v_Λ, v_Λ⟩ = 1
and ⟨f_i u, w⟩ = ⟨u, e_i w⟩.  Vectors are labelled by sequences
ν = (ν_1, …, ν_n), standing for f_{ν_n} ⋯ f_{ν_1} v_Λ.  The rank of the
Gram matrix on all sequences of content α is the dimension of the weight
space (Λ − α) of the irreducible module V(Λ).
"""
from __future__ import annotations

from fractions import Fraction

from .cartan import CartanDatum, DominantWeight, RootVector, enumerate_sequences
from .fields import QQ
from .linalg import SparseMatrix, rank_of


def _pair(datum: CartanDatum, lam: DominantWeight, nu: tuple, mu: tuple,
          memo: dict) -> Fraction:
    """⟨f_{ν_n}⋯f_{ν_1} v, f_{μ_n}⋯f_{μ_1} v⟩ in the Verma/contravariant sense."""
    if not nu:
        return Fraction(1)
    key = (nu, mu)
    hit = memo.get(key)
    if hit is not None:
        return hit
    # peel the outermost factor f_i with i = ν_n and push e_i across μ:
    # e_i f_{μ_n}⋯f_{μ_1} v = Σ_{j: μ_j = i} c_j · f_{μ_n}⋯ f̂_{μ_j} ⋯f_{μ_1} v,
    # c_j = ⟨h_i, Λ⟩ − Σ_{t < j} a_{i, μ_t}
    i = nu[-1]
    rest = nu[:-1]
    total = Fraction(0)
    for j, mj in enumerate(mu):
        if mj != i:
            continue
        c = lam.pairing(i) - sum(datum.a(i, mu[t]) for t in range(j))
        if c == 0:
            continue
        total += c * _pair(datum, lam, rest, mu[:j] + mu[j + 1:], memo)
    memo[key] = total
    return total


def gram_matrix(datum: CartanDatum, lam: DominantWeight,
                alpha: RootVector) -> tuple[list[tuple], SparseMatrix]:
    seqs = enumerate_sequences(alpha, datum)
    m = SparseMatrix(len(seqs), len(seqs), QQ)
    memo: dict = {}
    for r, nu in enumerate(seqs):
        for c in range(r, len(seqs)):
            v = _pair(datum, lam, nu, seqs[c], memo)
            if v:
                m[r, c] = v
                if c != r:
                    m[c, r] = v
    return seqs, m


def weight_multiplicity(datum: CartanDatum, lam: DominantWeight,
                        alpha: RootVector) -> int:
    """dim of the (Λ − α) weight space of the irreducible module V(Λ)."""
    if alpha.height == 0:
        return 1
    _, m = gram_matrix(datum, lam, alpha)
    return rank_of(m.row_dicts(), QQ)
