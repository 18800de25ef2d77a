"""Build R_α^Λ = R_α / I_{Λ,α} as an explicit graded algebra.

Working coordinates are PBW monomials (w, a, ν) with all exponents < B.
The defining ideal is computed as a fixed-point closure: seed with the
cyclotomic generators x_1^{⟨h_{ν_1},Λ⟩} e(ν), multiply by generators on
both sides, echelonize until stable.  Monomials with an exponent >= B are
dropped ("absorbed" into the ideal); that is sound exactly when each
x_k e(ν) has a nilpotency witness x_k^m e(ν), m < B, derived without any
truncation — a second echelon tracks such truncation-free derivations and
provides the certificate.  If the certificate fails, B is doubled (at
most twice) before giving up with NeedLargerB.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from fractions import Fraction

from .cartan import (CartanDatum, DominantWeight, QPolynomialMatrix,
                     RootVector, d_lambda_alpha)
from .errors import InconsistentClosure, KLRError, NeedLargerB
from .fields import ScalarField, field_by_name
from .linalg import make_echelon
from .presentation import (AlgElement, KLRContext, canonical_word,
                           identity_perm, perm_act_seq, seq_swap, tsyms,
                           xsyms)


class DimensionMismatch(KLRError):
    pass


def cyclotomic_generator(ctx: KLRContext, lam: DominantWeight) -> list[AlgElement]:
    """The elements x_1^{⟨h_{ν_1},Λ⟩} e(ν), one per ν ∈ I^α."""
    out = []
    n = ctx.n
    if n == 0:
        return out
    for nu in ctx.sequences:
        m = lam.pairing(nu[0])
        a = tuple(m if k == 0 else 0 for k in range(n))
        out.append(AlgElement(ctx, {(identity_perm(n), a, nu): ctx.field.one}))
    return out


class CyclotomicAlgebra:
    """Finite-dimensional graded algebra with explicit structure constants."""

    def __init__(self, ctx, lam, B, basis, degrees, structure, identity,
                 certificate, ideal):
        self.ctx = ctx
        self.field = ctx.field
        self.datum = ctx.datum
        self.lam = lam
        self.alpha = ctx.alpha
        self.B = B
        self.basis = basis            # list of monomial keys (w, a, ν)
        self.degrees = degrees        # degree per basis position
        self.structure = structure    # (i, j) -> {k: scalar}
        self.identity = identity      # {k: scalar}
        self.certificate = certificate
        self._ideal = ideal           # echelon + monomial indexing (reduction)
        self.dim = len(basis)
        self.d_top = d_lambda_alpha(lam, ctx.alpha, ctx.datum)

    # -- quotient arithmetic ------------------------------------------------

    def multiply(self, a: dict, b: dict) -> dict:
        F = self.field
        out: dict = {}
        for i, ci in a.items():
            if not 0 <= i < self.dim:
                raise DimensionMismatch(f"coordinate {i}")
            for j, cj in b.items():
                row = self.structure.get((i, j))
                if not row:
                    continue
                c = F.mul(ci, cj)
                for k, v in row.items():
                    w = F.add(out.get(k, F.zero), F.mul(c, v))
                    if F.is_zero(w):
                        out.pop(k, None)
                    else:
                        out[k] = w
        return out

    def graded_dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def coord_degree(self, coords: dict):
        degs = {self.degrees[k] for k in coords}
        if len(degs) > 1:
            from .errors import NonHomogeneous
            raise NonHomogeneous(f"degrees {sorted(degs)}")
        return degs.pop() if degs else None

    # -- reduction of presentation-level elements ----------------------------

    def reduce_element(self, el: AlgElement) -> dict:
        """Coordinates of an AlgElement's image in the quotient basis."""
        ech, index, basis_pos = self._ideal
        F = self.field
        vec: dict = {}
        for key, c in el.coords.items():
            if any(x >= self.B for x in key[1]):
                continue  # certified ideal member
            vec[index[key]] = c
        res = ech.residual(vec)
        return {basis_pos[m]: v for m, v in res.items()}

    def element_of_word(self, symbols, nu) -> dict:
        ctx = self.ctx
        el = AlgElement(ctx, ctx.normal_form_terms([(ctx.field.one, symbols, nu)]))
        return self.reduce_element(el)

    def idempotent_coords(self, nu) -> dict:
        return self.element_of_word((), tuple(nu))

    def is_idempotent(self, e: dict) -> bool:
        return self.multiply(e, e) == e

    # -- serialization --------------------------------------------------------

    def save(self, path: str):
        def scal(v):
            return str(v)

        doc = {
            "format": "klrcocenter-algebra-v1",
            "field": self.field.name,
            "cartan_matrix": [list(r) for r in self.datum.cartan_matrix],
            "symmetrizers": list(self.datum.symmetrizers),
            "weight": list(self.lam.coefficients),
            "alpha": list(self.alpha.coefficients),
            "B": self.B,
            "certificate": {f"{k}|{','.join(map(str, nu))}": m
                            for (k, nu), m in self.certificate.items()},
            "basis": [
                {"w": list(w), "a": list(a), "nu": list(nu), "degree": d}
                for (w, a, nu), d in zip(self.basis, self.degrees)
            ],
            "identity": {str(k): scal(v) for k, v in self.identity.items()},
            "structure": [
                [i, j, k, scal(v)]
                for (i, j), row in sorted(self.structure.items())
                for k, v in sorted(row.items())
            ],
        }
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)

    @staticmethod
    def load_header(path: str) -> dict:
        with open(path) as fh:
            doc = json.load(fh)
        if doc.get("format") != "klrcocenter-algebra-v1":
            raise KLRError("unrecognized algebra artifact")
        return doc


def _parse_scalar(field: ScalarField, s: str):
    if field.char == 0:
        return Fraction(s)
    return int(s) % field.char


class StoredAlgebra:
    """Structure-constant algebra reconstructed from a saved artifact.

    Supports multiplication and graded queries; presentation-level
    reduction requires rebuilding with `build`.
    """

    multiply = CyclotomicAlgebra.multiply
    graded_dims = CyclotomicAlgebra.graded_dims
    coord_degree = CyclotomicAlgebra.coord_degree
    is_idempotent = CyclotomicAlgebra.is_idempotent

    def __init__(self, path: str):
        doc = CyclotomicAlgebra.load_header(path)
        self.field = field_by_name(doc["field"])
        self.B = doc["B"]
        self.basis = [(tuple(b["w"]), tuple(b["a"]), tuple(b["nu"]))
                      for b in doc["basis"]]
        self.degrees = [b["degree"] for b in doc["basis"]]
        self.dim = len(self.basis)
        self.certificate = {
            (int(key.split("|")[0]),
             tuple(int(x) for x in key.split("|")[1].split(",") if x)): m
            for key, m in doc["certificate"].items()
        }
        self.identity = {int(k): _parse_scalar(self.field, v)
                         for k, v in doc["identity"].items()}
        self.structure: dict = {}
        for i, j, k, v in doc["structure"]:
            self.structure.setdefault((i, j), {})[k] = _parse_scalar(self.field, v)


# ---------------------------------------------------------------------------
# the closure


def default_b0(lam: DominantWeight, alpha: RootVector, ctx: KLRContext) -> int:
    mx = max((lam.pairing(nu[0]) for nu in ctx.sequences if nu), default=0)
    return max(1, mx + alpha.height)


def build(datum: CartanDatum, q: QPolynomialMatrix, lam: DominantWeight,
          alpha: RootVector, field: ScalarField, B: int | None = None,
          max_doublings: int = 2) -> CyclotomicAlgebra:
    ctx = KLRContext(datum, q, field, alpha)
    B0 = B if B is not None else default_b0(lam, alpha, ctx)
    last = None
    for attempt in range(max_doublings + 1):
        bound = B0 * (2 ** attempt)
        result = _attempt_build(ctx, lam, bound)
        if result is not None:
            return result
        last = bound
    raise NeedLargerB(f"no nilpotency certificate up to B = {last}")


def _attempt_build(ctx: KLRContext, lam: DominantWeight, B: int):
    F = ctx.field
    n = ctx.n
    perms = sorted(itertools.permutations(range(n)))
    exps = list(itertools.product(range(B), repeat=n))
    monomials = [
        (w, a, nu)
        for nu in ctx.sequences
        for w in perms
        for a in exps
    ]
    index = {m: i for i, m in enumerate(monomials)}
    dim = len(monomials)
    left_seq = [perm_act_seq(w, nu) for (w, a, nu) in monomials]

    # generator application on a single monomial: (coords, overflow_flag)
    cache: dict = {}

    def mono_gen(mi: int, gen) -> tuple[dict, bool]:
        keyc = (mi, gen)
        hit = cache.get(keyc)
        if hit is not None:
            return hit
        w, a, nu = monomials[mi]
        kind = gen[0]
        if kind == "xr":
            k = gen[1]
            a2 = tuple(x + 1 if t == k - 1 else x for t, x in enumerate(a))
            out = ({}, True) if a2[k - 1] >= B else ({index[(w, a2, nu)]: F.one}, False)
            cache[keyc] = out
            return out
        if kind == "er":
            out = ({mi: F.one}, False) if gen[1] == nu else ({}, False)
            cache[keyc] = out
            return out
        if kind == "el":
            out = ({mi: F.one}, False) if gen[1] == left_seq[mi] else ({}, False)
            cache[keyc] = out
            return out
        word = tsyms(canonical_word(w)) + xsyms(a)
        if kind == "tr":
            l = gen[1]
            terms = [(F.one, word + (("t", l),), seq_swap(nu, l))]
        elif kind == "xl":
            terms = [(F.one, (("x", gen[1]),) + word, nu)]
        else:  # "tl"
            terms = [(F.one, (("t", gen[1]),) + word, nu)]
        nf = ctx.normal_form_terms(terms)
        coords: dict = {}
        overflow = False
        for key, c in nf.items():
            if any(x >= B for x in key[1]):
                overflow = True
            else:
                coords[index[key]] = c
        out = (coords, overflow)
        cache[keyc] = out
        return out

    def apply_gen(vec: dict, gen) -> tuple[dict, bool]:
        out: dict = {}
        overflow = False
        for mi, c in vec.items():
            part, ovf = mono_gen(mi, gen)
            overflow = overflow or ovf
            for j, v in part.items():
                w = F.add(out.get(j, F.zero), F.mul(c, v))
                if F.is_zero(w):
                    out.pop(j, None)
                else:
                    out[j] = w
        return out, overflow

    gens = (
        [("xr", k) for k in range(1, n + 1)]
        + [("xl", k) for k in range(1, n + 1)]
        + [("tr", l) for l in range(1, n)]
        + [("tl", l) for l in range(1, n)]
        + [("er", nu) for nu in ctx.sequences]
        + [("el", nu) for nu in ctx.sequences]
    )

    ech = make_echelon(F, dim)
    pure = make_echelon(F, dim)
    queue = deque()
    for el in cyclotomic_generator(ctx, lam):
        vec = {}
        for key, c in el.coords.items():
            if any(x >= B for x in key[1]):
                return None  # bound below a seed exponent; escalate
            vec[index[key]] = c
        queue.append((vec, True))
    while queue:
        vec, is_pure = queue.popleft()
        if not vec:
            continue
        added = ech.insert(vec)
        padded = pure.insert(vec) if is_pure else False
        if not (added or padded):
            continue
        for gen in gens:
            prod, overflow = apply_gen(vec, gen)
            if prod:
                queue.append((prod, is_pure and not overflow))

    # certificate: truncation-free nilpotency witness for every x_k e(ν)
    certificate: dict = {}
    idp = identity_perm(n)
    for nu in ctx.sequences:
        for k in range(1, n + 1):
            found = None
            for m in range(1, B):
                a = tuple(m if t == k - 1 else 0 for t in range(n))
                if pure.contains({index[(idp, a, nu)]: F.one}):
                    found = m
                    break
            if found is None:
                return None  # certificate failed at this bound
            certificate[(k, nu)] = found

    pivots = set(ech.pivots)
    basis_idx = [i for i in range(dim) if i not in pivots]
    basis = [monomials[i] for i in basis_idx]
    basis_pos = {mi: p for p, mi in enumerate(basis_idx)}
    degrees = [ctx.degree_monomial(m) for m in basis]

    ideal = (ech, index, basis_pos)

    def reduce_vec(vec: dict) -> dict:
        res = ech.residual(vec)
        return {basis_pos[m]: v for m, v in res.items()}

    # structure constants over the quotient basis
    structure: dict = {}
    for i, mi in enumerate(basis_idx):
        wi, ai, nui = monomials[mi]
        lword = tsyms(canonical_word(wi)) + xsyms(ai)
        for j, mj in enumerate(basis_idx):
            wj, aj, nuj = monomials[mj]
            if nui != left_seq[mj]:
                continue
            rword = tsyms(canonical_word(wj)) + xsyms(aj)
            nf = ctx.normal_form_terms([(F.one, lword + rword, nuj)])
            vec = {}
            for key, c in nf.items():
                if not any(x >= B for x in key[1]):
                    vec[index[key]] = c
            row = reduce_vec(vec)
            if row:
                dtarget = degrees[i] + degrees[j]
                if any(degrees[k] != dtarget for k in row):
                    raise InconsistentClosure("structure constants mix degrees")
                structure[(i, j)] = row

    identity = {}
    for nu in ctx.sequences:
        a0 = (0,) * n
        vec = {index[(idp, a0, nu)]: F.one}
        for k, v in reduce_vec(vec).items():
            w = F.add(identity.get(k, F.zero), v)
            if F.is_zero(w):
                identity.pop(k, None)
            else:
                identity[k] = w

    return CyclotomicAlgebra(ctx, lam, B, basis, degrees, structure,
                             identity, certificate, ideal)


def a1_closed_form_dim(ell: int, nroot: int) -> int:
    """dim R^{ℓΛ_1}_{nα_1} for the rank-1 datum: (n!)² · C(ℓ, n)."""
    from math import comb, factorial

    return factorial(nroot) ** 2 * comb(ell, nroot) if nroot <= ell else 0
