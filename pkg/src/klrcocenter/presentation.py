"""KLR presentation: generator words, degrees, the * anti-involution, and
straightening into PBW normal forms τ_w x^a e(ν).

Straightening is a worklist rewriter.  Each term is (coefficient, word, ν)
with word a tuple of symbols ('x', k) / ('t', l) (1-based) acting on e(ν).
Rewrites:

* an x immediately left of a τ is swapped via the dot-crossing relation
  (correction has one τ less);
* a pure τ-word that is non-reduced is transformed, by an explicit Tits
  path of commutation/braid moves, until two equal letters are adjacent,
  then killed by the quadratic relation (two τ fewer; braid moves emit the
  Q-difference correction, each with three τ fewer);
* a reduced τ-word is moved along a Tits path to the fixed reduced word
  (lexicographically smallest) of its permutation.

Corrections strictly decrease the number of crossings, and x/τ swaps
strictly decrease x-before-τ inversions, so the rewriter terminates.  Any
terminating strategy computes the unique PBW coordinates because the PBW
monomials are linearly independent in R_α (basis theorem, assumed).
"""
from __future__ import annotations

from functools import lru_cache

from .cartan import (CartanDatum, DominantWeight, QPolynomialMatrix,
                     RootVector, enumerate_sequences, require_valid_q,
                     root_of_sequence)
from .errors import KLRError
from .fields import ScalarField
from .polynomials import ExactPolynomial


class RelationDataMissing(KLRError):
    pass


# ---------------------------------------------------------------------------
# permutations (tuples, 0-based one-line notation) and reduced words (1-based)


def identity_perm(n: int) -> tuple:
    return tuple(range(n))


def perm_mul(u: tuple, v: tuple) -> tuple:
    """(u∘v)(i) = u[v[i]]."""
    return tuple(u[v[i]] for i in range(len(u)))


def perm_of_word(word, n: int) -> tuple:
    """word = (l_1, ..., l_m) 1-based letters; returns s_{l_1}∘...∘s_{l_m}."""
    w = list(range(n))
    for l in word:
        # right-multiply by s_l: swap positions l-1, l
        w[l - 1], w[l] = w[l], w[l - 1]
    return tuple(w)


def perm_len(w: tuple) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def left_mul_s(d: int, w: tuple) -> tuple:
    """s_d ∘ w: swap the values d-1, d in w."""
    return tuple(d if x == d - 1 else d - 1 if x == d else x for x in w)


@lru_cache(maxsize=None)
def canonical_word(w: tuple) -> tuple:
    """Lexicographically smallest reduced word: smallest left descent first."""
    n = len(w)
    winv = [0] * n
    for i, x in enumerate(w):
        winv[x] = i
    for d in range(1, n):
        if winv[d - 1] > winv[d]:
            return (d,) + canonical_word(left_mul_s(d, w))
    return ()


def seq_swap(nu: tuple, l: int) -> tuple:
    """Entries l, l+1 (1-based) swapped."""
    out = list(nu)
    out[l - 1], out[l] = out[l], out[l - 1]
    return tuple(out)


def seq_act_word(tletters, nu: tuple) -> tuple:
    """Sequence left of τ_{l_1}...τ_{l_m} e(ν): apply swaps right to left."""
    for l in reversed(tletters):
        nu = seq_swap(nu, l)
    return nu


def perm_act_seq(w: tuple, nu: tuple) -> tuple:
    """(w·ν)_i = ν_{w^{-1}(i)}; matches seq_act_word(canonical_word(w), ν)."""
    out = [0] * len(nu)
    for i, x in enumerate(w):
        out[x] = nu[i]
    return tuple(out)


@lru_cache(maxsize=None)
def tits_path(w1: tuple, w2: tuple) -> tuple:
    """Commutation/braid moves transforming reduced word w1 into w2 (same
    permutation).  Moves: ('c', pos) swaps letters pos, pos+1; ('b', pos)
    replaces (a,b,a) at pos by (b,a,b)."""
    if w1 == w2:
        return ()
    a, b = w1[0], w2[0]
    if a == b:
        return tuple((m, pos + 1) for m, pos in tits_path(w1[1:], w2[1:]))
    n = max(max(w1), max(w2)) + 1
    w = perm_of_word(w1, n)
    if abs(a - b) > 1:
        x = canonical_word(left_mul_s(b, left_mul_s(a, w)))
        p1 = tuple((m, pos + 1) for m, pos in tits_path(w1[1:], (b,) + x))
        p2 = tuple((m, pos + 1) for m, pos in tits_path((a,) + x, w2[1:]))
        return p1 + (("c", 0),) + p2
    x = canonical_word(left_mul_s(a, left_mul_s(b, left_mul_s(a, w))))
    p1 = tuple((m, pos + 1) for m, pos in tits_path(w1[1:], (b, a) + x))
    p2 = tuple((m, pos + 1) for m, pos in tits_path((a, b) + x, w2[1:]))
    return p1 + (("b", 0),) + p2


# ---------------------------------------------------------------------------
# generator words


def xsym(k: int) -> tuple:
    return ("x", k)


def tsym(l: int) -> tuple:
    return ("t", l)


def xsyms(a) -> tuple:
    """Exponent tuple -> symbols, ascending variable order."""
    out = ()
    for k, p in enumerate(a, start=1):
        out += (("x", k),) * p
    return out


def tsyms(letters) -> tuple:
    return tuple(("t", l) for l in letters)


class GenWord:
    """A generator word acting on e(ν) from the left: symbols · e(ν)."""

    def __init__(self, nu, symbols):
        self.nu = tuple(nu)
        self.symbols = tuple(symbols)
        n = len(self.nu)
        for s in self.symbols:
            if s[0] == "x" and not 1 <= s[1] <= n:
                raise KLRError(f"x_{s[1]} out of range for n={n}")
            if s[0] == "t" and not 1 <= s[1] <= n - 1:
                raise KLRError(f"tau_{s[1]} out of range for n={n}")

    def target(self) -> tuple:
        """Sequence at the left end (transport across all crossings)."""
        return seq_act_word([s[1] for s in self.symbols if s[0] == "t"], self.nu)

    def reversed(self) -> "GenWord":
        return GenWord(self.target(), tuple(reversed(self.symbols)))


# ---------------------------------------------------------------------------
# the straightening context


class KLRContext:
    """All data needed to straighten words for a fixed (datum, Q, field, α)."""

    def __init__(self, datum: CartanDatum, q: QPolynomialMatrix,
                 field: ScalarField, alpha: RootVector):
        self.datum = datum
        self.q = require_valid_q(q, datum, field)
        self.field = field
        self.alpha = alpha
        self.n = alpha.height
        self.sequences = enumerate_sequences(alpha, datum)
        self._qcache: dict = {}

    # -- relation data ---------------------------------------------------

    def q_poly_monomials(self, i: int, j: int, u: int, v: int):
        """Q_{ij}(x_u, x_v) as [(exponent tuple, field coeff)], 1-based u,v."""
        key = (i, j, u, v)
        if key not in self._qcache:
            out = []
            for (k, qe), c in self.q.poly(i, j).items():
                fc = self.field.from_int(c)
                if self.field.is_zero(fc):
                    continue
                e = [0] * self.n
                e[u - 1] += k
                e[v - 1] += qe
                out.append((tuple(e), fc))
            self._qcache[key] = tuple(out)
        return self._qcache[key]

    def braid_correction(self, i: int, j: int, k: int):
        """(Q_{ij}(x_k, x_{k+1}) - Q_{ij}(x_{k+2}, x_{k+1}))/(x_k - x_{k+2})
        as [(exponent tuple, coeff)]; exact division enforced."""
        key = ("braid", i, j, k)
        if key not in self._qcache:
            num = ExactPolynomial(self.n, self.field,
                                  dict(self.q_poly_monomials(i, j, k, k + 1)))
            num = num - ExactPolynomial(self.n, self.field,
                                        dict(self.q_poly_monomials(i, j, k + 2, k + 1)))
            quot = num.exact_div_diff(k - 1, k + 1)
            self._qcache[key] = tuple(quot.c.items())
        return self._qcache[key]

    # -- degrees -----------------------------------------------------------

    def degree_word(self, symbols, nu) -> int:
        deg = 0
        seq = tuple(nu)
        for s in reversed(symbols):
            if s[0] == "x":
                i = seq[s[1] - 1]
                deg += self.datum.root_form(i, i)
            else:
                l = s[1]
                deg -= self.datum.root_form(seq[l - 1], seq[l])
                seq = seq_swap(seq, l)
        return deg

    def degree_monomial(self, key) -> int:
        w, a, nu = key
        return self.degree_word(tsyms(canonical_word(w)) + xsyms(a), nu)

    # -- the normalizer ----------------------------------------------------

    def normal_form_terms(self, terms) -> dict:
        """terms: iterable of (coeff, symbols, ν).  Returns PBW coordinates
        {(w, a, ν): coeff}."""
        F = self.field
        out: dict = {}
        stack = [(c, tuple(word), tuple(nu)) for c, word, nu in terms]

        def emit(key, c):
            v = F.add(out.get(key, F.zero), c)
            if F.is_zero(v):
                out.pop(key, None)
            else:
                out[key] = v

        while stack:
            c, word, nu = stack.pop()
            if F.is_zero(c):
                continue
            # rightmost x immediately left of a τ
            idx = None
            for i in range(len(word) - 2, -1, -1):
                if word[i][0] == "x" and word[i + 1][0] == "t":
                    idx = i
                    break
            if idx is not None:
                k, l = word[idx][1], word[idx + 1][1]
                mu = seq_act_word(
                    [s[1] for s in word[idx + 2:] if s[0] == "t"], nu)
                k2 = l + 1 if k == l else l if k == l + 1 else k
                stack.append(
                    (c, word[:idx] + (tsym(l), xsym(k2)) + word[idx + 2:], nu))
                if k in (l, l + 1) and mu[l - 1] == mu[l]:
                    sign = F.neg(c) if k == l else c
                    stack.append((sign, word[:idx] + word[idx + 2:], nu))
                continue
            # now word = τ-block followed by x-block
            nt = sum(1 for s in word if s[0] == "t")
            letters = tuple(s[1] for s in word[:nt])
            a = [0] * self.n
            for s in word[nt:]:
                a[s[1] - 1] += 1
            a = tuple(a)
            self._reduce_tau_block(c, letters, a, nu, stack, emit)
        return out

    def _push_correction(self, c, pre_letters, mono_exps, post_letters, a, nu,
                         stack):
        word = tsyms(pre_letters) + xsyms(mono_exps) + tsyms(post_letters) + xsyms(a)
        stack.append((c, word, nu))

    def _reduce_tau_block(self, c, letters, a, nu, stack, emit):
        F = self.field
        n = self.n
        w = perm_of_word(letters, n)
        lw = perm_len(w)
        if len(letters) == lw:
            target = canonical_word(w)
            if letters != target:
                letters = self._apply_path(
                    c, list(letters), tits_path(letters, target), a, nu, stack)
            emit((w, a, nu), c)
            return
        # find the shortest non-reduced prefix
        i = 1
        while perm_len(perm_of_word(letters[: i + 1], n)) == i + 1:
            i += 1
        prefix = letters[:i]
        d = letters[i]
        p = perm_of_word(prefix, n)
        target_prefix = canonical_word(perm_mul(p, _s_perm(d, n))) + (d,)
        cur = list(letters)
        if prefix != target_prefix:
            self._apply_path(c, cur, tits_path(prefix, target_prefix), a, nu,
                             stack)
        # cur[i-1] == cur[i] == d: quadratic relation
        mu = seq_act_word(cur[i + 1:], nu)
        vi, vj = mu[d - 1], mu[d]
        if vi == vj:
            return  # Q_{ii} = 0: term dies
        for exps, coeff in self.q_poly_monomials(vi, vj, d, d + 1):
            self._push_correction(F.mul(c, coeff), cur[: i - 1], exps,
                                  cur[i + 1:], a, nu, stack)

    def _apply_path(self, c, cur: list, moves, a, nu, stack):
        """Apply Tits moves in place, pushing braid corrections."""
        F = self.field
        for mv, pos in moves:
            if mv == "c":
                cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
                continue
            a1, b1 = cur[pos], cur[pos + 1]
            k = min(a1, b1)
            mu = seq_act_word(cur[pos + 3:], nu)
            if mu[k - 1] == mu[k + 1]:
                # τ_{k+1}τ_kτ_{k+1} = τ_kτ_{k+1}τ_k + C on e(μ)
                sign = c if a1 == k + 1 else F.neg(c)
                for exps, coeff in self.braid_correction(mu[k - 1], mu[k], k):
                    self._push_correction(F.mul(sign, coeff), cur[:pos], exps,
                                          cur[pos + 3:], a, nu, stack)
            cur[pos], cur[pos + 1], cur[pos + 2] = b1, a1, b1
        return cur


def _s_perm(d: int, n: int) -> tuple:
    out = list(range(n))
    out[d - 1], out[d] = out[d], out[d - 1]
    return tuple(out)


# ---------------------------------------------------------------------------
# elements


class AlgElement:
    """Exact combination of PBW monomials (w, a, ν) over a KLRContext."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: KLRContext, coords=None):
        self.ctx = ctx
        self.coords: dict = {}
        if coords:
            F = ctx.field
            for k, v in coords.items():
                if not F.is_zero(v):
                    self.coords[k] = v

    def __add__(self, other):
        F = self.ctx.field
        out = dict(self.coords)
        for k, v in other.coords.items():
            w = F.add(out.get(k, F.zero), v)
            if F.is_zero(w):
                out.pop(k, None)
            else:
                out[k] = w
        r = AlgElement(self.ctx)
        r.coords = out
        return r

    def __sub__(self, other):
        return self + other.scale(self.ctx.field.neg(self.ctx.field.one))

    def scale(self, s):
        F = self.ctx.field
        r = AlgElement(self.ctx)
        if not F.is_zero(s):
            r.coords = {k: F.mul(v, s) for k, v in self.coords.items()}
        return r

    def is_zero(self) -> bool:
        return not self.coords

    def __mul__(self, other: "AlgElement") -> "AlgElement":
        ctx = self.ctx
        F = ctx.field
        terms = []
        for (w1, a1, nu1), c1 in self.coords.items():
            word1 = tsyms(canonical_word(w1)) + xsyms(a1)
            for (w2, a2, nu2), c2 in other.coords.items():
                if nu1 != perm_act_seq(w2, nu2):
                    continue
                word2 = tsyms(canonical_word(w2)) + xsyms(a2)
                terms.append((F.mul(c1, c2), word1 + word2, nu2))
        return AlgElement(ctx, ctx.normal_form_terms(terms))

    def degree(self) -> int:
        degs = {self.ctx.degree_monomial(k) for k in self.coords}
        if len(degs) > 1:
            from .errors import NonHomogeneous
            raise NonHomogeneous(f"degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def is_homogeneous(self) -> bool:
        return len({self.ctx.degree_monomial(k) for k in self.coords}) <= 1

    def __repr__(self):
        return f"AlgElement({len(self.coords)} monomials)"


def idempotent(ctx: KLRContext, nu) -> AlgElement:
    n = ctx.n
    return AlgElement(ctx, {(identity_perm(n), (0,) * n, tuple(nu)): ctx.field.one})


def monomial_element(ctx: KLRContext, symbols, nu) -> AlgElement:
    return AlgElement(ctx, ctx.normal_form_terms([(ctx.field.one, symbols, nu)]))


def normal_form(ctx: KLRContext, combination) -> AlgElement:
    """combination: iterable of (coeff, GenWord) or (coeff, symbols, ν)."""
    terms = []
    for item in combination:
        if len(item) == 2:
            c, gw = item
            terms.append((c, gw.symbols, gw.nu))
        else:
            terms.append(item)
    return AlgElement(ctx, ctx.normal_form_terms(terms))


def star(e: AlgElement) -> AlgElement:
    """The anti-involution fixing generators and reversing words."""
    ctx = e.ctx
    terms = []
    for (w, a, nu), c in e.coords.items():
        word = tsyms(canonical_word(w)) + xsyms(a)
        terms.append((c, tuple(reversed(word)), perm_act_seq(w, nu)))
    return AlgElement(ctx, ctx.normal_form_terms(terms))


# ---------------------------------------------------------------------------
# relation instances


def relation_instances(ctx: KLRContext) -> list:
    """Every defining relation over I^α as a term list; each must
    normal_form to zero."""
    n = ctx.n
    F = ctx.field
    one, neg = F.one, F.neg(F.one)
    rels = []
    for nu in ctx.sequences:
        # x_k x_m = x_m x_k
        for k in range(1, n + 1):
            for m in range(k + 1, n + 1):
                rels.append([(one, (xsym(k), xsym(m)), nu),
                             (neg, (xsym(m), xsym(k)), nu)])
        # τ_l τ_m = τ_m τ_l, |l-m| > 1
        for l in range(1, n):
            for m in range(l + 2, n):
                rels.append([(one, (tsym(l), tsym(m)), nu),
                             (neg, (tsym(m), tsym(l)), nu)])
        # quadratic: τ_k² e(ν) = Q_{ν_k,ν_{k+1}}(x_k, x_{k+1}) e(ν)
        for k in range(1, n):
            rel = [(one, (tsym(k), tsym(k)), nu)]
            if nu[k - 1] != nu[k]:
                for exps, coeff in ctx.q_poly_monomials(nu[k - 1], nu[k], k, k + 1):
                    rel.append((F.neg(coeff), xsyms(exps), nu))
            rels.append(rel)
        # dot-crossing: (τ_k x_m − x_{s_k(m)} τ_k) e(ν) = ±e(ν) or 0
        for k in range(1, n):
            for m in range(1, n + 1):
                m2 = k + 1 if m == k else k if m == k + 1 else m
                rel = [(one, (tsym(k), xsym(m)), nu),
                       (neg, (xsym(m2), tsym(k)), nu)]
                if nu[k - 1] == nu[k]:
                    if m == k:
                        rel.append((one, (), nu))
                    elif m == k + 1:
                        rel.append((neg, (), nu))
                rels.append(rel)
        # braid: (τ_{k+1} τ_k τ_{k+1} − τ_k τ_{k+1} τ_k) e(ν) = correction
        for k in range(1, n - 1):
            rel = [(one, (tsym(k + 1), tsym(k), tsym(k + 1)), nu),
                   (neg, (tsym(k), tsym(k + 1), tsym(k)), nu)]
            if nu[k - 1] == nu[k + 1]:
                for exps, coeff in ctx.braid_correction(nu[k - 1], nu[k], k):
                    rel.append((F.neg(coeff), xsyms(exps), nu))
            rels.append(rel)
    return rels
