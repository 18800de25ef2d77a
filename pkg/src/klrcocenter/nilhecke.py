"""The nilHecke algebra NH_n via its divided-difference action.

Elements are exact linear combinations of unreduced words in x_1..x_n and
τ_1..τ_{n-1}; equality testing always goes through the faithful matrix
model over symmetric polynomials (no rewriting is needed here).  The
matrix model uses the Artin basis {x^a : 0 <= a_k <= n-k} of K[x] as a
free module over Sym_n; expansion coefficients are extracted with divided
differences.
"""
from __future__ import annotations

from math import factorial

from .errors import KLRError, NonHomogeneous
from .fields import ScalarField
from .polynomials import ExactPolynomial


class VariableCountMismatch(KLRError):
    pass


class ParameterOutOfRange(KLRError):
    pass


class ExpansionFailure(KLRError):
    pass


class NilHeckeElement:
    """Linear combination of words; symbols ('x', k) / ('t', l), 1-based."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: ScalarField, terms=None):
        self.n = n
        self.field = field
        self.terms: dict[tuple, object] = {}
        if terms:
            for w, c in terms.items():
                if not field.is_zero(c):
                    self.terms[tuple(w)] = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def one(n: int, field: ScalarField) -> "NilHeckeElement":
        return NilHeckeElement(n, field, {(): field.one})

    @staticmethod
    def x(n: int, field: ScalarField, k: int, power: int = 1) -> "NilHeckeElement":
        if not 1 <= k <= n:
            raise ParameterOutOfRange(f"x_{k} with n={n}")
        return NilHeckeElement(n, field, {(("x", k),) * power: field.one})

    @staticmethod
    def tau(n: int, field: ScalarField, l: int) -> "NilHeckeElement":
        if not 1 <= l <= n - 1:
            raise ParameterOutOfRange(f"tau_{l} with n={n}")
        return NilHeckeElement(n, field, {(("t", l),): field.one})

    # -- ring ops ----------------------------------------------------------

    def _check(self, other: "NilHeckeElement"):
        if self.n != other.n:
            raise VariableCountMismatch("mixed n")

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = F.add(out.get(w, F.zero), c)
            if F.is_zero(v):
                out.pop(w, None)
            else:
                out[w] = v
        r = NilHeckeElement(self.n, F)
        r.terms = out
        return r

    def __neg__(self):
        F = self.field
        r = NilHeckeElement(self.n, F)
        r.terms = {w: F.neg(c) for w, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        F = self.field
        if F.is_zero(s):
            return NilHeckeElement(self.n, F)
        r = NilHeckeElement(self.n, F)
        r.terms = {w: F.mul(c, s) for w, c in self.terms.items()}
        return r

    def __mul__(self, other):
        self._check(other)
        F = self.field
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = F.add(out.get(w, F.zero), F.mul(c1, c2))
                if F.is_zero(v):
                    out.pop(w, None)
                else:
                    out[w] = v
        r = NilHeckeElement(self.n, F)
        r.terms = out
        return r

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Degree under deg x = 2, deg τ = -2; NonHomogeneous if mixed."""
        degs = {
            sum(2 if s[0] == "x" else -2 for s in w)
            for w in self.terms
        }
        if len(degs) > 1:
            raise NonHomogeneous(f"degrees {sorted(degs)}")
        return degs.pop() if degs else 0

    def __repr__(self):
        return f"NilHeckeElement(n={self.n}, {len(self.terms)} words)"


# ---------------------------------------------------------------------------
# action on polynomials


def act(e: NilHeckeElement, f: ExactPolynomial) -> ExactPolynomial:
    """x_k multiplies, τ_l applies ∂_l; words compose right-to-left."""
    if f.n != e.n:
        raise VariableCountMismatch("polynomial variable count != n")
    out = ExactPolynomial.zero(e.n, e.field)
    for w, c in e.terms.items():
        g = f
        for sym in reversed(w):
            if sym[0] == "x":
                g = g.mul_monomial(
                    tuple(1 if i == sym[1] - 1 else 0 for i in range(e.n))
                )
            else:
                g = g.divided_difference(sym[1] - 1)
            if g.is_zero():
                break
        out = out + g.scale(c)
    return out


# ---------------------------------------------------------------------------
# Artin basis and symmetric-polynomial expansion


def artin_basis(n: int) -> list[tuple[int, ...]]:
    """Exponent tuples a with 0 <= a_k <= n-k, lexicographic."""
    basis = [()]
    for k in range(1, n + 1):
        basis = [a + (j,) for a in basis for j in range(n - k + 1)]
    return sorted(basis)


def _peel_last_var(g: ExactPolynomial, v: int) -> list[ExactPolynomial]:
    """Write g (symmetric in vars 0..v-1) as Σ_j c_j x_v^j, c_j symmetric
    in vars 0..v; extraction by divided differences."""
    n, F = g.n, g.field
    out: list[ExactPolynomial] = [None] * (v + 1)
    for j in range(v, 0, -1):
        h = g
        for i in range(v - 1, v - 1 - j, -1):
            h = h.divided_difference(i)
        out[j] = h
        if not h.is_zero():
            mono = tuple(j if i == v else 0 for i in range(n))
            g = g - h.mul_monomial(mono)
    out[0] = g
    return out


def artin_expand(f: ExactPolynomial, n: int) -> dict:
    """Coefficients of f over the Artin basis: {a: symmetric polynomial}."""
    if f.n != n:
        raise VariableCountMismatch("variable count mismatch")
    rev = list(range(n))[::-1]
    parts = {(): f.permute_vars(rev)}
    for v in range(1, n):
        nxt: dict = {}
        for key, poly in parts.items():
            for j, cj in enumerate(_peel_last_var(poly, v)):
                if cj is not None and not cj.is_zero():
                    nxt[key + (j,)] = cj
        parts = nxt
    out: dict = {}
    for key, poly in parts.items():
        if not poly.is_symmetric():
            raise ExpansionFailure("non-symmetric expansion coefficient")
        rev_a = (0,) + key
        a = tuple(rev_a[n - 1 - k] for k in range(n))
        out[a] = poly
    return out


class SymMatrixModel:
    """Matrix of act(e, -) in the Artin basis, entries in Sym_n."""

    def __init__(self, n: int, field: ScalarField, entries: dict):
        self.n = n
        self.field = field
        self.basis = artin_basis(n)
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}

    def entry(self, row, col) -> ExactPolynomial:
        return self.entries.get((row, col), ExactPolynomial.zero(self.n, self.field))

    def __eq__(self, other):
        return isinstance(other, SymMatrixModel) and self.entries == other.entries

    def __mul__(self, other: "SymMatrixModel") -> "SymMatrixModel":
        # (self*other)[r,c] = Σ_m self[r,m] other[m,c]
        by_row: dict = {}
        for (r, m), v in self.entries.items():
            by_row.setdefault(m, []).append((r, v))
        out: dict = {}
        for (m, c), w in other.entries.items():
            for r, v in by_row.get(m, []):
                key = (r, c)
                prev = out.get(key, ExactPolynomial.zero(self.n, self.field))
                out[key] = prev + v * w
        return SymMatrixModel(self.n, self.field, out)

    def trace(self) -> ExactPolynomial:
        t = ExactPolynomial.zero(self.n, self.field)
        for a in self.basis:
            t = t + self.entry(a, a)
        return t


def to_sym_matrix(e: NilHeckeElement) -> SymMatrixModel:
    entries: dict = {}
    for a in artin_basis(e.n):
        g = act(e, ExactPolynomial.monomial(e.n, e.field, a))
        if g.is_zero():
            continue
        for row, coeff in artin_expand(g, e.n).items():
            entries[(row, a)] = coeff
    return SymMatrixModel(e.n, e.field, entries)


def nh_trace(e: NilHeckeElement) -> ExactPolynomial:
    """Trace in the matrix model; vanishes exactly on [NH_n, NH_n]."""
    t = ExactPolynomial.zero(e.n, e.field)
    for a in artin_basis(e.n):
        g = act(e, ExactPolynomial.monomial(e.n, e.field, a))
        if g.is_zero():
            continue
        t = t + artin_expand(g, e.n).get(a, ExactPolynomial.zero(e.n, e.field))
    return t


def trace_equiv(a: NilHeckeElement, b: NilHeckeElement) -> bool:
    if a.n != b.n:
        raise VariableCountMismatch("mixed n")
    return nh_trace(a - b).is_zero()


# ---------------------------------------------------------------------------
# distinguished elements of the trace computation


def _word_x(k: int, power: int = 1, n=None):
    return (("x", k),) * power


def _word_taus(lo: int, hi: int):
    """τ_lo τ_{lo+1} ... τ_hi (empty when lo > hi)."""
    return tuple(("t", l) for l in range(lo, hi + 1))


def e_interval(n: int, field: ScalarField, u: int, v: int) -> NilHeckeElement:
    """e_{[u,v]} = τ_{w[u,v]} x_{u+1} x_{u+2}^2 ... x_v^{v-u}; e_{[u,u]} = 1."""
    if not 1 <= u <= v <= n:
        raise ParameterOutOfRange(f"e_interval({u},{v}) with n={n}")
    word: tuple = ()
    for end in range(v - 1, u - 1, -1):
        word += _word_taus(u, end)
    for j in range(u + 1, v + 1):
        word += _word_x(j, j - u)
    return NilHeckeElement(n, field, {word: field.one})


def X_kn(n: int, field: ScalarField, k: int) -> NilHeckeElement:
    """X_{k,n} = x_2 x_3 ... x_{n-1} x_n^k τ_1 ... τ_{n-1}."""
    if n < 2 or k < 1:
        raise ParameterOutOfRange(f"X({k},{n})")
    word: tuple = ()
    for j in range(2, n):
        word += _word_x(j)
    word += _word_x(n, k) + _word_taus(1, n - 1)
    return NilHeckeElement(n, field, {word: field.one})


def X_ktl(n: int, field: ScalarField, k: int, t: int, l: int) -> NilHeckeElement:
    """X_{k,t,l}: staircase x-word followed by t full τ-rows and a partial row."""
    if not (k >= 1 and 1 <= t <= n - 2 and t + 2 <= l <= n):
        raise ParameterOutOfRange(f"X({k},{t},{l}) with n={n}")
    word: tuple = ()
    for j in range(2, t + 2):
        word += _word_x(j, j - 1)
    for j in range(t + 2, l):
        word += _word_x(j, t + 1)
    for j in range(l, n + 1):
        word += _word_x(j, t)
    word += _word_x(n, k - 1)
    for row in range(1, t + 1):
        word += _word_taus(1, n - row)
    word += _word_taus(1, l - (t + 2))
    return NilHeckeElement(n, field, {word: field.one})


def Z_nk(n: int, field: ScalarField, k: int) -> NilHeckeElement:
    """Z_n^{(k)} = x_1^k τ_1 ... τ_{n-1}."""
    if n < 2 or k < 0:
        raise ParameterOutOfRange(f"Z({n},{k})")
    word = _word_x(1, k) + _word_taus(1, n - 1)
    return NilHeckeElement(n, field, {word: field.one})


def build_special(kind: str, n: int, field: ScalarField, **params) -> NilHeckeElement:
    if kind == "e_interval":
        return e_interval(n, field, params["u"], params["v"])
    if kind == "X":
        if "t" in params:
            return X_ktl(n, field, params["k"], params["t"], params["l"])
        return X_kn(n, field, params["k"])
    if kind == "Z":
        return Z_nk(n, field, params["k"])
    raise ParameterOutOfRange(f"unknown kind {kind!r}")


def full_interval_trace_products(n: int, field: ScalarField, k: int):
    """The products Π_j e_{[a_j, a_{j+1}-1]} x_{a_{j+1}-1}^{l_j} spanning the
    congruence class of Z_n^{(k)} for k >= n-1: all chains
    1 = a_1 < ... < a_{d+1} = n+1 and l_j >= 0 with Σ l_j = k-(n-1)."""
    if k < n - 1:
        return []
    out = []
    rest = k - (n - 1)

    def comps(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for tail in comps(total - first, parts - 1):
                yield (first,) + tail

    import itertools

    for d in range(1, n + 1):
        for mids in itertools.combinations(range(2, n + 1), d - 1):
            chain = (1,) + mids + (n + 1,)
            for ls in comps(rest, d):
                el = NilHeckeElement.one(n, field)
                for j in range(d):
                    el = el * e_interval(n, field, chain[j], chain[j + 1] - 1)
                    if ls[j]:
                        el = el * NilHeckeElement.x(n, field, chain[j + 1] - 1, ls[j])
                out.append(el)
    return out


def nh_identity_trace(n: int, field: ScalarField) -> ExactPolynomial:
    return ExactPolynomial.const(n, field, field.from_int(factorial(n)))
