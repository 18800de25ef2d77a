"""Exact multivariate polynomials over a scalar field.

A polynomial in n variables is a dict from exponent tuples (length n) to
nonzero scalars.  Variables are 0-indexed here; modules that speak of
x_1..x_n convert at their boundary.
"""
from __future__ import annotations

from .errors import InexactDivision
from .fields import ScalarField


class ExactPolynomial:
    __slots__ = ("n", "field", "c")

    def __init__(self, n: int, field: ScalarField, coeffs=None):
        self.n = n
        self.field = field
        self.c = {}
        if coeffs:
            for e, v in coeffs.items():
                if not field.is_zero(v):
                    self.c[tuple(e)] = v

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(n: int, field: ScalarField) -> "ExactPolynomial":
        return ExactPolynomial(n, field)

    @staticmethod
    def const(n: int, field: ScalarField, v) -> "ExactPolynomial":
        return ExactPolynomial(n, field, {(0,) * n: v})

    @staticmethod
    def one(n: int, field: ScalarField) -> "ExactPolynomial":
        return ExactPolynomial.const(n, field, field.one)

    @staticmethod
    def var(n: int, field: ScalarField, i: int, power: int = 1) -> "ExactPolynomial":
        e = [0] * n
        e[i] = power
        return ExactPolynomial(n, field, {tuple(e): field.one})

    @staticmethod
    def monomial(n: int, field: ScalarField, exps, v=None) -> "ExactPolynomial":
        if v is None:
            v = field.one
        return ExactPolynomial(n, field, {tuple(exps): v})

    # -- basic ops -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactPolynomial) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        F = self.field
        out = dict(self.c)
        for e, v in other.c.items():
            w = F.add(out.get(e, F.zero), v)
            if F.is_zero(w):
                out.pop(e, None)
            else:
                out[e] = w
        r = ExactPolynomial(self.n, F)
        r.c = out
        return r

    def __neg__(self) -> "ExactPolynomial":
        F = self.field
        r = ExactPolynomial(self.n, F)
        r.c = {e: F.neg(v) for e, v in self.c.items()}
        return r

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return self + (-other)

    def scale(self, s) -> "ExactPolynomial":
        F = self.field
        if F.is_zero(s):
            return ExactPolynomial.zero(self.n, F)
        r = ExactPolynomial(self.n, F)
        r.c = {e: F.mul(v, s) for e, v in self.c.items()}
        return r

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        F = self.field
        out: dict = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                w = F.add(out.get(e, F.zero), F.mul(v1, v2))
                if F.is_zero(w):
                    out.pop(e, None)
                else:
                    out[e] = w
        r = ExactPolynomial(self.n, F)
        r.c = out
        return r

    def mul_monomial(self, exps, v=None) -> "ExactPolynomial":
        F = self.field
        if v is None:
            v = F.one
        r = ExactPolynomial(self.n, F)
        r.c = {
            tuple(a + b for a, b in zip(e, exps)): F.mul(c, v)
            for e, c in self.c.items()
        }
        return r

    def total_degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        if not self.c:
            return -1
        return max(sum(e) for e in self.c)

    def homogeneous_part(self, d: int) -> "ExactPolynomial":
        r = ExactPolynomial(self.n, self.field)
        r.c = {e: v for e, v in self.c.items() if sum(e) == d}
        return r

    # -- symmetric-group machinery ----------------------------------------

    def swap_vars(self, i: int, j: int) -> "ExactPolynomial":
        out: dict = {}
        for e, v in self.c.items():
            f = list(e)
            f[i], f[j] = f[j], f[i]
            out[tuple(f)] = v
        r = ExactPolynomial(self.n, self.field)
        r.c = out
        return r

    def permute_vars(self, perm) -> "ExactPolynomial":
        """Apply x_i -> x_perm[i]."""
        out: dict = {}
        for e, v in self.c.items():
            f = [0] * self.n
            for i, p in enumerate(e):
                f[perm[i]] = p
            out[tuple(f)] = v
        r = ExactPolynomial(self.n, self.field)
        r.c = out
        return r

    def is_symmetric(self) -> bool:
        return all(self.swap_vars(i, i + 1) == self for i in range(self.n - 1))

    def divided_difference(self, i: int) -> "ExactPolynomial":
        """(f - s_i f) / (x_{i+1} - x_i) where s_i swaps variables i, i+1."""
        F = self.field
        out: dict = {}

        def bump(e, v):
            if F.is_zero(v):
                return
            w = F.add(out.get(e, F.zero), v)
            if F.is_zero(w):
                out.pop(e, None)
            else:
                out[e] = w

        for e, v in self.c.items():
            p, q = e[i], e[i + 1]
            if p == q:
                continue
            base = list(e)
            # (u^p v^q - u^q v^p)/(v - u) summed as a telescoping series
            if p > q:
                lo, width, sign = q, p - q, F.neg(v)
            else:
                lo, width, sign = p, q - p, v
            for s in range(width):
                base[i] = lo + s
                base[i + 1] = lo + width - 1 - s
                bump(tuple(base), sign)
        r = ExactPolynomial(self.n, F)
        r.c = out
        return r

    def exact_div_diff(self, a: int, b: int) -> "ExactPolynomial":
        """Divide exactly by (x_a - x_b); raise InexactDivision on remainder."""
        F = self.field
        out: dict = {}
        rem: dict = {}

        def bump(d, e, v):
            if F.is_zero(v):
                return
            w = F.add(d.get(e, F.zero), v)
            if F.is_zero(w):
                d.pop(e, None)
            else:
                d[e] = w

        for e, v in self.c.items():
            ea = e[a]
            base = list(e)
            # quotient contribution of c * x_a^ea: c * sum_{s<ea} x_a^s x_b^{ea-1-s}
            for s in range(ea):
                base[a] = s
                base[b] = e[b] + ea - 1 - s
                bump(out, tuple(base), v)
            # remainder: substitute x_a -> x_b
            base[a] = 0
            base[b] = e[b] + ea
            bump(rem, tuple(base), v)
        if rem:
            raise InexactDivision(
                f"division by (x_{a} - x_{b}) left a nonzero remainder"
            )
        r = ExactPolynomial(self.n, F)
        r.c = out
        return r

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            mon = "*".join(
                f"x{i}^{p}" if p > 1 else f"x{i}"
                for i, p in enumerate(e) if p
            )
            parts.append(f"{self.c[e]}" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)
