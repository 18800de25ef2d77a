"""Exact scalar fields: the rationals and prime fields.

Rational scalars are `fractions.Fraction`; mod-p scalars are plain ints in
the range 0..p-1.  No floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction


class ScalarField:
    """A field of exact scalars.

    Instances are interned: ``QQ`` and ``GF(p)`` for each prime p are
    singletons, so fields compare by identity.
    """

    def __init__(self, char: int):
        if char != 0 and not _is_prime(char):
            raise ValueError(f"field characteristic must be 0 or prime, got {char}")
        self.char = char
        if char == 0:
            self.zero = Fraction(0)
            self.one = Fraction(1)
        else:
            self.zero = 0
            self.one = 1

    @property
    def name(self) -> str:
        return "Q" if self.char == 0 else f"F{self.char}"

    def from_int(self, n: int):
        if self.char == 0:
            return Fraction(n)
        return n % self.char

    def add(self, a, b):
        if self.char == 0:
            return a + b
        return (a + b) % self.char

    def sub(self, a, b):
        if self.char == 0:
            return a - b
        return (a - b) % self.char

    def mul(self, a, b):
        if self.char == 0:
            return a * b
        return (a * b) % self.char

    def neg(self, a):
        if self.char == 0:
            return -a
        return (-a) % self.char

    def inv(self, a):
        if self.char == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / a
        return pow(a, -1, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self) -> str:
        return f"ScalarField({self.name})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


QQ = ScalarField(0)

_gf_cache: dict[int, ScalarField] = {}


def GF(p: int) -> ScalarField:
    if p not in _gf_cache:
        _gf_cache[p] = ScalarField(p)
    return _gf_cache[p]


def field_by_name(name) -> ScalarField:
    """Resolve a field from a config value: "Q"/0 or a prime / "F5"."""
    if name in ("Q", "QQ", 0, "0"):
        return QQ
    if isinstance(name, str) and name.startswith("F"):
        return GF(int(name[1:]))
    return GF(int(name))
