"""Exact sparse linear algebra over Q and F_p.

Vectors are dicts {coordinate index: nonzero scalar}.  Incremental echelon
spans come in two flavors: fraction-free big-integer rows over Q, and dense
numpy rows over F_p (see fp_kernels).  Both keep rows ordered by pivot
column so a single increasing elimination sweep is complete.
"""
from __future__ import annotations

from bisect import bisect_left, insort
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .errors import KLRError
from .fields import QQ, ScalarField
from .fp_kernels import get_reduce_kernel


class DimensionMismatch(KLRError):
    pass


class SubspaceNotContained(KLRError):
    pass


# ---------------------------------------------------------------------------
# dict-vector helpers


def vec_add(field: ScalarField, u: dict, v: dict, c=None) -> dict:
    """u + c*v (c defaults to 1)."""
    if c is None:
        c = field.one
    out = dict(u)
    for k, x in v.items():
        w = field.add(out.get(k, field.zero), field.mul(c, x))
        if field.is_zero(w):
            out.pop(k, None)
        else:
            out[k] = w
    return out


def vec_scale(field: ScalarField, v: dict, c) -> dict:
    if field.is_zero(c):
        return {}
    return {k: field.mul(x, c) for k, x in v.items()}


def _int_rows(vec: dict) -> dict:
    """Clear denominators and content: primitive integer vector, up to scale."""
    if not vec:
        return {}
    den = 1
    for x in vec.values():
        den = lcm(den, Fraction(x).denominator)
    ints = {k: int(x * den) for k, x in vec.items()}
    g = 0
    for x in ints.values():
        g = gcd(g, x)
    if g > 1:
        ints = {k: x // g for k, x in ints.items()}
    return ints


class QEchelon:
    """Incremental echelon span over Q, stored as primitive integer rows.

    Rows are kept fraction-free (scaling a row does not change its span);
    exact residuals are recomputed with Fractions on demand.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.field = QQ
        self.rows: dict[int, dict] = {}   # pivot col -> primitive int row
        self.pivots: list[int] = []       # sorted

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce_int(self, vec: dict) -> dict:
        vec = dict(vec)
        while True:
            hits = [c for c in vec if c in self.rows]
            if not hits:
                return vec
            c = min(hits)
            row = self.rows[c]
            a, b = vec[c], row[c]
            g = gcd(a, b)
            ma, mb = b // g, a // g
            # vec := ma*vec - mb*row kills column c exactly
            for k, x in row.items():
                w = ma * vec.get(k, 0) - mb * x
                if w:
                    vec[k] = w
                else:
                    vec.pop(k, None)
            for k in list(vec):
                if k not in row:
                    vec[k] = ma * vec[k]
            g = 0
            for x in vec.values():
                g = gcd(g, x)
            if g > 1:
                vec = {k: x // g for k, x in vec.items()}

    def insert(self, vec: dict) -> bool:
        """Add vec (Fraction or int dict) to the span; True if rank grew."""
        ints = self._reduce_int(_int_rows(vec))
        if not ints:
            return False
        piv = min(ints)
        if ints[piv] < 0:
            ints = {k: -x for k, x in ints.items()}
        self.rows[piv] = ints
        insort(self.pivots, piv)
        return True

    def contains(self, vec: dict) -> bool:
        return not self._reduce_int(_int_rows(vec))

    def residual(self, vec: dict) -> dict:
        """Exact residual of vec mod the span, supported off pivot columns."""
        vec = {k: Fraction(x) for k, x in vec.items() if x != 0}
        while True:
            hits = [c for c in vec if c in self.rows]
            if not hits:
                return vec
            c = min(hits)
            row = self.rows[c]
            f = vec[c] / row[c]
            for k, x in row.items():
                w = vec.get(k, Fraction(0)) - f * x
                if w:
                    vec[k] = w
                else:
                    vec.pop(k, None)


class FpEchelon:
    """Incremental echelon span over F_p with dense numpy rows.

    The elimination sweep runs through fp_kernels (numba-compiled with a
    numpy fallback).
    """

    def __init__(self, dim: int, p: int, field: ScalarField):
        self.dim = dim
        self.p = p
        self.field = field
        self._rows = np.zeros((0, dim), dtype=np.int64)
        self._cap = 0
        self._n = 0
        self.pivots: list[int] = []
        self._kernel = get_reduce_kernel()

    @property
    def rank(self) -> int:
        return self._n

    def _to_dense(self, vec: dict) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        for k, x in vec.items():
            out[k] = x % self.p
        return out

    def _reduce(self, dense: np.ndarray) -> np.ndarray:
        if self._n:
            self._kernel(self._rows, np.asarray(self.pivots, dtype=np.int64),
                         self._n, dense, self.p)
        return dense

    def insert(self, vec: dict) -> bool:
        dense = self._reduce(self._to_dense(vec))
        nz = np.nonzero(dense)[0]
        if len(nz) == 0:
            return False
        piv = int(nz[0])
        dense = (dense * pow(int(dense[piv]), -1, self.p)) % self.p
        pos = bisect_left(self.pivots, piv)
        if self._n == self._cap:
            self._cap = max(64, 2 * self._cap)
            grown = np.zeros((self._cap, self.dim), dtype=np.int64)
            grown[: self._n] = self._rows[: self._n]
            self._rows = grown
        self._rows[pos + 1 : self._n + 1] = self._rows[pos : self._n].copy()
        self._rows[pos] = dense
        self.pivots.insert(pos, piv)
        self._n += 1
        return True

    def contains(self, vec: dict) -> bool:
        return not np.any(self._reduce(self._to_dense(vec)))

    def residual(self, vec: dict) -> dict:
        dense = self._reduce(self._to_dense(vec))
        return {int(k): int(dense[k]) for k in np.nonzero(dense)[0]}


def make_echelon(field: ScalarField, dim: int):
    if field.char == 0:
        return QEchelon(dim)
    return FpEchelon(dim, field.char, field)


# ---------------------------------------------------------------------------
# SparseMatrix and one-shot reductions


class SparseMatrix:
    def __init__(self, nrows: int, ncols: int, field: ScalarField, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        self.entries: dict[tuple[int, int], object] = {}
        if entries:
            for (r, c), v in entries.items():
                self[r, c] = v

    def __setitem__(self, rc, v):
        r, c = rc
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise DimensionMismatch(f"index {rc} out of bounds")
        if self.field.is_zero(v):
            self.entries.pop(rc, None)
        else:
            self.entries[rc] = v

    def __getitem__(self, rc):
        return self.entries.get(rc, self.field.zero)

    def row_dicts(self) -> list[dict]:
        rows: list[dict] = [{} for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def transpose(self) -> "SparseMatrix":
        t = SparseMatrix(self.ncols, self.nrows, self.field)
        for (r, c), v in self.entries.items():
            t.entries[(c, r)] = v
        return t


def _rref_dense(rows: list[dict], ncols: int, field: ScalarField):
    """Dense RREF on small matrices; same contract as the sparse path."""
    m = [[row.get(c, field.zero) for c in range(ncols)] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, len(m)) if not field.is_zero(m[i][c])), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(m):
            break
    out = [
        {c: v for c, v in enumerate(m[i]) if not field.is_zero(v)}
        for i in range(r)
    ]
    return out, r, pivot_cols


def _rref_sparse(rows: list[dict], field: ScalarField):
    done: list[dict] = []          # rows with pivot normalized to 1
    pivot_cols: list[int] = []
    for row in rows:
        row = dict(row)
        # eliminate against existing pivots (increasing order)
        while True:
            hits = [i for i, c in enumerate(pivot_cols) if not field.is_zero(row.get(c, field.zero))]
            if not hits:
                break
            i = min(hits, key=lambda j: pivot_cols[j])
            row = vec_add(field, row, done[i], field.neg(row[pivot_cols[i]]))
        if not row:
            continue
        piv = min(row)
        row = vec_scale(field, row, field.inv(row[piv]))
        # back-substitute into previous rows for a fully reduced form
        for i in range(len(done)):
            f = done[i].get(piv, field.zero)
            if not field.is_zero(f):
                done[i] = vec_add(field, done[i], row, field.neg(f))
        done.append(row)
        pivot_cols.append(piv)
    order = sorted(range(len(done)), key=lambda i: pivot_cols[i])
    return [done[i] for i in order], len(done), [pivot_cols[i] for i in order]


def row_reduce(m: SparseMatrix):
    """Reduced row echelon form: (rows as dicts, rank, pivot columns)."""
    rows = m.row_dicts()
    if m.nrows < 64 and m.ncols < 64:
        return _rref_dense(rows, m.ncols, m.field)
    return _rref_sparse(rows, m.field)


def rank_of(rows: list[dict], field: ScalarField) -> int:
    return _rref_sparse(rows, field)[1]


def subspace_membership(basis_rows: list[dict], pivot_cols: list[int],
                        v: dict, field: ScalarField):
    """Membership of v in the row span (rows in RREF); coords when member."""
    v = dict(v)
    coords = [field.zero] * len(basis_rows)
    for i, c in sorted(enumerate(pivot_cols), key=lambda t: t[1]):
        f = v.get(c, field.zero)
        if not field.is_zero(f):
            coords[i] = f
            v = vec_add(field, v, basis_rows[i], field.neg(f))
    if v:
        return False, None
    return True, coords


def graded_quotient_dims(ambient: dict[int, list[dict]],
                         sub: dict[int, list[dict]],
                         field: ScalarField) -> dict[int, int]:
    """Per-degree dim(ambient_d) - dim(sub_d), checking containment."""
    out: dict[int, int] = {}
    for d in sorted(set(ambient) | set(sub)):
        amb = ambient.get(d, [])
        sb = sub.get(d, [])
        arows, arank, apiv = _rref_sparse(amb, field)
        for v in sb:
            ok, _ = subspace_membership(arows, apiv, v, field)
            if not ok:
                raise SubspaceNotContained(f"subspace escapes ambient in degree {d}")
        q = arank - rank_of(sb, field)
        if q:
            out[d] = q
    return out
