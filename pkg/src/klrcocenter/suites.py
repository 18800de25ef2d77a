"""Verification suites shared by the command-line driver and the tests.

Each check returns a record {"id", "instance", "status", "witness"};
status is "PASS", "FAIL", or "SKIP".  Witnesses carry the computed
dimensions, supports, and scalars so a report is auditable on its own.
"""
from __future__ import annotations

import random
from math import factorial

from . import cocenter as cc
from . import cyclotomic as cy
from . import nilhecke as nh
from . import piecewise as pw
from .cartan import (CartanDatum, DominantWeight, QPolynomialMatrix,
                     RootVector, enumerate_sequences)
from .fields import QQ, ScalarField
from .linalg import rank_of
from .polynomials import ExactPolynomial


def _rec(check_id: str, instance: str, ok, witness=None) -> dict:
    status = ok if isinstance(ok, str) else ("PASS" if ok else "FAIL")
    rec = {"id": check_id, "instance": instance, "status": status}
    if witness is not None:
        rec["witness"] = witness
    return rec


# ---------------------------------------------------------------------------
# nilHecke identity suite


def _poly_span_contains(polys: list[ExactPolynomial], target: ExactPolynomial) -> bool:
    cols: dict = {}

    def row(p):
        out = {}
        for mono, c in p.c.items():
            out[cols.setdefault(mono, len(cols))] = c
        return out

    field = target.field
    rows = [row(p) for p in polys]
    base = rank_of([dict(r) for r in rows], field)
    return rank_of([dict(r) for r in rows] + [row(target)], field) == base


def nilhecke_suite(fields: list[ScalarField], n_max: int = 5,
                   seed: int = 20260826, n_random: int = 200) -> list[dict]:
    records = []
    for F in fields:
        fname = F.name

        # trace(n!·e_{[1,n]}) = trace(1)
        for n in range(2, n_max + 1):
            lhs = nh.e_interval(n, F, 1, n).scale(F.from_int(factorial(n)))
            ok = nh.nh_trace(lhs - nh.NilHeckeElement.one(n, F)).is_zero()
            records.append(_rec("interval-idempotent-trace", f"n={n} {fname}", ok))

        # trace(X_{k,n}) = trace(e_{[1,n]} x_n^{k−1})
        for n in range(2, n_max + 1):
            for k in range(1, 5):
                rhs = nh.e_interval(n, F, 1, n) * nh.NilHeckeElement.x(n, F, n, k - 1)
                ok = nh.trace_equiv(nh.X_kn(n, F, k), rhs)
                records.append(_rec("staircase-trace", f"n={n} k={k} {fname}", ok))

        # trace(Z_n^{(k)}) = 0 for k < n−1
        for n in range(2, n_max + 1):
            for k in range(0, n - 1):
                ok = nh.nh_trace(nh.Z_nk(n, F, k)).is_zero()
                records.append(_rec("low-power-trace-vanishing",
                                    f"n={n} k={k} {fname}", ok))

        # trace(Z_n^{(k)}) lies in the span of the interval-product traces
        for n in range(2, min(n_max, 4) + 1):
            for k in range(n - 1, n + 2):
                prods = nh.full_interval_trace_products(n, F, k)
                traces = [nh.nh_trace(p) for p in prods]
                ok = _poly_span_contains(traces, nh.nh_trace(nh.Z_nk(n, F, k)))
                records.append(_rec("power-trace-membership",
                                    f"n={n} k={k} {fname}", ok))

        # trace(Z_n^{(n−1)}) is a constant
        for n in range(2, n_max + 1):
            t = nh.nh_trace(nh.Z_nk(n, F, n - 1))
            ok = t.total_degree() <= 0
            records.append(_rec("top-power-trace-constant", f"n={n} {fname}", ok,
                                {"value": str(t.c.get((0,) * n, F.zero))}))

        # dot-slide trace identity on the staircase elements
        if n_max >= 5:
            n, t, l = 5, 1, 5
            for k in (1, 2):
                X = nh.X_ktl(n, F, k, t, l)
                tau = nh.NilHeckeElement.tau(n, F, l - (t + 1))
                rhs = nh.NilHeckeElement.x(n, F, l - (t + 1)) * X * tau
                for b in (1, 2):
                    lhs = nh.NilHeckeElement.x(n, F, l - b * (t + 1)) * X * tau
                    ok = nh.trace_equiv(lhs, rhs)
                    records.append(_rec("dot-slide-trace",
                                        f"n={n} t={t} l={l} k={k} b={b} {fname}", ok))

        # defining relations as operators on random polynomials
        rng = random.Random(seed)
        for n in range(2, n_max + 1):
            ok = _relations_on_random(F, n, rng, n_random)
            records.append(_rec("defining-relations",
                                f"n={n} {fname} samples={n_random}", ok))
    return records


def _random_poly(F, n, rng) -> ExactPolynomial:
    p = ExactPolynomial.zero(n, F)
    for _ in range(rng.randint(1, 4)):
        mono = tuple(rng.randint(0, 3) for _ in range(n))
        c = F.from_int(rng.randint(-5, 5))
        p = p + ExactPolynomial.monomial(n, F, mono).scale(c)
    return p


def _relations_on_random(F, n, rng, n_random) -> bool:
    def op(el, f):
        return nh.act(el, f)

    x = lambda k, e=1: nh.NilHeckeElement.x(n, F, k, e)
    t = lambda l: nh.NilHeckeElement.tau(n, F, l)
    for _ in range(n_random):
        f = _random_poly(F, n, rng)
        for l in range(1, n):
            if not op(t(l) * t(l), f).is_zero():
                return False
            if op(t(l) * x(l) - x(l + 1) * t(l), f) != f.scale(F.neg(F.one)):
                return False
            if op(t(l) * x(l + 1) - x(l) * t(l), f) != f:
                return False
            for m in range(1, n + 1):
                if m not in (l, l + 1):
                    if not op(t(l) * x(m) - x(m) * t(l), f).is_zero():
                        return False
        for l in range(1, n - 1):
            a = t(l) * t(l + 1) * t(l)
            b = t(l + 1) * t(l) * t(l + 1)
            if not op(a - b, f).is_zero():
                return False
        for l in range(1, n):
            for m in range(l + 2, n):
                if not op(t(l) * t(m) - t(m) * t(l), f).is_zero():
                    return False
        for k in range(1, n + 1):
            for m in range(1, n + 1):
                if not op(x(k) * x(m) - x(m) * x(k), f).is_zero():
                    return False
    return True


# ---------------------------------------------------------------------------
# built-instance verification suite


def instance_label(A: cy.CyclotomicAlgebra) -> str:
    return (f"cartan={A.datum.cartan_matrix} weight={A.lam.coefficients} "
            f"alpha={A.alpha.coefficients} field={A.field.name}")


def verify_instance(A: cy.CyclotomicAlgebra) -> list[dict]:
    """The full theorem suite on one built algebra."""
    inst = instance_label(A)
    records = [_rec("build-certificate", inst, True,
                    {"dim": A.dim, "B": A.B,
                     "graded_dims": {str(k): v for k, v in A.graded_dims().items()},
                     "d_top": A.d_top})]

    ok, w = cc.verify_degree_support(A)
    w["cocenter_dims"] = {str(k): v for k, v in w["cocenter_dims"].items()}
    records.append(_rec("degree-support", inst, ok, w))

    ok, w = cc.verify_duality(A)
    w = {k: ({str(a): b for a, b in v.items()} if isinstance(v, dict) else v)
         for k, v in w.items()}
    records.append(_rec("trace-center-duality", inst, ok, w))

    ok, w = cc.verify_tr0_dimension(A)
    records.append(_rec("degree-zero-dimension", inst, ok, w))

    span = pw.verify_spans(A)
    for key in "abcdefg":
        records.append(_rec(f"span-check-{key}", inst, span[key]))

    if A.dim == 0:
        records.append(_rec("fullness", inst, "SKIP", {"reason": "zero algebra"}))
    else:
        es = pw.build_distinguished("e_sum", A)
        esm = pw.build_distinguished("e_sum_minus", A)
        ok = pw.fullness_check(A, es) and pw.fullness_check(A, esm)
        records.append(_rec("fullness", inst, ok))

    lem = pw.verify_lemma_cocenter_cases(A)
    records.append(_rec("run-local-cocenter-cases", inst, all(lem.values()), lem))

    ok, w = cc.top_degree_probe(A)
    records.append(_rec("top-degree-probe", inst, ok, w))

    pds = pw.enumerate_pd(A.alpha, A.lam, A.datum)
    records.append(_rec("piecewise-dominant-list", inst, True,
                        {"PD_alpha": [list(nu) for nu in pds]}))

    if A.dim:
        scalars = {}
        all_prop = True
        for nu in pds:
            prop, s = pw.z_prime_proportionality(A, nu)
            all_prop = all_prop and prop
            scalars[str(list(nu))] = str(s)
        records.append(_rec("top-element-proportionality", inst, all_prop,
                            {"scalars": scalars}))
    return records


def dominance_equivalence_suite(data: list[CartanDatum], lam_by_rank: dict,
                                height_max: int = 6) -> list[dict]:
    """Exhaustive agreement of the two dominance criteria (mismatch raises)."""
    import itertools

    records = []
    for datum in data:
        rank = len(datum.cartan_matrix)
        count = 0
        for lam_coef in lam_by_rank[rank]:
            lam = DominantWeight(lam_coef)
            for h in range(1, height_max + 1):
                for coef in itertools.product(range(h + 1), repeat=rank):
                    if sum(coef) != h:
                        continue
                    for nu in enumerate_sequences(RootVector(coef), datum):
                        pw.is_piecewise_dominant(nu, lam, datum)
                        count += 1
        records.append(_rec("dominance-criteria-agreement",
                            f"cartan={datum.cartan_matrix} height<={height_max}",
                            True, {"sequences_checked": count}))
    return records
