"""Acceptance suite: nine exact verification criteria, one line each.

Criteria 2–8 operate on the shared session-built instance family (rank-1
data with levels 1–3, the symmetric rank-2 datum with two weights, and an
asymmetric rank-2 datum), each built over ℚ, F_2, and F_3.
"""
import itertools
import random

import pytest

from klrcocenter import cocenter as cc
from klrcocenter import cyclotomic as cy
from klrcocenter import piecewise as pw
from klrcocenter import suites
from klrcocenter.cartan import DominantWeight
from klrcocenter.fields import GF, QQ

from conftest import RANK1, RANK2_ASYM, RANK2_SYM


CONCLUSIONS: list[str] = []


def conclude(number: int, title: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    line = f"ACCEPTANCE CRITERION {number} ({title}): {status} {detail}".rstrip()
    CONCLUSIONS.append(line)
    print(line)
    assert ok, f"criterion {number} ({title}) failed: {detail}"


def test_criterion_1_nilhecke_identities():
    records = suites.nilhecke_suite([QQ, GF(2), GF(3), GF(5)], n_max=5,
                                    n_random=200)
    bad = [r for r in records if r["status"] == "FAIL"]
    conclude(1, "nilHecke identity suite", not bad,
             f"{len(records)} checks, failures: {[r['id'] for r in bad]}")


def test_criterion_2_builds_and_closed_forms(built_instances):
    ok = True
    detail = []
    for A in built_instances:
        if set(A.certificate) != {(k, nu) for nu in A.ctx.sequences
                                  for k in range(1, A.ctx.n + 1)}:
            ok, detail = False, detail + [f"certificate {suites.instance_label(A)}"]
        e = A.identity
        if A.multiply(e, e) != e:
            ok, detail = False, detail + [f"unit {suites.instance_label(A)}"]
        for nu in A.ctx.sequences:
            env = A.idempotent_coords(nu)
            if not A.is_idempotent(env):
                ok, detail = False, detail + [f"idempotent {nu}"]
        if A.dim <= 40:
            F = A.field
            units = [{k: F.one} for k in range(A.dim)]
            for a, b, c in itertools.product(units, repeat=3):
                if A.multiply(A.multiply(a, b), c) != A.multiply(a, A.multiply(b, c)):
                    ok, detail = False, detail + [f"assoc {suites.instance_label(A)}"]
                    break
        # rank-1 closed forms
        if A.datum is RANK1:
            ell, n = A.lam.coefficients[0], A.alpha.coefficients[0]
            if A.dim != cy.a1_closed_form_dim(ell, n):
                ok, detail = False, detail + [f"closed-form dim ell={ell} n={n}"]
            tr0 = cc.cocenter_dims(A).get(0, 0)
            if n > ell and A.dim != 0:
                ok, detail = False, detail + [f"nonzero beyond level ell={ell} n={n}"]
            if n <= ell and tr0 != 1:
                ok, detail = False, detail + [f"tr0 ell={ell} n={n}"]
    conclude(2, "cyclotomic builds with certificates", ok, "; ".join(detail))


def test_criterion_3_degree_support(built_instances):
    bad = [suites.instance_label(A) for A in built_instances
           if not (cc.verify_degree_support(A)[0]
                   and all(0 <= d <= A.d_top and d % 2 == 0
                           for d in cc.center_dims(A)))]
    conclude(3, "cocenter/center support in [0, d_top] ∩ 2ℤ", not bad, "; ".join(bad))


def test_criterion_4_duality(built_instances):
    bad = [suites.instance_label(A) for A in built_instances
           if not cc.verify_duality(A)[0]]
    conclude(4, "dim Tr_d = dim Z_{d_top−d}", not bad, "; ".join(bad))


def test_criterion_5_degree_zero_dimension(built_instances):
    bad = [suites.instance_label(A) for A in built_instances
           if not cc.verify_tr0_dimension(A)[0]]
    conclude(5, "dim Tr_0 equals the weight multiplicity", not bad, "; ".join(bad))


def test_criterion_6_span_suite(built_instances):
    bad = []
    for A in built_instances:
        rep = pw.verify_spans(A)
        if not all(rep.values()):
            bad.append(f"{suites.instance_label(A)} {rep}")
    conclude(6, "span and vanishing checks (a)–(g)", not bad, "; ".join(bad))


def test_criterion_7_fullness(built_instances):
    bad = []
    for A in built_instances:
        if A.dim == 0:
            continue
        es = pw.build_distinguished("e_sum", A)
        esm = pw.build_distinguished("e_sum_minus", A)
        if not (pw.fullness_check(A, es) and pw.fullness_check(A, esm)):
            bad.append(suites.instance_label(A))
    conclude(7, "fullness of the dominant idempotents", not bad, "; ".join(bad))


def test_criterion_8_top_degree_probe(built_instances):
    bad = []
    probes = {}
    for A in built_instances:
        ok, w = cc.top_degree_probe(A)
        probes[suites.instance_label(A)] = w["top_dim"]
        if not ok:
            bad.append(f"{suites.instance_label(A)} top_dim={w['top_dim']}")
    conclude(8, "top-degree dimension probe", not bad, "; ".join(bad))


def test_criterion_9_dominance_equivalence():
    lam_by_rank = {1: [(1,), (2,), (3,)], 2: [(1, 0), (1, 1), (0, 2)]}
    records = suites.dominance_equivalence_suite(
        [RANK1, RANK2_SYM, RANK2_ASYM], lam_by_rank, height_max=6)
    total = sum(r["witness"]["sequences_checked"] for r in records)
    ok = all(r["status"] == "PASS" for r in records)
    conclude(9, "dominance criteria equivalence", ok,
             f"{total} sequences at height ≤ 6")
