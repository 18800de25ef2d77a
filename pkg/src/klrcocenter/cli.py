"""Command-line driver: validate data, run suites, emit reports.

Configuration is a JSON file:

    {
      "cartan_matrix": [[2, -1], [-1, 2]],
      "symmetrizers": null,
      "weight": [1, 1],
      "alpha": [2, 1],
      "fields": ["Q", "F2", "F3"],
      "B": null,
      "max_doublings": 2
    }

Exit status is 0 exactly when every selected check passed.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .cartan import (DominantWeight, RootVector, default_q_matrix,
                     require_valid_q, validate_datum)
from .errors import KLRError
from .fields import field_by_name


class ConfigParse(KLRError):
    pass


def load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigParse(str(exc)) from exc
    if "cartan_matrix" not in raw:
        raise ConfigParse("missing key: cartan_matrix")
    cfg = {
        "cartan_matrix": raw["cartan_matrix"],
        "symmetrizers": raw.get("symmetrizers"),
        "index_set": raw.get("index_set"),
        "weight": raw.get("weight"),
        "alpha": raw.get("alpha"),
        "fields": raw.get("fields", ["Q"]),
        "B": raw.get("B"),
        "max_doublings": raw.get("max_doublings", 2),
        "q_overrides": raw.get("q_overrides"),
        "nilhecke_n": raw.get("nilhecke_n", 4),
    }
    try:
        cfg["field_objects"] = [field_by_name(f) for f in cfg["fields"]]
    except (KLRError, ValueError) as exc:
        raise ConfigParse(f"bad field spec: {exc}") from exc
    return cfg


def _datum_q(cfg):
    datum = validate_datum(cfg["cartan_matrix"], cfg["symmetrizers"],
                           cfg["index_set"])
    q = default_q_matrix(datum)
    if cfg["q_overrides"]:
        from .cartan import QPolynomialMatrix

        coeffs = dict(q.coefficients)
        for item in cfg["q_overrides"]:
            i, j, k, p, c = item
            coeffs[(i, j, k, p)] = c
        q = QPolynomialMatrix(coeffs)
    return datum, q


def _build_all(cfg):
    from . import cyclotomic as cy

    datum, q = _datum_q(cfg)
    if cfg["weight"] is None or cfg["alpha"] is None:
        raise ConfigParse("build requires weight and alpha")
    lam = DominantWeight(tuple(cfg["weight"]))
    alpha = RootVector(tuple(cfg["alpha"]))
    out = []
    for F in cfg["field_objects"]:
        require_valid_q(q, datum, F)
        out.append(cy.build(datum, q, lam, alpha, F, cfg["B"],
                            cfg["max_doublings"]))
    return out


def emit_report(records: list[dict], config_echo, path=None) -> dict:
    statuses = [r["status"] for r in records]
    doc = {
        "schema": "klrcocenter-report-v1",
        "engine_version": __version__,
        "config": config_echo,
        "checks": records,
        "summary": {
            "PASS": statuses.count("PASS"),
            "FAIL": statuses.count("FAIL"),
            "SKIP": statuses.count("SKIP"),
            "overall": "FAIL" if "FAIL" in statuses else "PASS",
        },
    }
    text = json.dumps(doc, indent=1, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return doc


def _finish(records, cfg_echo, args) -> int:
    doc = emit_report(records, cfg_echo, getattr(args, "json", None))
    for r in records:
        line = f"{r['status']:4s} {r['id']} [{r['instance']}]"
        print(line)
    s = doc["summary"]
    print(f"overall: {s['overall']} (pass={s['PASS']} fail={s['FAIL']} "
          f"skip={s['SKIP']})")
    return 0 if s["overall"] == "PASS" else 1


def cmd_validate(args) -> int:
    cfg = load_config(args.config)
    datum, q = _datum_q(cfg)
    records = [{"id": "datum-valid", "instance": str(datum.cartan_matrix),
                "status": "PASS",
                "witness": {"symmetrizers": list(datum.symmetrizers)}}]
    for F in cfg["field_objects"]:
        require_valid_q(q, datum, F)
        records.append({"id": "q-matrix-valid", "instance": F.name,
                        "status": "PASS"})
    return _finish(records, cfg["cartan_matrix"], args)


def cmd_nilhecke(args) -> int:
    from . import suites

    fields = [field_by_name(f) for f in (args.fields or ["Q", "F2", "F3", "F5"])]
    records = suites.nilhecke_suite(fields, n_max=args.n)
    return _finish(records, {"n": args.n, "fields": [f.name for f in fields]}, args)


def cmd_build(args) -> int:
    cfg = load_config(args.config)
    records = []
    for A in _build_all(cfg):
        rec = {"id": "build", "instance": A.field.name, "status": "PASS",
               "witness": {"dim": A.dim, "B": A.B, "d_top": A.d_top,
                           "graded_dims": {str(k): v
                                           for k, v in A.graded_dims().items()}}}
        records.append(rec)
        if args.out:
            A.save(f"{args.out}.{A.field.name}.json")
    return _finish(records, _echo(cfg), args)


def cmd_cocenter(args) -> int:
    from . import cocenter as cc

    cfg = load_config(args.config)
    records = []
    for A in _build_all(cfg):
        records.append({
            "id": "cocenter-dims", "instance": A.field.name, "status": "PASS",
            "witness": {
                "cocenter": {str(k): v for k, v in cc.cocenter_dims(A).items()},
                "center": {str(k): v for k, v in cc.center_dims(A).items()},
                "d_top": A.d_top,
            }})
    return _finish(records, _echo(cfg), args)


def cmd_verify(args) -> int:
    from . import suites

    cfg = load_config(args.config)
    records = []
    for A in _build_all(cfg):
        records.extend(suites.verify_instance(A))
    return _finish(records, _echo(cfg), args)


def cmd_report(args) -> int:
    args.json = args.json or "report.json"
    return cmd_verify(args)


def _echo(cfg):
    return {k: v for k, v in cfg.items() if k != "field_objects"}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="klrcocenter",
        description="exact verification of cocenter/center structure of "
                    "cyclotomic KLR algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate the Cartan datum and Q matrix")
    p.add_argument("config")
    p.add_argument("--json", help="write the report to this path")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("nilhecke-suite", help="run the nilHecke identity suite")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--fields", nargs="*")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_nilhecke)

    p = sub.add_parser("build", help="build the cyclotomic quotient")
    p.add_argument("config")
    p.add_argument("--out", help="artifact path prefix for saved algebras")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("cocenter", help="graded cocenter and center dimensions")
    p.add_argument("config")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_cocenter)

    p = sub.add_parser("verify", help="run the full theorem suite")
    p.add_argument("config")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="verify and always write a JSON report")
    p.add_argument("config")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_report)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except KLRError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
