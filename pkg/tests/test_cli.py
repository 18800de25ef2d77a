import json

import pytest

from klrcocenter.cli import ConfigParse, load_config, main


def write_config(tmp_path, doc, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


GOOD = {
    "cartan_matrix": [[2]],
    "weight": [2],
    "alpha": [2],
    "fields": ["Q", "F2"],
}


def test_validate_ok(tmp_path, capsys):
    cfg = write_config(tmp_path, GOOD)
    assert main(["validate", cfg]) == 0
    out = capsys.readouterr().out
    assert "overall: PASS" in out


def test_validate_bad_matrix(tmp_path, capsys):
    cfg = write_config(tmp_path, {"cartan_matrix": [[2, -1], [0, 2]]})
    assert main(["validate", cfg]) == 2
    assert "InvalidDatum" in capsys.readouterr().err


def test_config_errors(tmp_path):
    with pytest.raises(ConfigParse):
        load_config(write_config(tmp_path, {"weight": [1]}))
    bad = tmp_path / "broken.json"
    bad.write_text("{nope")
    with pytest.raises(ConfigParse):
        load_config(str(bad))
    with pytest.raises(ConfigParse):
        load_config(write_config(tmp_path, {"cartan_matrix": [[2]],
                                            "fields": ["F9"]}))


def test_nilhecke_suite_command(capsys):
    assert main(["nilhecke-suite", "--n", "2", "--fields", "Q"]) == 0
    assert "overall: PASS" in capsys.readouterr().out


def test_verify_and_report_determinism(tmp_path, capsys):
    cfg = write_config(tmp_path, GOOD)
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert main(["verify", cfg, "--json", str(r1)]) == 0
    assert main(["verify", cfg, "--json", str(r2)]) == 0
    assert r1.read_text() == r2.read_text()
    doc = json.loads(r1.read_text())
    assert doc["schema"] == "klrcocenter-report-v1"
    assert doc["summary"]["overall"] == "PASS"
    assert doc["summary"]["FAIL"] == 0
    ids = [c["id"] for c in doc["checks"]]
    assert "degree-support" in ids and "span-check-g" in ids
    capsys.readouterr()


def test_build_saves_artifact(tmp_path, capsys):
    cfg = write_config(tmp_path, GOOD)
    out = tmp_path / "alg"
    assert main(["build", cfg, "--out", str(out)]) == 0
    from klrcocenter.cyclotomic import StoredAlgebra

    S = StoredAlgebra(str(out) + ".Q.json")
    assert S.dim == 4
    capsys.readouterr()


def test_cocenter_command(tmp_path, capsys):
    cfg = write_config(tmp_path, GOOD)
    rep = tmp_path / "c.json"
    assert main(["cocenter", cfg, "--json", str(rep)]) == 0
    doc = json.loads(rep.read_text())
    wit = doc["checks"][0]["witness"]
    assert wit["cocenter"] == {"0": 1}
    capsys.readouterr()
