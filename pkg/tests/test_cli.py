import json
from pathlib import Path

import pytest

from cyclodft.claims import CAVEAT, ClaimResult, Residual, WITNESS, claim_ids
from cyclodft.cli import RunConfig, main, parse_config, render_report
from cyclodft.phasepoly import constant

FIXTURE = Path(__file__).parent / "fixtures" / "verify_all.json"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def strip_float_values(doc):
    for r in doc["results"]:
        for c in r.get("float_cross_check", {}).get("checks", []):
            c.pop("value")
    return doc


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify-all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == 1
    assert [r["claim_id"] for r in doc["results"]] == claim_ids()
    assert set(doc["results"][0]) >= {"claim_id", "status", "paper_location", "residuals", "detail", "timing_ms"}


def test_verify_all_matches_snapshot(capsys):
    _, out, _ = run(capsys, "verify-all", "--format", "json")
    assert strip_float_values(json.loads(out)) == strip_float_values(json.loads(FIXTURE.read_text()))


def test_determinism(capsys):
    outs = [run(capsys, "verify-all", "--format", "json", "--seed", "3")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    texts = [run(capsys, "verify-all")[1] for _ in range(2)]
    assert texts[0] == texts[1]


def test_verify_single_T1(capsys):
    code, out, _ = run(capsys, "verify", "T1", "--format", "json")
    assert code == 0
    (res,) = json.loads(out)["results"]
    assert res["claim_id"] == "T1" and res["status"] == "verified"
    names = {r["name"]: r for r in res["residuals"]}
    assert not names["preservation_witness"]["exact_zero"]
    assert names["witness_at_zero_phase"]["value"]


def test_solve_coefficients(capsys):
    code, out, _ = run(capsys, "solve-coefficients", "--root-order", "12", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    roots = [tuple(s["alpha_root"]) + tuple(s["beta_root"]) for s in doc["solutions"]]
    assert (4, 12, 4, 12) in roots and (8, 12, 8, 12) in roots
    assert (0, 12, 0, 12) not in roots


def test_report_text(capsys):
    code, out, _ = run(capsys, "report")
    assert code == 0
    assert "float grid probe" in out and "remote state preparation" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "Z9")
    assert code == 2 and "T1" in err and "P1-<n>" in err
    assert run(capsys, "verify-all", "--bogus")[0] == 2
    assert run(capsys, "verify-all", "--tolerance", "0")[0] == 2
    assert run(capsys, "verify-all", "--inject-fault", "nope")[0] == 2


@pytest.mark.parametrize("cid", claim_ids())
def test_fault_injection_flips_to_refuted(capsys, cid):
    code, out, _ = run(capsys, "verify", cid, "--format", "json", "--inject-fault", cid)
    assert code == 1
    assert json.loads(out)["results"][0]["status"] == "refuted"


def test_float_backend_never_verifies(capsys):
    code, out, _ = run(capsys, "verify-all", "--backend", "float", "--format", "json")
    assert code == 0
    statuses = {r["status"] for r in json.loads(out)["results"]}
    assert statuses == {"consistent"}


def test_output_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "Q1", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["results"][0]["claim_id"] == "Q1"


def test_config_record(capsys):
    cfg = parse_config(["verify-all", "--pairwise-dims", "2,7", "--seed", "9"])
    assert cfg.pairwise_dims == [2, 7] and cfg.random_seed == 9
    _, out, _ = run(capsys, "verify-all", "--pairwise-dims", "3", "--format", "json", "--backend", "exact")
    doc = json.loads(out)
    assert doc["config"]["pairwise_dims"] == [3]
    assert [r["claim_id"] for r in doc["results"]].count("P1-3") == 1


def test_render_empty_and_caveat():
    assert "no claims" in render_report([], "text")
    assert json.loads(render_report([], "json"))["results"] == []
    res = ClaimResult("P1-3", CAVEAT, (Residual("w", constant(1), WITNESS),), "d", "loc")
    assert "CAVEAT" in render_report([res], "text")
    assert json.loads(render_report([res], "json"))["results"][0]["status"] == "caveat"


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "verify-all", "--format", "json")
    _, text, _ = run(capsys, "verify-all")
    doc = json.loads(out)
    for r in doc["results"]:
        assert f"{r['claim_id']:<7}" in text
    assert json.loads(json.dumps(doc)) == doc
