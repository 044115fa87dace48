import json
from importlib import resources

import jsonschema
import pytest

from pqharmonic.cli import main, run
from pqharmonic.config import parse_config, serialize
from pqharmonic.errors import ParseError, ValidationError
from pqharmonic.family import preset

SCHEMA = json.loads(resources.files("pqharmonic").joinpath("schemas/report.schema.json").read_text())

STARLIKE_JOB = {"family": {"preset": "starlike", "alpha": 0.0},
                "function": {"a": [-0.25], "b": []}, "action": "check"}


def job(**over):
    d = json.loads(json.dumps(STARLIKE_JOB))
    d.update(over)
    return json.dumps(d)


def test_parse_examples():
    cfg = parse_config(job())
    assert cfg.family == preset("starlike") and cfg.action == "check"
    with pytest.raises(ValidationError) as exc:
        parse_config(json.dumps({"family": {"preset": "starlike", "alpha": 1.0},
                                 "function": {"a": [-0.25]}, "action": "check"}))
    assert exc.value.path == "family"
    cfg = parse_config(json.dumps({
        "family": {"m": 1, "n": 0, "i": 1, "j": 0, "p": 1.0, "q": 0.5, "alpha": 0.0,
                   "lambda": "k", "mu": "k", "u": "1", "v": "1"},
        "function": {"a": [-0.25], "b": []}, "action": "check"}))
    from dataclasses import replace
    assert replace(cfg.family, name="starlike_q(0.5)") == preset("starlike_q", q=0.5)


@pytest.mark.parametrize("text, exc", [
    ("{not json", ParseError),
    (json.dumps({"function": {}}), ValidationError),
    (job(action="dance"), ValidationError),
    (job(tol=0), ValidationError),
    (job(mode="sideways"), ValidationError),
    (job(function={"a": [0.1], "extreme": {"kind": "h", "k": 2}}), ValidationError),
    (job(function={"extreme": {"kind": "x", "k": 2}}), ValidationError),
    (job(family={"preset": "nope"}), ValidationError),
    (job(grid={"radii": [0.5, 1.2]}), ValidationError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_config(text)


def test_parse_surfaces_deviation_warnings():
    cfg = parse_config(job())
    assert any("mu_k == v_k" in w for w in cfg.warnings)


@pytest.mark.parametrize("doc", [
    STARLIKE_JOB,
    {"family": {"preset": "convex_q", "q": 0.3, "alpha": 0.2, "trunc": 32},
     "function": {"weights": {"x": [0.5, 0.25], "y": [0.0, 0.25]}}, "action": "verify",
     "grid": {"n_radii": 4, "angles_per_circle": 64}, "tol": 1e-8, "mode": "statement",
     "options": {"k_max": 4}},
    {"family": {"preset": "convolution", "lambda": [3.0] * 20, "mu": "k^2", "v": [1.0] * 21,
                "i": 0, "j": 1, "trunc": 21},
     "function": {"extreme": {"kind": "g", "k": 3}}, "action": "extremal", "output": "x.json"},
    {"family": {"preset": "yalcin", "m": 4, "n": 2}, "function": {"a": [[-0.01, 0.02]], "b": [0.1]},
     "action": "bounds"},
])
def test_config_round_trip(doc):
    cfg = parse_config(json.dumps(doc))
    again = parse_config(serialize(cfg))
    assert again == cfg
    assert serialize(again) == serialize(cfg)


def test_run_check_known_answer():
    report, code = run(parse_config(job()))
    assert code == 0
    assert report["results"]["functional"] == pytest.approx(1.0)
    assert report["results"]["member_sufficient"] is True
    jsonschema.validate(report, SCHEMA)


def test_run_bounds_known_answer():
    report, code = run(parse_config(job(action="bounds")))
    assert code == 0
    res = report["results"]
    assert res["beta"] == 4.0 and res["covering_radius"] == 0.75 and res["convexity_radius"] == 0.5
    jsonschema.validate(report, SCHEMA)


def test_run_verify_non_member_fails():
    report, code = run(parse_config(job(action="verify", function={"a": [-0.3]})))
    assert code == 1 and report["status"] == "fail"
    assert report["results"]["re_condition"]["witness"] is not None
    assert report["results"]["necessity_probe"]["passed"] is True
    jsonschema.validate(report, SCHEMA)


def test_run_verify_member_passes():
    report, code = run(parse_config(job(action="verify")))
    assert code == 0, report["results"]
    assert report["results"]["distortion"]["passed"]


@pytest.mark.parametrize("action", ["extremal", "bracket"])
def test_other_actions_validate(action):
    report, code = run(parse_config(job(action=action)))
    assert code == 0
    jsonschema.validate(report, SCHEMA)
    if action == "bracket":
        assert report["results"]["brackets"]["3"] == 3.0
    else:
        assert report["results"]["decomposition"]["x"] == {"2": 1.0}
        assert any("not sense-preserving" in w for w in report["warnings"])


def test_run_error_maps_to_exit_2(tmp_path):
    cfg = parse_config(job(action="render", output=str(tmp_path / "missing" / "x.ppm")))
    report, code = run(cfg)
    jsonschema.validate(report, SCHEMA)
    assert code == 2 and report["status"] == "error" and "error" in report["results"]


def test_main_flags_and_files(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["--action", "bounds", "--preset", "starlike", "--a=-0.25", "--out", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["results"]["beta"] == 4.0
    jsonschema.validate(report, SCHEMA)


def test_main_json_wins_with_warning(tmp_path, capsys):
    cfgfile = tmp_path / "job.json"
    cfgfile.write_text(job())
    code = main(["--config", str(cfgfile), "--alpha", "0.5", "--action", "bounds"])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["inputs"]["family"]["alpha"] == 0.0
    assert report["action"] == "check"
    assert any("--alpha=0.5 ignored" in w for w in report["warnings"])


def test_main_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    assert main(["--config", str(bad)]) == 2
    assert main(["--preset", "starlike", "--alpha", "1.5"]) == 2


@pytest.mark.parametrize("action", ["check", "bounds", "extremal", "verify", "bracket"])
def test_main_emits_valid_json_for_every_action(action, capsys):
    code = main(["--action", action, "--preset", "convex", "--alpha", "0.2", "--extreme", "h2"])
    report = json.loads(capsys.readouterr().out)
    assert code == 0 and report["status"] == "pass"
    jsonschema.validate(report, SCHEMA)


def test_main_verify_exit_1(capsys):
    assert main(["--action", "verify", "--preset", "starlike", "--a=-0.3"]) == 1
