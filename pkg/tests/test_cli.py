import json
import subprocess
import sys

import jsonschema
import pytest
from referencing import Registry, Resource

from brickwork import io
from brickwork.cli import EXIT_INCONSISTENT, EXIT_INVALID, EXIT_OK, dispatch, main

SCHEMAS = ["algebra", "module", "realization", "p1-morphism", "ditalgebra", "algebra-check-report",
           "p1-decomposition-report", "family-report", "dit-analysis-report", "dit-normalization-report",
           "dit-factorization-report"]


@pytest.fixture(scope="module")
def registry():
    resources = [(s["$id"], Resource.from_contents(s)) for s in map(io.schema, SCHEMAS)]
    return Registry().with_resources(resources)


def validate(doc, name, registry):
    jsonschema.Draft202012Validator(io.schema(name), registry=registry).validate(doc)


def fx(name):
    return str(io.fixture_path(name))


def run(*argv):
    code, out = dispatch(list(argv))
    return code, out


def run_json(*argv):
    code, out = run(*argv)
    return code, json.loads(out) if code != EXIT_INVALID else out


@pytest.mark.parametrize("name", SCHEMAS)
def test_schemas_are_valid(name):
    jsonschema.Draft202012Validator.check_schema(io.schema(name))


@pytest.mark.parametrize("fixture,schema_name", [
    ("kronecker.algebra.json", "algebra"), ("example25.algebra.json", "algebra"),
    ("kronecker.module.json", "module"), ("kronecker.realization.json", "realization"),
    ("jordan.realization.json", "realization"), ("localized.realization.json", "realization"),
    ("kronecker.gamma1.morphism.json", "p1-morphism"), ("dit_xy.json", "ditalgebra"),
    ("dit_xminusy.json", "ditalgebra"), ("dit_triple.json", "ditalgebra"), ("dit_kronecker.json", "ditalgebra"),
])
def test_fixtures_match_schemas(fixture, schema_name, registry):
    validate(io.load_fixture(fixture), schema_name, registry)


def test_family_verdict_kronecker(registry):
    code, rep = run_json("family", "verdict", "--algebra", fx("kronecker.algebra.json"),
                         "--realization", fx("kronecker.realization.json"))
    assert code == EXIT_OK
    assert rep["label"] == "CONSISTENT-positive"
    validate(rep, "family-report", registry)


def test_family_verdict_jordan(registry):
    code, rep = run_json("family", "verdict", "--algebra", fx("kronecker.algebra.json"),
                         "--realization", fx("jordan.realization.json"), "--count", "8")
    assert code == EXIT_OK and rep["label"] == "CONSISTENT-negative"
    assert len(rep["sampled"]) == 8


def test_family_inconsistent_exit_code(tmp_path, registry):
    spec = {"h": "1", "dims": {"1": 1, "2": 2}, "maps": {"a": [["1"], ["0"]], "b": [["0"], ["x"]]}}
    path = tmp_path / "split.json"
    path.write_text(json.dumps(spec))
    argv = ["family", "verdict", "--algebra", fx("kronecker.algebra.json"), "--realization", str(path)]
    code, rep = run_json(*argv)
    assert code == EXIT_INCONSISTENT and rep["verdict"] == "INCONSISTENT"
    validate(rep, "family-report", registry)
    code, rep = run_json(*argv, "--max-exceptions", "1")
    assert code == EXIT_OK


def test_family_scan(registry):
    code, rep = run_json("family", "scan", "--algebra", fx("kronecker.algebra.json"),
                         "--realization", fx("localized.realization.json"), "--samples", "4")
    assert code == EXIT_OK
    assert "0" not in rep["sampled"]
    validate(rep, "family-report", registry)


def test_dit_analyze_x_minus_y(registry):
    code, rep = run_json("dit", "analyze", fx("dit_xminusy.json"))
    assert code == EXIT_OK
    assert rep["generic_brick_flag"] is False
    validate(rep, "dit-analysis-report", registry)


@pytest.mark.parametrize("name", ["dit_xy", "dit_two_generator", "dit_triple", "dit_skew"])
def test_dit_analyze_reports(name, registry):
    code, rep = run_json("dit", "analyze", fx(f"{name}.json"), "--samples", "6")
    assert code == EXIT_OK
    validate(rep, "dit-analysis-report", registry)


@pytest.mark.parametrize("name", ["dit_skew", "dit_swap", "dit_two_row"])
def test_dit_normalize(name, registry):
    code, rep = run_json("dit", "normalize", fx(f"{name}.json"))
    assert code == EXIT_OK
    validate(rep, "dit-normalization-report", registry)
    validate(rep["normalized"], "ditalgebra", registry)


def test_dit_normalize_rank_deficient():
    code, out = run("dit", "normalize", fx("dit_two_generator.json"))
    assert code == EXIT_INVALID and "rank" in out


def test_dit_factor(registry):
    code, rep = run_json("dit", "factor", fx("dit_two_row.json"), "--row", "2")
    assert code == EXIT_OK and len(rep["terms"]) == 2
    validate(rep, "dit-factorization-report", registry)
    code, rep = run_json("dit", "factor", fx("dit_skew.json"), "--row", "1", "--normalize",
                         "--q", "x + 1", "--demand", "1/(x-2)")
    assert code == EXIT_OK
    validate(rep, "dit-factorization-report", registry)


def test_dit_factor_needs_normal_form():
    code, out = run("dit", "factor", fx("dit_skew.json"), "--row", "1")
    assert code == EXIT_INVALID and "normal" in out


def test_p1_decompose(registry):
    code, rep = run_json("p1", "decompose", "--algebra", fx("kronecker.algebra.json"),
                         "--morphism", fx("kronecker.gamma1.morphism.json"))
    assert code == EXIT_OK and rep["recomposes"]
    validate(rep, "p1-decomposition-report", registry)
    code, rep = run_json("p1", "decompose", "--algebra", fx("example25.algebra.json"),
                         "--random", "10", "--scalars", "kx", "--seed", "3")
    assert code == EXIT_OK and rep["recomposed"] == 10
    validate(rep, "p1-decomposition-report", registry)


def test_algebra_check(registry):
    code, rep = run_json("algebra", "check", fx("kronecker.algebra.json"), "--module", fx("kronecker.module.json"))
    assert code == EXIT_OK
    validate(rep, "algebra-check-report", registry)


def test_unknown_subcommand():
    code, out = run("frobnicate")
    assert code == EXIT_INVALID and "usage:" in out
    code, out = run("dit", "explode", fx("dit_xy.json"))
    assert code == EXIT_INVALID and "usage:" in out


@pytest.mark.parametrize("argv,needle", [
    (["--field", "Fp:9"], "--field"),
    (["--field", "R"], "--field"),
    (["--count", "0"], "--count"),
])
def test_config_errors_name_the_field(argv, needle):
    code, out = run("family", "scan", "--algebra", fx("kronecker.algebra.json"),
                    "--realization", fx("kronecker.realization.json"), *argv)
    assert code == EXIT_INVALID and needle in out


def test_missing_file():
    code, out = run("dit", "analyze", "/nonexistent/spec.json")
    assert code == EXIT_INVALID


def test_malformed_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out = run("dit", "analyze", str(bad))
    assert code == EXIT_INVALID


def test_field_override():
    code, rep = run_json("family", "verdict", "--algebra", fx("kronecker.algebra.json"),
                         "--realization", fx("jordan.realization.json"), "--field", "Fp:5", "--count", "20")
    assert code == EXIT_OK and len(rep["sampled"]) == 5


def test_text_format():
    code, out = run("dit", "analyze", fx("dit_xy.json"), "--format", "text")
    assert code == EXIT_OK and "generic brick flag: true" in out


@pytest.mark.parametrize("argv", [
    ["p1", "decompose", "--algebra", fx("example25.algebra.json"), "--random", "5", "--seed", "11"],
    ["dit", "factor", fx("dit_triple.json"), "--row", "1"],
    ["family", "verdict", "--algebra", fx("kronecker.algebra.json"),
     "--realization", fx("jordan.realization.json")],
])
def test_deterministic_output(argv):
    assert run(*argv) == run(*argv)


def test_out_flag(tmp_path):
    out = tmp_path / "report.json"
    code, printed = run("dit", "analyze", fx("dit_xy.json"), "--out", str(out))
    assert code == EXIT_OK and printed == ""
    assert out.read_bytes() == run("dit", "analyze", fx("dit_xy.json"))[1].encode()


def test_main_streams(capsys):
    assert main(["frobnicate"]) == EXIT_INVALID
    assert "usage:" in capsys.readouterr().err
    assert main(["dit", "analyze", fx("dit_xy.json")]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["kind"] == "dit-analysis"


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "brickwork.cli", "dit", "analyze", fx("dit_xminusy.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["generic_brick_flag"] is False
