import json
from pathlib import Path

import pytest

from gqam.cli import main
from gqam.specio import dump_function, parse_continuous, parse_function

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
J_PATH = str(DATA / "j.json")
ID_PATH = str(DATA / "id.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mean(capsys):
    assert run(capsys, "mean", "-f", J_PATH, "--points", "1/2,3/2") == (0, "1\n", "")


def test_wmean(capsys):
    assert run(capsys, "wmean", "-f", J_PATH, "--points", "1/2,3/2", "--weights", "3,1")[:2] == (0, "1\n")


def test_eval(capsys):
    assert run(capsys, "eval", "-f", J_PATH, "--x", "3/2")[1] == "5/2\n"
    assert run(capsys, "eval", "-f", J_PATH, "--x", "1", "--limits")[1] == "1 1 2\n"


def test_compare_exit_codes(capsys):
    code, out, _ = run(capsys, "compare", "-f", J_PATH, "-g", ID_PATH)
    assert code == 1 and out.startswith("INCOMPARABLE\n") and out.count("witness against") == 2
    code, out, _ = run(capsys, "compare", "-f", J_PATH, "-g", J_PATH, "--json")
    assert code == 0 and json.loads(out)["relation"] == "EQUAL"


def test_compare_report_json(capsys):
    code, out, _ = run(capsys, "compare", "-f", J_PATH, "-g", ID_PATH, "--json")
    data = json.loads(out)
    assert code == 1 and len(data["witnesses"]) == 2
    assert all(w["counterexample"] is not None for w in data["witnesses"])


def test_equal(capsys):
    assert run(capsys, "equal", "-f", J_PATH, "-g", ID_PATH)[:2] == (1, "NOT EQUAL\n")


def test_probes(capsys):
    code, out, _ = run(capsys, "probe", "-f", J_PATH, "--x", "1", "--check", "lsc")
    assert code == 0 and out == "lower semicontinuous: True\n"
    code, out, _ = run(capsys, "probe", "-f", J_PATH, "--x", "1", "--check", "usc")
    assert code == 1 and "witness y = 3/2" in out
    assert run(capsys, "probe", "-f", ID_PATH, "--check", "kolmogorov")[0] == 0
    assert run(capsys, "probe", "-f", J_PATH, "--check", "kolmogorov")[0] == 1


def test_reduce_and_floor(capsys):
    assert run(capsys, "reduce", "-f", J_PATH, "--points", "1/2,3/2", "--n", "4")[1] == "1 1\n"
    code, out, _ = run(capsys, "floorcheck", "-f", J_PATH, "-g", ID_PATH, "--n", "8", "--triples", "1/2,3/4,3/2")
    assert code == 1 and out.startswith("FAIL")


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "mean", "-f", J_PATH, "--points", "5")[0] == 2
    assert run(capsys, "mean", "-f", str(tmp_path / "missing.json"), "--points", "1")[0] == 2
    assert run(capsys, "mean", "-f", J_PATH, "--points", "0.5")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "mean", "-f", str(bad), "--points", "1")
    assert code == 2 and "JSON" in err


def test_envelope_and_inverse_roundtrip(capsys):
    f = parse_function(Path(J_PATH))
    code, out, _ = run(capsys, "envelope", "-f", J_PATH, "--side", "upper")
    assert code == 0 and parse_function(out) == f.upper_envelope()
    code, out, _ = run(capsys, "inverse", "-f", J_PATH, "--emit")
    assert code == 0 and parse_continuous(out) == f.inverse


def test_example_m(capsys):
    code, out, _ = run(capsys, "example-m", "--a", "-1", "--b", "1", "--n", "2", "--trials", "50", "--seed", "7")
    assert code == 0 and "arity 11" in out
    assert run(capsys, "example-m", "--a", "1", "--b", "2")[0] == 2


@pytest.mark.parametrize("suite", ["reduction", "roundtrip"])
def test_verify_single_suite(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--trials", "5", "--seed", "3")
    assert code == 0 and out.startswith(suite)
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_fixture_files_match_library(J, ident):
    assert parse_function(Path(DATA / "j.json")) == J
    assert (DATA / "id.json").read_text() == dump_function(ident) + "\n"
