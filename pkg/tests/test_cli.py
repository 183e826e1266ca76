import io
import json

import pytest

from nonproper.cli import main
from nonproper.families import fixture
from nonproper.mapfile import format_map


@pytest.fixture
def map14(tmp_path):
    p = tmp_path / "map14.txt"
    p.write_text(format_map(fixture("1.4")))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json(capsys, map14):
    code, out, _ = run(capsys, "analyze", map14, "--json")
    assert code == 0
    rep = json.loads(out)
    assert [(m["s"], m["t"]) for m in rep["missing"]["verified"]] == [("1", "1"), ("2", "2")]
    assert rep["schema_version"] == 1 and rep["mu"] == 2


def test_generate_then_analyze_stdin(capsys, monkeypatch):
    code, text, _ = run(capsys, "generate", "thm14", "--n", "2", "--p-roots", "1,3", "--q-roots", "2,5")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out, _ = run(capsys, "analyze", "-", "--json")
    assert code == 0
    assert json.loads(out)["missing"]["count"] == 4


def test_verify_attained(capsys, map14):
    code, out, _ = run(capsys, "verify", map14, "--point", "3,3")
    assert (code, out.strip()) == (0, "attained")


def test_verify_missing_json(capsys, map14):
    code, out, _ = run(capsys, "verify", map14, "--point", "1,1", "--json")
    assert code == 0 and json.loads(out)["result"] == "missing_isolated"


def test_parse_error_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("f1 = u +\nf2 = v\n")
    code, _, err = run(capsys, "faces", str(p))
    assert code == 1 and "column 8" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 1


def test_degenerate_exit_code(capsys, tmp_path):
    p = tmp_path / "flat.txt"
    p.write_text("f1 = u\nf2 = u^2\n")
    code, _, _ = run(capsys, "analyze", str(p))
    assert code == 2


def test_require_generic_exit_code(capsys, map14):
    code, _, err = run(capsys, "missing", map14, "--require-generic")
    assert code == 3 and "degenerate" in err


def test_other_subcommands(capsys, map14, tmp_path):
    code, out, _ = run(capsys, "mixed-volume", map14)
    assert (code, out.strip()) == (0, "2")
    code, out, _ = run(capsys, "jelonek", map14)
    assert code == 0 and "s = 1" in out
    code, out, _ = run(capsys, "faces", map14, "--json")
    assert code == 0 and any(f["relevant"] for f in json.loads(out)["faces"])
    dest = tmp_path / "out.json"
    code, _, _ = run(capsys, "missing", map14, "--json", "--out", str(dest))
    assert code == 0 and json.loads(dest.read_text())["missing"]["count"] == 2


def test_tolerance_and_precision_flags(capsys, map14):
    code, out, _ = run(capsys, "analyze", map14, "--json", "--precision", "192",
                       "--tolerance", "1e-7", "--tolerance", "dedup_radius=1e-12")
    assert code == 0 and json.loads(out)["precision_bits"] == 192
    code, _, _ = run(capsys, "analyze", map14, "--tolerance", "bogus=1")
    assert code == 1


def test_deterministic_reports(capsys, map14):
    first = run(capsys, "analyze", map14, "--json", "--seed", "5")[1]
    second = run(capsys, "analyze", map14, "--json", "--seed", "5")[1]
    assert first == second


def test_generate_fixture_and_lemma(capsys):
    code, out, _ = run(capsys, "generate", "fixture", "--id", "1.3")
    assert code == 0 and out == format_map(fixture("1.3"))
    code, out, _ = run(capsys, "generate", "lemma23", "--k", "2", "--p-coeffs", "1,0,-1")
    assert code == 0 and out == format_map(fixture("1.2"))
