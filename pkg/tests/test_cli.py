import io
import json

import pytest

from tropdual.cli import main
from tropdual.region import from_json, region_equal
from tropdual.congruence import congruence_region
from tropdual.parse import parse_congruence


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def region_from(output: str):
    text = output.split("region:\n", 1)[1]
    end = text.index("\n}") + 2
    return from_json(json.loads(text[:end]))


def test_eval():
    assert run("eval", "(3+1e)*x^2+(1+1e)*x+2e", "--at", "0") == (0, "1+1e\n")
    assert run("eval", "x+1", "--at", "inf") == (0, "1\n")
    assert run("eval", "x+1", "--at", "0", "--pi") == (0, "0\n")
    assert run("eval", "x1 + x2", "--at=-1,2")[1] == "-1\n"


def test_usage_and_parse_errors_exit_1():
    assert run("eval", "x+", "--at", "0")[0] == 1
    assert run("eval", "x1+x2", "--at", "0")[0] == 1
    assert run("nonsense")[0] == 1
    assert run("construct", "halfspace", "x^2+x+1 ~ x")[0] == 1
    assert run("construct", "box")[0] == 1


def test_region_congruence_json():
    code, out = run("region", "congruence", "x^2+x+1 ~ x")
    assert code == 0
    assert region_equal(region_from(out), congruence_region(parse_congruence("x^2+x+1 ~ x")))


def test_region_of_constant_is_empty():
    code, out = run("region", "bend", "0")
    assert code == 0 and region_from(out).is_empty


def test_svg_written_and_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    f = "x1*x2 + (0+0e)*x1 + (0+0e)*x2 + 1"
    assert run("region", "bend", f, "--svg", str(a))[0] == 0
    assert run("region", "bend", f, "--svg", str(b))[0] == 0
    assert a.read_text() == b.read_text()
    assert "<polygon" in a.read_text()


def test_svg_needs_two_or_fewer_variables(tmp_path):
    assert run("region", "bend", "x1 + x2 + x3", "--svg", str(tmp_path / "c.svg"))[0] == 1


def test_construct_dual():
    code, out = run("construct", "dual", "x1+x2+0 ~ 0")
    assert code == 0
    assert out.startswith("generators: x1 + (0+0e), x2 + (0+0e)\n")
    assert "region_equal: true" in out


def test_construct_naive_shows_diagonal():
    code, out = run("construct", "congruence", "x1+x2+0 ~ 0", "--naive")
    assert code == 0
    assert "generators: x1 + x2 + y + 0, y + 0" in out
    assert "region_equal: false" in out
    witness = out.split("witness: (", 1)[1].split(")")[0].split(", ")
    assert witness[0] == witness[1] and witness[2] == "0"


def test_construct_congruence_agrees():
    code, out = run("construct", "congruence", "x1+x2+0 ~ 0")
    assert code == 0 and "region_equal: true" in out


def test_construct_box():
    code, out = run("construct", "box", "--interval", "(0,1)")
    assert code == 0
    assert "(0+0e)*x^2 + (0+1e)*x + (1+1e)" in out
    assert "region_equal: true" in out


def test_construct_classical_reports_infinity_only_content():
    code, out = run("construct", "classical", "x1+x2+0, x1")
    assert code == 2 and "region_equal: false" in out


def test_verify_passes_and_seed_from_environment(monkeypatch):
    code, out = run("verify", "union", "--seed", "7", "--cases", "5")
    assert code == 0 and out.startswith("union: pass; 5 instances")
    monkeypatch.setenv("TROPDUAL_SEED", "7")
    assert run("verify", "union", "--cases", "5") == (code, out)


def test_verify_rejects_unknown_suite():
    assert run("verify", "nope")[0] == 1
