import json
import subprocess
import sys


def test_decompose_text(run_cli):
    code, out, _ = run_cli("decompose", "--base", 10, "--n", "314159265358979323846")
    assert code == 0
    lines = out.splitlines()
    assert lines[1:4] == [
        "p1 = 210100100111001001012",
        "p2 = 98639929400492993689",
        "p3 = 5419235847485329145",
    ]
    assert "algorithm I" in lines[4] and "adjustment I.2" in lines[4]


def test_decompose_json_schema(run_cli):
    code, out, _ = run_cli("decompose", "--base", 10, "--n", "2718281828459045235360", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["n", "base", "parts", "type", "algorithm", "adjustment"]
    assert data["base"] == 10 and data["adjustment"] == "II.2.ii.a"
    assert all(isinstance(p, str) for p in data["parts"])


def test_decompose_trace(run_cli):
    code, out, _ = run_cli("decompose", "--base", 10, "--n", "12267420107203532444", "--format", "json", "--trace")
    data = json.loads(out)
    assert data["trace"]["k"] == 1
    assert data["trace"]["state"]["case"] == "IV.5.iii.a"
    code, out, _ = run_cli("decompose", "--base", 10, "--n", "12267420107203532444", "--trace")
    assert code == 0 and "carries:" in out and "n' = 12267420096203532444" in out


def test_radix_g_input_and_output(run_cli):
    code, out, _ = run_cli("decompose", "--base", 5, "--radix", 5, "--n", "4301", "--format", "json")
    data = json.loads(out)
    assert data["n"] == "4301"
    assert sum(int(p, 5) for p in data["parts"]) == int("4301", 5)


def test_verify_exit_codes(run_cli):
    assert run_cli("verify", "--base", 10, "--n", 201, "--parts", "101,99,1")[0] == 0
    assert run_cli("verify", "--base", 10, "--n", 201, "--parts", "101,98,2")[0] == 1
    assert run_cli("verify", "--base", 10, "--n", 201, "--parts", "101,99,2")[0] == 1
    assert run_cli("verify", "--base", 10, "--n", 201, "--parts", "101,99")[0] == 2


def test_usage_errors(run_cli):
    code, _, err = run_cli("decompose", "--base", 10, "--n", "12a4")
    assert code == 2 and "position 2" in err
    assert run_cli("decompose", "--base", 10)[0] == 2
    assert run_cli("decompose", "--base", 4, "--n", 100)[0] == 2
    assert run_cli("decompose", "--base", 10, "--n", 0)[0] == 2
    assert run_cli("decompose", "--base", 10, "--radix", 7, "--n", 5)[0] == 2
    assert run_cli("frobnicate")[0] == 2
    assert run_cli("family", "--base", 10, "--len", 3)[0] == 2


def test_check(run_cli):
    code, out, _ = run_cli("check", "--base", 5, "--from", 1, "--to", 78125)
    assert code == 0
    assert "failures: 0" in out.splitlines()
    code2, out2, _ = run_cli("check", "--base", 5, "--from", 1, "--to", 78125, "--workers", 2)
    assert out2 == out


def test_twopal(run_cli, tmp_path):
    path = tmp_path / "c.csv"
    code, out, _ = run_cli("twopal", "--base", 10, "--limit", 10, "--csv", path)
    assert code == 0 and out.splitlines()[0] == "count: 10"
    assert path.read_text().splitlines()[1] == "10,10,10"
    code, out, _ = run_cli("twopal", "--base", 10, "--limit", 10, "--no-zero")
    assert out.splitlines()[0] == "count: 9"  # 1 is not a sum of two positive palindromes


def test_family(run_cli):
    code, out, _ = run_cli("family", "--base", 10, "--len", 5, "--verify-two")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10 and lines[0].startswith("99009 ")
    assert all("not a sum of two palindromes" in line for line in lines)


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "palsum", "verify", "--base", "10", "--n", "201", "--parts", "101,99,1"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0 and r.stdout.strip() == "valid"
