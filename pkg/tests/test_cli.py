import io
import json
from contextlib import redirect_stderr, redirect_stdout

from ybnichols.cli import main


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_verify_catalog_entry():
    code, out, _ = run_cli(["verify", "z3-shift"])
    assert code == 0
    assert "Yang-Baxter identity : ok" in out
    assert "diagonal D           : [2, 0, 1]" in out
    assert "indecomposable" in out


def test_verify_decomposable_entry():
    code, out, _ = run_cli(["verify", "z4-shift2", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["decomposition"] == [[0, 2], [1, 3]]


def test_verify_corrupted_solution_file(tmp_path):
    table = [[[j, i] for j in range(3)] for i in range(3)]
    table[0][0] = [1, 1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"size": 3, "r": table}))
    code, out, _ = run_cli(["verify", str(path)])
    assert code == 1
    assert "FAIL" in out


def test_malformed_json_is_an_input_error(tmp_path):
    path = tmp_path / "mangled.json"
    path.write_text("{not json")
    code, _, err = run_cli(["verify", str(path)])
    assert code == 2
    assert "invalid JSON" in err


def test_unknown_name_is_an_input_error():
    code, _, err = run_cli(["verify", "z9-shift"])
    assert code == 2


def test_orbits_census_and_usage_error():
    code, out, _ = run_cli(["orbits", "z3-shift", "-n", "4", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 4
    assert sum(row["count"] for row in payload["orbits"]) == 15
    code, _, err = run_cli(["orbits", "z3-shift", "-n", "0"])
    assert code == 2


def test_orbits_needs_involutive():
    code, _, err = run_cli(["orbits", "w1", "-n", "3"])
    assert code == 2
    assert "involutive" in err


def test_orbits_witness_and_csv():
    code, out, _ = run_cli(["orbits", "z2-shift", "-n", "3", "--csv"])
    assert code == 0 and out.startswith("lambda,count,size")
    code, out, _ = run_cli(["orbits", "z3-shift", "-n", "3", "--witness", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert all("witness" in o for o in payload["orbit_list"])


def test_dims_expect_and_q_override():
    code, out, _ = run_cli(["dims", "z2-shift", "--q", "zeta4", "--expect"])
    assert code == 0
    assert "total: 16" in out
    assert "expected total 16: ok" in out


def test_dims_json_deterministic():
    args = ["dims", "z3-shift", "--json"]
    code1, out1, _ = run_cli(args)
    code2, out2, _ = run_cli(args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["total"] == 27


def test_dims_growth_profile():
    code, out, _ = run_cli(
        ["dims", "z2-shift", "--q", "2", "--cap", "8", "--exact", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["dims"] == [1, 2, 3, 4, 5, 6, 7, 8, 9]
    assert payload["total"] is None


def test_dims_from_solution_file_with_canonical_q(tmp_path):
    from ybnichols.ybe import SetSolution

    path = tmp_path / "z3.json"
    path.write_text(json.dumps(SetSolution.cyclic_shift(3).to_json()))
    code, out, _ = run_cli(["dims", str(path), "--q", "zeta3", "--json"])
    assert code == 0
    assert json.loads(out)["total"] == 27


def test_dims_from_coefficient_file(tmp_path):
    from ybnichols.catalog import build_entry

    entry = build_entry("z4-shift2")
    path = tmp_path / "coeffs.json"
    path.write_text(json.dumps(entry.system.to_json()))
    code, out, _ = run_cli(["dims", str(path), "--json"])
    assert code == 0
    assert json.loads(out)["total"] == 36


def test_dims_bad_parameter_is_input_error():
    code, _, err = run_cli(["dims", "w1", "--param", "x3=2"])
    assert code == 2
    assert "constraint" in err


def test_relations_commands():
    code, out, _ = run_cli(["relations", "z3-shift"])
    assert code == 0
    assert "6/6 relations pass" in out
    # off the documented point there is no published relation list
    code, _, err = run_cli(["relations", "z2-shift", "--param", "a=2"])
    assert code == 2


def test_phi_command():
    code, out, _ = run_cli(["phi", "z2-shift", "--json"])
    assert code == 0
    assert json.loads(out)["l"] == [2, 1]


def test_catalog_command():
    code, out, _ = run_cli(["catalog", "--json"])
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 13
    assert rows[0]["name"] == "z2-shift"


def test_alias_accepted():
    code, out, _ = run_cli(["phi", "w1-grana", "--json"])
    assert code == 0
