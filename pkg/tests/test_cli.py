import json
import subprocess
import sys

import pytest

from rrcodes import verify
from rrcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", "--p", "7", "--exps", '{"U":6,"Phi":7}')
    assert code == 0
    assert json.loads(out) == {"agrees": False, "exact": 35, "paper": 28, "witness_t": 6}
    _, out, _ = run(capsys, "distance", "--p", "7", "--exps", "[6,7]", "--mode", "exact")
    assert json.loads(out) == {"exact": 35, "witness_t": 6}


def test_field_info_and_factor(capsys):
    _, out, _ = run(capsys, "field-info", "--p", "7", "--m", "2", "--format", "json")
    assert json.loads(out) == {"p": 7, "m": 2, "q": 49, "modulus": [1, 0, 1], "case": "C2"}
    _, out, _ = run(capsys, "factor", "--p", "11", "--format", "json")
    data = json.loads(out)
    assert data["omega"] == "3"
    assert {f["label"]: f["recip"] for f in data["factors"]}["W1"] == "W4"
    code, out, _ = run(capsys, "factor", "--p", "19")
    assert code == 0 and "case" in out


def test_weights(capsys):
    _, out, _ = run(capsys, "weights", "--p", "11", "--labels", "U")
    assert out.splitlines()[1:] == ["0,1", "1,0", "2,100", "3,900", "4,4550", "5,9090"]
    _, brute, _ = run(capsys, "weights", "--p", "11", "--labels", "U", "--source", "brute")
    assert brute == out


def test_code_info(capsys):
    _, out, _ = run(capsys, "code-info", "--p", "7", "--exps", "[1,3]", "--format", "json", "--show-generator")
    data = json.loads(out)
    assert data["k"] == 22 and data["dual"] == {"U": 6, "Phi": 4} and data["dual_containing"]
    assert "generator" in data


def test_qsc(capsys):
    code, out, _ = run(capsys, "qsc", "--p", "7", "--c1", '{"U":1,"Phi":3}', "--c2", "[0,0]", "--al", "2", "--ar", "3")
    data = json.loads(out)
    assert code == 0 and data["params"] == "(2, 3)-[[40, 9]]_7" and data["eligible"]
    code, out, _ = run(capsys, "qsc", "--p", "7", "--c1", "[1,1]", "--c2", "[1,1]")
    data = json.loads(out)
    assert not data["eligible"] and data["k_out"] is None


def test_mds_scan_formats(capsys):
    _, out, _ = run(capsys, "mds-scan", "--p", "7", "--only-mds")
    lines = [json.loads(x) for x in out.splitlines()]
    assert [d["spec"]["exps"] for d in lines] == [{"U": 0, "Phi": 0}, {"U": 1, "Phi": 0}, {"U": 6, "Phi": 7}]
    _, csv_out, _ = run(capsys, "mds-scan", "--p", "7", "--format", "csv")
    assert len(csv_out.splitlines()) == 65


def test_discrepancies(capsys):
    _, out, _ = run(capsys, "discrepancies", "--p", "7")
    rows = json.loads(out)
    assert len(rows) == 10 and {r["table"] for r in rows} == {"C1:U<=Phi"}


@pytest.mark.parametrize("argv", [
    ["distance", "--p", "6", "--exps", "[0,0]"],
    ["distance", "--p", "7", "--exps", "[9,0]"],
    ["distance", "--p", "7", "--exps", '{"U":1}'],
    ["qsc", "--p", "7", "--c1", "[1,3]", "--c2", "[0,0]", "--al", "20", "--ar", "15"],
])
def test_domain_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == ""
    assert set(json.loads(err)) == {"error", "message"}


@pytest.mark.parametrize("argv", [
    ["distance", "--p", "7", "--exps", "[0,"],
    ["distance", "--p", "7"],
    ["mds-scan", "--p", "7", "--jobs", "0"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_verify_exit_codes(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr(verify, "CHECKS", (verify.check_weights,))
    out_file = tmp_path / "report.txt"
    code, out, _ = run(capsys, "verify", "--output", str(out_file))
    assert code == 0 and out == out_file.read_text()
    assert out.endswith("summary: 1 checks, 1 known mismatch groups, 0 unexpected\n")
    empty = tmp_path / "empty.json"
    empty.write_text("[]")
    code, out, _ = run(capsys, "verify", "--ledger", str(empty), "--format", "json")
    assert code == 3 and json.loads(out)["ok"] is False


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "rrcodes", "field-info", "--p", "19", "--format", "csv"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.splitlines()[1].startswith("C2,1")
