"""Command-line interface: exit codes, JSON schema, determinism."""

import json

import pytest

from qloop import cli
from qloop.exactfield import QRational, urational_to_json
from qloop.lweights import closed_psi
from qloop.borelrep import RepSpec

ONE = QRational.one()
qp = QRational.q_power


# ------------------------------------------------------------------ zs parser

def test_parse_zs_values():
    assert cli.parse_zs("1") == ONE
    assert cli.parse_zs("q") == qp(1)
    assert cli.parse_zs("q^3") == qp(3)
    assert cli.parse_zs("q^-2") == qp(-2)
    assert cli.parse_zs("-q") == -qp(1)
    assert cli.parse_zs("2*q^-1") == QRational.from_int(2) * qp(-1)
    assert cli.parse_zs("3/2") == QRational.from_int(3) / QRational.from_int(2)
    assert cli.parse_zs("-1/2*q^2") == -qp(2) / QRational.from_int(2)


def test_parse_zs_rejects_bad_input():
    for bad in ("0", "", "q^", "x", "q*", "1/0"):
        with pytest.raises((ValueError, ZeroDivisionError)):
            cli.parse_zs(bad)


# ----------------------------------------------------------------- exit codes

def test_verify_passes(capsys):
    assert cli.main(["verify", "--l", "1", "--order", "4", "--mmax", "1"]) == 0
    out = capsys.readouterr().out
    assert "all checks passed" in out


def test_usage_errors_exit_two():
    for argv in (
        ["lweight", "--l", "0", "--a", "1", "--m", "0"],
        ["lweight", "--l", "1", "--a", "3", "--m", "0"],
        ["verify", "--l", "1", "--order", "1"],
        ["lweight", "--l", "1", "--a", "1", "--m", "0", "--zs", "0"],
        ["lweight", "--l", "2", "--a", "1", "--m", "0"],
        ["dump-op", "--l", "1", "--a", "1"],
        ["dump-op", "--l", "1", "--a", "1", "--gen", "2"],
        ["nonsense"],
    ):
        with pytest.raises(SystemExit) as err:
            cli.main(argv)
        assert err.value.code == 2, argv


def test_verification_failure_exits_one(monkeypatch, capsys):
    fake = [{"l": 1, "a": 1, "bar": False, "i": 1, "m": [0], "status": "psi-mismatch",
             "expected": "x", "computed": "y"}]
    monkeypatch.setattr(cli, "verify_grid", lambda *a, **k: list(fake))
    assert cli.main(["verify", "--l", "1"]) == 1
    out = capsys.readouterr().out
    assert "MISMATCH" in out and "psi-mismatch" in out


# ----------------------------------------------------------------------- JSON

def _json_line(out):
    return json.loads(out.strip().splitlines()[-1])


def test_lweight_json_schema(capsys):
    assert cli.main(["lweight", "--l", "1", "--a", "1", "--m", "0",
                     "--order", "6", "--json"]) == 0
    doc = _json_line(capsys.readouterr().out)
    assert doc["meta"] == {"l": 1, "a": 1, "bar": False, "order": 6, "zs": "1"}
    assert doc["lambda"] == [-2]
    assert doc["discrepancies"] == []
    want = urational_to_json(closed_psi(1, RepSpec(1, 1), (0,)))
    assert doc["psi"] == [want]


def test_lweight_json_respects_twist_and_bar(capsys):
    assert cli.main(["lweight", "--l", "1", "--a", "2", "--m", "1", "--bar",
                     "--zs", "q^2", "--json"]) == 0
    doc = _json_line(capsys.readouterr().out)
    assert doc["meta"]["bar"] is True
    assert doc["meta"]["zs"] == "q^2"
    spec = RepSpec(1, 2, True, qp(2))
    assert doc["psi"] == [urational_to_json(closed_psi(1, spec, (1,)))]


def test_json_output_is_deterministic(capsys):
    argv = ["lweight", "--l", "2", "--a", "2", "--m", "1,0", "--json"]
    assert cli.main(argv) == 0
    first = capsys.readouterr().out
    assert cli.main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    line = first.strip().splitlines()[-1]
    assert line == json.dumps(json.loads(line), sort_keys=True, separators=(",", ":"))


def test_output_file_matches_stdout_json(tmp_path, capsys):
    path = tmp_path / "report.json"
    argv = ["lweight", "--l", "1", "--a", "1", "--m", "2", "--json"]
    assert cli.main(argv) == 0
    line = capsys.readouterr().out.strip().splitlines()[-1]
    assert cli.main(argv[:-1] + ["--output", str(path)]) == 0
    capsys.readouterr()
    assert path.read_text().strip() == line


def test_order_env_default(monkeypatch, capsys):
    monkeypatch.setenv("QLOOP_ORDER", "3")
    assert cli.main(["lweight", "--l", "1", "--a", "1", "--m", "0", "--json"]) == 0
    doc = _json_line(capsys.readouterr().out)
    assert doc["meta"]["order"] == 3


# ----------------------------------------------------------------- subcommands

def test_serre_command(capsys):
    assert cli.main(["serre", "--l", "1", "--mmax", "1"]) == 0
    assert "Serre" in capsys.readouterr().out


def test_drinfeld_command(capsys):
    assert cli.main(["drinfeld", "--l", "1", "--a", "1", "--mmax", "1",
                     "--nmax", "1"]) == 0
    assert "loop relations" in capsys.readouterr().out


def test_factor_command_and_aliases(capsys):
    assert cli.main(["factor", "--l", "1"]) == 0
    capsys.readouterr()
    assert cli.main(["factor", "--l", "1", "--kind", "pref_minus", "--index", "1"]) == 0
    out = capsys.readouterr().out
    assert "pref-minus[1]: ok" in out
    assert cli.main(["factor", "--l", "1", "--kind", "full_tensor",
                     "--zs-list", "q,q^2"]) == 0


def test_dump_op_generator(capsys):
    assert cli.main(["dump-op", "--l", "1", "--a", "2", "--gen", "0", "--json"]) == 0
    doc = _json_line(capsys.readouterr().out)
    assert doc["op"] == "e_0"
    assert doc["image"]["atoms"] == [["bdag", 1]]
    assert doc["cartan"]["atoms"] == [["qN", [2]]]


def test_dump_op_root_action(capsys):
    assert cli.main(["dump-op", "--l", "1", "--a", "1", "--root", "prime:1,1",
                     "--mmax", "1", "--json"]) == 0
    doc = _json_line(capsys.readouterr().out)
    assert doc["op"].startswith("e'")
    assert [entry["m"] for entry in doc["action"]] == [[0], [1]]
    for entry in doc["action"]:
        assert all(mm == entry["m"] for mm, _ in entry["out"])


def test_dump_op_bad_root_spec(capsys):
    assert cli.main(["dump-op", "--l", "1", "--a", "1", "--root", "bogus"]) == 2
    assert cli.main(["dump-op", "--l", "1", "--a", "1", "--root", "real:1"]) == 2
