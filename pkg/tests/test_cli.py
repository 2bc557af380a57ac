import asyncio
import csv
import json

import pytest

from lbounds.cli.dataset import write_dataset
from lbounds.cli.emitters import table_rows, write_csv
from lbounds.cli.factory import CommandDispatcher


def run(argv, tmp_path, capsys):
    code = asyncio.run(CommandDispatcher().dispatch(["--out-dir", str(tmp_path)] + argv))
    out = capsys.readouterr().out.strip().splitlines()
    return code, json.loads(out[-1])


def test_all_commands_registered():
    names = set(CommandDispatcher.commands)
    assert {"bound", "nmax", "scan", "verify-example", "table", "derive-c2", "verify-assembly",
            "figures", "conjecture-check", "census", "verify-gamma"} <= names


def test_bound_small_ell(tmp_path, capsys):
    code, payload = run(["bound", "--q", "10", "--T", "5/7"], tmp_path, capsys)
    assert code == 0
    assert payload["n_zero"] is True
    assert payload["max_zeros"] == 0
    assert list(tmp_path.glob("bound_*_manifest.json"))


def test_domain_error_exit_code(tmp_path, capsys):
    code, payload = run(["bound", "--q", "1"], tmp_path, capsys)
    assert code == 2
    assert payload["error"] == "DomainError"


def test_bound_reports_guaranteed_zero(tmp_path, capsys):
    code, payload = run(["bound", "--q", "12000000", "--T", "2"], tmp_path, capsys)
    assert code == 0
    assert payload["min_zeros"] >= 1
    assert payload["min_zeros"] <= payload["max_zeros"]


def test_nmax_worked_example(tmp_path, capsys):
    code, payload = run(["nmax", "--q", "25252", "--T", "1", "--parity", "even", "--k", "7"],
                         tmp_path, capsys)
    assert code == 0
    assert payload["floor_k"] == 7
    assert payload["total"][1] < 8


def test_census_command(tmp_path, capsys):
    code, payload = run(["census", "--q-max", "20"], tmp_path, capsys)
    assert code == 0
    assert payload["primitive"] == payload["even"] + payload["odd"]
    assert payload["zero_budget"] >= 0


def test_conjecture_check_on_small_dataset(tmp_path, capsys):
    path = tmp_path / "zeros.jsonl"
    certificates = [{"label": "3.1", "q": 3, "parity": 1, "real": True, "N": 0, "T": 5.0}]
    write_dataset(path, [], {"q_max": 3, "ell_max": 1.0, "characters": certificates})
    code, payload = run(["conjecture-check", "--dataset", str(path)], tmp_path, capsys)
    assert code == 0
    assert payload["holds"]
    assert payload["largest_zero_free_conductor"]["T=1,odd"] == 3


def test_table_csv_layout(tmp_path):
    cells = [
        {"T": "1", "a": 0, "k": 7, "q": 25252, "weaker": False},
        {"T": "1", "a": 1, "k": 7, "q": 13000, "weaker": True},
        {"T": "1", "a": 0, "k": 8, "q": None},
    ]
    path = write_csv(tmp_path / "table.csv", *table_rows(cells))
    with open(path, encoding="utf-8", newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["k", "T=1,a=0", "T=1,a=1"]
    assert rows[1] == ["7", "25252", "13000 (weaker)"]
    assert rows[2] == ["8", "", ""]


@pytest.mark.slow
def test_scan_then_check(tmp_path, capsys):
    code, payload = run(["scan", "--q-max", "8", "--ell-max", "2.5"], tmp_path, capsys)
    assert code == 0
    assert payload["failures"] == []
    code, payload = run(["conjecture-check"], tmp_path, capsys)
    assert code == 0
    assert payload["holds"]
