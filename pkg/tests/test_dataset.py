import json

import pytest

from lbounds.cli.dataset import group_by_character, meta_path, read_dataset, write_dataset
from lbounds.lfunction.scanner import ZeroRecord
from tools.exception import SchemaMismatch, UnsortedInput


@pytest.fixture
def records():
    return [
        ZeroRecord("5.1", 5, 1, -3.1, -3.1 + 1e-10),
        ZeroRecord("5.1", 5, 1, 4.2, 4.2 + 1e-10),
        ZeroRecord("7.2", 7, 0, 1.5, 1.5 + 1e-10),
    ]


def test_write_and_read(tmp_path, records):
    path = tmp_path / "zeros.jsonl"
    assert write_dataset(path, records, {"q_max": 7, "characters": []}) == 3
    loaded, meta = read_dataset(path)
    assert loaded == records
    assert meta["q_max"] == 7 and meta["records"] == 3
    assert meta_path(path).name == "zeros.jsonl.meta.json"


def test_unsorted_rejected(tmp_path, records):
    with pytest.raises(UnsortedInput):
        write_dataset(tmp_path / "bad.jsonl", list(reversed(records)), {})


def test_schema_mismatch(tmp_path, records):
    path = tmp_path / "zeros.jsonl"
    write_dataset(path, records, {})
    meta = json.loads(meta_path(path).read_text(encoding="utf-8"))
    meta["schema_version"] = 999
    meta_path(path).write_text(json.dumps(meta), encoding="utf-8")
    with pytest.raises(SchemaMismatch):
        read_dataset(path)


def test_group_by_character(records):
    groups = group_by_character(records)
    assert sorted(groups) == ["5.1", "7.2"]
    assert len(groups["5.1"]) == 2
