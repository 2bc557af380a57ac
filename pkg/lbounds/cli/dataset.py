"""
零点数据集的读写

JSON 行文件，每行一个 ZeroRecord，按 (q, 编号, ordinate_lo) 排序；
旁边的 <path>.meta.json 保存扫描参数、版本号与每个特征的完整性认证。
"""

import json
from pathlib import Path
from typing import Iterable

from loguru import logger

from config import ScanConfig
from lbounds.lfunction.scanner import ZeroRecord
from tools.exception import SchemaMismatch, UnsortedInput


def meta_path(path: str | Path) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".meta.json")


def write_dataset(path: str | Path, records: Iterable[ZeroRecord], meta: dict) -> int:
    """
    写入数据集，记录必须已排序

    Raises:
        UnsortedInput: 记录没有按 (q, 编号, ordinate_lo) 排序
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    records = list(records)
    for prev, rec in zip(records, records[1:]):
        if rec.sort_key() < prev.sort_key():
            raise UnsortedInput(f"记录未排序: {prev.character_label} {prev.ordinate_lo} 之后是 "
                                f"{rec.character_label} {rec.ordinate_lo}")
    with open(path, "w", encoding="utf-8") as f:
        for rec in records:
            f.write(json.dumps(rec.to_record(), ensure_ascii=False) + "\n")
    meta = {"schema_version": ScanConfig.schema_version, "records": len(records), **meta}
    with open(meta_path(path), "w", encoding="utf-8") as f:
        json.dump(meta, f, ensure_ascii=False, indent=2, sort_keys=True)
    logger.info(f"写入数据集 {path}: {len(records)} 条记录")
    return len(records)


def read_meta(path: str | Path) -> dict:
    with open(meta_path(path), encoding="utf-8") as f:
        meta = json.load(f)
    if meta.get("schema_version") != ScanConfig.schema_version:
        raise SchemaMismatch(f"数据集版本 {meta.get('schema_version')}，需要 {ScanConfig.schema_version}")
    return meta


def read_dataset(path: str | Path) -> tuple[list[ZeroRecord], dict]:
    """
    Raises:
        SchemaMismatch: 元数据版本不符
    """
    meta = read_meta(path)
    records = []
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.strip():
                records.append(ZeroRecord.from_record(json.loads(line)))
    logger.debug(f"读取数据集 {path}: {len(records)} 条记录")
    return records, meta


def group_by_character(records: Iterable[ZeroRecord]) -> dict[str, list[ZeroRecord]]:
    groups: dict[str, list[ZeroRecord]] = {}
    for rec in records:
        groups.setdefault(rec.character_label, []).append(rec)
    return groups
