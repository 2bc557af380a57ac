"""
日志工具模块

使用loguru实现统一的日志管理，运行记录（清单、证书、错误）以JSON行写入
"""

import json
import platform
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

from loguru import logger


class RunLogger:
    """单次运行的记录器，负责清单与证书的JSON行输出"""

    def __init__(self, run_name: str, out_dir: str = "output"):
        self.run_name = run_name
        self.out_dir = Path(out_dir)
        self.out_dir.mkdir(parents=True, exist_ok=True)

        self.manifest_file = self.out_dir / f"{run_name}_manifest.json"
        self.json_log_file = self.out_dir / f"{run_name}_records.jsonl"

        self.logger = logger.bind(run=run_name)

    def log_manifest(self, argv: list[str], options: Dict[str, Any], versions: Optional[Dict[str, str]] = None):
        """写入运行清单: 输入参数、版本、预算"""
        manifest = {
            "timestamp": datetime.now().isoformat(),
            "run": self.run_name,
            "argv": list(argv),
            "options": options,
            "python": platform.python_version(),
            "versions": versions or {},
        }
        self.logger.info(f"运行清单: {self.run_name} {' '.join(argv)}")
        with open(self.manifest_file, "w", encoding="utf-8") as f:
            json.dump(manifest, f, ensure_ascii=False, indent=2, sort_keys=True)
        return manifest

    def log_certificate(self, claim: str, status: str, leaves: Iterable[Dict[str, Any]], work: int):
        """记录一次分支定界证明的叶子证书"""
        count = 0
        for leaf in leaves:
            self._write_json_log({"event_type": "leaf", "claim": claim, **leaf})
            count += 1
        self.logger.info(f"证书 {claim}: {status}, 叶子 {count}, 细分 {work}")
        self._write_json_log({
            "event_type": "certificate",
            "claim": claim,
            "status": status,
            "leaves": count,
            "work": work,
        })

    def log_result(self, name: str, payload: Dict[str, Any]):
        """记录计算结果"""
        self.logger.info(f"结果: {name}")
        self._write_json_log({"event_type": "result", "name": name, **payload})

    def log_error(self, record: Dict[str, Any]):
        """记录错误"""
        self.logger.error(f"错误: {record.get('error')}: {record.get('message')}")
        self._write_json_log({"event_type": "error", **record})

    def _write_json_log(self, data: Dict[str, Any]):
        """写入JSON格式日志"""
        data = {"timestamp": datetime.now().isoformat(), **data}
        try:
            with open(self.json_log_file, 'a', encoding='utf-8') as f:
                f.write(json.dumps(data, ensure_ascii=False) + '\n')
        except OSError as e:
            self.logger.error(f"写入JSON日志失败: {e}")


def setup_logger(log_level: str = "INFO", log_dir: str = "logs",
                 enable_console: bool = True, enable_file: bool = True):
    """
    设置全局日志配置

    Args:
        log_level: 日志级别 (DEBUG, INFO, WARNING, ERROR)
        log_dir: 日志目录
        enable_console: 是否启用控制台输出
        enable_file: 是否启用文件输出
    """
    logger.remove()

    log_path = Path(log_dir)
    log_path.mkdir(exist_ok=True)

    log_format = (
        "[<green>{time:YYYY-MM-DD HH:mm:ss,SSS}</green>]"
        "[<cyan>{name}</cyan>,<cyan>{line}</cyan>]"
        "[<level>{level}</level>] "
        "<level>{message}</level>"
    )

    # 控制台输出走stderr，stdout留给命令结果
    if enable_console:
        logger.add(
            sys.stderr,
            format=log_format,
            level=log_level,
            colorize=True
        )

    if enable_file:
        logger.add(
            log_path / "lbounds.log",
            format=log_format,
            level=log_level,
            rotation="10 MB",
            retention="30 days",
            compression="zip",
            encoding="utf-8",
            enqueue=True
        )

        logger.add(
            log_path / "error.log",
            format=log_format,
            level="ERROR",
            rotation="5 MB",
            retention="30 days",
            compression="zip",
            encoding="utf-8",
            enqueue=True
        )

    return logger


def get_logger():
    """获取全局logger"""
    return logger


_run_loggers: Dict[str, RunLogger] = {}


def get_run_logger(run_name: str, out_dir: str = "output") -> RunLogger:
    """
    获取运行记录器实例

    Args:
        run_name: 运行名称
        out_dir: 输出目录

    Returns:
        RunLogger实例
    """
    key = f"{out_dir}/{run_name}"
    if key not in _run_loggers:
        _run_loggers[key] = RunLogger(run_name, out_dir)
    return _run_loggers[key]
