#!/usr/bin/env python3
"""
LZeroCount - Dirichlet L 函数低处零点个数的严格界

主程序入口，解析命令行并运行对应的子命令
"""

import sys
from pathlib import Path

import asyncio

# 添加项目根目录到Python路径
sys.path.insert(0, str(Path(__file__).parent))

from config import SystemConfig
from tools.logger import setup_logger
from lbounds.cli.factory import CommandDispatcher


def _log_level(argv: list[str]) -> str:
    """日志要在解析子命令之前建立，这里先取出 --log-level"""
    for i, arg in enumerate(argv):
        if arg == "--log-level" and i + 1 < len(argv):
            return argv[i + 1]
        if arg.startswith("--log-level="):
            return arg.split("=", 1)[1]
    return SystemConfig.log_level


def main() -> int:
    """主函数"""
    argv = sys.argv[1:]
    # 初始化日志输出
    setup_logger(
        log_level=_log_level(argv),
        log_dir=SystemConfig.log_dir,
        enable_console=SystemConfig.enable_console_log,
        enable_file=SystemConfig.enable_file_log
    )

    return asyncio.run(CommandDispatcher().dispatch(argv))


if __name__ == "__main__":
    sys.exit(main())
