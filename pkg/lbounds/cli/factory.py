import argparse
import json
import sys
from datetime import datetime
from importlib.metadata import PackageNotFoundError, version

from loguru import logger

from config import IntervalConfig, ScanConfig, SystemConfig
from tools.exception import LBoundsError
from tools.logger import get_run_logger

from . import commands as cmd
from .command import BaseCommand

_VERSIONED = ("loguru", "mpmath", "sympy", "numpy", "matplotlib")


def _versions() -> dict[str, str]:
    out = {SystemConfig.project_name: SystemConfig.project_version}
    for name in _VERSIONED:
        try:
            out[name] = version(name)
        except PackageNotFoundError:
            out[name] = "missing"
    return out


class CommandDispatcher:
    """子命令分发器"""
    commands: dict[str, type[BaseCommand]] = {}
    for c in cmd.__all__:
        module = __import__(
            f"lbounds.cli.commands.{c}", globals(), locals(), ["commands"]
        )
        commands.update(module.commands)

    def __init__(self):
        self.parser = self.build_parser()

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="zerocount",
            description="Dirichlet L 函数低处零点个数的严格界",
        )
        parser.add_argument("--log-level", default=SystemConfig.log_level)
        parser.add_argument("--out-dir", default=SystemConfig.output_dir, help="运行记录与输出目录")
        parser.add_argument("--workers", type=int, default=ScanConfig.workers)
        parser.add_argument("--box-budget", type=int, default=IntervalConfig.box_budget)
        sub = parser.add_subparsers(dest="command", required=True)
        for name, command in self.commands.items():
            command.add_arguments(sub.add_parser(name, help=command.help))
        return parser

    async def dispatch(self, argv: list[str]) -> int:
        """运行一个子命令，返回退出码；出错时在stdout写一条JSON错误记录"""
        args = self.parser.parse_args(argv)
        run_name = f"{args.command}_{datetime.now():%Y%m%d_%H%M%S}"
        run = get_run_logger(run_name, args.out_dir)
        options = {k: v if isinstance(v, (bool, int, float, str, type(None))) else str(v)
                   for k, v in vars(args).items()}
        run.log_manifest(argv, options, _versions())

        command = self.commands[args.command](args, run)
        try:
            await command.execute()
        except LBoundsError as e:
            record = e.to_record()
            run.log_error(record)
            print(json.dumps(record, ensure_ascii=False))
            return e.exit_code
        except Exception as e:
            logger.exception(f"{args.command} 异常退出")
            record = {"error": type(e).__name__, "message": str(e), "exit_code": 1}
            run.log_error(record)
            print(json.dumps(record, ensure_ascii=False))
            return 1
        finally:
            sys.stdout.flush()
        return 0
