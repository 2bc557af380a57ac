import argparse
import asyncio
import json
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterable

from tools.logger import RunLogger


class BaseCommand(ABC):
    """命令基类，用于存放命令类共用的方法，所有的命令类必须继承自这个类"""
    help: str = ""

    def __init__(self, args: argparse.Namespace, run: RunLogger):
        self.args = args
        self.run = run

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        """注册子命令自己的参数"""

    @abstractmethod
    async def execute(self) -> dict:
        """命令运行的主要入口，返回写到stdout的结果"""
        pass

    async def gather(self, fn: Callable, items: Iterable) -> list[Any]:
        """
        对每个 item 调用 fn，结果按输入顺序返回

        --workers 大于1时放进进程池，fn 必须是模块级函数
        """
        items = list(items)
        workers = getattr(self.args, "workers", 1)
        if workers <= 1:
            return [fn(item) for item in items]
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tasks = [loop.run_in_executor(pool, fn, item) for item in items]
            return await asyncio.gather(*tasks)

    def emit(self, name: str, payload: dict) -> dict:
        self.run.log_result(name, payload)
        print(json.dumps(payload, ensure_ascii=False, default=str))
        return payload
