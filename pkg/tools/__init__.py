"""
工具模块

包含日志、异常等通用工具
"""

from .logger import setup_logger, get_logger, get_run_logger, RunLogger

__all__ = ['setup_logger', 'get_logger', 'get_run_logger', 'RunLogger']
