"""
命令行: 子命令分发、数据集读写与表格/图数据输出
"""
