"""
表格与图像数据输出

CSV 用 UTF-8 和表头行；PNG 只在传入 --plot 时用 matplotlib 绘制，核心计算不依赖它。
"""

import csv
import math
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from loguru import logger

from lbounds.bound.jensen import F_theta
from lbounds.bound.params import select_params
from lbounds.bound.theorem import c1c2_curve, default_c1_grid
from lbounds.special.gamma import E_of, exact_E

# 积分曲线示例的参数
F_EXAMPLE = {"q": 10 ** 6, "T": 1, "a": 0, "c": Fraction(6, 5), "r": Fraction(19, 10),
             "eta": Fraction(141, 1000)}


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
            count += 1
    logger.info(f"写入 {path}: {count} 行")
    return path


def table_rows(cells: list[dict]) -> tuple[list[str], list[list]]:
    """表格布局：行为 k，列为 (T, a)"""
    columns = sorted({(Fraction(c["T"]), c["a"]) for c in cells})
    header = ["k"] + [f"T={T},a={a}" for T, a in columns]
    lookup = {(Fraction(c["T"]), c["a"], c["k"]): c for c in cells}
    rows = []
    for k in sorted({c["k"] for c in cells}):
        row = [k]
        for T, a in columns:
            cell = lookup.get((T, a, k))
            if cell is None or cell.get("q") is None:
                row.append("")
            else:
                row.append(f"{cell['q']}{' (weaker)' if cell.get('weaker') else ''}")
        rows.append(row)
    return header, rows


def c1c2_rows(points: int = 32) -> list[tuple[float, float]]:
    return c1c2_curve(default_c1_grid(points))


def e_rows(T_values: Sequence[float] = (5 / 7, 1.0, 2.0), d_points: int = 46) -> list[tuple]:
    """E(a,d,T) 与精确二阶差分，d ∈ [0, 4.4]"""
    rows = []
    for a in (0, 1):
        for T in T_values:
            for d in np.linspace(0.0, 4.4, d_points):
                d = float(d)
                bound = E_of(a, d, T)
                exact = exact_E(a, d, T)
                rows.append((a, T, d, bound.hi, exact.lo, exact.hi))
    return rows


def f_theta_rows(points: int = 181) -> list[tuple]:
    p = select_params(F_EXAMPLE["q"], F_EXAMPLE["T"], F_EXAMPLE["a"], regime="custom",
                      c=F_EXAMPLE["c"], r=F_EXAMPLE["r"], eta=F_EXAMPLE["eta"])
    rows = []
    for theta in np.linspace(0.0, math.pi, points):
        value = F_theta(float(theta), p)
        rows.append((float(theta), value.lo, value.hi))
    return rows


def plot_rows(path: str | Path, xs, ys, xlabel: str, ylabel: str, title: str = "") -> Path:
    """单条曲线的 PNG"""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    golden_ratio = (math.sqrt(5) - 1.0) / 2.0
    width = 8
    fig = plt.figure(figsize=(width, width * golden_ratio), facecolor="w")
    ax = fig.add_subplot(1, 1, 1)
    ax.plot(xs, ys, linewidth=1.5)
    ax.set_xlabel(xlabel, fontsize=14)
    ax.set_ylabel(ylabel, fontsize=14)
    if title:
        ax.set_title(title, fontsize=14)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    logger.info(f"绘制 {path}")
    return path
