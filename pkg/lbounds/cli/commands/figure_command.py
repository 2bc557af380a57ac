from pathlib import Path

from lbounds.cli.command import BaseCommand
from lbounds.cli.emitters import c1c2_rows, e_rows, f_theta_rows, plot_rows, write_csv


class CommandFigures(BaseCommand):
    help = "输出 (C₁,C₂) 曲线、E(a,d,T) 与 F(θ) 的CSV"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--out", default=None, help="CSV目录，默认为 <out-dir>/figures")
        parser.add_argument("--points", type=int, default=32, help="(C₁,C₂) 曲线的点数")
        parser.add_argument("--plot", action="store_true", help="同时用matplotlib画PNG")

    async def execute(self) -> dict:
        out = Path(self.args.out or Path(self.args.out_dir) / "figures")
        files = []

        curve = c1c2_rows(self.args.points)
        files.append(write_csv(out / "c1c2.csv", ["C1", "C2"], curve))

        e = e_rows()
        files.append(write_csv(out / "E.csv", ["a", "T", "d", "E_hi", "exact_lo", "exact_hi"], e))

        f = f_theta_rows()
        files.append(write_csv(out / "F_theta.csv", ["theta", "F_lo", "F_hi"], f))

        if self.args.plot:
            files.append(plot_rows(out / "c1c2.png", [x for x, _ in curve], [y for _, y in curve],
                                   "C1", "C2"))
            files.append(plot_rows(out / "F_theta.png", [r[0] for r in f], [r[2] for r in f],
                                   "theta", "F"))
            even_T1 = [r for r in e if r[0] == 0 and r[1] == 1.0]
            files.append(plot_rows(out / "E.png", [r[2] for r in even_T1], [r[3] for r in even_T1],
                                   "d", "E(0,d,1)"))
        return self.emit("figures", {"files": [str(p) for p in files]})


commands = {
    "figures": CommandFigures,
}
