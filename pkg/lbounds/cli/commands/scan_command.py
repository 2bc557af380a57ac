from fractions import Fraction

from loguru import logger

from config import ScanConfig
from lbounds.bound.params import compute_ell, main_term
from lbounds.bound.theorem import SMALL_ELL, theorem_width
from lbounds.characters.character import character_from_label, enumerate_primitive
from lbounds.cli.command import BaseCommand
from lbounds.cli.dataset import group_by_character, read_dataset, write_dataset
from lbounds.interval import interval as iv
from lbounds.lfunction.counting import arg_principal_count
from lbounds.lfunction.scanner import ZeroRecord, count_from_records, scan_zeros, t_for_ell
from tools.exception import CompletenessFailure, LBoundsError

CHECK_HEIGHTS = (Fraction(5, 7), Fraction(1), Fraction(2))
# ℓ/log(2+ℓ) 的适用范围上限
STRONG_ELL = 6.0


def _scan_one(job: tuple) -> dict:
    """进程池里扫描一个特征"""
    label, t_max, tol = job
    chi = character_from_label(label)
    try:
        count = arg_principal_count(t_max, chi)
        records = scan_zeros(chi, t_max, tol=tol, count=count)
    except LBoundsError as e:
        return {"label": label, "error": e.to_record()}
    return {
        "label": label,
        "records": [r.to_record() for r in records],
        "certificate": {"label": label, "q": chi.modulus, "parity": chi.parity,
                        "real": chi.is_real, "N": count.N, "T": count.T},
    }


class CommandScan(BaseCommand):
    help = "扫描本原特征的低处零点并写入数据集"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--q-min", type=int, default=3)
        parser.add_argument("--q-max", type=int, default=ScanConfig.q_max)
        parser.add_argument("--ell-max", type=float, default=ScanConfig.ell_max)
        parser.add_argument("--tol", type=float, default=ScanConfig.tol)
        parser.add_argument("--dataset", default=None, help="默认为 <out-dir>/zeros.jsonl")

    def jobs(self) -> list[tuple]:
        out = []
        for q in range(max(3, self.args.q_min), self.args.q_max + 1):
            t_max = t_for_ell(q, self.args.ell_max)
            if t_max <= 0:
                continue
            for chi in enumerate_primitive(q, one_per_pair=True):
                out.append((chi.label, t_max, self.args.tol))
        return out

    async def execute(self) -> dict:
        jobs = self.jobs()
        logger.info(f"扫描 {len(jobs)} 个特征，q ≤ {self.args.q_max}, ℓ ≤ {self.args.ell_max}")
        results = await self.gather(_scan_one, jobs)

        records, certificates, failures = [], [], []
        for res in results:
            if "error" in res:
                failures.append(res)
                self.run.log_error({"character": res["label"], **res["error"]})
                continue
            records.extend(ZeroRecord.from_record(r) for r in res["records"])
            certificates.append(res["certificate"])
        records.sort(key=ZeroRecord.sort_key)

        path = self.args.dataset or f"{self.args.out_dir}/zeros.jsonl"
        meta = {
            "q_min": self.args.q_min,
            "q_max": self.args.q_max,
            "ell_max": self.args.ell_max,
            "tol": self.args.tol,
            "characters": certificates,
        }
        write_dataset(path, records, meta)
        payload = {
            "dataset": path,
            "characters": len(certificates),
            "zeros": len(records),
            "failures": [f["label"] for f in failures],
        }
        self.emit("scan", payload)
        if failures:
            raise CompletenessFailure(f"{len(failures)} 个特征未能认证完整性",
                                      candidates=[f["label"] for f in failures])
        return payload


def _deviation(N: int, q: int, T: Fraction, parity: int):
    """|N - 主项| 的包围"""
    sign = 1 if parity == 0 else -1
    return iv.iv_abs(N - main_term(q, T, sign))


class CommandConjectureCheck(BaseCommand):
    help = "在已扫描的特征上检验 |N - 主项| 的不等式"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--dataset", default=None, help="默认为 <out-dir>/zeros.jsonl")

    def check_one(self, cert: dict, zeros: list[ZeroRecord], T: Fraction) -> dict | None:
        q, parity = cert["q"], cert["parity"]
        if float(T) > cert["T"]:
            return None
        N = count_from_records(zeros, float(T), cert["real"])
        ell = compute_ell(q, T)
        row = {"label": cert["label"], "q": q, "parity": parity, "T": str(T), "N": N,
               "ell": ell.to_pair(), "violations": []}
        if ell.hi <= SMALL_ELL:
            if N != 0:
                row["violations"].append("small-ell")
            return row
        if ell.lo <= SMALL_ELL:
            return row
        dev = _deviation(N, q, T, parity)
        row["deviation"] = dev.to_pair()
        if dev.lo > theorem_width(ell).hi:
            row["violations"].append("theorem")
        if ell.hi <= STRONG_ELL:
            strong = ell / iv.log(2 + ell)
            if dev.lo > strong.hi:
                row["violations"].append("ell-over-log")
        return row

    async def execute(self) -> dict:
        path = self.args.dataset or f"{self.args.out_dir}/zeros.jsonl"
        records, meta = read_dataset(path)
        by_label = group_by_character(records)

        checked = 0
        violations = []
        largest_zero_free: dict[str, int | None] = {}
        for T in CHECK_HEIGHTS:
            for name in ("even", "odd"):
                largest_zero_free[f"T={T},{name}"] = None
            for cert in meta.get("characters", []):
                # 没有记录的特征在扫描高度内无零点
                row = self.check_one(cert, by_label.get(cert["label"], []), T)
                if row is None:
                    continue
                checked += 1
                if row["violations"]:
                    violations.append(row)
                    logger.warning(f"{row['label']} T={T}: {row['violations']}")
                if row["N"] == 0:
                    key = f"T={T},{'even' if cert['parity'] == 0 else 'odd'}"
                    best = largest_zero_free[key]
                    largest_zero_free[key] = cert["q"] if best is None else max(best, cert["q"])

        payload = {
            "dataset": path,
            "checked": checked,
            "violations": violations,
            "largest_zero_free_conductor": largest_zero_free,
            "holds": not violations,
            "scanned_up_to": {"q_max": meta.get("q_max"), "ell_max": meta.get("ell_max")},
        }
        return self.emit("conjecture-check", payload)


commands = {
    "scan": CommandScan,
    "conjecture-check": CommandConjectureCheck,
}
