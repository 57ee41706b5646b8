"""Grid size and build/verify time against n for the three constructions.

    python scripts/scaling_experiment.py --out results/scaling.csv
"""
import argparse
import csv
import statistics
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import List

from doublecircle.constructions import build_double_circle, naive_symmetric, quadratic_baseline
from doublecircle.verification import grid_size, is_double_circle


@dataclass
class ScalingConfig:
    exponents: List[int] = field(default_factory=lambda: list(range(4, 21)))
    repeat: int = 3
    verify_up_to: int = 2**17  # verification is the slow part past this
    baselines_up_to: int = 2**12
    out: str = ""


def timed(fn, repeat):
    times, res = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = fn()
        times.append(time.perf_counter() - t0)
    return res, statistics.median(times)


def run(cfg: ScalingConfig):
    rows = []
    for e in cfg.exponents:
        n = 2**e
        P, t_build = timed(lambda: build_double_circle(n), cfg.repeat)
        ok = is_double_circle(P).passed if n <= cfg.verify_up_to else None
        N = grid_size(P)
        row = dict(n=n, method="doublecircle", N=N, ratio=N / n**1.5, build_s=t_build, verified=ok)
        rows.append(row)
        if n <= cfg.baselines_up_to:
            for name, fn in (("baseline", quadratic_baseline), ("naive", naive_symmetric)):
                Q, t = timed(lambda: fn(n), cfg.repeat)
                M = grid_size(Q)
                rows.append(dict(n=n, method=name, N=M, ratio=M / n**1.5, build_s=t, verified=is_double_circle(Q).passed))
        print(f"n=2^{e:<2} N={N:<12} N/n^1.5={N / n**1.5:.4f} build={t_build * 1e3:8.2f} ms verified={ok}", file=sys.stderr)
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-exp", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=ScalingConfig.repeat)
    ap.add_argument("--out", default="")
    a = ap.parse_args(argv)
    cfg = ScalingConfig(exponents=list(range(4, a.max_exp + 1)), repeat=a.repeat, out=a.out)
    rows = run(cfg)
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    w = csv.DictWriter(fh, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    if cfg.out:
        fh.close()
        print(f"config: {asdict(cfg)}", file=sys.stderr)


if __name__ == "__main__":
    main()
