"""Finite-stage characteristic measures: TV defect against the 2*eps bound
along a schedule of window lengths, plus the distance of the letter marginal
to the substitution frequencies.

    python scripts/characteristic_measure_run.py --shift data/shifts/fib.shift \
        --codes data/codes/shift1.code,data/codes/shift2.code --schedule 10,25,50,100 --m 6
"""

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from symdyn import Substitution
from symdyn.fileio import load_code, load_shift
from symdyn.measures import characteristic_defect, frequency_comparison

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class RunConfig:
    shift: Path = ROOT / "data" / "shifts" / "fib.shift"
    codes: list = field(default_factory=lambda: [ROOT / "data" / "codes" / "shift1.code",
                                                 ROOT / "data" / "codes" / "shift2.code"])
    schedule: tuple = (10, 25, 50, 100)
    m: int = 6


def run(cfg: RunConfig):
    spec = load_shift(cfg.shift)
    codes = [load_code(p, spec) for p in cfg.codes]
    worst = 0.0
    print("n,m,code,eps,tv,tv/2eps")
    for n in cfg.schedule:
        for m in range(1, min(n, cfg.m) + 1):
            for e in characteristic_defect(spec, codes, n, m).entries:
                ratio = float(e.tv / e.bound) if e.bound else 0.0
                worst = max(worst, ratio)
                print(f"{n},{m},{e.code_id},{float(e.eps):.5f},{float(e.tv):.5f},{ratio:.3f}")
    print(f"# worst tv / (2 eps) = {worst:.3f}")
    if isinstance(spec, Substitution):
        for n, d in frequency_comparison(spec, list(cfg.schedule), 1):
            print(f"# letter marginal at n={n}: TV to frequencies {float(d):.6f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--shift", type=Path, default=RunConfig.shift)
    ap.add_argument("--codes", help="comma-separated code files")
    ap.add_argument("--schedule", default="10,25,50,100")
    ap.add_argument("--m", type=int, default=6)
    a = ap.parse_args()
    cfg = RunConfig(shift=a.shift, schedule=tuple(int(x) for x in a.schedule.split(",")), m=a.m)
    if a.codes:
        cfg.codes = [Path(p) for p in a.codes.split(",")]
    run(cfg)


if __name__ == "__main__":
    main()
