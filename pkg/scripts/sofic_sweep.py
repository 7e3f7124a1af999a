"""Sweep the core length n and report the four partial-map conditions for a
code set: where condition (4) is blocked, and how the injective fraction
compares with the floor (1 - eps) / (1 + eps).

    python scripts/sofic_sweep.py --nmax 30
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from symdyn.fileio import load_code, load_shift
from symdyn.sofic import check_sofic_conditions, recurrence_check

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class SweepConfig:
    shift: Path = ROOT / "data" / "shifts" / "fib.shift"
    codes: tuple = ("id", "shift1", "shift2")
    nmax: int = 30


def sweep(cfg: SweepConfig):
    spec = load_shift(cfg.shift)
    codes = [load_code(ROOT / "data" / "codes" / f"{c}.code", spec) for c in cfg.codes]
    margins = (max(c.left for c in codes), max(c.right for c in codes))
    rec = recurrence_check(spec, 1, 50)
    print(f"# {spec.name}: margins {margins}, R(1) = {rec}")
    print("n,eps,floor,min_injective,verdict")
    for n in range(1, cfg.nmax + 1):
        rep = check_sofic_conditions(spec, codes, n, margins)
        low = min(c.injective for c in rep.codes)
        verdict = "blocked" if rep.blocked else ("ok" if rep.ok else "FAIL")
        print(f"{n},{rep.eps},{rep.floor},{low},{verdict}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--shift", type=Path, default=SweepConfig.shift)
    ap.add_argument("--codes", default="id,shift1,shift2", help="names under data/codes")
    ap.add_argument("--nmax", type=int, default=30)
    a = ap.parse_args()
    sweep(SweepConfig(a.shift, tuple(a.codes.split(",")), a.nmax))


if __name__ == "__main__":
    main()
