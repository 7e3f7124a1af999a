"""Growth, entropy and flat-window survey over the shipped shift files.

    python scripts/growth_survey.py --rmax 40 --margin 1,1 --eps 0.1
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from symdyn import ExplicitLanguage
from symdyn.fileio import load_shift
from symdyn.growth import entropy_estimate, find_flat_windows, growth_function

DATA = Path(__file__).resolve().parent.parent / "data" / "shifts"


@dataclass
class SurveyConfig:
    rmax: int = 40
    margin: tuple = (1, 1)
    eps: float = 0.1
    cap: int = 60


def survey(spec, cfg: SurveyConfig):
    table = growth_function(spec, cfg.rmax)
    h, argmin = entropy_estimate(spec, cfg.rmax)
    flat = find_flat_windows(spec, cfg.margin, cfg.eps, cfg.cap)
    first = flat.hits[0][0] if flat.hits else None
    return table.counts[-1], h, argmin, len(flat.hits), first


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rmax", type=int, default=40)
    ap.add_argument("--margin", default="1,1")
    ap.add_argument("--eps", type=float, default=0.1)
    ap.add_argument("--cap", type=int, default=60)
    ap.add_argument("shifts", nargs="*", help="shift files (default: all shipped ones)")
    a = ap.parse_args()
    cfg = SurveyConfig(a.rmax, tuple(int(x) for x in a.margin.split(",")), a.eps, a.cap)
    paths = [Path(p) for p in a.shifts] or sorted(DATA.glob("*.shift"))
    print(f"{'shift':<12} {'N(rmax)':>12} {'h_est':>9} {'argmin':>6} {'flat':>5} {'first':>5}")
    for p in paths:
        spec = load_shift(p)
        r_max = cfg.rmax
        if isinstance(spec, ExplicitLanguage):
            # only known up to its stored length
            r_max = min(r_max, spec.max_length - sum(cfg.margin))
            cfg_here = SurveyConfig(r_max, cfg.margin, cfg.eps, min(cfg.cap, r_max))
        else:
            cfg_here = cfg
        N, h, argmin, hits, first = survey(spec, cfg_here)
        print(f"{spec.name:<12} {N:>12} {h:>9.5f} {argmin:>6} {hits:>5} {first if first else '-':>5}")


if __name__ == "__main__":
    main()
