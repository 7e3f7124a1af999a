"""Growth functions, entropy upper bounds and flat windows.

The defect of a window of length n with margin (l, r) is

    eps_n = 1 - N(n) / N(n + l + r)

kept as an exact Fraction.  Entropy is reported as the running minimum of
log N(r) / r, with the minimizer located by exact integer comparison so
that ties (e.g. every r for a full shift) resolve to the least r.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptySubshiftError
from .shifts import SubshiftSpec, language_count


@dataclass
class GrowthTable:
    spec: SubshiftSpec
    r_max: int
    counts: list[int]
    logs: list[float]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "N", "L", "L/r"])
        for r, (N, L) in enumerate(zip(self.counts, self.logs), start=1):
            w.writerow([r, N, repr(L), repr(L / r)])
        return buf.getvalue()


@dataclass
class FlatWindowReport:
    margin: tuple[int, int]
    eps_target: Fraction
    hits: list[tuple[int, Fraction]]
    exhausted: bool
    n_cap: int

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "eps_num", "eps_den"])
        for n, eps in self.hits:
            w.writerow([n, eps.numerator, eps.denominator])
        return buf.getvalue()


def growth_function(spec: SubshiftSpec, r_max: int) -> GrowthTable:
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    counts = [language_count(spec, r) for r in range(1, r_max + 1)]
    logs = [math.log(N) if N else -math.inf for N in counts]
    return GrowthTable(spec, r_max, counts, logs)


def entropy_estimate(spec: SubshiftSpec, r_max: int) -> tuple[float, int]:
    """min over 1 <= r <= r_max of log N(r) / r, in nats, and the least r
    attaining it.  An upper bound for the topological entropy."""
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    best_r, best_N = None, None
    for r in range(1, r_max + 1):
        N = language_count(spec, r)
        if N == 0:
            raise EmptySubshiftError("empty language")
        # log N / r < log M / s  iff  N**s < M**r
        if best_r is None or N ** best_r < best_N ** r:
            best_r, best_N = r, N
    return math.log(best_N) / best_r, best_r


def window_defect(spec: SubshiftSpec, n: int, margin: tuple[int, int]) -> Fraction:
    l, r = margin
    if n < 0 or l < 0 or r < 0:
        raise ValueError("window length and margins must be nonnegative")
    big = language_count(spec, n + l + r)
    if big == 0:
        raise EmptySubshiftError("empty language")
    return 1 - Fraction(language_count(spec, n), big)


def growth_excess(spec: SubshiftSpec, n: int, margin: tuple[int, int]) -> Fraction:
    """N(n + l + r) / N(n) - 1: the least eps with N(padded) <= (1 + eps) N(core)."""
    l, r = margin
    small = language_count(spec, n)
    if small == 0:
        raise EmptySubshiftError("empty language")
    return Fraction(language_count(spec, n + l + r), small) - 1


def find_flat_windows(spec: SubshiftSpec, margin: tuple[int, int], eps_target,
                      n_cap: int) -> FlatWindowReport:
    eps_target = Fraction(str(eps_target)) if isinstance(eps_target, float) else Fraction(eps_target)
    if not 0 < eps_target < 1:
        raise ValueError("eps_target must lie in (0, 1)")
    if n_cap < 1:
        raise ValueError("n_cap must be at least 1")
    hits = []
    for n in range(1, n_cap + 1):
        eps = window_defect(spec, n, margin)
        if eps <= eps_target:
            hits.append((n, eps))
    return FlatWindowReport(tuple(margin), eps_target, hits, exhausted=not hits, n_cap=n_cap)
