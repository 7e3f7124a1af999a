"""Finite stages of the characteristic-measure construction.

At stage n, pick one admissible extension of every core word u in Sigma_n,
padded to [-p_left, n + p_right).  The uniform measure on these
representatives, projected to the prefix window [0, m), is compared with
its pushforward under each automorphism.  For an automorphism with memory
[-l, r], the total-variation distance cannot exceed 2 * eps_n, where
eps_n = 1 - N(n) / N(n + l + r).  All quantities are exact Fractions.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .blockcode import BlockCode, _apply, certify_automorphism
from .errors import SpecError
from .growth import window_defect
from .shifts import Letters, Substitution, SubshiftSpec, Word, _substitute, language


@dataclass(frozen=True)
class RepresentativeSet:
    spec: SubshiftSpec
    n: int
    pads: tuple[int, int]
    members: tuple[tuple[Letters, Letters], ...]  # (core word, padded extension), sorted by core

    @property
    def n_ext(self) -> int:
        return self.n + self.pads[0] + self.pads[1]

    def words(self) -> list[Word]:
        return [Word(self.spec.alphabet, -self.pads[0], ext) for _, ext in self.members]

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class EmpiricalMeasure:
    m: int
    weights: dict  # letter tuple -> Fraction

    def mass(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def marginal(self, k: int) -> "EmpiricalMeasure":
        """Push forward to the prefix window [0, k)."""
        if not 0 <= k <= self.m:
            raise ValueError("marginal length must lie in [0, m]")
        out: dict = {}
        for v, p in self.weights.items():
            out[v[:k]] = out.get(v[:k], Fraction(0)) + p
        return EmpiricalMeasure(k, out)


def representatives(spec: SubshiftSpec, n: int, pads: tuple[int, int]) -> RepresentativeSet:
    """Lexicographically least admissible extension of each core word."""
    pl, pr = pads
    if n < 0 or pl < 0 or pr < 0:
        raise ValueError("core length and pads must be nonnegative")
    chosen: dict[Letters, Letters] = {}
    # language() is sorted, so the first extension seen is the least one
    for ext in language(spec, n + pl + pr):
        chosen.setdefault(ext[pl:pl + n], ext)
    return RepresentativeSet(spec, n, (pl, pr), tuple(sorted(chosen.items())))


def _uniform_over(prefixes, total: int, m: int) -> EmpiricalMeasure:
    counts = Counter(prefixes)
    return EmpiricalMeasure(m, {v: Fraction(c, total) for v, c in sorted(counts.items())})


def empirical_measure(reps: RepresentativeSet, m: int) -> EmpiricalMeasure:
    if not 0 <= m <= reps.n:
        raise ValueError(f"projection length m={m} must lie in [0, n={reps.n}]")
    return _uniform_over((core[:m] for core, _ in reps.members), len(reps), m)


def pushforward(code: BlockCode, reps: RepresentativeSet, m: int) -> EmpiricalMeasure:
    pl, pr = reps.pads
    if pl < code.left or pr < code.right:
        raise ValueError(f"pads {reps.pads} do not cover memory {code.memory}")
    if not 0 <= m <= reps.n:
        raise ValueError(f"projection length m={m} must lie in [0, n={reps.n}]")
    # the image of a padded member starts at -pl + l
    offset = pl - code.left
    return _uniform_over((_apply(code, ext)[offset:offset + m] for _, ext in reps.members),
                         len(reps), m)


def tv_distance(mu: EmpiricalMeasure, nu: EmpiricalMeasure) -> Fraction:
    if mu.m != nu.m:
        raise ValueError("measures live on windows of different lengths")
    keys = set(mu.weights) | set(nu.weights)
    zero = Fraction(0)
    return sum((abs(mu.weights.get(v, zero) - nu.weights.get(v, zero)) for v in keys), zero) / 2


@dataclass
class DefectEntry:
    code_id: str
    eps: Fraction
    tv: Fraction

    @property
    def bound(self) -> Fraction:
        return 2 * self.eps

    @property
    def passed(self) -> bool:
        return self.tv <= self.bound


@dataclass
class DefectReport:
    shift: str
    n: int
    m: int
    entries: list[DefectEntry]

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "shift": self.shift,
            "n": self.n,
            "m": self.m,
            "entries": [
                {"code_id": e.code_id, "eps": _frac(e.eps), "bound": _frac(e.bound),
                 "tv": _frac(e.tv), "pass": e.passed}
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["shift", "n", "m", "code_id", "eps_num", "eps_den", "bound_num", "bound_den",
                    "tv_num", "tv_den", "pass"])
        for e in self.entries:
            w.writerow([self.shift, self.n, self.m, e.code_id,
                        e.eps.numerator, e.eps.denominator, e.bound.numerator, e.bound.denominator,
                        e.tv.numerator, e.tv.denominator, str(e.passed).lower()])
        return buf.getvalue()


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def characteristic_defect(spec: SubshiftSpec, autos: Sequence[BlockCode], n: int, m: int,
                          certify_depth: Optional[int] = 8) -> DefectReport:
    """TV(pi_m nu_n, pi_m phi_* nu_n) against 2 eps_n for every automorphism.

    Pads are the largest memory over ``autos``.  Each code is certified as an
    automorphism up to ``certify_depth`` first; pass None to skip that when
    the caller already did it.
    """
    if not 0 <= m <= n:
        raise ValueError(f"projection length m={m} must lie in [0, n={n}]")
    if certify_depth is not None:
        for code in autos:
            if certify_automorphism(spec, code, depth=certify_depth) is None:
                raise SpecError(f"code {code.name!r} is not a certified automorphism of {spec.name!r}")
    pads = (max((c.left for c in autos), default=0), max((c.right for c in autos), default=0))
    reps = representatives(spec, n, pads)
    base = empirical_measure(reps, m)
    entries = []
    for code in autos:
        eps = window_defect(spec, n, code.memory)
        entries.append(DefectEntry(code.name, eps, tv_distance(base, pushforward(code, reps, m))))
    return DefectReport(spec.name, n, m, entries)


def iterate_frequencies(spec: Substitution, m: int, iterations: int = 20,
                        max_length: int = 1 << 21) -> EmpiricalMeasure:
    """Exact frequencies of length-m factors in a long iterate of the first symbol.

    Iteration stops early once the word exceeds ``max_length`` letters.
    """
    w: Letters = (0,)
    for _ in range(iterations):
        if len(w) > max_length:
            break
        w = _substitute(spec, w)
    total = len(w) - m + 1
    if total <= 0:
        raise ValueError("iterate is shorter than the factor length")
    counts = Counter(w[i:i + m] for i in range(total))
    return EmpiricalMeasure(m, {v: Fraction(c, total) for v, c in sorted(counts.items())})


def frequency_comparison(spec: SubshiftSpec, n_schedule: Sequence[int], m: int,
                         oracle: Optional[EmpiricalMeasure] = None) -> list[tuple[int, Fraction]]:
    """TV(pi_m nu_n, oracle) for each n in the schedule.

    Without an explicit oracle, factor frequencies are counted in a long
    substitution iterate, which needs a substitution shift.
    """
    if oracle is None:
        if not isinstance(spec, Substitution):
            raise SpecError("no frequency oracle available for this shift class")
        oracle = iterate_frequencies(spec, m)
    if oracle.m != m:
        raise ValueError("oracle measure has the wrong word length")
    table = []
    for n in n_schedule:
        nu = empirical_measure(representatives(spec, n, (0, 0)), m)
        table.append((n, tv_distance(nu, oracle)))
    return table
