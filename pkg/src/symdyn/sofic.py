"""Partial-map approximations of an automorphism group on A = Sigma_(padded window).

For a core window [0, n) padded to [-L, n + R), each automorphism phi gives a
partial self-map of A: a goes to the unique b in A whose core equals the
core of phi(a), and is left undefined when that extension is not unique.
``check_sofic_conditions`` measures the four almost-action conditions on
these tables exactly:

1. each map is defined and injective on a large fraction of A;
2. the identity's table is the identity where defined;
3. tables compose like the codes whenever all three entries are defined;
4. a non-identity table has no fixed point.

The fraction floor is (1 - eps) / (1 + eps) with eps = N(n + L + R) / N(n) - 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .blockcode import (BlockCode, _apply, acts_as_identity, certify_automorphism, compose,
                        find_separating_window, same_map)
from .errors import SpecError
from .growth import growth_excess
from .shifts import Letters, SubshiftSpec, language


@dataclass
class PartialMapTable:
    ground: tuple[Letters, ...]
    n: int
    margins: tuple[int, int]
    code_id: str
    entries: dict = field(default_factory=dict)

    @property
    def defined_fraction(self) -> Fraction:
        return Fraction(len(self.entries), len(self.ground))

    @property
    def injective_fraction(self) -> Fraction:
        # the image of the defined set has the size of a largest injective domain
        return Fraction(len(set(self.entries.values())), len(self.ground))

    def core(self, a: Letters) -> Letters:
        L = self.margins[0]
        return a[L:L + self.n]


def build_partial_map(spec: SubshiftSpec, code: BlockCode, n: int,
                      margins: tuple[int, int]) -> PartialMapTable:
    L, R = margins
    if L < code.left or R < code.right:
        raise SpecError(f"margins {margins} do not dominate memory {code.memory} of {code.name!r}")
    if n < 1:
        raise ValueError("core length must be at least 1")
    ground = language(spec, n + L + R)
    extensions: dict[Letters, list[Letters]] = {}
    for a in ground:
        extensions.setdefault(a[L:L + n], []).append(a)
    offset = L - code.left
    entries = {}
    for a in ground:
        image_core = _apply(code, a)[offset:offset + n]
        candidates = extensions.get(image_core, ())
        if len(candidates) == 1:
            entries[a] = candidates[0]
    return PartialMapTable(ground, n, (L, R), code.name, entries)


@dataclass
class CodeSummary:
    id: str
    is_identity: bool
    defined: Fraction
    injective: Fraction
    cond2: Optional[bool] = None
    cond3_mismatches: int = 0
    cond4: Optional[str] = None  # "pass", "fail" or "blocked"; None for the identity
    cond4_witness: Optional[str] = None
    separating_window: Optional[int] = None


@dataclass
class CompositionTriple:
    outer: str
    inner: str
    product: str
    checked: int
    mismatches: int


@dataclass
class SoficReport:
    shift: str
    n: int
    margins: tuple[int, int]
    eps: Fraction
    codes: list[CodeSummary]
    triples: list[CompositionTriple]

    @property
    def floor(self) -> Fraction:
        return (1 - self.eps) / (1 + self.eps)

    @property
    def blocked(self) -> bool:
        return any(c.cond4 == "blocked" for c in self.codes)

    @property
    def fractions_ok(self) -> bool:
        return all(c.injective >= self.floor for c in self.codes)

    @property
    def ok(self) -> bool:
        return (self.fractions_ok
                and all(c.cond2 is not False for c in self.codes)
                and all(t.mismatches == 0 for t in self.triples)
                and all(c.cond4 in (None, "pass") for c in self.codes))

    def to_dict(self) -> dict:
        codes = []
        for c in self.codes:
            d = {"id": c.id, "defined": _frac(c.defined), "injective": _frac(c.injective),
                 "cond2": c.cond2, "cond3_mismatches": c.cond3_mismatches, "cond4": c.cond4}
            if c.cond4_witness is not None:
                d["cond4_witness"] = c.cond4_witness
            codes.append(d)
        return {
            "shift": self.shift,
            "n": self.n,
            "margins": list(self.margins),
            "eps": _frac(self.eps),
            "floor": _frac(self.floor),
            "codes": codes,
            "triples": [{"outer": t.outer, "inner": t.inner, "product": t.product,
                         "checked": t.checked, "mismatches": t.mismatches} for t in self.triples],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def check_sofic_conditions(spec: SubshiftSpec, codes: Sequence[BlockCode], n: int,
                           margins: tuple[int, int], certify_depth: Optional[int] = 8) -> SoficReport:
    identities = [c for c in codes if acts_as_identity(spec, c)]
    if not identities:
        raise SpecError("the code set must contain the identity")
    if certify_depth is not None:
        for c in codes:
            if certify_automorphism(spec, c, depth=certify_depth) is None:
                raise SpecError(f"code {c.name!r} is not a certified automorphism")
    tables = [build_partial_map(spec, c, n, margins) for c in codes]
    summaries = []
    for c, t in zip(codes, tables):
        s = CodeSummary(c.name, acts_as_identity(spec, c), t.defined_fraction, t.injective_fraction)
        if s.is_identity:
            s.cond2 = all(a == b for a, b in t.entries.items())
        else:
            s.separating_window = find_separating_window(spec, c, n)
            if s.separating_window is None:
                s.cond4 = "blocked"
            else:
                fixed = [a for a, b in t.entries.items() if a == b]
                s.cond4 = "fail" if fixed else "pass"
                if fixed:
                    s.cond4_witness = spec.alphabet.format(fixed[0])
        summaries.append(s)

    triples = []
    for i, (g, tg) in enumerate(zip(codes, tables)):
        for h, th in zip(codes, tables):
            product = compose(g, h, spec)
            k = next((j for j, c in enumerate(codes) if same_map(spec, product, c)), None)
            if k is None:
                continue
            tk = tables[k]
            checked = mismatches = 0
            for a, b in th.entries.items():
                if b in tg.entries and a in tk.entries:
                    checked += 1
                    if tg.entries[b] != tk.entries[a]:
                        mismatches += 1
            triples.append(CompositionTriple(g.name, h.name, codes[k].name, checked, mismatches))
            summaries[i].cond3_mismatches += mismatches

    eps = growth_excess(spec, n, margins)
    return SoficReport(spec.name, n, tuple(margins), eps, summaries, triples)


def recurrence_check(spec: SubshiftSpec, n: int, cap: int) -> Optional[int]:
    """Least R <= cap such that every admissible R-word contains every
    admissible n-word; finite evidence of minimality, not a proof."""
    if n < 1:
        raise ValueError("n must be at least 1")
    targets = set(language(spec, n))
    for R in range(n, cap + 1):
        if all(targets <= {u[i:i + n] for i in range(R - n + 1)} for u in language(spec, R)):
            return R
    return None
