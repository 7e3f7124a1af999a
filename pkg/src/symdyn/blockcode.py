"""Sliding block codes with interval memory sets K = [-l, r].

The image letter at position g is ``rule[x[g - l .. g + r]]``, so a word on
[a, b) maps to a word on [a + l, b - r).  Rules are tables on windows;
consulting a window missing from the table raises InadmissibleWindowError
instead of inventing a letter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .errors import BudgetExceededError, InadmissibleWindowError, SpecError
from .shifts import Alphabet, Letters, SubshiftSpec, Word, is_admissible, language

DEFAULT_BUDGET = 1 << 16


@dataclass(frozen=True)
class BlockCode:
    alphabet: Alphabet
    left: int
    right: int
    rule: dict = field(hash=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.left < 0 or self.right < 0:
            raise SpecError("memory margins must be nonnegative")
        w = self.width
        for window, letter in self.rule.items():
            if len(window) != w:
                raise SpecError(f"rule window {window} does not have width {w}")
            if not 0 <= letter < len(self.alphabet):
                raise SpecError(f"rule output {letter} outside the alphabet")

    @property
    def width(self) -> int:
        return self.left + 1 + self.right

    @property
    def memory(self) -> tuple[int, int]:
        return self.left, self.right

    @classmethod
    def from_function(cls, alphabet: Alphabet, left: int, right: int,
                      fn: Callable[[Letters], int], windows: Optional[Iterable[Letters]] = None,
                      name: str = "") -> "BlockCode":
        """Tabulate ``fn`` on the given windows (default: every window over the alphabet)."""
        if windows is None:
            windows = itertools.product(range(len(alphabet)), repeat=left + 1 + right)
        return cls(alphabet, left, right, {tuple(w): fn(tuple(w)) for w in windows}, name)

    def with_name(self, name: str) -> "BlockCode":
        return BlockCode(self.alphabet, self.left, self.right, self.rule, name)


def identity_code(alphabet: Alphabet) -> BlockCode:
    return shift_code(alphabet, 0).with_name("id")


def shift_code(alphabet: Alphabet, k: int) -> BlockCode:
    """Translation: the output at g is the input at g + k."""
    left, right = max(-k, 0), max(k, 0)
    return BlockCode.from_function(alphabet, left, right, lambda w: w[left + k],
                                   name="id" if k == 0 else f"shift{k}")


def permutation_code(alphabet: Alphabet, mapping: dict, name: str = "perm") -> BlockCode:
    """Radius-0 code relabeling symbols by ``mapping`` (token -> token)."""
    table = {(alphabet.index[a],): alphabet.index[b] for a, b in mapping.items()}
    if set(table) != {(i,) for i in range(len(alphabet))}:
        raise SpecError("permutation must be defined on every symbol")
    return BlockCode(alphabet, 0, 0, table, name)


def _apply(code: BlockCode, letters: Letters) -> Letters:
    w = code.width
    out = []
    for i in range(len(letters) - w + 1):
        window = letters[i:i + w]
        try:
            out.append(code.rule[window])
        except KeyError:
            raise InadmissibleWindowError(
                f"code {code.name or '?'} is undefined on window {code.alphabet.format(window)}") from None
    return tuple(out)


def apply_local(code: BlockCode, w: Word) -> Word:
    """Image of a word on [a, b): a word on [a + l, b - r), empty if too short."""
    start = w.start + code.left
    if len(w) < code.width:
        return Word(w.alphabet, start, ())
    return Word(w.alphabet, start, _apply(code, w.letters))


def compose(outer: BlockCode, inner: BlockCode, spec: Optional[SubshiftSpec] = None) -> BlockCode:
    """The code applying ``inner`` first, then ``outer``.

    The table covers the admissible windows of ``spec`` when given, otherwise
    every window over the alphabet on which both rules are defined.
    """
    if outer.alphabet != inner.alphabet:
        raise SpecError("cannot compose codes over different alphabets")
    left, right = outer.left + inner.left, outer.right + inner.right
    width = left + 1 + right
    if spec is not None:
        windows = language(spec, width)
    else:
        windows = itertools.product(range(len(outer.alphabet)), repeat=width)
    rule = {}
    for u in windows:
        try:
            (rule[u],) = _apply(outer, _apply(inner, u))
        except InadmissibleWindowError:
            if spec is not None:
                raise
    name = f"{outer.name}*{inner.name}" if outer.name and inner.name else ""
    return BlockCode(outer.alphabet, left, right, rule, name)


def acts_as_identity(spec: SubshiftSpec, code: BlockCode) -> bool:
    """Exact: a block code is the identity on the shift iff every admissible
    window maps to its center letter."""
    return all(_apply(code, u) == (u[code.left],) for u in language(spec, code.width))


@dataclass
class EndoCheck:
    ok: bool
    depth: int
    witness: Optional[tuple[Word, Word]] = None

    def __bool__(self):
        return self.ok


def check_endomorphism(spec: SubshiftSpec, code: BlockCode, depth: int) -> EndoCheck:
    """Every admissible word of length n + l + r must map to an admissible
    word of length n, for n = 1..depth.  Passing only certifies up to depth."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    for n in range(1, depth + 1):
        admissible = set(language(spec, n))
        for u in language(spec, n + code.left + code.right):
            v = _apply(code, u)
            if v not in admissible:
                return EndoCheck(False, depth, (Word(code.alphabet, 0, u),
                                                Word(code.alphabet, code.left, v)))
    return EndoCheck(True, depth)


def find_inverse(spec: SubshiftSpec, code: BlockCode, inverse_radius_cap: int,
                 depth: int) -> Optional[BlockCode]:
    """Least-radius block code inverting ``code`` on the shift, or None.

    For a candidate memory (l', r'), each admissible image window v of width
    l' + 1 + r' must determine the center letter of every admissible preimage
    window.  Candidates are then verified by composing both ways.
    """
    for s in range(inverse_radius_cap + 1):
        for li in range(s + 1):
            ri = s - li
            width = s + 1
            centers: dict[Letters, set] = {}
            for u in language(spec, width + code.left + code.right):
                v = _apply(code, u)
                centers.setdefault(v, set()).add(u[li + code.left])
            targets = language(spec, width)
            if any(len(centers.get(v, ())) != 1 for v in targets):
                continue
            rule = {v: next(iter(centers[v])) for v in targets}
            candidate = BlockCode(code.alphabet, li, ri, rule,
                                  f"inv({code.name})" if code.name else "")
            if _certify_inverse(spec, code, candidate, depth):
                return candidate
    return None


def _certify_inverse(spec, code, candidate, depth) -> bool:
    try:
        if not check_endomorphism(spec, candidate, depth):
            return False
        return (acts_as_identity(spec, compose(candidate, code, spec))
                and acts_as_identity(spec, compose(code, candidate, spec)))
    except InadmissibleWindowError:
        return False


def induced_map(spec: SubshiftSpec, code: BlockCode, depth: int,
                pads: Optional[tuple[int, int]] = None) -> tuple[Letters, ...]:
    """Images on [0, depth) of all admissible words on [-L, depth + R).

    Two codes with memories inside the pads (L, R) act identically on the
    shift exactly when their induced maps agree."""
    L, R = pads if pads is not None else code.memory
    if L < code.left or R < code.right:
        raise ValueError("pads must contain the code's memory")
    lo = L - code.left
    hi = R - code.right
    return tuple(_apply(code, u[lo:len(u) - hi]) for u in language(spec, depth + L + R))


def same_map(spec: SubshiftSpec, f: BlockCode, g: BlockCode) -> bool:
    pads = (max(f.left, g.left), max(f.right, g.right))
    return induced_map(spec, f, 1, pads) == induced_map(spec, g, 1, pads)


def search_automorphisms(spec: SubshiftSpec, radius: tuple[int, int], inverse_radius_cap: int,
                         depth: int, budget: int = DEFAULT_BUDGET) -> list[BlockCode]:
    """All certified automorphisms with memory [-l, r], one per induced map,
    sorted by induced map."""
    l, r = radius
    windows = language(spec, l + 1 + r)
    size = len(spec.alphabet)
    total = size ** len(windows)
    if total > budget:
        raise BudgetExceededError(f"{total} candidate rules exceed the budget of {budget}")
    found: dict[tuple, BlockCode] = {}
    for outputs in itertools.product(range(size), repeat=len(windows)):
        code = BlockCode(spec.alphabet, l, r, dict(zip(windows, outputs)))
        if not check_endomorphism(spec, code, depth):
            continue
        if find_inverse(spec, code, inverse_radius_cap, depth) is None:
            continue
        found.setdefault(induced_map(spec, code, depth), code)
    return [found[key].with_name(f"auto_{l}_{r}_{i:03d}") for i, key in enumerate(sorted(found))]


def find_separating_window(spec: SubshiftSpec, code: BlockCode, cap: int) -> Optional[int]:
    """Least k <= cap such that on every admissible word of length k + l + r the
    image differs from the input somewhere on the k central positions."""
    if acts_as_identity(spec, code):
        raise ValueError("the identity has no separating window")
    # words the code fixes on their central positions; a fixed word of length
    # k + 1 + l + r has a fixed prefix of length k + l + r, so the set can be
    # grown one letter at a time instead of re-enumerating the language
    l, r = code.memory
    fixed = [u for u in language(spec, 1 + l + r) if _apply(code, u) == u[l:l + 1]]
    size = len(spec.alphabet)
    for k in range(1, cap + 1):
        if not fixed:
            return k
        if k == cap:
            break
        fixed = [v for u in fixed for a in range(size)
                 for v in (u + (a,),)
                 if is_admissible(spec, v) and code.rule.get(v[-code.width:]) == v[l + k]]
    return None


def certify_automorphism(spec: SubshiftSpec, code: BlockCode, inverse_radius_cap: int = 4,
                         depth: int = 8) -> Optional[BlockCode]:
    """The certified inverse of ``code``, or None when ``code`` fails the
    endomorphism check or has no inverse within the radius cap."""
    if not check_endomorphism(spec, code, depth):
        return None
    return find_inverse(spec, code, inverse_radius_cap, depth)
