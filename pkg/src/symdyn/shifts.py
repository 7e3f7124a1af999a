"""Alphabets, words and subshift descriptions, and exact languages on windows.

Every subshift here is a two-sided Z-subshift.  Its language is computed
exactly for each supported class:

* full shifts, by plain enumeration;
* shifts of finite type, through a trimmed de Bruijn graph;
* primitive substitutions, from factors of long iterates;
* explicitly listed languages, after validating them.

Letters are stored as integer indices into the alphabet.  Lexicographic
order is always the order of those indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import EmptySubshiftError, NonPrimitiveError, SpecError

Letters = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.symbols) == 0:
            raise SpecError("alphabet must have at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise SpecError(f"duplicate symbols in alphabet {list(self.symbols)}")
        for s in self.symbols:
            if not s or any(ch.isspace() for ch in s):
                raise SpecError(f"invalid alphabet token {s!r}")
        object.__setattr__(self, "index", {s: i for i, s in enumerate(self.symbols)})

    def __len__(self):
        return len(self.symbols)

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def parse(self, text: str) -> Letters:
        """Read a word written as concatenated one-character tokens, or as
        '.'-separated tokens when some token is longer than one character."""
        text = text.strip()
        if not text:
            return ()
        parts = list(text) if self.single_char else text.split(".")
        try:
            return tuple(self.index[p] for p in parts)
        except KeyError as exc:
            raise SpecError(f"word {text!r} uses a symbol outside {list(self.symbols)}") from exc

    def format(self, letters: Sequence[int]) -> str:
        sep = "" if self.single_char else "."
        return sep.join(self.symbols[a] for a in letters)


def make_alphabet(tokens: Iterable[str]) -> Alphabet:
    return Alphabet(tuple(str(t) for t in tokens))


@dataclass(frozen=True)
class Word:
    """A finite pattern occupying the integer interval [start, start + len)."""

    alphabet: Alphabet
    start: int
    letters: Letters

    def __len__(self):
        return len(self.letters)

    @property
    def stop(self) -> int:
        return self.start + len(self.letters)

    def restrict(self, a: int, b: int) -> "Word":
        if a < self.start or b > self.stop or a > b:
            raise ValueError(f"[{a},{b}) is not inside [{self.start},{self.stop})")
        return Word(self.alphabet, a, self.letters[a - self.start:b - self.start])

    def __str__(self):
        return self.alphabet.format(self.letters)


def word(alphabet: Alphabet, text: str, start: int = 0) -> Word:
    return Word(alphabet, start, alphabet.parse(text))


# --- subshift descriptions -------------------------------------------------

@dataclass(frozen=True)
class FullShift:
    alphabet: Alphabet
    name: str = field(default="full", compare=False)


@dataclass(frozen=True)
class SFT:
    alphabet: Alphabet
    forbidden: frozenset  # of letter tuples
    name: str = field(default="sft", compare=False)

    def __post_init__(self):
        if not self.forbidden:
            raise SpecError("an SFT needs at least one forbidden word (use FullShift otherwise)")
        if any(len(f) == 0 for f in self.forbidden):
            raise SpecError("forbidden words must be nonempty")

    @property
    def k(self) -> int:
        return max(len(f) for f in self.forbidden)


@dataclass(frozen=True)
class Substitution:
    alphabet: Alphabet
    rules: tuple  # rules[a] = image letters of symbol a
    name: str = field(default="substitution", compare=False)

    def __post_init__(self):
        if len(self.rules) != len(self.alphabet):
            raise SpecError("substitution must define a rule for every symbol")
        if any(len(r) == 0 for r in self.rules):
            raise SpecError("substitution images must be nonempty")


@dataclass(frozen=True)
class ExplicitLanguage:
    alphabet: Alphabet
    max_length: int
    words: tuple  # words[j - 1] = sorted tuple of the length-j words
    name: str = field(default="explicit", compare=False)

    def __post_init__(self):
        _validate_explicit(self)


SubshiftSpec = Union[FullShift, SFT, Substitution, ExplicitLanguage]


def full_shift(alphabet: Alphabet, name: str = "full") -> FullShift:
    return FullShift(alphabet, name)


def sft(alphabet: Alphabet, forbidden: Iterable[str], name: str = "sft") -> SFT:
    return SFT(alphabet, frozenset(alphabet.parse(f) for f in forbidden), name)


def substitution(alphabet: Alphabet, rules: dict, name: str = "substitution") -> Substitution:
    missing = [s for s in alphabet.symbols if s not in rules]
    if missing:
        raise SpecError(f"substitution has no rule for {missing}")
    extra = [s for s in rules if s not in alphabet.index]
    if extra:
        raise SpecError(f"substitution rules for unknown symbols {extra}")
    return Substitution(alphabet, tuple(alphabet.parse(rules[s]) for s in alphabet.symbols), name)


def explicit_language(alphabet: Alphabet, words: Iterable[str], max_length: int | None = None,
                      name: str = "explicit") -> ExplicitLanguage:
    parsed = {alphabet.parse(w) for w in words}
    parsed.discard(())
    L = max_length if max_length is not None else max((len(w) for w in parsed), default=0)
    by_len = [tuple(sorted(w for w in parsed if len(w) == j)) for j in range(1, L + 1)]
    if any(len(w) > L for w in parsed):
        raise SpecError(f"explicit language lists words longer than max_length {L}")
    return ExplicitLanguage(alphabet, L, tuple(by_len), name)


def _validate_explicit(spec: ExplicitLanguage):
    if spec.max_length < 1:
        raise SpecError("explicit language needs max_length >= 1")
    if len(spec.words) != spec.max_length:
        raise SpecError("explicit language needs one word list per length 1..max_length")
    sets = [set(ws) for ws in spec.words]
    for j, ws in enumerate(spec.words, start=1):
        if len(sets[j - 1]) != len(ws):
            raise SpecError(f"duplicate words of length {j}")
        if list(ws) != sorted(ws):
            raise SpecError(f"length-{j} word list is not sorted")
        for w in ws:
            if len(w) != j or any(not 0 <= a < len(spec.alphabet) for a in w):
                raise SpecError(f"bad word {w} in length-{j} list")
            if j > 1 and (w[:-1] not in sets[j - 2] or w[1:] not in sets[j - 2]):
                raise SpecError(f"explicit language is not factor-closed at {spec.alphabet.format(w)}")
    for j in range(1, spec.max_length):
        longer = spec.words[j]
        prefixes = {w[:-1] for w in longer}
        suffixes = {w[1:] for w in longer}
        for w in spec.words[j - 1]:
            if w not in prefixes or w not in suffixes:
                raise SpecError(f"explicit language is not biextendable at {spec.alphabet.format(w)}")


# --- language sets ----------------------------------------------------------

@dataclass(frozen=True)
class WordSet:
    """The admissible words Sigma_F on a length-n window, anchored at 0."""

    n: int
    words: tuple[Word, ...]

    @property
    def count(self) -> int:
        return len(self.words)

    @property
    def tuples(self) -> tuple[Letters, ...]:
        return tuple(w.letters for w in self.words)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, item):
        letters = item.letters if isinstance(item, Word) else tuple(item)
        return letters in set(self.tuples)


def language_words(spec: SubshiftSpec, n: int) -> WordSet:
    """Exact language of length n, sorted.  Raises EmptySubshiftError for an
    empty subshift."""
    return WordSet(n, tuple(Word(spec.alphabet, 0, w) for w in language(spec, n)))


def language(spec: SubshiftSpec, n: int) -> tuple[Letters, ...]:
    """Same as language_words, as bare letter tuples (the form used internally)."""
    if n < 0:
        raise ValueError("window length must be nonnegative")
    return _language(spec, n)


def language_count(spec: SubshiftSpec, n: int) -> int:
    """N(n), without materializing the words where a closed form or a path
    count is available."""
    if n < 0:
        raise ValueError("window length must be nonnegative")
    if isinstance(spec, FullShift):
        return len(spec.alphabet) ** n
    if isinstance(spec, SFT):
        return _sft_count(spec, n)
    return len(_language(spec, n))


def is_admissible(spec: SubshiftSpec, letters: Sequence[int]) -> bool:
    """Membership in the language, without enumerating it for full shifts and SFTs."""
    letters = tuple(letters)
    if isinstance(spec, FullShift):
        return all(0 <= a < len(spec.alphabet) for a in letters)
    if isinstance(spec, SFT):
        b, vertices, edges = _trimmed_graph(spec)
        if len(letters) < b:
            return letters in _language_set(spec, len(letters))
        return all(letters[i:i + b] in edges for i in range(len(letters) - b + 1))
    return letters in _language_set(spec, len(letters))


@lru_cache(maxsize=128)
def _language_set(spec: SubshiftSpec, n: int) -> frozenset:
    return frozenset(_language(spec, n))


@lru_cache(maxsize=512)
def _language(spec: SubshiftSpec, n: int) -> tuple[Letters, ...]:
    if isinstance(spec, FullShift):
        return tuple(itertools.product(range(len(spec.alphabet)), repeat=n))
    if isinstance(spec, SFT):
        return _sft_words(spec, n)
    if isinstance(spec, Substitution):
        return _substitution_words(spec, n)
    if isinstance(spec, ExplicitLanguage):
        if n > spec.max_length:
            raise SpecError(f"explicit language is only known up to length {spec.max_length}")
        if n == 0:
            if not spec.words[0]:
                raise EmptySubshiftError("explicit language is empty")
            return ((),)
        if not spec.words[n - 1]:
            raise EmptySubshiftError("explicit language is empty")
        return spec.words[n - 1]
    raise TypeError(f"not a subshift description: {spec!r}")


# --- shifts of finite type --------------------------------------------------

def _locally_admissible(alphabet_size: int, forbidden: frozenset, length: int) -> list[Letters]:
    """All words of the given length avoiding every forbidden word, in lex order."""
    by_len: dict[int, set[Letters]] = {}
    for f in forbidden:
        by_len.setdefault(len(f), set()).add(f)
    words: list[Letters] = [()]
    for j in range(1, length + 1):
        nxt = []
        for w in words:
            for a in range(alphabet_size):
                v = w + (a,)
                # only the factors ending at the new letter can be new
                if any(v[j - L:] in fs for L, fs in by_len.items() if L <= j):
                    continue
                nxt.append(v)
        words = nxt
    return words


@lru_cache(maxsize=64)
@lru_cache(maxsize=64)
def _trimmed_graph(spec: SFT):
    """Vertices ((b-1)-blocks) and edges (b-blocks) of the de Bruijn graph
    after repeatedly deleting vertices without predecessors or successors."""
    b = max(spec.k, 2)
    size = len(spec.alphabet)
    vertices = set(_locally_admissible(size, spec.forbidden, b - 1))
    edges = set(_locally_admissible(size, spec.forbidden, b))
    while True:
        edges = {e for e in edges if e[:-1] in vertices and e[1:] in vertices}
        has_out = {e[:-1] for e in edges}
        has_in = {e[1:] for e in edges}
        alive = vertices & has_out & has_in
        if alive == vertices:
            break
        vertices = alive
    if not vertices:
        raise EmptySubshiftError(f"shift of finite type {spec.name!r} is empty")
    return b, tuple(sorted(vertices)), frozenset(edges)


def sft_language(alphabet: Alphabet, forbidden: Iterable, n: int) -> WordSet:
    fb = frozenset(alphabet.parse(f) if isinstance(f, str) else tuple(f) for f in forbidden)
    return language_words(SFT(alphabet, fb), n)


def _sft_words(spec: SFT, n: int) -> tuple[Letters, ...]:
    b, vertices, edges = _trimmed_graph(spec)
    if n < b - 1:
        return tuple(sorted({v[i:i + n] for v in vertices for i in range(b - n)}))
    words = list(vertices)
    size = len(spec.alphabet)
    for _ in range(n - (b - 1)):
        words = [w + (a,) for w in words for a in range(size) if w[len(w) - b + 1:] + (a,) in edges]
    return tuple(words)


def _sft_count(spec: SFT, n: int) -> int:
    b, vertices, edges = _trimmed_graph(spec)
    if n < b - 1:
        return len(_sft_words(spec, n))
    counts = {v: 1 for v in vertices}
    for _ in range(n - (b - 1)):
        nxt = dict.fromkeys(vertices, 0)
        for e in edges:
            nxt[e[1:]] += counts[e[:-1]]
        counts = nxt
    return sum(counts.values())


# --- substitutions ----------------------------------------------------------

def incidence_matrix(spec: Substitution) -> list[list[int]]:
    size = len(spec.alphabet)
    return [[spec.rules[a].count(b) for b in range(size)] for a in range(size)]


def is_primitive(spec: Substitution) -> bool:
    size = len(spec.alphabet)
    M = [[c > 0 for c in row] for row in incidence_matrix(spec)]
    P = M
    for _ in range(size * size):
        if all(all(row) for row in P):
            return True
        P = [[any(P[i][k] and M[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
    return False


def _substitute(spec: Substitution, letters: Letters) -> Letters:
    out: list[int] = []
    for a in letters:
        out.extend(spec.rules[a])
    return tuple(out)


def _factors(letters: Letters, n: int) -> set[Letters]:
    return {letters[i:i + n] for i in range(len(letters) - n + 1)}


@lru_cache(maxsize=64)
def _substitution_pairs(spec: Substitution) -> tuple[Letters, ...]:
    """Admissible two-letter words: least fixpoint of pairs seen across
    images of admissible pairs, seeded with pairs inside single images."""
    pairs: set[Letters] = set()
    for r in spec.rules:
        pairs |= _factors(r, 2)
    while True:
        grown = set(pairs)
        for p in pairs:
            grown |= _factors(_substitute(spec, p), 2)
        if grown == pairs:
            return tuple(sorted(pairs))
        pairs = grown


def substitution_language(alphabet: Alphabet, rules: dict, n: int) -> WordSet:
    return language_words(substitution(alphabet, rules), n)


def _substitution_words(spec: Substitution, n: int) -> tuple[Letters, ...]:
    if not is_primitive(spec):
        raise NonPrimitiveError(f"substitution {spec.name!r} is not primitive")
    if n == 0:
        return ((),)
    if all(len(r) == 1 for r in spec.rules):
        # primitive with no growth forces a single symbol fixed by its rule
        return ((0,) * n,)
    pairs = _substitution_pairs(spec)
    # seeds: admissible pairs, so that every factor of the subshift appears
    # inside the k-th image of some seed once all k-th images are long enough
    images = {p: p for p in pairs}
    letter_images = [(a,) for a in range(len(spec.alphabet))]
    while min(len(w) for w in letter_images) < n:
        letter_images = [_substitute(spec, w) for w in letter_images]
        images = {p: _substitute(spec, w) for p, w in images.items()}
    previous = None
    while True:
        current = set()
        for w in images.values():
            current |= _factors(w, n)
        if current == previous:
            return tuple(sorted(current))
        previous = current
        images = {p: _substitute(spec, w) for p, w in images.items()}


def substitution_iterate(spec: Substitution, k: int, seed: int = 0) -> Letters:
    w: Letters = (seed,)
    for _ in range(k):
        w = _substitute(spec, w)
    return w
