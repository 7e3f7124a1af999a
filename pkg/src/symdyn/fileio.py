"""Line-oriented shift (``.shift``) and block-code (``.code``) files.

Shift file::

    # golden mean shift
    name: golden
    type: sft              # full | sft | substitution | explicit
    alphabet: 0 1
    forbidden: 11          # repeatable; several words per line allowed

    rule: 0 -> 01          # substitution only, one per symbol
    words: 0 1 00 01 10    # explicit only, repeatable; optional max_length

Code file::

    name: shift1
    alphabet: 0 1
    left: 0
    right: 1
    00 -> 0
    01 -> 1
    ...

Words are concatenated tokens, or '.'-joined when a token is longer than one
character.  ``#`` starts a comment.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from .blockcode import BlockCode
from .errors import SpecError
from .shifts import (SFT, ExplicitLanguage, FullShift, Substitution, SubshiftSpec,
                     explicit_language, full_shift, language, make_alphabet, sft, substitution)

SHIFT_KEYS = {"name", "type", "alphabet", "forbidden", "rule", "words", "max_length"}
CODE_KEYS = {"name", "alphabet", "left", "right"}


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_shift(text: str, default_name: str = "shift") -> SubshiftSpec:
    fields: dict[str, list[str]] = {}
    for lineno, line in _lines(text):
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in SHIFT_KEYS:
            raise SpecError(f"line {lineno}: expected one of {sorted(SHIFT_KEYS)} followed by ':'")
        fields.setdefault(key, []).append(value.strip())
    for single in ("name", "type", "alphabet", "max_length"):
        if len(fields.get(single, [])) > 1:
            raise SpecError(f"field {single!r} given more than once")
    if "type" not in fields or "alphabet" not in fields:
        raise SpecError("shift file needs 'type' and 'alphabet'")
    kind = fields["type"][0]
    name = fields.get("name", [default_name])[0]
    alphabet = make_alphabet(fields["alphabet"][0].split())
    allowed = {"full": set(), "sft": {"forbidden"}, "substitution": {"rule"},
               "explicit": {"words", "max_length"}}
    if kind not in allowed:
        raise SpecError(f"unknown shift type {kind!r}")
    stray = set(fields) - {"name", "type", "alphabet"} - allowed[kind]
    if stray:
        raise SpecError(f"fields {sorted(stray)} do not apply to type {kind!r}")

    if kind == "full":
        return full_shift(alphabet, name)
    if kind == "sft":
        forbidden = [w for line in fields.get("forbidden", []) for w in line.split()]
        return sft(alphabet, forbidden, name)
    if kind == "substitution":
        rules = {}
        for line in fields.get("rule", []):
            lhs, arrow, rhs = line.partition("->")
            if not arrow:
                raise SpecError(f"rule {line!r} must look like 'a -> word'")
            if lhs.strip() in rules:
                raise SpecError(f"two rules for symbol {lhs.strip()!r}")
            rules[lhs.strip()] = rhs.strip()
        return substitution(alphabet, rules, name)
    words = [w for line in fields.get("words", []) for w in line.split()]
    max_length = None
    if "max_length" in fields:
        try:
            max_length = int(fields["max_length"][0])
        except ValueError:
            raise SpecError("max_length must be an integer") from None
    return explicit_language(alphabet, words, max_length, name)


def load_shift(path) -> SubshiftSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    return parse_shift(text, default_name=path.stem)


def dump_shift(spec: SubshiftSpec) -> str:
    A = spec.alphabet
    out = [f"name: {spec.name}"]
    if isinstance(spec, FullShift):
        out.append("type: full")
    elif isinstance(spec, SFT):
        out.append("type: sft")
    elif isinstance(spec, Substitution):
        out.append("type: substitution")
    elif isinstance(spec, ExplicitLanguage):
        out.append("type: explicit")
    out.append("alphabet: " + " ".join(A.symbols))
    if isinstance(spec, SFT):
        out.append("forbidden: " + " ".join(sorted(A.format(f) for f in spec.forbidden)))
    elif isinstance(spec, Substitution):
        out.extend(f"rule: {s} -> {A.format(r)}" for s, r in zip(A.symbols, spec.rules))
    elif isinstance(spec, ExplicitLanguage):
        out.append(f"max_length: {spec.max_length}")
        out.extend("words: " + " ".join(A.format(w) for w in ws) for ws in spec.words)
    return "\n".join(out) + "\n"


def parse_code(text: str, spec: Optional[SubshiftSpec] = None, default_name: str = "code") -> BlockCode:
    """Read a code file; with ``spec``, require the alphabet to match and the
    table to cover every admissible window."""
    header: dict[str, str] = {}
    rows: list[tuple[int, str, str]] = []
    for lineno, line in _lines(text):
        if "->" in line:
            lhs, _, rhs = line.partition("->")
            rows.append((lineno, lhs.strip(), rhs.strip()))
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in CODE_KEYS:
            raise SpecError(f"line {lineno}: expected 'window -> letter' or one of {sorted(CODE_KEYS)}")
        if key in header:
            raise SpecError(f"field {key!r} given more than once")
        header[key] = value.strip()
    missing = {"alphabet", "left", "right"} - set(header)
    if missing:
        raise SpecError(f"code file lacks {sorted(missing)}")
    alphabet = make_alphabet(header["alphabet"].split())
    try:
        left, right = int(header["left"]), int(header["right"])
    except ValueError:
        raise SpecError("left and right must be integers") from None
    rule = {}
    for lineno, lhs, rhs in rows:
        window = alphabet.parse(lhs)
        letter = alphabet.parse(rhs)
        if len(letter) != 1:
            raise SpecError(f"line {lineno}: output must be a single symbol")
        if window in rule:
            raise SpecError(f"line {lineno}: window {lhs} listed twice")
        rule[window] = letter[0]
    code = BlockCode(alphabet, left, right, rule, header.get("name", default_name))
    if spec is not None:
        if spec.alphabet != alphabet:
            raise SpecError("code alphabet differs from the shift alphabet")
        absent = [w for w in language(spec, code.width) if w not in rule]
        if absent:
            raise SpecError(f"code table is incomplete: no entry for admissible window "
                            f"{alphabet.format(absent[0])} ({len(absent)} missing)")
    return code


def load_code(path, spec: Optional[SubshiftSpec] = None) -> BlockCode:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    return parse_code(text, spec, default_name=path.stem)


def dump_code(code: BlockCode, spec: Optional[SubshiftSpec] = None) -> str:
    """Serialize a code; with ``spec`` only the admissible windows are written."""
    A = code.alphabet
    if spec is not None:
        windows = language(spec, code.width)
    else:
        windows = sorted(code.rule)
    out = [f"name: {code.name}", "alphabet: " + " ".join(A.symbols),
           f"left: {code.left}", f"right: {code.right}"]
    out.extend(f"{A.format(w)} -> {A.symbols[code.rule[w]]}" for w in windows)
    return "\n".join(out) + "\n"
