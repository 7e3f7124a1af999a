from pathlib import Path

import pytest

from symdyn import SpecError, explicit_language, language, make_alphabet, sft
from symdyn.blockcode import BlockCode, search_automorphisms
from symdyn.fileio import dump_code, dump_shift, load_code, load_shift, parse_code, parse_shift

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.mark.parametrize("name", ["fib", "thue_morse", "golden", "full2", "period2"])
def test_shipped_shifts_round_trip(name):
    spec = load_shift(DATA / "shifts" / f"{name}.shift")
    assert spec.name == name
    again = parse_shift(dump_shift(spec))
    assert again == spec
    assert language(again, 4 if name != "period2" else 3) == language(spec, 4 if name != "period2" else 3)


def test_fixture_shifts_equal_files(fib, golden, thue_morse, full2):
    for spec in (fib, golden, thue_morse, full2):
        assert load_shift(DATA / "shifts" / f"{spec.name}.shift") == spec


@pytest.mark.parametrize("name", ["id", "shift1", "shift2", "shift-1", "flip"])
def test_shipped_codes_round_trip(full2, name):
    code = load_code(DATA / "codes" / f"{name}.code", full2)
    assert code.name == name
    again = parse_code(dump_code(code), full2)
    assert (again.left, again.right, again.rule) == (code.left, code.right, code.rule)


def test_code_files_match_library_codes(full2, flip, ident, shift):
    expect = {"id": ident, "shift1": shift(1), "shift2": shift(2), "shift-1": shift(-1), "flip": flip}
    for name, code in expect.items():
        got = load_code(DATA / "codes" / f"{name}.code", full2)
        assert (got.left, got.right, got.rule) == (code.left, code.right, code.rule)


def test_searched_codes_round_trip(full2):
    for code in search_automorphisms(full2, (1, 1), 3, 8):
        again = parse_code(dump_code(code, full2), full2)
        assert again.rule == code.rule and again.name == code.name


def test_partial_table_accepted_on_a_subshift(golden):
    # the window 11 is not admissible, so the golden-mean shift does not need it
    text = "name: s\nalphabet: 0 1\nleft: 0\nright: 1\n00 -> 0\n01 -> 1\n10 -> 0\n"
    code = parse_code(text, golden)
    assert dump_code(code, golden) == text


def test_incomplete_table_rejected(fib, full2):
    text = "alphabet: 0 1\nleft: 0\nright: 1\n00 -> 0\n01 -> 1\n10 -> 0\n"
    parse_code(text, fib)
    with pytest.raises(SpecError, match="incomplete"):
        parse_code(text, full2)


@pytest.mark.parametrize("text", [
    "alphabet: 0 1\nleft: 0\n0 -> 0\n1 -> 1\n",                      # no right
    "alphabet: 0 1\nleft: 0\nright: x\n0 -> 0\n",                     # non-integer
    "alphabet: 0 1\nleft: 0\nright: 0\n0 -> 0\n0 -> 1\n1 -> 1\n",     # repeated window
    "alphabet: 0 1\nleft: 0\nright: 0\n0 -> 01\n1 -> 1\n",            # output too long
    "alphabet: 0 1\nleft: 0\nright: 0\n0 -> 2\n1 -> 1\n",             # unknown symbol
    "alphabet: 0 1\nleft: 0\nright: 0\nmemory: 1\n0 -> 0\n1 -> 1\n",  # stray field
    "alphabet: 0 1\nleft: 0\nright: 1\n0 -> 0\n1 -> 1\n",             # wrong window length
])
def test_malformed_code_files(full2, text):
    with pytest.raises(SpecError):
        parse_code(text, full2)


def test_code_alphabet_must_match(full2):
    with pytest.raises(SpecError):
        parse_code("alphabet: a b\nleft: 0\nright: 0\na -> a\nb -> b\n", full2)


@pytest.mark.parametrize("text", [
    "type: full\n",                                          # no alphabet
    "alphabet: 0 1\n",                                       # no type
    "type: cellular\nalphabet: 0 1\n",                       # unknown type
    "type: full\nalphabet: 0 1\nforbidden: 11\n",            # stray field for the type
    "type: sft\nalphabet: 0 1\nforbidden 11\n",              # missing colon
    "type: sft\ntype: full\nalphabet: 0 1\n",                # duplicate field
    "type: substitution\nalphabet: 0 1\nrule: 0 01\nrule: 1 -> 0\n",
    "type: substitution\nalphabet: 0 1\nrule: 0 -> 01\nrule: 0 -> 1\nrule: 1 -> 0\n",
    "type: substitution\nalphabet: 0 1\nrule: 0 -> 01\n",    # missing rule
    "type: explicit\nalphabet: 0 1\nwords: 0 1 01\n",        # not extendable
    "type: explicit\nalphabet: 0 1\nmax_length: two\nwords: 0 1\n",
    "type: sft\nalphabet: 0 0\nforbidden: 00\n",             # repeated symbol
    "type: sft\nalphabet: 0 1\nforbidden: 12\n",             # unknown symbol
])
def test_malformed_shift_files(text):
    with pytest.raises(SpecError):
        parse_shift(text)


def test_comments_and_blank_lines():
    spec = parse_shift("# header\n\nname: g  # trailing\ntype: sft\nalphabet: 0 1\nforbidden: 1 1\n"
                       "   \nforbidden: 11\n")
    assert spec == sft(make_alphabet("01"), ["1", "11"], "g")


def test_default_name_is_file_stem(tmp_path):
    p = tmp_path / "mine.shift"
    p.write_text("type: full\nalphabet: a b c\n")
    assert load_shift(p).name == "mine"
    with pytest.raises(SpecError):
        load_shift(tmp_path / "absent.shift")


def test_multichar_symbols_round_trip():
    A = make_alphabet(["ab", "c"])
    spec = explicit_language(A, ["ab", "c", "ab.c", "c.ab", "ab.c.ab", "c.ab.c"], name="alt")
    again = parse_shift(dump_shift(spec))
    assert again == spec
    code = BlockCode.from_function(A, 0, 1, lambda w: w[1], name="s")
    assert parse_code(dump_code(code, spec), spec).rule == {w: w[1] for w in language(spec, 2)}
