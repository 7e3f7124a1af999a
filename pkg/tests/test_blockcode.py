import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symdyn import (BudgetExceededError, InadmissibleWindowError, SpecError, language, make_alphabet,
                    word)
from symdyn.blockcode import (BlockCode, acts_as_identity, apply_local, check_endomorphism, compose,
                              find_inverse, find_separating_window, induced_map, same_map,
                              search_automorphisms, shift_code)

from oracles import eca_bijective_on_cycles, eca_rule


def as_str(w):
    return str(w), w.start


def test_apply_shift_flip_identity(binary, flip, ident, shift):
    assert as_str(apply_local(shift(1), word(binary, "0100"))) == ("100", 0)
    assert as_str(apply_local(flip, word(binary, "010"))) == ("101", 0)
    assert as_str(apply_local(ident, word(binary, "0110"))) == ("0110", 0)
    assert as_str(apply_local(shift(-1), word(binary, "0100"))) == ("010", 1)


def test_short_word_gives_empty_image(binary, shift):
    out = apply_local(shift(2), word(binary, "01"))
    assert len(out) == 0 and out.start == 0


def test_shift_code_memory(binary, shift):
    assert shift(0).memory == (0, 0)
    assert shift(3).memory == (0, 3)
    assert shift(-2).memory == (2, 0)


def test_undefined_window_is_an_error(binary):
    partial = BlockCode(binary, 0, 1, {(0, 0): 0, (0, 1): 1, (1, 0): 0})
    with pytest.raises(InadmissibleWindowError):
        apply_local(partial, word(binary, "011"))


def test_bad_rule_shapes(binary):
    with pytest.raises(SpecError):
        BlockCode(binary, 0, 1, {(0,): 0})
    with pytest.raises(SpecError):
        BlockCode(binary, -1, 0, {})


def test_compose_examples(binary, flip, ident, shift, full2):
    ff = compose(flip, flip)
    assert ff.memory == (0, 0) and ff.rule == ident.rule
    s2 = compose(shift(1), shift(1))
    assert s2.memory == (0, 2) and s2.rule == shift(2).rule
    assert str(apply_local(compose(flip, shift(1)), word(binary, "0100"))) == "011"


def test_compose_alphabet_mismatch(shift):
    other = shift_code(make_alphabet("ab"), 1)
    with pytest.raises(SpecError):
        compose(shift(1), other)


BIN = make_alphabet("01")
radius1_rules = st.integers(0, 255).map(
    lambda k: BlockCode.from_function(BIN, 1, 1, lambda w: (k >> (4 * w[0] + 2 * w[1] + w[2])) & 1))
small_codes = st.one_of(radius1_rules, st.integers(-2, 2).map(lambda k: shift_code(BIN, k)))


@settings(max_examples=80, deadline=None)
@given(f=small_codes, g=small_codes, bits=st.lists(st.integers(0, 1), min_size=9, max_size=14))
def test_composition_coherence(f, g, bits):
    A = f.alphabet
    w = word(A, A.format(bits), start=-3)
    lhs = apply_local(compose(f, g), w)
    rhs = apply_local(f, apply_local(g, w))
    assert (lhs.start, lhs.letters) == (rhs.start, rhs.letters)


@settings(max_examples=40, deadline=None)
@given(f=small_codes, bits=st.lists(st.integers(0, 1), min_size=8, max_size=12))
def test_codes_commute_with_the_shift(f, bits):
    A = f.alphabet
    s = shift_code(A, 1)
    w = word(A, A.format(bits))
    assert apply_local(compose(f, s), w).letters == apply_local(compose(s, f), w).letters


def test_flip_is_not_an_endomorphism_of_golden_mean(golden, flip):
    check = check_endomorphism(golden, flip, 6)
    assert not check.ok
    u, v = check.witness
    assert (str(u), str(v)) == ("00", "11")


def test_flip_is_not_an_endomorphism_of_fibonacci(fib, flip):
    assert not check_endomorphism(fib, flip, 6)


def test_full_shift_accepts_any_code(full2):
    for k in (0, 30, 90, 255):
        code = BlockCode.from_function(full2.alphabet, 1, 1,
                                       lambda w: (k >> (4 * w[0] + 2 * w[1] + w[2])) & 1)
        assert check_endomorphism(full2, code, 5)


def test_shifts_preserve_fibonacci_language(fib, shift):
    assert check_endomorphism(fib, shift(1), 20)


def test_find_inverse_examples(full2, flip, shift, binary):
    assert find_inverse(full2, flip, 2, 8).rule == flip.rule
    inv = find_inverse(full2, shift(1), 2, 8)
    assert inv.memory == (1, 0) and inv.rule == shift(-1).rule
    xor = BlockCode.from_function(binary, 0, 1, lambda w: w[0] ^ w[1])
    assert find_inverse(full2, xor, 3, 8) is None


def test_inverse_coherence(fib, thue_morse, flip, shift):
    for spec, code in [(fib, shift(1)), (fib, shift(2)), (thue_morse, flip),
                       (thue_morse, compose(flip, shift(-1)))]:
        inv = find_inverse(spec, code, 3, 8)
        assert inv is not None
        for n in range(1, 9):
            for pair in (compose(inv, code, spec), compose(code, inv, spec)):
                for u in language(spec, n + pair.left + pair.right):
                    assert apply_local(pair, word(spec.alphabet, spec.alphabet.format(u))).letters == \
                        u[pair.left:pair.left + n]


def test_search_radius_zero(full2, fib, flip, ident):
    found = search_automorphisms(full2, (0, 0), 2, 8)
    assert sorted(tuple(sorted(c.rule.items())) for c in found) == sorted(
        tuple(sorted(c.rule.items())) for c in (ident, flip))
    found = search_automorphisms(fib, (0, 0), 2, 8)
    assert len(found) == 1 and acts_as_identity(fib, found[0])


def test_search_matches_eca_reversibility_oracle(full2, binary, flip, shift):
    found = search_automorphisms(full2, (1, 1), 3, 8)
    reversible = [k for k in range(256) if eca_bijective_on_cycles(eca_rule(k), 10)]
    # the classical reversible elementary rules
    assert reversible == [15, 51, 85, 170, 204, 240]
    oracle = {tuple(eca_rule(k)[w] for w in itertools.product((0, 1), repeat=3)) for k in reversible}
    got = {tuple(c.rule[w] for w in itertools.product((0, 1), repeat=3)) for c in found}
    assert got == oracle
    for k in (-1, 0, 1):
        for base in (shift(k), compose(flip, shift(k))):
            assert any(same_map(full2, base, c) for c in found)


def test_search_output_closed_under_inversion(full2):
    found = search_automorphisms(full2, (1, 1), 3, 8)
    for c in found:
        inv = find_inverse(full2, c, 2, 8)
        assert any(same_map(full2, inv, d) for d in found)


def test_search_budget(full2):
    with pytest.raises(BudgetExceededError):
        search_automorphisms(full2, (2, 2), 3, 8)


def test_induced_map_sees_equal_codes(full2, shift):
    padded = BlockCode.from_function(full2.alphabet, 1, 1, lambda w: w[2])
    assert same_map(full2, padded, shift(1))
    assert induced_map(full2, padded, 3, (1, 1)) == induced_map(full2, shift(1), 3, (1, 1))
    assert not same_map(full2, padded, shift(0))


def test_separating_window_examples(fib, golden, full2, flip, shift, ident):
    assert find_separating_window(fib, shift(1), 10) == 2
    assert find_separating_window(golden, shift(1), 10) is None
    assert find_separating_window(full2, flip, 1) == 1
    with pytest.raises(ValueError):
        find_separating_window(fib, ident, 10)


def test_fibonacci_separating_window_by_hand(fib, binary):
    words3 = {binary.format(u) for u in language(fib, 3)}
    assert words3 == {"001", "010", "100", "101"}
    # k=1 fails on the constant window 00; k=2 works because no length-3 word is constant
    assert "00" in {binary.format(u) for u in language(fib, 2)}
    assert all(w[1:] != w[:2] for w in words3)


def _separating_by_definition(spec, code, cap):
    for k in range(1, cap + 1):
        if all(apply_local(code, word(spec.alphabet, spec.alphabet.format(u))).letters != u[code.left:code.left + k]
               for u in language(spec, k + code.left + code.right)):
            return k
    return None


@settings(max_examples=60, deadline=None)
@given(f=small_codes, which=st.sampled_from(["full2", "golden", "fib", "thue_morse"]))
def test_separating_window_matches_definition(request, f, which):
    spec = request.getfixturevalue(which)
    if not check_endomorphism(spec, f, 6) or acts_as_identity(spec, f):
        return
    assert find_separating_window(spec, f, 7) == _separating_by_definition(spec, f, 7)
