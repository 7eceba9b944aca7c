import pytest
from hypothesis import given
from hypothesis import strategies as st

from templink.words import (
    EQUAL,
    GREATER,
    LESS,
    CyclicWord,
    PeriodicSequence,
    all_shifts,
    canonicalize,
    compare,
    letter_counts,
    shift,
)

words = st.text(alphabet="ab", min_size=1, max_size=12)
primitive_words = words.map(lambda s: canonicalize(s)[0].word)


def test_canonicalize_least_rotation():
    assert canonicalize("ba") == (CyclicWord("ab"), 1)
    assert canonicalize("aabab")[0].word == "aabab"


def test_canonicalize_reports_power():
    root, power = canonicalize("abab")
    assert (root.word, power) == ("ab", 2)
    root, power = canonicalize("aaa")
    assert (root.word, power) == ("a", 3)


def test_canonicalize_rejects_empty_and_bad_letters():
    with pytest.raises(ValueError):
        canonicalize("")
    with pytest.raises(ValueError):
        canonicalize("abc")


def test_cyclic_word_rejects_powers():
    with pytest.raises(ValueError):
        CyclicWord("abab")


@given(words, st.integers(min_value=0, max_value=11))
def test_canonicalize_rotation_invariant(s, k):
    k %= len(s)
    assert canonicalize(s)[0] == canonicalize(s[k:] + s[:k])[0]


@given(words)
def test_canonicalize_idempotent(s):
    root, _ = canonicalize(s)
    again, power = canonicalize(root.word)
    assert again == root and power == 1


def test_sequence_normalization():
    # preperiod absorbed when it matches the period's tail
    assert PeriodicSequence("b", "aababaabb") == PeriodicSequence("", "baababaab")
    # periods reduce to their primitive root
    assert PeriodicSequence("", "abab") == PeriodicSequence("", "ab")
    assert PeriodicSequence("a", "b").preperiod == "a"


def test_sequence_parse_roundtrip():
    s = PeriodicSequence.parse("b|aab")
    assert str(s) == f"{s.preperiod}|{s.period}"
    assert str(PeriodicSequence.parse("|ab")) == "|ab"
    with pytest.raises(ValueError):
        PeriodicSequence.parse("ab")
    with pytest.raises(ValueError):
        PeriodicSequence.parse("a|")


def test_compare_examples():
    ab = PeriodicSequence("", "ab")
    aab = PeriodicSequence("", "aab")
    assert compare(ab, aab) == GREATER
    assert compare(ab, PeriodicSequence("", "abab")) == EQUAL
    # a.(b2abab2a2)^inf vs (ab)^inf diverges with a b against an a
    s = PeriodicSequence("a", "bbababbaa")
    assert compare(s, ab) == GREATER
    assert compare(aab, ab) == LESS


def test_shift_examples():
    assert shift(PeriodicSequence("", "ab")) == PeriodicSequence("", "ba")
    assert shift(PeriodicSequence("a", "b")) == PeriodicSequence("", "b")
    assert shift(PeriodicSequence("", "aab")) == PeriodicSequence("", "aba")


def test_all_shifts_examples():
    assert [str(s) for s in all_shifts(CyclicWord("ab"))] == ["|ab", "|ba"]
    assert len(all_shifts(CyclicWord("aab"))) == 3
    assert [str(s) for s in all_shifts(CyclicWord("a"))] == ["|a"]


def test_letter_counts():
    assert letter_counts(CyclicWord("aab")) == (2, 1)
    assert letter_counts(CyclicWord("ab")) == (1, 1)
    assert letter_counts(CyclicWord("aababb")) == (3, 3)


@given(primitive_words)
def test_shifts_of_primitive_word_distinct(word):
    shifts = all_shifts(CyclicWord(word))
    for i in range(len(shifts)):
        for j in range(len(shifts)):
            assert (compare(shifts[i], shifts[j]) == EQUAL) == (i == j)


@given(primitive_words)
def test_shift_cycles_through_phases(word):
    shifts = all_shifts(CyclicWord(word))
    n = len(shifts)
    for k in range(n):
        assert shift(shifts[k]) == shifts[(k + 1) % n]


@given(words.map(lambda s: PeriodicSequence("", s)),
       words.map(lambda s: PeriodicSequence("", s)),
       words.map(lambda s: PeriodicSequence("", s)))
def test_compare_total_order(a, b, c):
    assert compare(a, b) == -compare(b, a)
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0
    # consistency with finite-prefix comparison
    n = 40
    assert compare(a, b) == (a.prefix(n) > b.prefix(n)) - (a.prefix(n) < b.prefix(n))


@given(st.text(alphabet="ab", max_size=4), words)
def test_compare_equal_iff_identical(pre, per):
    s = PeriodicSequence(pre, per)
    t = PeriodicSequence(pre, per * 2)
    assert compare(s, t) == EQUAL
    assert s == t
