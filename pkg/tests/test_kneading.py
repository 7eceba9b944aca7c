import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import oracle_admissible
from templink.kneading import (
    KneadingData,
    Triple,
    is_admissible,
    kneading,
    kneading_unbounded,
    lorenz_kneading,
    max_block_constraints,
    satisfies_block_constraints,
    syllables,
)
from templink.words import CyclicWord, canonicalize, compare


def test_triple_validation():
    assert Triple(3, 3, 4).delta == 3
    with pytest.raises(ValueError):
        Triple(3, 2, 4)  # not ordered
    with pytest.raises(ValueError):
        Triple(2, 3, 6)  # 1/2 + 1/3 + 1/6 = 1, not hyperbolic
    with pytest.raises(ValueError):
        Triple(2, 2, 100)


@pytest.mark.parametrize(
    "pqr, u_L, v_R",
    [
        ((3, 3, 4), "|aababaabb", "|bbababbaa"),  # r even
        ((3, 3, 5), "|aabaabb", "|bbabbaa"),  # r odd
        ((2, 5, 7), "|abababb", "b|bbbabbbba"),  # p = 2, r odd
        ((2, 5, 6), "|ababb", "b|bbbabbbba"),  # p = 2, r even
    ],
)
def test_kneading_table_rows(pqr, u_L, v_R):
    k = kneading(Triple(*pqr))
    assert str(k.u_L) == u_L
    assert str(k.v_R) == v_R


def test_kneading_structure_relations():
    # v_L = b.u_L and u_R = a.v_R, up to normalization
    for pqr in [(3, 3, 4), (3, 4, 7), (2, 5, 7), (4, 5, 6)]:
        k = kneading(Triple(*pqr))
        b_uL = canonical_prepend("b", k.u_L)
        a_vR = canonical_prepend("a", k.v_R)
        assert compare(k.v_L, b_uL) == 0
        assert compare(k.u_R, a_vR) == 0
        assert compare(k.u_L, k.u_R) < 0
        assert compare(k.v_L, k.v_R) < 0


def canonical_prepend(letter, seq):
    from templink.words import PeriodicSequence

    return PeriodicSequence(letter + seq.preperiod, seq.period)


def test_table_domain_implied_by_hyperbolicity():
    # the table's p = 2 rows need q > 2 and r > 4; no hyperbolic triple
    # violates either, so Triple's own validation fences the domain
    with pytest.raises(ValueError):
        Triple(2, 2, 9)
    with pytest.raises(ValueError):
        Triple(2, 4, 4)
    with pytest.raises(ValueError):
        Triple(2, 3, 4)


def test_kneading_unbounded_and_lorenz():
    k = kneading_unbounded(3, 4)
    assert str(k.u_L) == "|aab"
    assert str(k.v_R) == "|bbba"
    lk = lorenz_kneading()
    # trivial bounds admit everything
    for w in ("a", "b", "ab", "aabbbab"):
        assert is_admissible(canonicalize(w)[0], lk)


def test_admissibility_examples():
    k = kneading(Triple(3, 3, 4))
    assert is_admissible(CyclicWord("ab"), k)
    assert not is_admissible(CyclicWord("aab"), k)
    assert not is_admissible(CyclicWord("abb"), k)
    assert not is_admissible(CyclicWord("a"), k)
    # boundary orbits are inclusive
    assert is_admissible(CyclicWord(k.u_L.period), k)
    assert is_admissible(CyclicWord(k.v_R.period), k)


@pytest.mark.parametrize("pqr", [(3, 3, 4), (3, 3, 5), (3, 4, 6), (2, 5, 7), (2, 3, 7)])
def test_boundary_periods_admissible(pqr):
    k = kneading(Triple(*pqr))
    assert is_admissible(canonicalize(k.u_L.period)[0], k)
    assert is_admissible(canonicalize(k.v_R.period)[0], k)


@given(st.text(alphabet="ab", min_size=1, max_size=10))
def test_admissibility_matches_oracle_and_rotation_invariant(word):
    root, _ = canonicalize(word)
    k = kneading(Triple(3, 3, 4))
    got = is_admissible(root, k)
    assert got == oracle_admissible(root.word, k)
    for i in range(len(root.word)):
        rot = root.word[i:] + root.word[:i]
        assert oracle_admissible(rot, k) == got


def test_max_block_constraints_values():
    assert max_block_constraints(Triple(3, 3, 4)) == (2, 2, 1)
    assert max_block_constraints(Triple(2, 5, 7)) == (1, 4, 2)
    assert max_block_constraints(Triple(4, 5, 6)) == (3, 4, 2)


def test_syllables_decomposition():
    assert syllables("aabab") == [(2, 1), (1, 1)]
    assert syllables("ababb") == [(1, 1), (1, 2)]
    with pytest.raises(ValueError):
        syllables("aaa")


def test_block_constraints_necessary():
    t = Triple(3, 3, 4)
    k = kneading(t)
    # single letters and pure syllable words fail
    for w in ("a", "b", "aab", "abb"):
        assert not satisfies_block_constraints(canonicalize(w)[0], t)
    # every admissible word satisfies the constraints
    from templink.census import lyndon_words

    for word in lyndon_words(9):
        if "a" not in word or "b" not in word:
            continue
        w = CyclicWord(word)
        if is_admissible(w, k):
            assert satisfies_block_constraints(w, t)


def test_no_p_run_in_admissible_words():
    # admissible words never contain p consecutive a's
    t = Triple(3, 4, 5)
    k = kneading(t)
    from templink.census import enumerate_admissible

    for w in enumerate_admissible(t, 9):
        assert "a" * t.p not in w.word * 2


def test_kneading_data_validates_order():
    from templink.words import PeriodicSequence

    with pytest.raises(ValueError):
        KneadingData(
            u_L=PeriodicSequence("", "b"),
            u_R=PeriodicSequence("", "a"),
            v_L=PeriodicSequence("", "b"),
            v_R=PeriodicSequence("", "b"),
        )
