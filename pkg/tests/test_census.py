import json
import random
from fractions import Fraction

import pytest

from oracles import oracle_crossing
from templink.census import (
    PairReport,
    enumerate_admissible,
    extremal_families,
    extremal_orbits,
    extremality_crosscheck,
    lyndon_words,
    range_triples,
    reports_to_csv,
    verify_pairs,
    verify_range,
    verify_triple,
)
from templink.kneading import TemplateDomainError, Triple
from templink.words import CyclicWord, canonicalize


def test_lyndon_words_are_canonical_primitive():
    got = set(lyndon_words(7))
    brute = set()
    for n in range(1, 8):
        for bits in range(2**n):
            word = "".join("ab"[(bits >> i) & 1] for i in range(n))
            root, power = canonicalize(word)
            if power == 1:
                brute.add(root.word)
    assert got == brute


def test_enumerate_admissible_small():
    t = Triple(3, 3, 4)
    assert enumerate_admissible(t, 1) == []  # single letters never code orbits
    assert [w.word for w in enumerate_admissible(t, 2)] == ["ab"]
    assert [w.word for w in enumerate_admissible(t, 3)] == ["ab"]
    with pytest.raises(ValueError):
        enumerate_admissible(t, 0)


def test_enumerate_admissible_monotone_in_length():
    t = Triple(2, 3, 7)
    shorter = {w.word for w in enumerate_admissible(t, 8)}
    longer = {w.word for w in enumerate_admissible(t, 10)}
    assert shorter <= longer


def test_extremal_orbits_334():
    words = {w.word for w in extremal_orbits(Triple(3, 3, 4))}
    assert words == {"ab", "aabb", "aabab", "ababb", "aababb", "aabaabb", "aabbabb"}


def test_extremal_orbits_p2():
    # q = 3 leaves only the mixed family
    words = {w.word for w in extremal_orbits(Triple(2, 3, 7))}
    assert words == {
        canonicalize("ab" * k + "abb" * l)[0].word for k in (1, 2) for l in (1, 2)
    }
    with pytest.raises(TemplateDomainError):
        extremal_orbits(Triple(2, 5, 6))  # r even not covered for p = 2


def test_extremal_words_are_primitive_and_sorted():
    for pqr in [(3, 3, 4), (4, 5, 7), (2, 5, 7), (2, 9, 13)]:
        words = extremal_orbits(Triple(*pqr))
        assert len(words) == len(set(words))
        assert words == sorted(words, key=lambda w: (len(w), w.word))


def test_extremal_families_tags_and_params():
    fams = extremal_families(Triple(3, 3, 4))
    by_word = {e.word.word: e for e in fams}
    assert by_word["ab"].family == "rot_p" and by_word["ab"].params == (1, 1, 0)
    assert by_word["aababb"].family == "mixed" and by_word["aababb"].params == (1, 1)
    assert by_word["ababb"].family == "rot_q"  # ab2.ab
    assert {e.family for e in fams} == {"rot_p", "rot_q", "mixed"}
    assert len({e.word for e in fams}) == len(fams)


def test_extremal_family_words_admissible_for_odd_r():
    # for p >= 3 and r odd the whole family passes the kneading bounds
    # (for even r the k = (r-2)/2 members do not; see extremality_crosscheck)
    from templink.kneading import is_admissible, kneading

    for pqr in [(3, 3, 5), (3, 4, 7), (4, 5, 5)]:
        t = Triple(*pqr)
        k = kneading(t)
        for w in extremal_orbits(t):
            assert is_admissible(w, k), (pqr, w.word)


def test_verify_pairs_334_all_negative():
    t = Triple(3, 3, 4)
    reports = verify_pairs(t, extremal_orbits(t), include_self=True)
    assert len(reports) == 28
    assert all(r.negative for r in reports)
    assert max(r.lk for r in reports) == Fraction(-1, 3)


def test_verify_pairs_positive_control():
    t = Triple(3, 3, 4)
    reports = verify_pairs(t, [CyclicWord("aab")], include_self=True)
    assert len(reports) == 1
    assert reports[0].lk == 1 and not reports[0].negative


def test_verify_pairs_rejects_duplicates():
    t = Triple(3, 3, 4)
    with pytest.raises(ValueError):
        verify_pairs(t, [CyclicWord("ab"), CyclicWord("ba")])


def test_pair_engine_matches_definition_oracle():
    t = Triple(3, 4, 5)
    rng = random.Random(3)
    words = []
    while len(words) < 6:
        raw = "".join(rng.choice("ab") for _ in range(rng.randint(2, 9)))
        root, power = canonicalize(raw)
        if power == 1 and "a" in root.word and "b" in root.word and root not in words:
            words.append(root)
    reports = verify_pairs(t, words, include_self=True)
    for r in reports:
        assert r.cr == oracle_crossing(r.word1, r.word2)


def test_linking_subadditive_under_admissible_cuts():
    # lk(w, x) <= lk(u, x) + lk(v, x) for admissible cuts (u, v) of w
    from templink.census import has_admissible_cut
    from templink.crossing import enumerate_cuts, is_admissible_cut
    from templink.kneading import kneading
    from templink.linking import template_linking

    t = Triple(3, 3, 4)
    k = kneading(t)
    words = enumerate_admissible(t, 9)
    probes = words[:6]
    for w in words:
        for cut in enumerate_cuts(w):
            if not is_admissible_cut(cut, k):
                continue
            u = canonicalize(cut.u)[0]
            v = canonicalize(cut.v)[0]
            for x in probes:
                lk_w = template_linking(t, w, x)
                assert lk_w <= template_linking(t, u, x) + template_linking(t, v, x)


def test_csv_schema():
    t = Triple(3, 3, 4)
    reports = verify_pairs(t, [CyclicWord("ab"), CyclicWord("aabb")])
    text = reports_to_csv(reports)
    lines = text.strip().splitlines()
    assert lines[0] == "word1,word2,cr,na1,nb1,na2,nb2,lk_num,lk_den,negative"
    assert lines[1].split(",")[:2] == ["ab", "ab"]
    row = dict(zip(lines[0].split(","), lines[2].split(",")))
    assert row["word2"] == "aabb" and row["negative"] == "true"
    # dict form is JSON-serializable with the same fields
    payload = json.dumps([r.as_dict() for r in reports])
    assert json.loads(payload)[0]["lk_den"] == 3


def test_range_triples_selection():
    ts = range_triples(4, 5, 7, include_p2=False)
    assert all(t.p >= 3 and t.p <= t.q <= t.r and t.delta >= 1 for t in ts)
    assert len(ts) == 18
    p2 = range_triples(2, 9, 13)
    assert all(t.p == 2 and t.q % 2 == 1 and t.r % 2 == 1 for t in p2)
    assert len(p2) == 16
    as_tuples = {(t.p, t.q, t.r) for t in p2}
    assert (2, 3, 7) in as_tuples and (2, 3, 5) not in as_tuples


def test_verify_triple_summary():
    s = verify_triple(Triple(3, 3, 4))
    assert (s.n_words, s.n_pairs) == (7, 28)
    assert s.ok and s.worst == Fraction(-1, 3)


def test_verify_range_deterministic_across_jobs():
    s1 = verify_range(3, 4, 5, jobs=1)
    s2 = verify_range(3, 4, 5, jobs=2)
    strip = lambda s: [(t.p, t.q, t.r, t.n_words, t.n_pairs, t.worst, t.worst_pair) for t in s.triples]
    assert strip(s1) == strip(s2)
    assert s1.ok


def test_extremality_crosscheck_returns_both_sets():
    family, independent = extremality_crosscheck(Triple(2, 9, 13), max_len=12)
    assert {w.word for w in family} == {w.word for w in independent}
    assert all(len(w) <= 12 for w in family)


def test_extremality_crosscheck_surfaces_mismatches():
    # under the printed kneading table, the k = (r-2)/2 family words of even-r
    # triples are not admissible, so the two characterizations must differ
    family, independent = extremality_crosscheck(Triple(3, 3, 4), max_len=12)
    fam = {w.word for w in family}
    indep = {w.word for w in independent}
    assert "aabab" in fam - indep
    assert fam != indep
