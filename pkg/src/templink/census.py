"""Orbit census, extremal families, and the exhaustive negativity verifier.

The linking number of template orbit pairs is subadditive under admissible
cuts, so negativity for all pairs reduces to negativity on the finite family
of extremal orbits (admissible orbits with no admissible cut).  This module
enumerates admissible orbits, generates the extremal families in closed form,
cross-validates the two descriptions, and verifies pairwise negativity over
parameter ranges, exactly and in parallel.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .crossing import enumerate_cuts, is_admissible_cut, word_crossing
from .kneading import (
    KneadingData,
    TemplateDomainError,
    Triple,
    is_admissible,
    kneading,
    satisfies_block_constraints,
)
from .identities import CATALOG, Identity
from .linking import delta, q_form
from .words import CyclicWord, canonicalize

CSV_FIELDS = ("word1", "word2", "cr", "na1", "nb1", "na2", "nb2", "lk_num", "lk_den", "negative")


@dataclass(frozen=True)
class PairReport:
    """One verified orbit pair: crossing number, letter counts, exact linking."""

    word1: str
    word2: str
    cr: int
    na1: int
    nb1: int
    na2: int
    nb2: int
    lk: Fraction

    @property
    def negative(self) -> bool:
        return self.lk < 0

    def as_dict(self) -> dict:
        return {
            "word1": self.word1,
            "word2": self.word2,
            "cr": self.cr,
            "na1": self.na1,
            "nb1": self.nb1,
            "na2": self.na2,
            "nb2": self.nb2,
            "lk_num": self.lk.numerator,
            "lk_den": self.lk.denominator,
            "negative": self.negative,
        }

    def as_csv_row(self) -> str:
        d = self.as_dict()
        return ",".join(str(d[f]).lower() if f == "negative" else str(d[f]) for f in CSV_FIELDS)


def reports_to_csv(reports: list[PairReport]) -> str:
    lines = [",".join(CSV_FIELDS)]
    lines.extend(r.as_csv_row() for r in reports)
    return "\n".join(lines) + "\n"


def lyndon_words(max_len: int) -> list[str]:
    """All Lyndon words over {a, b} of length <= max_len (Duval's generator).

    Lyndon words are exactly the canonical forms of primitive cyclic words.
    """
    out: list[str] = []
    w = [-1]
    while w:
        w[-1] += 1
        out.append("".join("ab"[c] for c in w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()
    return out


def enumerate_admissible(t: Triple, max_len: int) -> list[CyclicWord]:
    """All admissible primitive cyclic words of length <= max_len, canonical.

    Candidates are pruned by the block constraints before the full kneading
    comparison.  Single-letter words are never admissible.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    k = kneading(t)
    out = []
    for word in lyndon_words(max_len):
        if "a" not in word or "b" not in word:
            continue
        w = CyclicWord(word)
        if satisfies_block_constraints(w, t) and is_admissible(w, k):
            out.append(w)
    out.sort(key=lambda w: (len(w), w.word))
    return out


@dataclass(frozen=True)
class ExtremalFamily:
    """One extremal-family member: tag, parameters, and its canonical word.

    Tags: ``rot_p`` for a^(p-1)b repeats, ``rot_q`` for ab^(q-1) repeats,
    ``mixed`` for a block of each.  Parameters are (i, j, k) for the rotation
    families (for p = 2 just (i, k)) and (k, l) for the mixed one.
    """

    family: str
    params: tuple[int, ...]
    word: CyclicWord


def extremal_families(t: Triple) -> list[ExtremalFamily]:
    """The closed-form extremal families, deduplicated by canonical word.

    For p >= 3 these are (a^(p-1)b)^k a^i b^j and (ab^(q-1))^k a^i b^j with
    (i, j) in [1,p-1] x [1,q-1] minus the two syllable corners (1,q-1) and
    (p-1,1), k in [0, floor((r-2)/2)], together with the mixed words
    (a^(p-1)b)^k (ab^(q-1))^l, k,l in [1, floor((r-2)/2)].

    For p = 2 (q and r odd) the families are a b^i (ab)^k and
    a b^i (ab^(q-1))^k with (i, k) in [2,q-2] x [0,(r-3)/2], and
    (ab)^k (ab^(q-1))^l with k,l in [1,(r-3)/2].
    """
    p, q, r = t.p, t.q, t.r
    entries: list[ExtremalFamily] = []
    if p >= 3:
        kmax = (r - 2) // 2
        P, Q = "a" * (p - 1) + "b", "a" + "b" * (q - 1)
        pairs = [
            (i, j)
            for i in range(1, p)
            for j in range(1, q)
            if (i, j) not in {(1, q - 1), (p - 1, 1)}
        ]
        for k in range(kmax + 1):
            for i, j in pairs:
                tail = "a" * i + "b" * j
                entries.append(ExtremalFamily("rot_p", (i, j, k), CyclicWord(P * k + tail)))
                entries.append(ExtremalFamily("rot_q", (i, j, k), CyclicWord(Q * k + tail)))
        for k in range(1, kmax + 1):
            for l in range(1, kmax + 1):
                entries.append(ExtremalFamily("mixed", (k, l), CyclicWord(P * k + Q * l)))
    else:
        if q % 2 == 0 or r % 2 == 0:
            raise TemplateDomainError(
                "p = 2 census is defined for q and r odd only "
                "(even cases follow from a double cover)"
            )
        kmax = (r - 3) // 2
        P, Q = "ab", "a" + "b" * (q - 1)
        for i in range(2, q - 1):
            for k in range(kmax + 1):
                entries.append(ExtremalFamily("rot_p", (i, k), CyclicWord("a" + "b" * i + P * k)))
                entries.append(ExtremalFamily("rot_q", (i, k), CyclicWord("a" + "b" * i + Q * k)))
        for k in range(1, kmax + 1):
            for l in range(1, kmax + 1):
                entries.append(ExtremalFamily("mixed", (k, l), CyclicWord(P * k + Q * l)))
    seen: set[CyclicWord] = set()
    unique = []
    for e in entries:
        if e.word not in seen:
            seen.add(e.word)
            unique.append(e)
    return unique


def extremal_orbits(t: Triple) -> list[CyclicWord]:
    """Canonical words of the extremal families, sorted by length then text."""
    return sorted((e.word for e in extremal_families(t)), key=lambda w: (len(w), w.word))


def has_admissible_cut(w: CyclicWord, k: KneadingData) -> bool:
    return any(is_admissible_cut(c, k) for c in enumerate_cuts(w))


def extremality_crosscheck(
    t: Triple, max_len: int = 12
) -> tuple[list[CyclicWord], list[CyclicWord]]:
    """Both characterizations of extremal orbits, restricted to length <= max_len.

    Returns (closed-form family words, admissible words with no admissible
    cut); the two lists must coincide.
    """
    family = [w for w in extremal_orbits(t) if len(w) <= max_len]
    k = kneading(t)
    independent = [w for w in enumerate_admissible(t, max_len) if not has_admissible_cut(w, k)]
    return family, independent


def _shift_rank_arrays(words: list[str]) -> list[np.ndarray]:
    """Global branch-line ranks of every shift of every word.

    One joint sort replaces per-pair comparisons: the sign of a rank
    difference equals the lexicographic comparison of the two shifted codes,
    because the horizon 2*max_len exceeds the agreement bound of any pair.
    """
    horizon = 2 * max(len(w) for w in words)
    entries = []
    for wi, w in enumerate(words):
        reps = w * (horizon // len(w) + 2)
        for i in range(len(w)):
            entries.append((reps[i : i + horizon], wi, i))
    entries.sort(key=lambda e: e[0])
    ranks = [np.empty(len(w), dtype=np.int64) for w in words]
    for rank, (_, wi, i) in enumerate(entries):
        ranks[wi][i] = rank
    return ranks


def _crossing_from_ranks(r1: np.ndarray, r2: np.ndarray) -> int:
    s = np.sign(r1[:, None] - r2[None, :])
    s_next = np.sign(np.roll(r1, -1)[:, None] - np.roll(r2, -1)[None, :])
    return int((s != s_next).sum())


def verify_pairs(
    t: Triple, words: list[CyclicWord], include_self: bool = True
) -> list[PairReport]:
    """Evaluate the linking formula on all unordered pairs of the given words.

    Self-pairs (translated-copy convention) are included when requested.
    The words are not required to be admissible, so non-admissible controls
    can be fed through the same pipeline; each report carries a negativity
    verdict.
    """
    if len(set(words)) != len(words):
        raise ValueError("word list contains duplicates")
    if not words:
        return []
    texts = [w.word for w in words]
    ranks = _shift_rank_arrays(texts)
    counts = [w.letter_counts() for w in words]
    d = delta(t)
    reports = []
    for i in range(len(words)):
        start = i if include_self else i + 1
        for j in range(start, len(words)):
            cr = _crossing_from_ranks(ranks[i], ranks[j])
            lk = Fraction(-cr, 2) + Fraction(q_form(t, counts[i], counts[j]), d)
            reports.append(
                PairReport(
                    word1=texts[i],
                    word2=texts[j],
                    cr=cr,
                    na1=counts[i][0],
                    nb1=counts[i][1],
                    na2=counts[j][0],
                    nb2=counts[j][1],
                    lk=lk,
                )
            )
    return reports


@dataclass(frozen=True)
class TripleSummary:
    """Verification outcome for one parameter triple."""

    p: int
    q: int
    r: int
    n_words: int
    n_pairs: int
    violations: tuple[PairReport, ...]
    worst: Fraction
    worst_pair: tuple[str, str]
    elapsed_s: float

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class RangeSummary:
    """Aggregate over a range of triples; deterministic apart from timings."""

    triples: tuple[TripleSummary, ...]
    elapsed_s: float

    @property
    def total_pairs(self) -> int:
        return sum(s.n_pairs for s in self.triples)

    @property
    def total_violations(self) -> int:
        return sum(len(s.violations) for s in self.triples)

    @property
    def worst(self) -> tuple[Fraction, tuple[str, str], tuple[int, int, int]] | None:
        best = None
        for s in self.triples:
            if s.n_pairs and (best is None or s.worst > best[0]):
                best = (s.worst, s.worst_pair, (s.p, s.q, s.r))
        return best

    @property
    def ok(self) -> bool:
        return self.total_violations == 0


def range_triples(
    p_max: int, q_max: int, r_max: int, include_p2: bool = True
) -> list[Triple]:
    """Hyperbolic triples p <= q <= r within bounds: all p >= 3, plus, when
    requested, p = 2 with q and r odd inside the kneading-table domain."""
    out = []
    if include_p2 and p_max >= 2:
        for q in range(3, q_max + 1, 2):
            for r in range(q, r_max + 1, 2):
                if r > 4 and 2 * q * r - 2 * q - q * r - 2 * r >= 1:
                    out.append(Triple(2, q, r))
    for p in range(3, p_max + 1):
        for q in range(p, q_max + 1):
            for r in range(q, r_max + 1):
                if p * q * r - p * q - q * r - p * r >= 1:
                    out.append(Triple(p, q, r))
    return out


def verify_triple(t: Triple, include_self: bool = True) -> TripleSummary:
    """Run the negativity check on the extremal orbits of one triple."""
    start = time.perf_counter()
    words = extremal_orbits(t)
    reports = verify_pairs(t, words, include_self=include_self)
    violations = tuple(r for r in reports if not r.negative)
    if reports:
        worst_report = max(reports, key=lambda r: r.lk)
        worst, worst_pair = worst_report.lk, (worst_report.word1, worst_report.word2)
    else:
        worst, worst_pair = Fraction(0), ("", "")
    return TripleSummary(
        p=t.p,
        q=t.q,
        r=t.r,
        n_words=len(words),
        n_pairs=len(reports),
        violations=violations,
        worst=worst,
        worst_pair=worst_pair,
        elapsed_s=time.perf_counter() - start,
    )


def _verify_triple_args(args: tuple[int, int, int]) -> TripleSummary:
    return verify_triple(Triple(*args))


def verify_range(
    p_max: int,
    q_max: int,
    r_max: int,
    include_p2: bool = True,
    jobs: int | None = None,
) -> RangeSummary:
    """Verify all triples in range; work is distributed across processes.

    The result is deterministic regardless of scheduling: summaries are
    keyed and ordered by triple.
    """
    start = time.perf_counter()
    triples = range_triples(p_max, q_max, r_max, include_p2=include_p2)
    args = [(t.p, t.q, t.r) for t in triples]
    if jobs is not None and jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1 or len(args) <= 1:
        summaries = [_verify_triple_args(a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            summaries = list(pool.map(_verify_triple_args, args))
    summaries.sort(key=lambda s: (s.p, s.q, s.r))
    return RangeSummary(triples=tuple(summaries), elapsed_s=time.perf_counter() - start)


@dataclass(frozen=True)
class IdentityResult:
    """One closed-form comparison: exact pipeline value vs catalog value.

    Values are delta * lk, computed through the crossing-plus-form pipeline
    on one side and the cataloged polynomial on the other.
    """

    name: str
    label: str
    pipeline: Fraction
    closed_form: Fraction

    @property
    def match(self) -> bool:
        return self.pipeline == self.closed_form


@dataclass
class IdentityReport:
    """Outcome of the closed-form and inequality checks for one triple.

    Crossing closed forms, the refined crossing lower bound and the sampled
    superadditivity instances are hard requirements (``ok``); the identity
    comparisons are informational and mismatching variants are listed in
    ``disagreements`` rather than failing the report.
    """

    triple: tuple[int, int, int]
    fig_checked: int = 0
    fig_failures: list[str] = field(default_factory=list)
    bound_checked: int = 0
    bound_failures: list[str] = field(default_factory=list)
    superadd_checked: int = 0
    superadd_failures: list[str] = field(default_factory=list)
    identities: list[IdentityResult] = field(default_factory=list)

    @property
    def disagreements(self) -> list[IdentityResult]:
        return [r for r in self.identities if not r.match]

    @property
    def ok(self) -> bool:
        return not (self.fig_failures or self.bound_failures or self.superadd_failures)


def _pipeline_delta_lk(t: Triple, w1: str, w2: str) -> Fraction:
    cr = word_crossing(w1, w2)
    na1, nb1 = w1.count("a"), w1.count("b")
    na2, nb2 = w2.count("a"), w2.count("b")
    return Fraction(-cr, 2) * delta(t) + q_form(t, (na1, nb1), (na2, nb2))


def _check_staircase_forms(t: Triple, bound: int, report: IdentityReport) -> None:
    # cr(a^i b^j, a^i' b^j') = 2(i+j) for i<i', j<j'; 2(i+j'-1) for i<=i', j>=j'
    for i in range(1, bound + 1):
        for j in range(1, bound + 1):
            w1 = "a" * i + "b" * j
            for i2 in range(i, bound + 1):
                for j2 in range(1, bound + 1):
                    w2 = "a" * i2 + "b" * j2
                    if i < i2 and j < j2:
                        expected = 2 * (i + j)
                    elif i <= i2 and j >= j2 and (i, j) != (i2, j2):
                        expected = 2 * (i + j2 - 1)
                    else:
                        continue
                    report.fig_checked += 1
                    got = word_crossing(w1, w2)
                    if got != expected:
                        report.fig_failures.append(
                            f"cr({w1},{w2}) = {got}, closed form {expected}"
                        )


def _repeat_block_words(t: Triple) -> list[tuple[int, int, int, str]]:
    """(k, i, j, word) for the primitive words (a^(p-1)b)^k a^i b^j in range."""
    p, q, r = t.p, t.q, t.r
    P = "a" * (p - 1) + "b"
    out = []
    for k in range((r - 2) // 2 + 1):
        for i in range(1, p):
            for j in range(1, q):
                if (i, j) == (p - 1, 1) and k >= 1:
                    continue  # (a^(p-1)b)^(k+1) is a power, not an orbit code
                out.append((k, i, j, P * k + "a" * i + "b" * j))
    return out


def _check_refined_bound(t: Triple, report: IdentityReport) -> None:
    # cr((a^(p-1)b)^k a^i b^j, (a^(p-1)b)^k' a^i' b^j') >=
    #   k k' cr(P,P) + k cr(P, s') + k' cr(P, s) + cr(s, s') + 2 min(k, k')
    P = "a" * (t.p - 1) + "b"
    words = _repeat_block_words(t)
    cr_pp = word_crossing(P, P)
    cr_p = {}
    for _, i, j, _w in words:
        s = "a" * i + "b" * j
        if (i, j) not in cr_p:
            cr_p[(i, j)] = word_crossing(P, s)
    for k, i, j, w1 in words:
        s1 = "a" * i + "b" * j
        for k2, i2, j2, w2 in words:
            s2 = "a" * i2 + "b" * j2
            lower = (
                k * k2 * cr_pp
                + k * cr_p[(i2, j2)]
                + k2 * cr_p[(i, j)]
                + word_crossing(s1, s2)
                + 2 * min(k, k2)
            )
            report.bound_checked += 1
            got = word_crossing(w1, w2)
            if got < lower:
                report.bound_failures.append(
                    f"cr({w1},{w2}) = {got} < refined lower bound {lower}"
                )


def superadditivity_instances(
    samples: int, seed: int = 0, max_word_len: int = 14
) -> list[tuple[str, str, str]]:
    """Seeded random (u, v, probe) cut instances for the superadditivity check."""
    rng = random.Random(seed)
    out: list[tuple[str, str, str]] = []
    while len(out) < samples:
        n = rng.randint(4, max_word_len)
        raw = "".join(rng.choice("ab") for _ in range(n))
        if "a" not in raw or "b" not in raw:
            continue
        root, _ = canonicalize(raw)
        cuts = enumerate_cuts(root)
        rng.shuffle(cuts)
        for cut in cuts[:3]:
            probe = "".join(rng.choice("ab") for _ in range(rng.randint(1, 10)))
            out.append((cut.u, cut.v, probe))
            if len(out) >= samples:
                break
    return out


def _check_superadditivity(samples: int, seed: int, report: IdentityReport) -> None:
    for u, v, x in superadditivity_instances(samples, seed=seed):
        report.superadd_checked += 1
        whole = word_crossing(u + v, x)
        parts = word_crossing(u, x) + word_crossing(v, x)
        if whole < parts:
            report.superadd_failures.append(
                f"cr({u + v},{x}) = {whole} < cr({u},{x}) + cr({v},{x}) = {parts}"
            )


def check_identities(
    t: Triple,
    staircase_bound: int = 6,
    superadd_samples: int = 50,
    seed: int = 0,
    catalog: list[Identity] | None = None,
) -> IdentityReport:
    """Exhaustive crossing closed forms, the refined lower bound, sampled
    superadditivity, and the closed-form identity catalog, for one triple."""
    report = IdentityReport(triple=(t.p, t.q, t.r))
    _check_staircase_forms(t, staircase_bound, report)
    _check_refined_bound(t, report)
    _check_superadditivity(superadd_samples, seed, report)
    for ident in catalog if catalog is not None else CATALOG:
        for label, w1, w2, value in ident.instances(t):
            report.identities.append(
                IdentityResult(
                    name=ident.name,
                    label=label,
                    pipeline=_pipeline_delta_lk(t, w1, w2),
                    closed_form=value,
                )
            )
    return report
