"""Crossing numbers of orbit pairs on a Lorenz-type template, and cuts.

In the standard projection of a Lorenz-type template, two strands cross
exactly once between consecutive branch-line returns iff their left-to-right
order on the branch line reverses.  The branch-line order of strands is the
lexicographic order of their codes, so the crossing number of two orbits is
the number of ordered shift pairs whose comparison flips after one step.

Self-crossings follow the translated-copy convention: ``cr(w, w)`` is twice
the number of double points, obtained by running the same count over ordered
pairs of distinct shifts of ``w``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kneading import KneadingData, is_admissible
from .words import CyclicWord, PeriodicSequence, canonicalize, compare


def _shift_strings(word: str, horizon: int) -> list[str]:
    reps = word * (horizon // len(word) + 2)
    return [reps[i : i + horizon] for i in range(len(word))]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def word_crossing(v: str, x: str) -> int:
    """Crossing number of the diagrams traced by the finite words v and x.

    Both words may be powers or share a primitive root; a word traversing an
    orbit k times counts as k parallel strands (translated-copy convention),
    so ``word_crossing(w, w)`` is twice the number of double points of w's
    orbit and ``word_crossing(z*k, x) == k * word_crossing(z, x)``.
    """
    if not v or not x:
        raise ValueError("crossing numbers need nonempty words")
    n, m = len(v), len(x)
    # Two sequences of periods n and m that agree on n + m letters coincide.
    horizon = n + m
    sv = _shift_strings(v, horizon)
    sx = _shift_strings(x, horizon)
    rank = {s: i for i, s in enumerate(sorted(set(sv) | set(sx)))}
    rv = [rank[s] for s in sv]
    rx = [rank[s] for s in sx]
    count = 0
    for i in range(n):
        a, a1 = rv[i], rv[(i + 1) % n]
        for j in range(m):
            if _sign(a - rx[j]) != _sign(a1 - rx[(j + 1) % m]):
                count += 1
    return count


def crossing_number(w: CyclicWord, w2: CyclicWord) -> int:
    """Crossing number of two distinct orbits of the Lorenz template.

    For a pair of equal orbits use :func:`self_crossing`; requesting the
    crossing of a word with itself here is a contract violation.
    """
    if w == w2:
        raise ValueError(f"equal cyclic words {w.word!r}: use self_crossing")
    return word_crossing(w.word, w2.word)


def self_crossing(w: CyclicWord) -> int:
    """Twice the number of double points of the orbit coded by w.

    Counts ordered pairs of distinct shifts whose relative order swaps after
    one step; always even.
    """
    return word_crossing(w.word, w.word)


@dataclass(frozen=True)
class Cut:
    """A splitting of a cyclic word into factors u (ending in a) and v (ending in b).

    ``u + v`` is the rotation of the cut word starting ``rotation`` letters into
    its canonical form, split after ``split`` letters.  Validity requires
    ``u^inf < v^inf`` with no shift of either factor strictly between them.
    """

    u: str
    v: str
    rotation: int
    split: int


def _is_valid_cut(u: str, v: str) -> bool:
    su = PeriodicSequence("", u)
    sv = PeriodicSequence("", v)
    if compare(su, sv) >= 0:
        return False
    for factor in (u, v):
        for i in range(len(factor)):
            s = PeriodicSequence("", factor[i:] + factor[:i])
            if compare(su, s) < 0 and compare(s, sv) < 0:
                return False
    return True


def enumerate_cuts(w: CyclicWord) -> list[Cut]:
    """All cuts of ``w``, over every rotation and split point.

    Factors need not be primitive (e.g. the cut aa|bb of aabb) nor code
    template orbits; admissibility is a separate question, see
    :func:`is_admissible_cut`.
    """
    s = w.word
    n = len(s)
    cuts = []
    for k in range(n):
        rot = s[k:] + s[:k]
        if rot[-1] != "b":
            continue
        for split in range(1, n):
            if rot[split - 1] != "a":
                continue
            u, v = rot[:split], rot[split:]
            if _is_valid_cut(u, v):
                cuts.append(Cut(u=u, v=v, rotation=k, split=split))
    return cuts


def is_admissible_cut(c: Cut, k: KneadingData) -> bool:
    """True iff both factors code orbits of the template with kneading data k."""
    for factor in (c.u, c.v):
        root, _ = canonicalize(factor)
        if not is_admissible(root, k):
            return False
    return True
