"""Kneading data of the two-ribbon geodesic-flow template and orbit admissibility.

The template for surgery parameters (p, q, r) has a left ribbon ``a`` and a
right ribbon ``b``.  Its four kneading sequences u_L <= u_R and v_L <= v_R are
the codes of the extreme orbits of the two ribbons; a cyclic word codes an
orbit of the template exactly when every shift of its infinite code lies
(inclusively) between the bounds of the ribbon it starts in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import CyclicWord, PeriodicSequence, all_shifts, compare


class TemplateDomainError(ValueError):
    """Raised for parameters outside the domain of the kneading table."""


@dataclass(frozen=True)
class Triple:
    """Surgery parameters 2 <= p <= q <= r of a hyperbolic 3-conic sphere.

    Hyperbolicity (1/p + 1/q + 1/r < 1) is equivalent to delta >= 1, where
    delta = pqr - pq - qr - pr is the order of the first homology group of
    the surgered manifold.
    """

    p: int
    q: int
    r: int

    def __post_init__(self) -> None:
        for name, value in (("p", self.p), ("q", self.q), ("r", self.r)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if not 2 <= self.p <= self.q <= self.r:
            raise ValueError(f"need 2 <= p <= q <= r, got ({self.p}, {self.q}, {self.r})")
        if self.delta < 1:
            raise ValueError(
                f"({self.p}, {self.q}, {self.r}) is not hyperbolic: 1/p + 1/q + 1/r >= 1"
            )

    @property
    def delta(self) -> int:
        p, q, r = self.p, self.q, self.r
        return p * q * r - p * q - q * r - p * r

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class KneadingData:
    """The four boundary sequences of the template, with v_L = b.u_L, u_R = a.v_R."""

    u_L: PeriodicSequence
    u_R: PeriodicSequence
    v_L: PeriodicSequence
    v_R: PeriodicSequence

    def __post_init__(self) -> None:
        if compare(self.u_L, self.u_R) > 0 or compare(self.v_L, self.v_R) > 0:
            raise ValueError("kneading bounds out of order")


def _prepend(letter: str, s: PeriodicSequence) -> PeriodicSequence:
    return PeriodicSequence(letter + s.preperiod, s.period)


def _pack(u_L: PeriodicSequence, v_R: PeriodicSequence) -> KneadingData:
    return KneadingData(u_L=u_L, u_R=_prepend("a", v_R), v_L=_prepend("b", u_L), v_R=v_R)


def kneading(t: Triple) -> KneadingData:
    """Kneading data of the template with parameters (p, q, r), r finite.

    The p = 2 rows of the table need q > 2 and r > 4, both of which are
    already forced by hyperbolicity, so every Triple has kneading data.
    """
    p, q, r = t.p, t.q, t.r
    A, B = "a" * (p - 1), "b" * (q - 1)
    if p >= 3:
        if r % 2 == 1:
            u = (A + "b") * ((r - 3) // 2) + A + "bb"
            v = (B + "a") * ((r - 3) // 2) + B + "aa"
        else:
            half = (r - 2) // 2
            u = (A + "b") * half + "a" * (p - 2) + ("b" + A) * half + "bb"
            v = (B + "a") * half + "b" * (q - 2) + ("a" + B) * half + "aa"
        return _pack(PeriodicSequence("", u), PeriodicSequence("", v))
    u_half = (r - 3) // 2 if r % 2 == 1 else (r - 4) // 2
    v_half = (r - 5) // 2 if r % 2 == 1 else (r - 4) // 2
    u = "ab" * u_half + "abb"
    v_rep = ("a" + B) * v_half + "a" + "b" * (q - 2)
    return _pack(PeriodicSequence("", u), PeriodicSequence(B, v_rep))


def kneading_unbounded(p: int, q: int) -> KneadingData:
    """Kneading data of the open template with the top surgery removed.

    The bounds are the pure syllable sequences (a^(p-1) b)^inf and
    (b^(q-1) a)^inf.  This data carries no homology order, so it supports
    admissibility questions only, never linking arithmetic.
    """
    if p < 2 or q < 2:
        raise TemplateDomainError("need p, q >= 2")
    u = PeriodicSequence("", "a" * (p - 1) + "b")
    v = PeriodicSequence("", "b" * (q - 1) + "a")
    return _pack(u, v)


def lorenz_kneading() -> KneadingData:
    """Trivial bounds (a^inf and b^inf): every binary word is admissible.

    This is the full Lorenz template, used when evaluating formal words that
    do not lie on any (p, q, r)-template.
    """
    return _pack(PeriodicSequence("", "a"), PeriodicSequence("", "b"))


def is_admissible(w: CyclicWord, k: KneadingData) -> bool:
    """True iff every shift of ``w^inf`` lies between the kneading bounds.

    Shifts starting with ``a`` must satisfy u_L <= s <= u_R, shifts starting
    with ``b`` must satisfy v_L <= s <= v_R (bounds inclusive: the template
    contains its boundary orbits).  Rotation-invariant by construction.
    """
    for s in all_shifts(w):
        if s.head == "a":
            lo, hi = k.u_L, k.u_R
        else:
            lo, hi = k.v_L, k.v_R
        if compare(lo, s) > 0 or compare(s, hi) > 0:
            return False
    return True


def max_block_constraints(t: Triple) -> tuple[int, int, int]:
    """Quick necessary conditions on admissible codes, used to prune searches.

    Returns (max run of a, max run of b, max consecutive repeats of the
    syllables a^(p-1) b or a b^(q-1)) = (p-1, q-1, floor((r-2)/2)).
    """
    return t.p - 1, t.q - 1, (t.r - 2) // 2


def syllables(word: str) -> list[tuple[int, int]]:
    """Cyclic decomposition of a two-letter word into maximal blocks a^i b^j.

    The decomposition starts at an ``a`` that cyclically follows a ``b``, so
    it is rotation-invariant.
    """
    n = len(word)
    start = next(
        (i for i in range(n) if word[i] == "a" and word[i - 1] == "b"), None
    )
    if start is None:
        raise ValueError(f"{word!r} does not contain both letters")
    rot = word[start:] + word[:start]
    out: list[tuple[int, int]] = []
    i = 0
    while i < n:
        j = i
        while j < n and rot[j] == "a":
            j += 1
        k = j
        while k < n and rot[k] == "b":
            k += 1
        out.append((j - i, k - j))
        i = k
    return out


def _max_cyclic_run(items: list, target) -> int:
    # assumes not all items equal target; doubling captures wraparound runs
    best = run = 0
    for x in items + items:
        run = run + 1 if x == target else 0
        best = max(best, run)
    return best


def satisfies_block_constraints(w: CyclicWord, t: Triple) -> bool:
    """Necessary admissibility conditions from :func:`max_block_constraints`.

    Single-letter words fail (their unique run is unbounded), and so do the
    pure syllable words a^(p-1) b and a b^(q-1), whose infinite codes repeat
    one syllable forever.
    """
    word = w.word
    if "a" not in word or "b" not in word:
        return False
    max_a, max_b, max_rep = max_block_constraints(t)
    blocks = syllables(word)
    if any(i > max_a or j > max_b for i, j in blocks):
        return False
    for syl in ((t.p - 1, 1), (1, t.q - 1)):
        if all(b == syl for b in blocks):
            return False
        if _max_cyclic_run(blocks, syl) > max_rep:
            return False
    return True
