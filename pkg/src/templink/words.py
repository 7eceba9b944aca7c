"""Cyclic binary words and eventually periodic sequences over the alphabet {a, b}.

A periodic orbit of a two-ribbon template is coded by a primitive cyclic word
over the ribbon labels ``a`` and ``b`` (left ribbon before right ribbon, so
``a < b``).  Its successive returns to the branch line are the shifts of the
purely periodic sequence ``w^inf``; kneading bounds are eventually periodic
sequences.  Everything here is an immutable value and safe to share.

Serialization: cyclic words are plain ASCII strings over ``{a, b}``;
sequences use the ``"preperiod|period"`` format (the preperiod may be empty,
e.g. ``"|ab"`` for ``(ab)^inf``).
"""

from __future__ import annotations

from dataclasses import dataclass

ALPHABET = "ab"

# Comparison outcomes, mirroring cmp()-style conventions.
LESS, EQUAL, GREATER = -1, 0, 1


def _check_letters(s: str, what: str = "word") -> None:
    for ch in s:
        if ch not in ALPHABET:
            raise ValueError(f"{what} may only contain letters 'a' and 'b', got {ch!r}")


def least_rotation(s: str) -> str:
    """Lexicographically least rotation of ``s`` (direct scan; words are short)."""
    if not s:
        raise ValueError("empty word has no rotation")
    return min(s[i:] + s[:i] for i in range(len(s)))


def primitive_root(s: str) -> tuple[str, int]:
    """Split ``s`` into (root, power) with ``s == root * power`` and root primitive.

    Uses the classical doubling trick: the least offset at which ``s`` occurs
    in ``s + s`` is the least period, and it divides ``len(s)``.
    """
    if not s:
        raise ValueError("empty word has no primitive root")
    d = (s + s).find(s, 1)
    return s[:d], len(s) // d


@dataclass(frozen=True)
class CyclicWord:
    """A primitive cyclic word, stored in its least rotation.

    The constructor accepts any rotation and canonicalizes it; proper powers
    are rejected since they code the same orbit as their root (use
    :func:`canonicalize` to split a power into root and exponent).
    """

    word: str

    def __post_init__(self) -> None:
        if not self.word:
            raise ValueError("cyclic word must be nonempty")
        _check_letters(self.word)
        root, power = primitive_root(self.word)
        if power != 1:
            raise ValueError(
                f"{self.word!r} is the {power}-th power of {root!r}; "
                "cyclic words store primitive roots only"
            )
        object.__setattr__(self, "word", least_rotation(self.word))

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word

    def rotation(self, k: int) -> str:
        k %= len(self.word)
        return self.word[k:] + self.word[:k]

    def letter_counts(self) -> tuple[int, int]:
        return self.word.count("a"), self.word.count("b")


def canonicalize(raw: str) -> tuple[CyclicWord, int]:
    """Primitive root of ``raw`` in least rotation, plus the power it was raised to.

    >>> canonicalize("ba")
    (CyclicWord(word='ab'), 1)
    >>> canonicalize("abab")
    (CyclicWord(word='ab'), 2)
    """
    if not raw:
        raise ValueError("cannot canonicalize the empty word")
    _check_letters(raw)
    root, power = primitive_root(raw)
    return CyclicWord(root), power


@dataclass(frozen=True)
class PeriodicSequence:
    """An eventually periodic one-sided infinite sequence ``preperiod . period^inf``.

    Stored in normal form: the period is primitive and the preperiod is as
    short as possible (its last letter differs from the period's last letter),
    so structural equality coincides with letterwise equality of sequences.
    """

    preperiod: str
    period: str

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")
        _check_letters(self.preperiod, "preperiod")
        _check_letters(self.period, "period")
        per, _ = primitive_root(self.period)
        pre = self.preperiod
        while pre and pre[-1] == per[-1]:
            per = per[-1] + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def __str__(self) -> str:
        return f"{self.preperiod}|{self.period}"

    @classmethod
    def parse(cls, text: str) -> "PeriodicSequence":
        """Parse the ``"pre|period"`` serialization."""
        if "|" not in text:
            raise ValueError(f"sequence must be written as 'pre|period', got {text!r}")
        pre, _, per = text.partition("|")
        return cls(pre, per)

    @property
    def head(self) -> str:
        return (self.preperiod + self.period)[0]

    def prefix(self, n: int) -> str:
        """The first ``n`` letters."""
        tail_len = n - len(self.preperiod)
        if tail_len <= 0:
            return self.preperiod[:n]
        reps = tail_len // len(self.period) + 1
        return self.preperiod + (self.period * reps)[:tail_len]

    def __lt__(self, other: "PeriodicSequence") -> bool:
        return compare(self, other) == LESS

    def __le__(self, other: "PeriodicSequence") -> bool:
        return compare(self, other) != GREATER

    def __gt__(self, other: "PeriodicSequence") -> bool:
        return compare(self, other) == GREATER

    def __ge__(self, other: "PeriodicSequence") -> bool:
        return compare(self, other) != LESS


def compare(s: PeriodicSequence, t: PeriodicSequence) -> int:
    """Lexicographic comparison (a < b); returns -1, 0 or 1.

    Two eventually periodic sequences that agree on
    ``|preperiods| + |period(s)| + |period(t)|`` letters agree everywhere
    (from that point both tails are periodic and the agreement exceeds the
    Fine-Wilf bound), so EQUAL is only returned for identical sequences.
    """
    horizon = len(s.preperiod) + len(t.preperiod) + len(s.period) + len(t.period)
    a, b = s.prefix(horizon), t.prefix(horizon)
    if a < b:
        return LESS
    if a > b:
        return GREATER
    return EQUAL


def shift(s: PeriodicSequence) -> PeriodicSequence:
    """Drop the first letter (the shift map on sequences)."""
    if s.preperiod:
        return PeriodicSequence(s.preperiod[1:], s.period)
    return PeriodicSequence("", s.period[1:] + s.period[0])


def all_shifts(w: CyclicWord) -> list[PeriodicSequence]:
    """The ``len(w)`` distinct shifts of ``w^inf``, in phase order.

    Primitivity guarantees they are pairwise distinct.
    """
    return [PeriodicSequence("", w.rotation(k)) for k in range(len(w))]


def letter_counts(w: CyclicWord) -> tuple[int, int]:
    """Occurrences of (a, b) in one period of the primitive word."""
    return w.letter_counts()
