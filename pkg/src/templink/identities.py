"""Closed-form linking identities used as pipeline cross-checks.

Each catalog entry produces instances ``(label, word1, word2, closed_form)``
for a given parameter triple, the value being delta * lk of the two orbit
words; the checker in :mod:`templink.census` re-derives it through the exact
crossing-plus-form pipeline and records agreement.

Some quantities are recorded in two circulating variants that differ by sign
or coefficient slips; both are kept and the checker reports, never assumes,
which variant the exact pipeline confirms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .kneading import Triple

# Instance of one identity: label, the two words, the closed-form value.
Instance = tuple[str, str, str, Fraction]


@dataclass(frozen=True)
class Identity:
    name: str
    instances: Callable[[Triple], Iterator[Instance]]


def _syl(i: int, j: int) -> str:
    return "a" * i + "b" * j


def _p_block(t: Triple) -> str:
    return "a" * (t.p - 1) + "b"


def _q_block(t: Triple) -> str:
    return "a" + "b" * (t.q - 1)


def _scalar(t: Triple) -> Iterator[Instance]:
    p, q = t.p, t.q
    w1 = _p_block(t)
    for i in range(1, p):
        for j in range(1, q):
            yield f"i={i},j={j}", w1, _syl(i, j), Fraction(q * i - p * j)


def _nested_range(t: Triple):
    p, q = t.p, t.q
    for i in range(1, p):
        for i2 in range(i + 1, p):
            for j in range(1, q):
                for j2 in range(j + 1, q):
                    yield i, j, i2, j2


def _nested_bilinear(t: Triple) -> Iterator[Instance]:
    p, q, r = t.p, t.q, t.r
    for i, j, i2, j2 in _nested_range(t):
        val = -(i * (q * r - q - r) - j * r) * (p - i2) - (
            j * (p * r - p - r) - i * r
        ) * (q - j2)
        yield f"i={i},j={j},i'={i2},j'={j2}", _syl(i, j), _syl(i2, j2), Fraction(val)


def _nested_bilinear_alt(t: Triple) -> Iterator[Instance]:
    # variant with a q where the exact form has a p in the second factor
    p, q, r = t.p, t.q, t.r
    for i, j, i2, j2 in _nested_range(t):
        first = -Fraction(i * q * r) * (
            1 - Fraction(1, q) - Fraction(1, r) - Fraction(j, i * q)
        ) * (p - i2)
        second = -Fraction(j * p * r) * (
            1 - Fraction(1, p) - Fraction(1, r) - Fraction(i, j * q)
        ) * (q - j2)
        yield f"i={i},j={j},i'={i2},j'={j2}", _syl(i, j), _syl(i2, j2), first + second


def _straddling_bilinear(t: Triple) -> Iterator[Instance]:
    p, q, r = t.p, t.q, t.r
    d = t.delta
    for i in range(1, p):
        for i2 in range(i, p):
            for j in range(1, q):
                for j2 in range(1, j + 1):
                    val = (
                        -((q * r - q - r) * i - r * j2) * (p - i2)
                        - ((p * r - p - r) * j2 - r * i) * (q - j)
                        - r * (i2 - i) * (j - j2)
                        + d
                    )
                    yield (
                        f"i={i},j={j},i'={i2},j'={j2}",
                        _syl(i, j),
                        _syl(i2, j2),
                        Fraction(val),
                    )


def _corner(name, point, expanded, factored, applicable):
    """Two identities (expanded and factored polynomial) for one corner point."""

    def make(formula):
        def gen(t: Triple) -> Iterator[Instance]:
            if not applicable(t):
                return
            i, j, i2, j2 = point(t)
            yield f"i={i},j={j},i'={i2},j'={j2}", _syl(i, j), _syl(i2, j2), Fraction(
                formula(t)
            )

        return gen

    return [
        Identity(f"{name}_expanded", make(expanded)),
        Identity(f"{name}_factored", make(factored)),
    ]


def _mixed_pair(t: Triple) -> Iterator[Instance]:
    if t.p < 3:
        return
    p, q, r = t.p, t.q, t.r
    d = t.delta
    kmax = (r - 2) // 2
    P, Q = _p_block(t), _q_block(t)
    for k in range(1, kmax + 1):
        for l in range(1, kmax + 1):
            for k2 in range(1, kmax + 1):
                for l2 in range(1, kmax + 1):
                    val = (p * q - p - q) * (k - l) * (k2 - l2) - d * (
                        min(k, k2) + min(l, l2) - 1
                    )
                    yield (
                        f"k={k},l={l},k'={k2},l'={l2}",
                        P * k + Q * l,
                        P * k2 + Q * l2,
                        Fraction(val),
                    )


CATALOG: list[Identity] = [
    Identity("scalar_qi_minus_pj", _scalar),
    Identity("nested_bilinear", _nested_bilinear),
    Identity("nested_bilinear_alt", _nested_bilinear_alt),
    Identity("straddling_bilinear", _straddling_bilinear),
    *_corner(
        "diag_1_1",
        lambda t: (1, 1, 1, 1),
        lambda t: -t.p * t.q * t.r
        + t.p * t.q
        + 2 * t.p * t.r
        + 2 * t.q * t.r
        - t.p
        - t.q
        - 4 * t.r,
        lambda t: -(t.p - 2) * (t.q - 2) * (t.r - 2) - (t.p - 3) * (t.q - 3) + 1,
        lambda t: True,
    ),
    *_corner(
        "diag_p2_1",
        lambda t: (t.p - 2, 1, t.p - 2, 1),
        lambda t: -t.p * t.q * t.r
        + 2 * t.p * t.q
        + t.p * t.r
        + 2 * t.q * t.r
        - t.p
        - 4 * t.q
        - t.r,
        lambda t: -(t.p - 2) * (t.q - 2) * (t.r - 2) - (t.p - 3) * (t.r - 3) + 1,
        lambda t: t.p >= 3,
    ),
    *_corner(
        "p2_q1_vs_p2_1",
        lambda t: (t.p - 2, t.q - 1, t.p - 2, 1),
        lambda t: -t.p * t.q * t.r
        + t.p * t.q
        + t.p * t.r
        + 3 * t.q * t.r
        + t.p
        - 4 * t.q
        - t.r,
        lambda t: -(t.p - 3) * (t.q - 1) * (t.r - 2) - (t.p - 2) * (t.q - 3),
        lambda t: t.p >= 3,
    ),
    *_corner(
        "two_q1_vs_two_1",
        lambda t: (2, t.q - 1, 2, 1),
        lambda t: -t.p * t.q * t.r
        + t.p * t.q
        + t.p * t.r
        + 3 * t.q * t.r
        + t.p
        - 4 * t.q
        - t.r,
        lambda t: -(t.p - 3) * (t.q - 1) * (t.r - 2) - (t.p - 2) * (t.q - 3),
        lambda t: t.p >= 3,
    ),
    *_corner(
        "one_q1_vs_one_1",
        lambda t: (1, t.q - 1, 1, 1),
        lambda t: t.p * t.r + 2 * t.p - t.q + 2 * t.r,
        lambda t: -(t.p - 2) * (t.r - 2) - t.q + 4,
        lambda t: True,
    ),
    *_corner(
        "one_q2_vs_p2_1",
        lambda t: (1, t.q - 2, t.p - 2, 1),
        lambda t: -t.p * t.q + 2 * t.p + 2 * t.q - t.r,
        lambda t: -(t.p - 2) * (t.q - 2) - t.r + 4,
        lambda t: t.p >= 3 and t.q >= 3,
    ),
    *_corner(
        "two_q1_vs_p2_1",
        lambda t: (2, t.q - 1, t.p - 2, 1),
        lambda t: -t.p * t.q - t.q * t.r + t.p + 4 * t.q + t.r,
        lambda t: -(t.q - 1) * (t.p + t.r - 4) + 4,
        lambda t: t.p >= 4,
    ),
    Identity("mixed_pair_closed_form", _mixed_pair),
]
