"""Exact linking numbers of template orbits after surgery on the 3-Hopf link.

The surgered manifold has first homology of order delta = pqr - pq - qr - pr.
Linking numbers there are rationals with denominator dividing delta, computed
from crossing data in the 3-sphere plus a correction by the bilinear form of
the surgery (matrix Q' on linking vectors with the three Hopf components, or
its 2-variable reduction Q on letter counts for template orbits).

All arithmetic is exact: integers and ``fractions.Fraction``, never floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from .crossing import crossing_number, self_crossing
from .kneading import Triple
from .words import CyclicWord

# Exact rational type used throughout; denominators always divide delta.
Rational = Fraction

# Linking numbers of a link with the three Hopf components, as integers.
HopfLinkingVector = tuple[int, int, int]


def delta(t: Triple) -> int:
    """Order of the first homology group: pqr - pq - qr - pr (>= 1)."""
    return t.delta


def q_form(t: Triple, uv: tuple[int, int], uv2: tuple[int, int]) -> int:
    """The reduced surgery form Q((u,v),(u',v')) on letter-count pairs."""
    p, q, r = t.p, t.q, t.r
    u, v = uv
    u2, v2 = uv2
    return (q * r - q - r) * u * u2 - r * u * v2 - r * v * u2 + (p * r - p - r) * v * v2


def qprime_matrix(t: Triple) -> list[list[int]]:
    """Matrix of the surgery form Q' on Hopf linking vectors (symmetric)."""
    p, q, r = t.p, t.q, t.r
    return [
        [q * r - q - r, r, q],
        [r, p * r - p - r, p],
        [q, p, p * q - p - q],
    ]


def qprime_form(t: Triple, x: HopfLinkingVector, y: HopfLinkingVector) -> int:
    """Evaluate x^T M y for the matrix M of :func:`qprime_matrix`."""
    m = qprime_matrix(t)
    return sum(x[i] * m[i][j] * y[j] for i in range(3) for j in range(3))


def surgery_linking(
    t: Triple, lk_s3: Rational | int, x: HopfLinkingVector, y: HopfLinkingVector
) -> Rational:
    """Linking number after surgery: lk_s3 + Q'(x, y) / delta, exactly.

    ``x`` and ``y`` are the linking vectors of the two links with the Hopf
    components before surgery.
    """
    return Fraction(lk_s3) + Fraction(qprime_form(t, x, y), delta(t))


def template_linking(t: Triple, w: CyclicWord, w2: CyclicWord) -> Rational:
    """Exact linking number of two template orbits: -cr/2 + Q(counts, counts')/delta.

    All template crossings are negative, and an orbit with letter counts
    (na, nb) links the Hopf components by (-na, nb, 0); both facts are folded
    into this reduced formula.  For w == w2 the translated-copy self-crossing
    convention applies.  The words need not be admissible: the formula
    evaluates any pair of formal Lorenz orbits, and only admissible pairs
    are guaranteed to link negatively.
    """
    cr = self_crossing(w) if w == w2 else crossing_number(w, w2)
    return Fraction(-cr, 2) + Fraction(
        q_form(t, w.letter_counts(), w2.letter_counts()), delta(t)
    )


def fiber_linking(t: Triple) -> Rational:
    """Linking number of two generic fibers: -1/chi = pqr / delta."""
    return Fraction(t.p * t.q * t.r, delta(t))


def homology_order(cone_orders: list[int] | tuple[int, ...]) -> int:
    """Order of H_1 of the unit tangent bundle of an n-conic sphere, n >= 3.

    Equals |(n-2) * prod(p_i) - sum_i prod_{j != i} p_j|; for a hyperbolic
    3-conic sphere this is delta.
    """
    n = len(cone_orders)
    if n < 3:
        raise ValueError(f"need at least 3 cone orders, got {n}")
    if any(p < 2 for p in cone_orders):
        raise ValueError("cone orders must be >= 2")
    total = prod(cone_orders)
    return abs((n - 2) * total - sum(total // p for p in cone_orders))
