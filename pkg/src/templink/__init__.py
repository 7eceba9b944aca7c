"""Exact crossing and linking numbers for orbits of two-ribbon flow templates.

The geodesic flow on a hyperbolic sphere with three cone points of orders
(p, q, r) is carried by a two-ribbon template inside a surgered homology
sphere.  This package computes, in exact arithmetic, crossing numbers and
linking numbers of the template's periodic orbits, enumerates admissible and
extremal orbits from kneading data, and verifies exhaustively that all orbit
pairs link negatively at desk scale.
"""

from .census import (
    ExtremalFamily,
    IdentityReport,
    PairReport,
    RangeSummary,
    TripleSummary,
    check_identities,
    enumerate_admissible,
    extremal_families,
    extremal_orbits,
    extremality_crosscheck,
    has_admissible_cut,
    reports_to_csv,
    verify_pairs,
    verify_range,
    verify_triple,
)
from .crossing import Cut, crossing_number, enumerate_cuts, is_admissible_cut, self_crossing, word_crossing
from .kneading import (
    KneadingData,
    TemplateDomainError,
    Triple,
    is_admissible,
    kneading,
    kneading_unbounded,
    lorenz_kneading,
    max_block_constraints,
)
from .linking import (
    HopfLinkingVector,
    Rational,
    delta,
    fiber_linking,
    homology_order,
    q_form,
    qprime_form,
    qprime_matrix,
    surgery_linking,
    template_linking,
)
from .words import (
    CyclicWord,
    PeriodicSequence,
    all_shifts,
    canonicalize,
    compare,
    letter_counts,
    shift,
)

__version__ = "0.1.0"

__all__ = [
    "CyclicWord",
    "Cut",
    "ExtremalFamily",
    "HopfLinkingVector",
    "IdentityReport",
    "KneadingData",
    "PairReport",
    "PeriodicSequence",
    "RangeSummary",
    "Rational",
    "TemplateDomainError",
    "Triple",
    "TripleSummary",
    "all_shifts",
    "canonicalize",
    "check_identities",
    "compare",
    "crossing_number",
    "delta",
    "enumerate_admissible",
    "enumerate_cuts",
    "extremal_families",
    "extremal_orbits",
    "extremality_crosscheck",
    "fiber_linking",
    "has_admissible_cut",
    "homology_order",
    "is_admissible",
    "is_admissible_cut",
    "kneading",
    "kneading_unbounded",
    "letter_counts",
    "lorenz_kneading",
    "max_block_constraints",
    "q_form",
    "qprime_form",
    "qprime_matrix",
    "reports_to_csv",
    "self_crossing",
    "shift",
    "surgery_linking",
    "template_linking",
    "verify_pairs",
    "verify_range",
    "verify_triple",
    "word_crossing",
]
