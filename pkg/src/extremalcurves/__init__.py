"""Numerical invariants of extremal curves in projective space.

Exact intersection theory on the Picard lattices of Hirzebruch surfaces
and rational normal scrolls, the maximal-genus bound, classification and
construction of curves that attain it, and interval bookkeeping for
their gonality sequences with slope-inequality verdicts.
"""

from .castelnuovo import CurveProfile, brill_noether, low_degree_verdict, profile
from .errors import (
    ContradictionError,
    DomainError,
    EmbeddingError,
    InvalidInput,
    PlaneCurveContraction,
    UnsupportedInput,
)
from .extremal import (
    EmbedResult,
    ExtremalModel,
    ModelKind,
    classify_extremal,
    embed_extremal,
    gonality_from_class,
    verify_extremal_class,
)
from .gonality import (
    GonalityEntry,
    GonalityLedger,
    VerylastRow,
    apply_extremal_facts,
    baseline_ledger,
    known_family_verdict,
    plane_curve_gonality,
    plane_slope_verdict,
    slope_verdict,
    verylast_sequence,
    with_assumptions,
)
from .lattice import (
    DivisorClass,
    ScrollEmbedding,
    adjunction_genus,
    canonical_class,
    class_in_HL,
    formal_genus,
    h0_unisecant,
    intersect,
    intersect_on_scroll,
    is_irreducible_smoothable,
    is_very_ample,
    scroll_canonical_class,
    scroll_from_rn,
)
from .selfcheck import run_selfcheck
from .tables import (
    SCAN_FIELDS,
    STAR,
    STAR_RESOLVED,
    TABLE_FIELDS,
    TableRow,
    expected_status,
    row_models,
    scan,
    serialize,
    table1,
)
from .verdicts import SlopeVerdict, Status

__version__ = "0.1.0"

__all__ = [
    "ContradictionError",
    "CurveProfile",
    "DivisorClass",
    "DomainError",
    "EmbedResult",
    "EmbeddingError",
    "ExtremalModel",
    "GonalityEntry",
    "GonalityLedger",
    "InvalidInput",
    "ModelKind",
    "PlaneCurveContraction",
    "SCAN_FIELDS",
    "STAR",
    "STAR_RESOLVED",
    "ScrollEmbedding",
    "SlopeVerdict",
    "Status",
    "TABLE_FIELDS",
    "TableRow",
    "UnsupportedInput",
    "VerylastRow",
    "adjunction_genus",
    "apply_extremal_facts",
    "baseline_ledger",
    "brill_noether",
    "canonical_class",
    "class_in_HL",
    "classify_extremal",
    "embed_extremal",
    "expected_status",
    "formal_genus",
    "gonality_from_class",
    "h0_unisecant",
    "intersect",
    "intersect_on_scroll",
    "is_irreducible_smoothable",
    "is_very_ample",
    "known_family_verdict",
    "low_degree_verdict",
    "plane_curve_gonality",
    "plane_slope_verdict",
    "profile",
    "row_models",
    "run_selfcheck",
    "scan",
    "scroll_canonical_class",
    "scroll_from_rn",
    "serialize",
    "slope_verdict",
    "table1",
    "verify_extremal_class",
    "verylast_sequence",
    "with_assumptions",
]
