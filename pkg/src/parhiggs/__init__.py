"""Exact local invariant theory of parabolic Higgs germs.

Truncated Laurent series over Q, split realizations of the classical
algebras and g2, parabolic subalgebras, the local Hitchin map, and exact
verification of its image description (valuation boxes for good
parabolics, Newton polygons with square conditions in type D).
"""

from .algebras import build_algebra, build_parabolic, sample_pperp
from .degrees import (
    BadParabolicError,
    dimension_audit,
    fundamental_degrees,
    is_good_parabolic,
    levi_degrees,
    predicted_image,
)
from .hitchin import ChiImage, chi, trace_power_check, verify_inclusion, witness_search
from .linalg import SeriesMatrix, StructureError
from .series import PrecisionError, TruncatedLaurentSeries
from .typedd import (
    JordanType,
    NewtonPolygon,
    codim_report,
    component_analysis,
    d_membership,
    richardson_jordan_type,
)

__all__ = [
    "BadParabolicError",
    "ChiImage",
    "JordanType",
    "NewtonPolygon",
    "PrecisionError",
    "SeriesMatrix",
    "StructureError",
    "TruncatedLaurentSeries",
    "build_algebra",
    "build_parabolic",
    "chi",
    "codim_report",
    "component_analysis",
    "d_membership",
    "dimension_audit",
    "fundamental_degrees",
    "is_good_parabolic",
    "levi_degrees",
    "predicted_image",
    "richardson_jordan_type",
    "sample_pperp",
    "trace_power_check",
    "verify_inclusion",
    "witness_search",
]

__version__ = "0.1.0"
