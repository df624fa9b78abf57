"""Genus classification of closed orientable triangulated surfaces using
normal curves, polygon unfoldings and cut-and-cap surgery."""

from .classify import ClassificationResult, decompose, genus, is_prime
from .complex import Side, Triangulation, parse_tri, read_tri, validate, write_tri
from .curveword import CurveWord, complexity, is_normal, normalize
from .errors import InvariantViolation, ParseError, SurfaceError, ValidationError
from .kernels import BACKEND
from .normal import coordinates_of, enumerate_admissible, is_admissible, matching_system, trace

__all__ = [
    "BACKEND",
    "ClassificationResult",
    "CurveWord",
    "InvariantViolation",
    "ParseError",
    "Side",
    "SurfaceError",
    "Triangulation",
    "ValidationError",
    "complexity",
    "coordinates_of",
    "decompose",
    "enumerate_admissible",
    "genus",
    "is_admissible",
    "is_normal",
    "is_prime",
    "matching_system",
    "normalize",
    "parse_tri",
    "read_tri",
    "trace",
    "validate",
    "write_tri",
]
