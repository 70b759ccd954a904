"""Shortest vectors of lattices of Voronoi's first kind via minimum cuts.

Rational values are returned as :class:`fractions.Fraction`. Inputs accept
ints, Fractions, or strings such as ``"-1/2"`` and ``"0.25"``.
"""

from ._core import (
    Candidate,
    GramMatrix,
    ShortVectorResult,
    Superbase,
    VfkError,
    candidate_vectors,
    dumps,
    generate,
    loads,
    min_cut,
    quadratic_form,
    run_cli,
    short_vector,
    verify_reduction,
)

__all__ = [
    "Candidate",
    "GramMatrix",
    "ShortVectorResult",
    "Superbase",
    "VfkError",
    "candidate_vectors",
    "dumps",
    "generate",
    "loads",
    "min_cut",
    "quadratic_form",
    "run_cli",
    "short_vector",
    "verify_reduction",
]

__version__ = "0.1.0"
