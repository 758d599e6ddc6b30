"""Exact computer algebra for Hopf Galois extensions and coextensions and the
cyclic (co)homology of their stable anti-Yetter-Drinfeld modules."""

__version__ = "0.1.0"

from .errors import (HopfCycError, NotAGroup, NotCoideal, NotGalois, NotSubalgebra,
                     NotWellDefined, ParseError, SingularMatrix, UnsupportedCommand,
                     ValidationError)
from .exact_linalg import Mat, QuotientData, Subspace
from .hopf_core import AlgebraData, CoalgebraData, HopfData
from .report import Check, Report

__all__ = [
    "__version__", "Mat", "Subspace", "QuotientData", "AlgebraData", "CoalgebraData",
    "HopfData", "Check", "Report", "HopfCycError", "SingularMatrix", "NotWellDefined",
    "NotAGroup", "NotGalois", "NotCoideal", "NotSubalgebra", "ParseError",
    "ValidationError", "UnsupportedCommand",
]
