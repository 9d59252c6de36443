"""Exact computations in graph products, wreath products and their truncations."""
from .exceptions import (FactorizationError, InvalidAutomorphismError, InvalidSpecError, ParseError,
                         SpecMismatchError, UnknownVertexError, WreathKitError)
from .graphprod import GPContext, canonicalize, cyclic_reduce, gp_inv, gp_mul, is_conjugate
from .groupring import Laurent, brute_inverse, is_trivial_unit, unit_invert
from .groups import Cyclic, FiniteTable, FreeAbelian, FreeProductOfCyclics, spec_from_json
from .sgraph import LazyCayley, SimpGraph
from .trunc import FinitePresentation, Truncation, factor_through_truncation
from .wreath import WreathElem, WreathProduct

__version__ = "0.1.0"

__all__ = [
    "Cyclic", "FiniteTable", "FreeAbelian", "FreeProductOfCyclics", "spec_from_json",
    "SimpGraph", "LazyCayley", "GPContext", "canonicalize", "gp_mul", "gp_inv", "cyclic_reduce",
    "is_conjugate", "WreathProduct", "WreathElem", "Truncation", "FinitePresentation",
    "factor_through_truncation", "Laurent", "unit_invert", "brute_inverse", "is_trivial_unit",
    "WreathKitError", "InvalidSpecError", "SpecMismatchError", "UnknownVertexError", "ParseError",
    "FactorizationError", "InvalidAutomorphismError",
]
