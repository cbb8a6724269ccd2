"""Exact computer algebra for Segre varieties, finite type and formal CR maps."""
__version__ = "0.1.0"

from .core import GaussRat, Poly, VarTable, conj_involution, degrevlex, gauss, lex
from .errors import CRLabError, InvariantError, ParseError, ResourceLimitError, UsageError
from .groebner import Ideal, buchberger, eliminate, krull_dim, local_colength, preimage_under_map, radical_member
from .parser import parse_poly

__all__ = [
    "GaussRat", "Poly", "VarTable", "conj_involution", "degrevlex", "gauss", "lex",
    "CRLabError", "InvariantError", "ParseError", "ResourceLimitError", "UsageError",
    "Ideal", "buchberger", "eliminate", "krull_dim", "local_colength", "preimage_under_map",
    "radical_member", "parse_poly",
]
