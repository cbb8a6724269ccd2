"""Exact coefficient arithmetic, variable tables, monomial orders and polynomials."""
from .linalg import IncrementalBasis, rank, row_echelon
from .numbers import I, ONE, ZERO, GaussRat, gauss
from .orders import BlockOrder, DegRevLex, Lex, MonomialOrder, degrevlex, lex, order_from_name
from .poly import Poly, adjugate, conj_involution, det
from .variables import AUX, Z, ZETA, VarTable, partner_name

__all__ = [
    "AUX", "Z", "ZETA", "I", "ONE", "ZERO",
    "BlockOrder", "DegRevLex", "GaussRat", "IncrementalBasis", "Lex", "MonomialOrder",
    "Poly", "VarTable",
    "adjugate", "conj_involution", "degrevlex", "det", "gauss", "lex",
    "order_from_name", "partner_name", "rank", "row_echelon",
]
