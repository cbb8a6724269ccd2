"""Monomial (term) orders.

Monomials are plain tuples of non-negative exponents.  An order is a frozen
object whose :meth:`key` maps a monomial to a sortable value; the larger key
is the larger monomial.
"""
from __future__ import annotations

import dataclasses
from operator import neg

from ..errors import UsageError


class MonomialOrder:
    name = "abstract"

    def key(self, mon):
        raise NotImplementedError

    def leading(self, monomials):
        return max(monomials, key=self.key)

    def sort_desc(self, monomials):
        return sorted(monomials, key=self.key, reverse=True)


@dataclasses.dataclass(frozen=True)
class Lex(MonomialOrder):
    name = "lex"

    def key(self, mon):
        return mon

    def __str__(self):
        return "lex"


@dataclasses.dataclass(frozen=True)
class DegRevLex(MonomialOrder):
    name = "degrevlex"

    def key(self, mon):
        return (sum(mon), tuple(map(neg, reversed(mon))))

    def __str__(self):
        return "degrevlex"


@dataclasses.dataclass(frozen=True)
class BlockOrder(MonomialOrder):
    """Elimination order: variables in ``first_block`` dominate the rest.

    ``first`` orders the sub-monomial on ``first_block``; ``second`` breaks ties
    on the remaining variables (taken in table order).
    """

    first_block: tuple
    nvars: int
    first: MonomialOrder = DegRevLex()
    second: MonomialOrder = DegRevLex()
    name = "block"

    def __post_init__(self):
        block = tuple(sorted(set(self.first_block)))
        if any(i < 0 or i >= self.nvars for i in block):
            raise UsageError(f"block indices {self.first_block} out of range for {self.nvars} variables")
        object.__setattr__(self, "first_block", block)
        object.__setattr__(self, "_rest", tuple(i for i in range(self.nvars) if i not in block))

    def key(self, mon):
        return (
            self.first.key(tuple(mon[i] for i in self.first_block)),
            self.second.key(tuple(mon[i] for i in self._rest)),
        )

    def __str__(self):
        return f"block({list(self.first_block)}; {self.first}, {self.second})"


lex = Lex()
degrevlex = DegRevLex()


def order_from_name(name):
    try:
        return {"lex": lex, "degrevlex": degrevlex}[name]
    except KeyError:
        raise UsageError(f"unknown monomial order {name!r} (expected lex or degrevlex)") from None
