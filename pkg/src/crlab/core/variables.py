"""Variable tables: ordered names split into Z, zeta and auxiliary blocks."""
from __future__ import annotations

import dataclasses
import functools
import re

from ..errors import InvariantError, UsageError

Z, ZETA, AUX = "Z", "zeta", "aux"

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def partner_name(name):
    """Name of the zeta-partner of the holomorphic variable ``name``."""
    return "~" + name


@dataclasses.dataclass(frozen=True)
class VarTable:
    """Ordered variable names with a block tag and an optional partner per slot.

    The zeta-partner of ``z`` is always called ``~z``.  A table may consist of
    a Z-block alone (a purely holomorphic ring).  As soon as a zeta-block is
    present the pairing must be a bijection between the two blocks.  Auxiliary
    variables are never paired.
    """

    names: tuple
    blocks: tuple
    pairing: tuple

    def __post_init__(self):
        n = len(self.names)
        if len(self.blocks) != n or len(self.pairing) != n:
            raise InvariantError("var-table", "names, blocks and pairing differ in length")
        if len(set(self.names)) != n:
            raise InvariantError("var-table", f"duplicate variable names in {self.names}")
        has_zeta = ZETA in self.blocks
        for i, (name, block, partner) in enumerate(zip(self.names, self.blocks, self.pairing)):
            if block not in (Z, ZETA, AUX):
                raise InvariantError("var-table", f"unknown block {block!r}")
            if block == AUX:
                if partner is not None:
                    raise InvariantError("var-table", f"auxiliary variable {name} is paired")
                continue
            if partner is None:
                if has_zeta or block == ZETA:
                    raise InvariantError("var-table", f"variable {name} has no partner")
                continue
            other = self.blocks[partner]
            if {block, other} != {Z, ZETA} or self.pairing[partner] != i:
                raise InvariantError("var-table", f"pairing of {name} is not a Z/zeta bijection")

    # -- constructors -----------------------------------------------------
    @classmethod
    def holomorphic(cls, names):
        names = tuple(names)
        _check_identifiers(names)
        return cls(names, (Z,) * len(names), (None,) * len(names))

    @classmethod
    def complexified(cls, names):
        """Table ``(Z_1..Z_N, ~Z_1..~Z_N)`` for the holomorphic names given."""
        names = tuple(names)
        _check_identifiers(names)
        n = len(names)
        full = names + tuple(partner_name(x) for x in names)
        pairing = tuple(range(n, 2 * n)) + tuple(range(n))
        return cls(full, (Z,) * n + (ZETA,) * n, pairing)

    def with_aux(self, names, *, front=False):
        """A new table with auxiliary variables appended (or prepended)."""
        names = tuple(names)
        if not front:
            return VarTable(self.names + names, self.blocks + (AUX,) * len(names), self.pairing + (None,) * len(names))
        k = len(names)
        pairing = tuple(None if p is None else p + k for p in self.pairing)
        return VarTable(names + self.names, (AUX,) * k + self.blocks, (None,) * k + pairing)

    def fresh_names(self, stems):
        """Names derived from ``stems`` that do not clash with this table."""
        taken = set(self.names)
        out = []
        for stem in stems:
            candidate = stem
            k = 0
            while candidate in taken:
                k += 1
                candidate = f"{stem}_{k}"
            taken.add(candidate)
            out.append(candidate)
        return tuple(out)

    # -- queries ----------------------------------------------------------
    def __len__(self):
        return len(self.names)

    @functools.cached_property
    def _positions(self):
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name):
        try:
            return self._positions[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r}; table has {', '.join(self.names)}") from None

    def __contains__(self, name):
        return name in self._positions

    def block_indices(self, block):
        return tuple(i for i, b in enumerate(self.blocks) if b == block)

    @property
    def z_indices(self):
        return self.block_indices(Z)

    @property
    def zeta_indices(self):
        return self.block_indices(ZETA)

    @property
    def aux_indices(self):
        return self.block_indices(AUX)

    @property
    def z_names(self):
        return tuple(self.names[i] for i in self.z_indices)

    def has_complete_pairing(self):
        return ZETA in self.blocks and all(
            p is not None for p, b in zip(self.pairing, self.blocks) if b != AUX
        )

    def holomorphic_part(self):
        """Z-only table with the same Z names."""
        return VarTable.holomorphic(self.z_names)


def _check_identifiers(names):
    for name in names:
        if not isinstance(name, str) or not _IDENT.match(name):
            raise UsageError(f"invalid variable name {name!r}")
        if name == "i":
            raise UsageError("'i' is reserved for the imaginary unit")
