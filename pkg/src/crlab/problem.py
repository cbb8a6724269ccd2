"""Sectioned problem files.

Example::

    # Re w = |z|^4 mapped onto the Heisenberg hypersurface
    [source]
    vars = z, w
    defining = w + ~w - 2*z^2*~z^2

    [target]
    vars = zt, wt
    defining = wt + ~wt - 2*zt*~zt

    [map]
    component = z^2
    component = w

    [options]
    bracket_cap = 8
    colength_cap = 8
    jet_cap = 8
    order = degrevlex

``defining`` may be repeated or hold several polynomials separated by ``;``.
``component`` lines are given in the order of the target variables and are
written in the source variables.  A missing ``[target]`` means the source is
its own target; a missing ``[map]`` means the identity.
"""
from __future__ import annotations

import dataclasses
import hashlib
import re

from .core.numbers import gauss
from .core.orders import order_from_name
from .core.poly import Poly
from .core.variables import VarTable
from .errors import InvariantError, ParseError, UsageError
from .maps import Caps, FormalMapJet
from .parser import parse_poly, parse_poly_list
from .varieties import GenericSubmanifold, RealVariety

SECTIONS = ("source", "target", "map", "options")
_KEYS = {
    "source": {"vars", "defining", "label", "dim", "segre_irreducible"},
    "target": {"vars", "defining", "label", "dim", "segre_irreducible"},
    "map": {"component", "degree_cap"},
    "options": {"bracket_cap", "colength_cap", "jet_cap", "order", "point"},
}
_HEADER = re.compile(r"\[\s*([A-Za-z_]+)\s*\]\Z")


@dataclasses.dataclass(frozen=True)
class Options:
    bracket_cap: int = 8
    colength_cap: int = 8
    jet_cap: int = 8
    order: str = "degrevlex"
    point: tuple | None = None

    @property
    def caps(self):
        return Caps(self.bracket_cap, self.colength_cap, self.jet_cap)

    @property
    def monomial_order(self):
        return order_from_name(self.order)


@dataclasses.dataclass(frozen=True)
class ProblemFile:
    source: GenericSubmanifold
    target: RealVariety | None = None
    map: FormalMapJet | None = None
    options: Options = Options()

    @property
    def effective_target(self):
        return self.target if self.target is not None else self.source

    @property
    def effective_map(self):
        return self.map if self.map is not None else FormalMapJet.identity(self.source.z_table)

    def to_text(self):
        """Canonical serialization; parsing it back gives an equal problem."""
        lines = []
        lines += _variety_lines("source", self.source)
        if self.target is not None:
            lines.append("")
            lines += _variety_lines("target", self.target)
        if self.map is not None:
            lines += ["", "[map]"]
            lines += [f"component = {c}" for c in self.map.components]
            lines.append(f"degree_cap = {self.map.degree_cap}")
        o = self.options
        lines += ["", "[options]",
                  f"bracket_cap = {o.bracket_cap}",
                  f"colength_cap = {o.colength_cap}",
                  f"jet_cap = {o.jet_cap}",
                  f"order = {o.order}"]
        if o.point is not None:
            lines.append("point = " + ", ".join(_point_text(c) for c in o.point))
        return "\n".join(lines) + "\n"

    def digest(self):
        return hashlib.sha256(self.to_text().encode()).hexdigest()

    def same_as(self, other):
        """Structural equality (used for round-trip checks)."""
        return self.to_text() == other.to_text()


def _point_text(c):
    return str(Poly.constant(VarTable.holomorphic(["_p"]), gauss(c)))


def _variety_lines(section, X):
    lines = [f"[{section}]", "vars = " + ", ".join(X.z_table.names)]
    lines += [f"defining = {s}" for s in X.sigma]
    if X.label is not None:
        lines.append(f"label = {X.label}")
    if X.dim_hint is not None:
        lines.append(f"dim = {X.dim_hint}")
    if X.segre_irreducible is not None:
        lines.append(f"segre_irreducible = {'true' if X.segre_irreducible else 'false'}")
    return lines


def _entries(text):
    """Yield ``(section, key, value, line, value_column)``."""
    section = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        header = _HEADER.match(stripped)
        if header:
            section = header.group(1).lower()
            if section not in SECTIONS:
                raise ParseError(f"unknown section [{section}]", lineno, raw.index("[") + 1)
            if section in seen:
                raise ParseError(f"duplicate section [{section}]", lineno, raw.index("[") + 1)
            seen.add(section)
            continue
        if section is None:
            raise ParseError("entry outside of any section", lineno, 1)
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno, len(line) - len(line.lstrip()) + 1)
        key_part, value = line.split("=", 1)
        key = key_part.strip()
        if key not in _KEYS[section]:
            raise ParseError(f"unknown key {key!r} in [{section}]", lineno, len(key_part) - len(key_part.lstrip()) + 1)
        column = len(key_part) + 2 + (len(value) - len(value.lstrip()))
        yield section, key, value.strip(), lineno, column


def _int(value, line, column, key):
    try:
        out = int(value)
    except ValueError:
        raise ParseError(f"{key} must be an integer", line, column) from None
    if out < 1:
        raise ParseError(f"{key} must be positive", line, column)
    return out


def _bool(value, line, column, key):
    if value.lower() in ("true", "yes", "1"):
        return True
    if value.lower() in ("false", "no", "0"):
        return False
    raise ParseError(f"{key} must be true or false", line, column)


def parse_problem(text):
    """Parse a problem file and validate every domain invariant."""
    raw = {s: {} for s in SECTIONS}
    present = set()
    for section, key, value, line, column in _entries(text):
        present.add(section)
        slot = raw[section]
        if key in ("defining", "component"):
            slot.setdefault(key, []).append((value, line, column))
        else:
            if key in slot:
                raise ParseError(f"duplicate key {key!r} in [{section}]", line, 1)
            slot[key] = (value, line, column)
    if "source" not in present:
        raise ParseError("missing [source] section")

    source = _variety(raw["source"], "source", GenericSubmanifold)
    target = _variety(raw["target"], "target", RealVariety) if "target" in present else None

    options = Options()
    opts = raw["options"]
    kw = {}
    for key in ("bracket_cap", "colength_cap", "jet_cap"):
        if key in opts:
            kw[key] = _int(*opts[key], key)
    if "order" in opts:
        value, line, column = opts["order"]
        try:
            order_from_name(value)
        except UsageError as exc:
            raise ParseError(str(exc), line, column) from None
        kw["order"] = value
    if "point" in opts:
        value, line, column = opts["point"]
        table = VarTable.holomorphic(["_p"])
        coords = []
        for piece in value.split(","):
            p = parse_poly(piece.strip(), table, line=line, column=column)
            if not p.is_constant():
                raise ParseError("point coordinates must be numbers", line, column)
            coords.append(p.constant_term())
        if len(coords) != source.N:
            raise ParseError(f"point needs {source.N} coordinates", line, column)
        kw["point"] = tuple(coords)
    options = dataclasses.replace(options, **kw)

    jet = None
    if "map" in present:
        jet = _map(raw["map"], source, target, options)
    return ProblemFile(source, target, jet, options)


def _variety(entries, section, cls):
    if "vars" not in entries:
        raise ParseError(f"[{section}] needs a 'vars' entry")
    value, line, column = entries["vars"]
    names = [n.strip() for n in value.split(",") if n.strip()]
    try:
        table = VarTable.complexified(names)
    except UsageError as exc:
        raise ParseError(str(exc), line, column) from None
    if "defining" not in entries:
        raise ParseError(f"[{section}] needs at least one 'defining' entry", line)
    sigma = []
    first_line = entries["defining"][0][1]
    for value, dline, dcol in entries["defining"]:
        sigma += parse_poly_list(value, table, line=dline, column=dcol)
    kwargs = {}
    if "label" in entries:
        kwargs["label"] = entries["label"][0]
    if "dim" in entries:
        kwargs["dim_hint"] = _int(*entries["dim"], "dim")
    if "segre_irreducible" in entries:
        kwargs["segre_irreducible"] = _bool(*entries["segre_irreducible"], "segre_irreducible")
    try:
        return cls(names, sigma, **kwargs)
    except InvariantError as exc:
        message = str(exc).split(": ", 1)[1] if ": " in str(exc) else str(exc)
        raise InvariantError(exc.invariant, message, line=first_line) from None


def _map(entries, source, target, options):
    comps = entries.get("component", [])
    if not comps:
        raise ParseError("[map] needs 'component' entries")
    expected = (target or source).N
    if len(comps) != expected:
        raise InvariantError(
            "map-arity", f"map has {len(comps)} components but the target has {expected} variables",
            line=comps[0][1],
        )
    z = source.z_table
    polys = [parse_poly(value, z, line=line, column=col) for value, line, col in comps]
    cap = options.jet_cap
    if "degree_cap" in entries:
        cap = _int(*entries["degree_cap"], "degree_cap")
    for (value, line, _), p in zip(comps, polys):
        if p.constant_term():
            raise InvariantError("no-constant-term", f"component {p} has a constant term", line=line)
        if p.degree() > cap:
            raise InvariantError("degree-cap", f"component {p} has degree above the jet cap {cap}", line=line)
    return FormalMapJet(polys, cap, z)


def load_problem(path):
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())
