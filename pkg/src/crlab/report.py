"""Deterministic reports for CLI commands.

Every report serializes to JSON with ``schema: 1``.  Coefficients and vector
entries are exact strings ("3/2", "1+2i"), never floats; polynomials are
rendered in the input grammar, terms in decreasing degrevlex order.
"""
from __future__ import annotations

import dataclasses
import json

SCHEMA = 1

DEFINITE, ERROR, INCONCLUSIVE = 0, 1, 2


@dataclasses.dataclass
class Report:
    command: str
    input_digest: str
    result: dict
    caveats: list = dataclasses.field(default_factory=list)
    exit_code: int = DEFINITE

    def as_dict(self):
        return {
            "schema": SCHEMA,
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.result,
            "caveats": list(self.caveats),
            "exit_code": self.exit_code,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_text(self):
        lines = [f"command: {self.command}", f"input: sha256:{self.input_digest}"]
        lines += _text_lines(self.result, 0)
        for c in self.caveats:
            lines.append(f"caveat: {c}")
        return "\n".join(lines) + "\n"


def _text_lines(value, indent):
    pad = "  " * indent
    out = []
    for key in sorted(value):
        v = value[key]
        if isinstance(v, dict):
            out.append(f"{pad}{key}:")
            out += _text_lines(v, indent + 1)
        elif isinstance(v, list):
            if v and all(isinstance(x, dict) for x in v):
                out.append(f"{pad}{key}:")
                for item in v:
                    out += _text_lines(item, indent + 1)
            else:
                out.append(f"{pad}{key}: [{', '.join(_scalar(x) for x in v)}]")
        else:
            out.append(f"{pad}{key}: {_scalar(v)}")
    return out


def _scalar(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


# -- payload helpers --------------------------------------------------------


def ideal_payload(ideal):
    return {"variables": list(ideal.table.names), "basis": [str(g) for g in ideal.basis]}


def dim_payload(dim):
    return dim.as_dict()


def status_payload(status):
    """``Finite(3)`` style objects as ``{"status": name, <field>: value}``."""
    out = {"status": type(status).__name__}
    for field in dataclasses.fields(status):
        out[field.name] = getattr(status, field.name)
    return out


def vector_payload(values):
    return [str(v) for v in values]
