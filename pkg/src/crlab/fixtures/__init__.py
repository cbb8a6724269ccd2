"""Bundled problem files for the standard model hypersurfaces."""
from importlib import resources

from ..problem import parse_problem

NAMES = (
    "heisenberg",
    "quartic",
    "degenerate",
    "flat",
    "pipeline",
    "heisenberg_identity",
    "degenerate_identity",
)


def path(name):
    if name not in NAMES:
        raise KeyError(f"no fixture named {name!r}")
    return resources.files(__name__) / f"{name}.crp"


def text(name):
    return path(name).read_text(encoding="utf-8")


def load(name):
    return parse_problem(text(name))
