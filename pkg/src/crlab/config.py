"""Resource caps for exact computations.

Exact algebra can blow up; every cap here is enforced with a hard
:class:`~crlab.errors.ResourceLimitError`, never by truncation.
"""
from __future__ import annotations

import contextlib
import dataclasses


@dataclasses.dataclass
class Limits:
    max_degree: int = 256
    max_terms: int = 200_000
    max_basis_size: int = 2_000
    max_pairs: int = 200_000


limits = Limits()


@contextlib.contextmanager
def override_limits(**changes):
    """Temporarily change fields of the global :data:`limits`."""
    saved = dataclasses.replace(limits)
    for name, value in changes.items():
        if not hasattr(limits, name):
            raise AttributeError(name)
        setattr(limits, name, value)
    try:
        yield limits
    finally:
        for field in dataclasses.fields(Limits):
            setattr(limits, field.name, getattr(saved, field.name))
