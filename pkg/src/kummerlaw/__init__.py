"""Two-valued group laws, from the elementary quadratic law to genus-2
Kummer multiplication, with every law backed by an independent oracle."""

from . import axioms, elementary, elliptic, errors, genus2, ratkummer, scalars, typos
from .scalars import (
    DEFAULT_TOL,
    EXACT,
    MultiValue,
    ProjPoint,
    Tolerance,
    multiset_equal,
    proj_equal,
    solve_quadratic,
)

__version__ = "0.1.0"

__all__ = [
    "axioms",
    "elementary",
    "elliptic",
    "errors",
    "genus2",
    "ratkummer",
    "scalars",
    "typos",
    "DEFAULT_TOL",
    "EXACT",
    "MultiValue",
    "ProjPoint",
    "Tolerance",
    "multiset_equal",
    "proj_equal",
    "solve_quadratic",
    "__version__",
]
