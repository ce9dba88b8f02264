"""Conjugation quandles, the Hayashi property and good conjugacy classes."""

__version__ = "0.1.0"

from .errors import BoundExceeded, QuandleError  # noqa: E402
from .groups import (  # noqa: E402
    ConjClass,
    FiniteGroup,
    alternating,
    catalog,
    cyclic,
    dihedral,
    direct_product,
    load_group_file,
    symmetric,
)
from .perm import CycleStructure, Permutation, parse_cycles  # noqa: E402
from .quandle import ConjugationQuandle, build_quandle, product_quandle, quandle_of_class  # noqa: E402

__all__ = [
    "BoundExceeded", "QuandleError", "ConjClass", "FiniteGroup", "alternating", "catalog", "cyclic",
    "dihedral", "direct_product", "load_group_file", "symmetric", "CycleStructure", "Permutation",
    "parse_cycles", "ConjugationQuandle", "build_quandle", "product_quandle", "quandle_of_class",
]
