"""Exact arithmetic in NCSym, NCQSym and their graded duals.

Elements are plain dicts mapping canonical index strings to Python ints,
always paired with a basis name (``m p q w qdual M Q W V Qdual``).
"""

from ._core import (
    BasisMismatch,
    ParseError,
    SizeMismatch,
    antipode,
    atomic_split,
    bell,
    canonical_composition,
    canonical_partition,
    comul,
    convert,
    join,
    meet,
    mul,
    ordered_bell,
    pair,
    run_cli,
    set_compositions,
    set_partitions,
    stirling2,
    to_text,
)


def basis_vector(index: str) -> dict:
    """The element with a single term ``index`` and coefficient 1."""
    if index.startswith("("):
        return {canonical_composition(index): 1}
    return {canonical_partition(index): 1}


__all__ = [
    "BasisMismatch",
    "ParseError",
    "SizeMismatch",
    "antipode",
    "atomic_split",
    "basis_vector",
    "bell",
    "canonical_composition",
    "canonical_partition",
    "comul",
    "convert",
    "join",
    "meet",
    "mul",
    "ordered_bell",
    "pair",
    "run_cli",
    "set_compositions",
    "set_partitions",
    "stirling2",
    "to_text",
]
