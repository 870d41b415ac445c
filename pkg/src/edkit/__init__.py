"""Exact representation dimensions, essential-dimension bounds, and monomial
embeddings for finite permutation groups."""

from .errors import ToolkitError
from .groups import FiniteGroup, GroupSpec, Permutation, Subgroup, construct, generate_group

__all__ = [
    "FiniteGroup",
    "GroupSpec",
    "Permutation",
    "Subgroup",
    "ToolkitError",
    "construct",
    "generate_group",
]
