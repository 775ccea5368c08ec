"""Companion bases for quivers of mutation type A and D."""

from ._core import (
    ClassificationError,
    FormatError,
    Quiver,
    canonical_key,
    classify,
    construct,
    dimension_vectors,
    dynkin_quiver,
    is_type_a,
    mutate_basis,
    positive_roots,
    random_mutation_walk,
    strings_oracle,
    verify,
)

__all__ = [
    "ClassificationError",
    "FormatError",
    "Quiver",
    "canonical_key",
    "classify",
    "construct",
    "dimension_vectors",
    "dynkin_quiver",
    "is_type_a",
    "mutate_basis",
    "positive_roots",
    "random_mutation_walk",
    "strings_oracle",
    "verify",
]
