"""Symmetric functions truncated by degree: partitions, bases, products, plethysm."""
from .bases import ALL_BASES, CLASSICAL, basis_tag, change_matrix, character
from .core import (
    Alphabet,
    AlphabetTerm,
    SymFunc,
    ZGradedSym,
    e,
    h,
    hall_pair,
    m,
    multiply,
    p,
    pexp,
    plethysm,
    s,
    skew_apply,
    to_basis,
)
from .partitions import Partition, dominance_leq, partition_index, partitions_of, z_value

__all__ = [
    "ALL_BASES", "CLASSICAL", "Alphabet", "AlphabetTerm", "Partition", "SymFunc", "ZGradedSym",
    "basis_tag", "change_matrix", "character", "dominance_leq", "e", "h", "hall_pair", "m",
    "multiply", "p", "partition_index", "partitions_of", "pexp", "plethysm", "s", "skew_apply",
    "to_basis", "z_value",
]
