"""Subtractive ideals and primary decomposition in finite commutative semirings."""

from .classify import classify, is_k_irreducible, is_primary, is_prime
from .decomposition import associated_primes, brute_force_decompositions, primary_decomposition, verify_uniqueness
from .enumeration import enumerate_semirings
from .ideals import Ideal, all_ideals, all_k_ideals, k_closure, radical
from .semiring import FiniteSemiring, boolean, chain, direct_product, integers_mod, load_srs, validate

__all__ = [
    "FiniteSemiring",
    "Ideal",
    "all_ideals",
    "all_k_ideals",
    "associated_primes",
    "boolean",
    "brute_force_decompositions",
    "chain",
    "classify",
    "direct_product",
    "enumerate_semirings",
    "integers_mod",
    "is_k_irreducible",
    "is_prime",
    "is_primary",
    "k_closure",
    "load_srs",
    "primary_decomposition",
    "radical",
    "validate",
    "verify_uniqueness",
]
