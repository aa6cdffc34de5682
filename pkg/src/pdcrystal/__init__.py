"""Crystal chute moves on reduced pipe dreams and the key expansion of Schubert polynomials."""

from .crystal import decompose, is_highest_weight, lower, raise_
from .keylab import algorithm_d_tilde, decompose_schubert, truncating_permutation
from .perm import Permutation
from .pipedream import PipeDream, enumerate_rp
from .poly import Polynomial, key_polynomial, schubert_divdiff
from .rfc import RFC, phi, phi_inverse

__all__ = [
    "Permutation", "Polynomial", "PipeDream", "RFC",
    "enumerate_rp", "lower", "raise_", "is_highest_weight", "decompose",
    "phi", "phi_inverse", "key_polynomial", "schubert_divdiff",
    "algorithm_d_tilde", "truncating_permutation", "decompose_schubert", "clear_caches",
]


def clear_caches() -> None:
    """Drop memoised enumerations and polynomials (used to time cold runs)."""
    from . import perm, pipedream, poly, rfc

    for fn in (perm._reduced_words, pipedream._enumerate_rp, rfc._enumerate_rfc, poly._schubert, poly._key):
        fn.cache_clear()
