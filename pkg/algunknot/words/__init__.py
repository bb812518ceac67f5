"""
Free-group calculus: reduced words, commutators and homomorphisms.
"""
from ._word import (
    GeneratorId, ExponentVector, Word, reduce, conjugate, commutator,
    exponent_vector
)
from ._homomorphism import Homomorphism, apply_hom
from ._enumeration import (
    enumerate_reduced_words, enumerate_candidate_conjugators
)

__all__ = [
    'GeneratorId',
    'ExponentVector',
    'Word',
    'reduce',
    'conjugate',
    'commutator',
    'exponent_vector',
    'Homomorphism',
    'apply_hom',
    'enumerate_reduced_words',
    'enumerate_candidate_conjugators',
]
