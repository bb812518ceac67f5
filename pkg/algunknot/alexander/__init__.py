"""
Fox calculus, Alexander matrices, determinants and colorings.
"""
from ._laurent import LaurentPoly, LaurentMatrix, laurent_sum
from ._fox import (
    GroupRingElement, fox_derivative, abelianized_fox_derivative,
    alexander_matrix
)
from ._smith import (
    smith_normal_form, abelianization_invariants,
    is_infinite_cyclic_abelianization
)
from ._invariants import (
    determinant, determinant_primes, ColoringSpace, coloring_space,
    dihedral_presentation, affine_image, dihedral_surjection,
    nakanishi_lower_bound, alexander_polynomial
)

__all__ = [
    'LaurentPoly',
    'LaurentMatrix',
    'laurent_sum',
    'GroupRingElement',
    'fox_derivative',
    'abelianized_fox_derivative',
    'alexander_matrix',
    'smith_normal_form',
    'abelianization_invariants',
    'is_infinite_cyclic_abelianization',
    'determinant',
    'determinant_primes',
    'ColoringSpace',
    'coloring_space',
    'dihedral_presentation',
    'affine_image',
    'dihedral_surjection',
    'nakanishi_lower_bound',
    'alexander_polynomial',
]
