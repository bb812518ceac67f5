"""
Smith normal form over the integers.
"""
from math import gcd
from typing import List, Sequence, Tuple
import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors
from ..constructors import Presentation


def _divisor_chain(values: Sequence[int]) -> List[int]:
    """Rearrange a diagonal into the chain ``d1 | d2 | ...``."""
    chain = sorted(abs(int(v)) for v in values)
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            a, b = chain[i], chain[j]
            g = gcd(a, b)
            chain[i], chain[j] = g, a*b // g
    return chain


def smith_normal_form(M) -> Tuple[int, ...]:
    """Nonzero invariant factors ``d1 | d2 | ...`` of an integer matrix.

    Zero diagonal entries are omitted, so the length of the result is the
    rank of ``M``.

    >>> smith_normal_form(np.eye(2, dtype=int))
    (1, 1)
    >>> smith_normal_form([[2, 0], [0, 4]])
    (2, 4)
    >>> smith_normal_form([[0, 0, 0]])
    ()
    """
    rows = [[int(x) for x in row] for row in np.asarray(M, dtype=object)]
    if not rows or not rows[0]:
        return ()
    shape = (len(rows), len(rows[0]))
    matrix = DomainMatrix([[ZZ(x) for x in row] for row in rows], shape, ZZ)
    factors = [int(d) for d in invariant_factors(matrix) if int(d) != 0]
    return tuple(_divisor_chain(factors))


def abelianization_invariants(P: Presentation) -> Tuple[int, ...]:
    """Torsion coefficients above 1, then one 0 per free rank.

    >>> from algunknot.constructors import catalog_presentation
    >>> abelianization_invariants(catalog_presentation('3_1'))
    (0,)
    >>> from algunknot.constructors import dihedral_product_group
    >>> abelianization_invariants(dihedral_product_group(3, 5))
    (2,)
    """
    factors = smith_normal_form(P.exponent_matrix()) if P.relators else ()
    torsion = tuple(d for d in factors if d > 1)
    free_rank = P.gen_count - len(factors)
    return torsion + (0,)*free_rank


def is_infinite_cyclic_abelianization(P: Presentation) -> bool:
    return abelianization_invariants(P) == (0,)
