"""
Determinants, Fox colorings and Alexander module bounds.
"""
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator, List, Optional, Tuple
import numpy as np
import sympy
from sympy import isprime, primefactors
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix
from ..utils import identity
from ..words import Word, Homomorphism
from ..constructors import Presentation
from ._laurent import LaurentPoly, T
from ._fox import alexander_matrix
from ._smith import smith_normal_form

AffineMap = Tuple[int, int]

MAX_MINORS = 20000


def _require_odd_prime(p: int):
    if p == 2 or not isprime(p):
        raise ValueError(f'p={p} must be an odd prime')


def determinant(P: Presentation) -> int:
    """Gcd of the first elementary ideal of ``P`` evaluated at ``t = -1``.

    The gcd of the ``k x k`` minors of an integer matrix is the product
    of its first ``k`` invariant factors, so no minors are expanded. The
    result is 0 when ``M(-1)`` has rank below ``n - 1``.

    >>> from algunknot.constructors import catalog_presentation
    >>> determinant(catalog_presentation('unknot'))
    1
    >>> determinant(catalog_presentation('4_1'))
    5
    """
    k = P.gen_count - 1
    if k == 0:
        return 1
    factors = smith_normal_form(alexander_matrix(P).evaluate(-1))
    if len(factors) < k:
        return 0
    return int(np.prod(np.array(factors[:k], dtype=object)))


def determinant_primes(P: Presentation) -> List[int]:
    """Primes dividing the determinant, ascending."""
    return [int(p) for p in primefactors(determinant(P))]


def _fox_matrix_mod_p(P: Presentation, p: int) -> Tuple[DomainMatrix, object]:
    F = GF(p)
    values = alexander_matrix(P).evaluate(-1)
    rows = [[F(int(x) % p) for x in row] for row in values]
    return DomainMatrix(rows, (len(rows), P.gen_count), F), F


def _rank_mod_p(rows: List[List[int]], cols: int, p: int) -> int:
    if not rows or cols == 0:
        return 0
    F = GF(p)
    matrix = DomainMatrix(
        [[F(int(x) % p) for x in row] for row in rows], (len(rows), cols), F
    )
    return int(matrix.rank())


@dataclass(frozen=True)
class ColoringSpace:
    """Fox ``p``-colorings of a presentation, as a vector space over GF(p).

    Constant colorings always exist, so the dimension is at least 1.
    """

    prime: int
    dimension: int
    basis: Tuple[Tuple[int, ...], ...] = field(default=())

    def count(self) -> int:
        return self.prime**self.dimension

    def is_nontrivial(self) -> bool:
        return self.dimension >= 2

    def colorings(self) -> Iterator[Tuple[int, ...]]:
        """Every coloring, each exactly once."""
        vectors = np.array(self.basis, dtype=np.int64)
        for coefficients in product(range(self.prime), repeat=self.dimension):
            yield tuple(
                int(x) for x in (np.array(coefficients) @ vectors) % self.prime
            )


def coloring_space(P: Presentation, p: int) -> ColoringSpace:
    """Solutions over GF(p) of the Fox coloring equations of ``P``.

    >>> from algunknot.constructors import catalog_presentation
    >>> coloring_space(catalog_presentation('3_1'), 3).dimension
    2
    >>> coloring_space(catalog_presentation('3_1'), 5).dimension
    1
    """
    _require_odd_prime(p)
    if not P.is_all_meridian():
        raise ValueError(
            f'Colorings need an all-meridian presentation, got {P!r}'
        )
    n = P.gen_count
    if not P.relators:
        basis = tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )
        return ColoringSpace(p, n, basis)
    matrix, F = _fox_matrix_mod_p(P, p)
    kernel = matrix.nullspace()
    basis = tuple(
        tuple(int(F.to_int(e)) % p for e in row) for row in kernel.to_list()
    )
    return ColoringSpace(p, len(basis), basis)


def dihedral_presentation(p: int) -> Presentation:
    """``D_p = < s, r | s^2, r^p, s.r.s.r >`` with ``s = x0`` a meridian."""
    _require_odd_prime(p)
    s, r = Word.generator(0), Word.generator(1)
    return Presentation(
        2, [s**2, r**p, s*r*s*r], meridians=[True, False], label=f'D_{p}'
    )


def affine_image(w: Word, p: int) -> AffineMap:
    """Image of a word in ``s, r`` as the map ``x -> e x + b`` mod ``p``.

    Products compose as functions, the rightmost letter acting first, with
    ``s: x -> -x`` and ``r: x -> x + 1``.

    >>> affine_image(Word.parse('x1^2.x0'), 5)
    (-1, 2)
    """
    sign, shift = 1, 0
    for generator, exponent in w.syllables:
        if generator == 0:
            letter = (1 if exponent % 2 == 0 else -1, 0)
        elif generator == 1:
            letter = (1, exponent % p)
        else:
            raise ValueError(f'Generator x{generator} is not in D_{p}')
        sign, shift = sign*letter[0], (sign*letter[1] + shift) % p
    return sign, shift


def _reflection(color: int) -> Word:
    # x -> -x + color
    return Word.generator(1, color)*Word.generator(0)


def dihedral_surjection(P: Presentation, p: int) -> Optional[Homomorphism]:
    """Surjection onto ``D_p`` sending meridians to reflections.

    The distinguished meridian goes to ``s``. Returns None when ``P`` has
    only constant ``p``-colorings.

    >>> from algunknot.constructors import catalog_presentation
    >>> dihedral_surjection(catalog_presentation('3_1'), 5) is None
    True
    """
    space = coloring_space(P, p)
    d = P.distinguished
    for vector in space.basis:
        colors = [(c - vector[d]) % p for c in vector]
        if any(colors):
            break
    else:
        return None
    h = Homomorphism([_reflection(c) for c in colors], 2)
    reflection_hit = affine_image(h.images[d], p) == (-1, 0)
    rotation_hit = any(
        affine_image(a*b, p)[1] != 0
        for a in h.images for b in h.images
    )
    if not (reflection_hit and rotation_hit):
        raise RuntimeError(f'Coloring {colors} does not surject onto D_{p}')
    return h


def nakanishi_lower_bound(P: Presentation, p: int) -> int:
    """Dimension of the Alexander module fiber at ``(t + 1, p)``.

    This is ``(n - 1)`` minus the rank over GF(p) of ``M(-1)`` with the
    distinguished meridian column deleted.

    >>> from algunknot.constructors import catalog_presentation
    >>> nakanishi_lower_bound(catalog_presentation('3_1'), 3)
    1
    >>> nakanishi_lower_bound(catalog_presentation('unknot'), 3)
    0
    """
    _require_odd_prime(p)
    reduced = alexander_matrix(P).delete_column(P.distinguished)
    values = reduced.evaluate(-1)
    rank = _rank_mod_p([list(row) for row in values], reduced.cols, p)
    return P.gen_count - 1 - rank


def alexander_polynomial(
    P: Presentation, max_minors: int = MAX_MINORS,
    progress: Callable = identity
) -> LaurentPoly:
    """Gcd over ``Z[t]`` of the ``(n - 1)``-minors of the Alexander matrix.

    Normalized to lowest exponent 0 and a positive top coefficient.

    >>> from algunknot.constructors import catalog_presentation
    >>> str(alexander_polynomial(catalog_presentation('3_1')))
    '1-t+t^2'
    """
    k = P.gen_count - 1
    if k == 0:
        return LaurentPoly.constant(1)
    matrix = alexander_matrix(P)
    if matrix.rows < k:
        return LaurentPoly()
    symbolic = matrix.to_sympy()
    g = sympy.Poly(0, T, domain='ZZ')
    count = 0
    for rows in progress(list(combinations(range(matrix.rows), k))):
        for cols in combinations(range(matrix.cols), k):
            count += 1
            if count > max_minors:
                raise ValueError(
                    f'Alexander polynomial needs more than {max_minors} '
                    'minors; raise max_minors'
                )
            minor = symbolic.extract(list(rows), list(cols)).det(
                method='bareiss'
            )
            g = sympy.gcd(g, sympy.Poly(sympy.expand(minor), T, domain='ZZ'))
            if g.degree() == 0 and abs(int(g.LC())) == 1:
                return LaurentPoly.constant(1)
    return LaurentPoly.from_sympy(g).normalize()
