"""
Classical knot groups from closed braids and two-bridge parameters.
"""
from fractions import Fraction
from typing import List, Sequence
from ..words import Word, Homomorphism, apply_hom
from ._presentation import Presentation


class BraidWord:
    """Braid word on ``strand_count`` strands.

    Letter ``i`` stands for the Artin generator ``sigma_i`` and ``-i`` for
    its inverse, with ``1 <= |i| < strand_count``.

    >>> BraidWord([1, 1, 1]).strand_count
    2
    >>> BraidWord([1, -2, 1, -2]).component_count()
    1
    """

    def __init__(self, letters: Sequence[int], strand_count: int = None):
        letters = [int(letter) for letter in letters]
        if strand_count is None:
            strand_count = 1 + max((abs(x) for x in letters), default=0)
        if strand_count < 1:
            raise ValueError(f'strand_count={strand_count} must be positive')
        for letter in letters:
            if letter == 0 or abs(letter) >= strand_count:
                raise ValueError(
                    f'Braid letter {letter} invalid on {strand_count} strands'
                )
        self.letters = letters
        self.strand_count = strand_count

    def permutation(self) -> List[int]:
        """Strand permutation of the braid."""
        perm = list(range(self.strand_count))
        for letter in self.letters:
            i = abs(letter) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def component_count(self) -> int:
        """Number of components of the braid closure."""
        perm = self.permutation()
        seen = [False]*self.strand_count
        cycles = 0
        for start in range(self.strand_count):
            if seen[start]:
                continue
            cycles += 1
            position = start
            while not seen[position]:
                seen[position] = True
                position = perm[position]
        return cycles

    def __repr__(self) -> str:
        return f'BraidWord({self.letters}, strand_count={self.strand_count})'


def _artin_action(letter: int, strand_count: int) -> Homomorphism:
    """Artin automorphism of the free group for one braid letter."""
    images = [Word.generator(j) for j in range(strand_count)]
    i = abs(letter) - 1
    x_i = Word.generator(i)
    x_next = Word.generator(i + 1)
    if letter > 0:
        images[i] = x_i * x_next * x_i.inverse()
        images[i + 1] = x_i
    else:
        images[i] = x_next
        images[i + 1] = x_next.inverse() * x_i * x_next
    return Homomorphism(images, strand_count)


def wirtinger_from_braid(b: BraidWord) -> Presentation:
    """Group of the closure of ``b``, one meridian per top strand.

    The relators say that the braid automorphism fixes every strand
    generator. The last one follows from the others and is omitted.
    """
    if b.component_count() != 1:
        raise ValueError(
            f'Closure of {b} has {b.component_count()} components, '
            'expected a knot'
        )
    n = b.strand_count
    images = [Word.generator(j) for j in range(n)]
    for letter in b.letters:
        action = _artin_action(letter, n)
        images = [apply_hom(action, image) for image in images]
    relators = [
        images[j] * Word.generator(j).inverse() for j in range(n - 1)
    ]
    return Presentation(n, relators)


def wirtinger_crossing_presentation(b: BraidWord) -> Presentation:
    """Wirtinger presentation of the closure of ``b``, one arc per generator.

    Reading the braid from the top, the strand passing under at each
    crossing starts a new arc, related to the incoming under-arc by
    conjugation with the over-arc. Closing the braid glues every bottom
    arc to the top arc in the same position. The group is the one of
    :func:`wirtinger_from_braid`, which keeps only the top strands.

    >>> P = wirtinger_crossing_presentation(BraidWord([1, 1, 1]))
    >>> P.gen_count, len(P.relators)
    (3, 3)
    """
    if b.component_count() != 1:
        raise ValueError(
            f'Closure of {b} has {b.component_count()} components, '
            'expected a knot'
        )
    n = b.strand_count
    parent = list(range(n + len(b.letters)))

    def find(arc: int) -> int:
        while parent[arc] != arc:
            parent[arc] = parent[parent[arc]]
            arc = parent[arc]
        return arc

    labels = list(range(n))
    crossings = []
    for k, letter in enumerate(b.letters):
        i = abs(letter) - 1
        new_arc = n + k
        if letter > 0:
            over, under = labels[i], labels[i + 1]
            labels[i], labels[i + 1] = new_arc, over
        else:
            over, under = labels[i + 1], labels[i]
            labels[i], labels[i + 1] = over, new_arc
        crossings.append((new_arc, under, over, 1 if letter > 0 else -1))
    for position, arc in enumerate(labels):
        parent[find(arc)] = find(position)

    roots = sorted({find(arc) for arc in range(len(parent))})
    index = {root: k for k, root in enumerate(roots)}

    def arc_word(arc: int) -> Word:
        return Word.generator(index[find(arc)])

    relators: List[Word] = []
    seen = set()
    for new_arc, under, over, sign in crossings:
        o = arc_word(over)**sign
        relator = (
            arc_word(new_arc).inverse() * o * arc_word(under) * o.inverse()
        ).cyclic_reduce()
        if relator.is_identity() or relator.cyclic_key() in seen:
            continue
        seen.add(relator.cyclic_key())
        relators.append(relator)
    return Presentation(len(roots), relators)


def two_bridge_fraction(params: Sequence[int]) -> Fraction:
    """Continued fraction ``c1 + 1/(c2 + 1/(...))`` of even parameters.

    >>> two_bridge_fraction([2, -2])
    Fraction(3, 2)
    >>> two_bridge_fraction([2, 2])
    Fraction(5, 2)
    """
    if not params:
        raise ValueError('Two-bridge parameters must be nonempty')
    for c in params:
        if c == 0 or c % 2 != 0:
            raise ValueError(
                f'Two-bridge parameter {c} must be a nonzero even integer'
            )
    value = Fraction(params[-1])
    for c in reversed(params[:-1]):
        value = c + 1/value
    return value


def two_bridge_presentation(params: Sequence[int]) -> Presentation:
    """Two-bridge knot group in Schubert normal form.

    For the fraction ``p/q`` the group is ``< a, b | a w b^-1 w^-1 >`` with
    ``w = b^e1 a^e2 b^e3 ... a^e(p-1)`` and ``e_i = (-1)^floor(i q / p)``.

    >>> str(two_bridge_presentation([2, -2]))
    '< x0, x1 | x0.x1^-1.x0^-1.x1^-1.x0.x1 >'
    """
    fraction = two_bridge_fraction(params)
    p = abs(fraction.numerator)
    q = fraction.denominator % p if p > 1 else 0
    if p % 2 == 0:
        raise ValueError(
            f'Parameters {list(params)} give p/q = {fraction}, '
            'which is a two-component link'
        )
    if q % 2 == 0:
        q -= p
    a = Word.generator(0)
    b = Word.generator(1)
    w = Word.identity()
    for i in range(1, p):
        sign = -1 if ((i*q) // p) % 2 else 1
        letter = b if i % 2 == 1 else a
        w = w * letter**sign
    relator = a * w * b.inverse() * w.inverse()
    return Presentation(2, [relator])
