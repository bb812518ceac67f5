"""
Exact arithmetic in ``G = (Z_p1 * Z_p2) x| Z_2``.

The involution ``z`` acts on both cyclic factors by inversion. Every element
has a unique normal form ``v z^e`` where ``v`` is an alternating word in the
two factors and ``e`` is 0 or 1, so multiplying normal forms solves the word
problem in ``G``.
"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple
from sympy import isprime
from ..words import Word, GeneratorId, Homomorphism
from ._presentation import Presentation

# (factor, exponent) with factor 1 or 2 and exponent in 1..p-1.
FactorLetter = Tuple[int, int]


@dataclass(frozen=True)
class DihedralProductElement:
    """Normal form ``v z^e`` of an element of ``G``."""

    alternating_word: Tuple[FactorLetter, ...] = ()
    z_flag: bool = False

    def is_identity(self) -> bool:
        return not self.alternating_word and not self.z_flag

    def to_word(self, z_index: int = 0, a_offset: int = 1) -> Word:
        """Word with factor ``k`` on generator ``a_offset + k - 1``.

        The ``z`` letter, when present, goes on generator ``z_index``.
        """
        raw = [
            (a_offset + factor - 1, exponent)
            for factor, exponent in self.alternating_word
        ]
        if self.z_flag:
            raw.append((z_index, 1))
        return Word(raw)

    def __str__(self) -> str:
        parts = [f'a{f}^{e}' for f, e in self.alternating_word]
        if self.z_flag:
            parts.append('z')
        return '.'.join(parts) if parts else '1'


def _check_primes(p1: int, p2: int):
    for p in (p1, p2):
        if p == 2 or not isprime(p):
            raise ValueError(f'{p} is not an odd prime')


def _orders(p1: int, p2: int) -> Tuple[int, int, int]:
    # Index 0 is unused so factors index directly.
    return (0, p1, p2)


def make_element(
    p1: int, p2: int, letters: Tuple[FactorLetter, ...] = (),
    z_flag: bool = False
) -> DihedralProductElement:
    """Normal form of an arbitrary product of factor letters times ``z^e``.

    >>> make_element(3, 3, ((1, 1), (1, 2)))
    DihedralProductElement(alternating_word=(), z_flag=False)
    """
    orders = _orders(p1, p2)
    stack = []
    for factor, exponent in letters:
        if factor not in (1, 2):
            raise ValueError(f'Factor {factor} must be 1 or 2')
        exponent %= orders[factor]
        if exponent == 0:
            continue
        if stack and stack[-1][0] == factor:
            merged = (stack[-1][1] + exponent) % orders[factor]
            stack.pop()
            if merged:
                stack.append((factor, merged))
        else:
            stack.append((factor, exponent))
    return DihedralProductElement(tuple(stack), bool(z_flag))


def z_element() -> DihedralProductElement:
    return DihedralProductElement((), True)


def a_element(p1: int, p2: int, factor: int) -> DihedralProductElement:
    return make_element(p1, p2, ((factor, 1),))


def _flip(
    word: Tuple[FactorLetter, ...], orders: Tuple[int, int, int]
) -> Tuple[FactorLetter, ...]:
    return tuple((f, (-e) % orders[f]) for f, e in word)


def nf_multiply(
    p1: int, p2: int, u: DihedralProductElement, v: DihedralProductElement
) -> DihedralProductElement:
    """Normal form of ``u v``.

    >>> z = z_element()
    >>> nf_multiply(3, 5, z, z).is_identity()
    True
    >>> a1 = a_element(3, 5, 1)
    >>> str(nf_multiply(3, 5, nf_multiply(3, 5, z, a1), z))
    'a1^2'
    """
    orders = _orders(p1, p2)
    right = list(v.alternating_word)
    if u.z_flag:
        right = list(_flip(v.alternating_word, orders))
    left = list(u.alternating_word)
    while left and right and left[-1][0] == right[0][0]:
        factor = left[-1][0]
        merged = (left[-1][1] + right[0][1]) % orders[factor]
        left.pop()
        right.pop(0)
        if merged:
            left.append((factor, merged))
            break
    return DihedralProductElement(
        tuple(left + right), u.z_flag != v.z_flag
    )


def nf_inverse(
    p1: int, p2: int, u: DihedralProductElement
) -> DihedralProductElement:
    """Inverse in normal form.

    ``(v z)^-1 = z v^-1 = flip(v^-1) z``, and flipping undoes the negation.
    """
    orders = _orders(p1, p2)
    reversed_word = tuple(reversed(u.alternating_word))
    if u.z_flag:
        return DihedralProductElement(reversed_word, True)
    return DihedralProductElement(_flip(reversed_word, orders), False)


def nf_power(
    p1: int, p2: int, u: DihedralProductElement, n: int
) -> DihedralProductElement:
    if n < 0:
        u = nf_inverse(p1, p2, u)
        n = -n
    result = DihedralProductElement()
    for _ in range(n):
        result = nf_multiply(p1, p2, result, u)
    return result


def nf_commutator(
    p1: int, p2: int, u: DihedralProductElement, v: DihedralProductElement
) -> DihedralProductElement:
    """``[u, v] = u^-1 v^-1 u v``."""
    result = nf_inverse(p1, p2, u)
    for factor in (nf_inverse(p1, p2, v), u, v):
        result = nf_multiply(p1, p2, result, factor)
    return result


def evaluate_in_G(
    p1: int, p2: int, w: Word,
    assignment: Mapping[GeneratorId, DihedralProductElement]
) -> DihedralProductElement:
    """Image of ``w`` under a generator assignment into ``G``.

    >>> images = {0: z_element(), 1: a_element(3, 3, 1)}
    >>> evaluate_in_G(3, 3, Word.parse('x0.x1.x0.x1'), images).is_identity()
    True
    """
    result = DihedralProductElement()
    for generator, exponent in w.syllables:
        if generator not in assignment:
            raise ValueError(f'Generator x{generator} has no image in G')
        result = nf_multiply(
            p1, p2, result, nf_power(p1, p2, assignment[generator], exponent)
        )
    return result


def dihedral_product_group(p1: int, p2: int) -> Presentation:
    """Presentation of ``G`` on ``z = x0``, ``a1 = x1``, ``a2 = x2``.

    Only ``z`` is a meridian, and it is the distinguished one.

    >>> str(dihedral_product_group(3, 3))
    '< x0, x1, x2 | x0^2, x1^3, x2^3, x0.x1.x0.x1, x0.x2.x0.x2 >'
    """
    _check_primes(p1, p2)
    z, a1, a2 = (Word.generator(i) for i in range(3))
    relators = [z**2, a1**p1, a2**p2, z*a1*z*a1, z*a2*z*a2]
    return Presentation(
        3, relators, meridians=[True, False, False], distinguished=0,
        label=f'G({p1},{p2})'
    )


def commutator_with_z(
    p1: int, p2: int, v: DihedralProductElement
) -> DihedralProductElement:
    """``[z, v]`` for ``v`` in the free product part.

    It equals ``rev(v) v``, which lies in the free product part again.
    """
    if v.z_flag:
        raise ValueError(f'{v} must lie in the free product part')
    return nf_commutator(p1, p2, z_element(), v)


def enumerate_alternating_words(
    p1: int, p2: int, max_length: int
) -> Iterator[DihedralProductElement]:
    """Nontrivial alternating words of length ``1..max_length``.

    Ordered by length, then starting factor, then exponents.

    >>> len(list(enumerate_alternating_words(3, 3, 2)))
    12
    """
    _check_primes(p1, p2)
    orders = _orders(p1, p2)

    def extend(prefix, length):
        if len(prefix) == length:
            yield DihedralProductElement(tuple(prefix), False)
            return
        factor = 3 - prefix[-1][0]
        for exponent in range(1, orders[factor]):
            prefix.append((factor, exponent))
            yield from extend(prefix, length)
            prefix.pop()

    for length in range(1, max_length + 1):
        for start in (1, 2):
            for exponent in range(1, orders[start]):
                yield from extend([(start, exponent)], length)


def freiheitssatz_presentation(
    p1: int, p2: int, g: DihedralProductElement
) -> Presentation:
    """``< a1, a2 | a1^p1, a2^p2, g^2 >`` on ``a1 = x0`` and ``a2 = x1``.

    >>> g = make_element(3, 5, ((1, 1), (2, 1)))
    >>> str(freiheitssatz_presentation(3, 5, g))
    '< x0, x1 | x0^3, x1^5, x0.x1.x0.x1 >'
    """
    _check_primes(p1, p2)
    if g.z_flag or g.is_identity():
        raise ValueError(
            f'{g} must be a nontrivial element of the free product part'
        )
    orders = _orders(p1, p2)
    for factor, exponent in g.alternating_word:
        if factor not in (1, 2) or not 0 < exponent < orders[factor]:
            raise ValueError(f'{g} is not in normal form')
    for (f1, _), (f2, _) in zip(g.alternating_word, g.alternating_word[1:]):
        if f1 == f2:
            raise ValueError(f'{g} does not alternate between factors')
    a1, a2 = Word.generator(0), Word.generator(1)
    word = g.to_word(a_offset=0)
    return Presentation(
        2, [a1**p1, a2**p2, word**2], meridians=[True, False],
        label=f'F({p1},{p2}; {g})'
    )


def dihedral_assignment(
    p1: int, p2: int, colorings: Sequence[Homomorphism]
) -> Dict[GeneratorId, DihedralProductElement]:
    """Generator images in ``G`` of the connected sum of two summands.

    ``colorings[k]`` sends the generators of summand ``k + 1`` to words in
    ``s = x0`` and ``r = x1`` of a dihedral group. Sending ``s`` to ``z``
    and ``r`` to ``a_(k+1)`` lands in ``G``; the generators of the second
    summand are numbered after those of the first.

    >>> h = Homomorphism([Word.parse('x0'), Word.parse('x1.x0')], 2)
    >>> images = dihedral_assignment(3, 5, [h, h])
    >>> [str(images[k]) for k in range(4)]
    ['z', 'a1^1.z', 'z', 'a2^1.z']
    """
    if len(colorings) != 2:
        raise ValueError(f'Need two colorings, got {len(colorings)}')
    _check_primes(p1, p2)
    assignment: Dict[GeneratorId, DihedralProductElement] = {}
    offset = 0
    for factor, h in enumerate(colorings, start=1):
        letters = {0: z_element(), 1: a_element(p1, p2, factor)}
        for i, image in enumerate(h.images):
            assignment[offset + i] = evaluate_in_G(p1, p2, image, letters)
        offset += h.source_gen_count
    return assignment


def assignment_defects(
    P: Presentation, p1: int, p2: int,
    assignment: Mapping[GeneratorId, DihedralProductElement]
) -> List[str]:
    """Reasons the assignment is not a surjection of ``P`` onto ``G``.

    The distinguished meridian must go to ``z``, every relator must die
    and each cyclic factor must be reached through some ``a^c z`` with
    ``c`` nonzero.
    """
    defects = []
    missing = [g for g in range(P.gen_count) if g not in assignment]
    if missing:
        return [f'generators {missing} have no image in G']
    if assignment[P.distinguished] != z_element():
        defects.append(
            f'distinguished meridian goes to {assignment[P.distinguished]}'
        )
    for relator in P.relators:
        image = evaluate_in_G(p1, p2, relator, assignment)
        if not image.is_identity():
            defects.append(f'relator {relator} goes to {image}')
    for factor in (1, 2):
        if not any(
            element.z_flag and len(element.alternating_word) == 1
            and element.alternating_word[0][0] == factor
            for element in assignment.values()
        ):
            defects.append(f'image misses the factor Z_p{factor}')
    return defects
