"""
Presentation builders for 2-knots and the relator-adding moves.

Every builder returns a new :class:`Presentation`; inputs are never
modified.
"""
from typing import List, Optional, Sequence
import numpy as np
from ..words import Word, GeneratorId, Homomorphism, commutator, conjugate
from ._presentation import Presentation


def connected_sum(P1: Presentation, P2: Presentation) -> Presentation:
    """Group of the connected sum.

    The generators of ``P2`` are shifted past those of ``P1`` and the two
    distinguished meridians are identified by one extra relator. The
    distinguished meridian of the result is that of ``P1``.

    >>> from algunknot.constructors import BraidWord, wirtinger_from_braid
    >>> trefoil = wirtinger_from_braid(BraidWord([1, 1, 1]))
    >>> S = connected_sum(trefoil, trefoil)
    >>> S.gen_count, len(S.relators)
    (4, 3)
    """
    offset = P1.gen_count
    relators = list(P1.relators)
    relators += [r.shift(offset) for r in P2.relators]
    relators.append(
        P1.meridian_word.inverse() * P2.meridian_word.shift(offset)
    )
    label = None
    if P1.label and P2.label:
        label = f'{P1.label}#{P2.label}'
    return Presentation(
        P1.gen_count + P2.gen_count,
        relators,
        list(P1.meridians) + list(P2.meridians),
        P1.distinguished,
        label=label,
    )


def connected_sum_many(Ps: Sequence[Presentation]) -> Presentation:
    """Left fold of :func:`connected_sum`."""
    if not Ps:
        raise ValueError('Need at least one presentation to sum')
    result = Ps[0]
    for P in Ps[1:]:
        result = connected_sum(result, P)
    return result


def summand_projection(P1: Presentation, P2: Presentation) -> Homomorphism:
    """Quotient map from ``connected_sum(P1, P2)`` onto ``P1``.

    Generators of the first summand map to themselves and every generator
    of the second summand maps to the distinguished meridian of ``P1``.
    This is well defined when ``P2`` has uniform abelianization.
    """
    if not P2.has_uniform_abelianization():
        raise ValueError(
            'Second summand relators must have zero exponent sum '
            'to collapse onto a meridian'
        )
    images = [Word.generator(i) for i in range(P1.gen_count)]
    images += [P1.meridian_word]*P2.gen_count
    return Homomorphism(images, P1.gen_count)


def twist_spin(P: Presentation, n: int) -> Presentation:
    """Group of the ``n``-twist spin of a classical knot.

    For ``n = 0`` this is the spun knot, whose group is the classical knot
    group, so ``P`` is returned unchanged. Otherwise the ``n``-th power of
    the distinguished meridian is made central.

    >>> from algunknot.constructors import BraidWord, wirtinger_from_braid
    >>> trefoil = wirtinger_from_braid(BraidWord([1, 1, 1]))
    >>> twist_spin(trefoil, 0) is trefoil
    True
    >>> len(twist_spin(trefoil, 2).relators)
    2
    """
    if n < 0:
        raise ValueError(f'Twist count n={n} must be nonnegative')
    if n == 0:
        return P
    power = P.meridian_word**n
    centrality = [
        commutator(power, Word.generator(i)) for i in range(P.gen_count)
    ]
    label = f'tspin({P.label}, {n})' if P.label else None
    return P.with_relators(centrality, label=label)


def ribbon_presentation(
    fusion_count: int, conjugators: Sequence[Word]
) -> Presentation:
    """Ribbon presentation ``< m1..m(n+1) | m_j^(g_j) = m_(j+1) >``.

    >>> str(ribbon_presentation(0, []))
    '< x0 | >'
    >>> str(ribbon_presentation(1, [Word.identity()]))
    '< x0, x1 | x0.x1^-1 >'
    """
    if fusion_count < 0:
        raise ValueError(f'fusion_count={fusion_count} must be nonnegative')
    if len(conjugators) != fusion_count:
        raise ValueError(
            f'Got {len(conjugators)} conjugators for '
            f'fusion_count={fusion_count}'
        )
    gen_count = fusion_count + 1
    relators = []
    for j, g in enumerate(conjugators):
        if g.max_generator() >= gen_count:
            raise ValueError(
                f'Conjugator {g} uses generators beyond x{gen_count - 1}'
            )
        relators.append(
            conjugate(Word.generator(j), g) * Word.generator(j + 1).inverse()
        )
    return Presentation(gen_count, relators, label=f'ribbon({fusion_count})')


def random_conjugators(
    fusion_count: int, max_length: int, seed: Optional[int] = None
) -> List[Word]:
    """Random reduced conjugators for a ribbon presentation.

    Each conjugator length is uniform in ``0..max_length``; letters are
    drawn uniformly among those that do not cancel the previous one.
    """
    if max_length < 0:
        raise ValueError(f'max_length={max_length} must be nonnegative')
    rng = np.random.default_rng(seed)
    gen_count = fusion_count + 1
    conjugators: List[Word] = []
    for _ in range(fusion_count):
        length = int(rng.integers(0, max_length + 1))
        letters: List[tuple] = []
        while len(letters) < length:
            letter = (
                int(rng.integers(0, gen_count)),
                1 if rng.integers(0, 2) == 0 else -1
            )
            if letters and letters[-1] == (letter[0], -letter[1]):
                continue
            letters.append(letter)
        conjugators.append(Word(letters))
    return conjugators


def random_ribbon_presentation(
    fusion_count: int, max_length: int, seed: Optional[int] = None
) -> Presentation:
    """Ribbon presentation with ``random_conjugators``."""
    P = ribbon_presentation(
        fusion_count, random_conjugators(fusion_count, max_length, seed)
    )
    P.label = f'ribbon({fusion_count}, seed={seed})'
    return P


def add_stabilization_relation(
    P: Presentation, g: Word, a: GeneratorId, b: GeneratorId
) -> Presentation:
    """Add the relator ``g^-1 a g b^-1`` identifying two meridians.

    The same relator shape arises from tubing two sheets together.
    """
    P.require_meridian(a)
    P.require_meridian(b)
    relator = conjugate(Word.generator(a), g) * Word.generator(b).inverse()
    return P.with_relators([relator])


def add_finger_move_relation(
    P: Presentation, g: Word, a: GeneratorId, b: GeneratorId
) -> Presentation:
    """Add the relator ``[a, g^-1 b g]`` making two meridians commute."""
    P.require_meridian(a)
    P.require_meridian(b)
    relator = commutator(Word.generator(a), conjugate(Word.generator(b), g))
    return P.with_relators([relator])
