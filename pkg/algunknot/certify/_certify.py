"""
Direct certifications: infinite cyclic groups, nonabelian and nontrivial
finite quotients, and the dihedral lower bound for connected sums.
"""
from typing import Callable, Iterator, Optional, Sequence, Tuple, Union
from ..utils import identity
from ..words import Word, exponent_vector
from ..constructors import (
    Presentation, DihedralProductElement, connected_sum, commutator_with_z,
    enumerate_alternating_words, freiheitssatz_presentation,
    dihedral_assignment, assignment_defects
)
from ..alexander import (
    abelianization_invariants, determinant, determinant_primes,
    dihedral_surjection
)
from ._budget import Budget, Inconclusive
from ._coset_table import Completed, todd_coxeter
from ._finite_groups import (
    DEFAULT_LADDER, FiniteHomomorphism, cyclic_group,
    get_target, hom_search, iter_homomorphisms
)
from ._projective import DEFAULT_MAX_FIELD, psl2_search
from ._certificate import (
    Certificate, INFINITE_CYCLIC, NON_ABELIAN_QUOTIENT, NON_TRIVIAL_QUOTIENT,
    BOUND_WITNESS
)

Outcome = Union[Certificate, Inconclusive]


def certify_infinite_cyclic(
    P: Presentation, budget: Budget, max_cosets: Optional[int] = None
) -> Outcome:
    """Certify that the group of ``P`` is infinite cyclic.

    The abelianization must be Z and the distinguished meridian must
    generate, which coset enumeration over its cyclic subgroup shows.
    ``max_cosets`` overrides ``budget.max_cosets``.

    >>> from algunknot.constructors import catalog_presentation
    >>> certify_infinite_cyclic(catalog_presentation('unknot'), Budget()).kind
    'InfiniteCyclic'
    """
    invariants = abelianization_invariants(P)
    if invariants != (0,):
        return Inconclusive(
            f'abelianization invariants {invariants} are not Z'
        )
    table = todd_coxeter(P, [P.meridian_word], budget, max_cosets)
    if not isinstance(table.status, Completed):
        return Inconclusive(f'meridian subgroup enumeration {table.status}')
    if table.index != 1:
        return Inconclusive(f'meridian subgroup has index {table.index}')
    return Certificate(
        INFINITE_CYCLIC, P.presentation_hash,
        payload={
            'abelianization': list(invariants),
            'subgroup': [str(P.meridian_word)],
            'index': 1,
            'peak_cosets': table.peak,
        },
        replay_data={'presentation': P.to_dict()},
    )


def _quotient_certificate(
    kind: str, P: Presentation, h: FiniteHomomorphism,
    payload: dict, extra_relators: Sequence[Word] = ()
) -> Certificate:
    payload = dict(payload)
    payload['target'] = h.target.name
    payload['images'] = [list(p) for p in h.images]
    replay_data = {
        'presentation': P.to_dict(),
        'target': h.target.to_dict(),
    }
    if extra_relators:
        replay_data['extra_relators'] = [str(r) for r in extra_relators]
    return Certificate(kind, P.presentation_hash, payload, replay_data)


def certify_nonabelian_quotient(
    P: Presentation,
    extra_relators: Sequence[Word] = (),
    budget: Optional[Budget] = None,
    ladder: Sequence[str] = DEFAULT_LADDER,
) -> Outcome:
    """Certify that ``P`` modulo ``extra_relators`` is nonabelian.

    Walks the target ladder looking for a homomorphism with two
    noncommuting generator images. Meridians are first sent to
    involutions, then anywhere in the class of the distinguished image.

    >>> from algunknot.constructors import catalog_presentation
    >>> cert = certify_nonabelian_quotient(catalog_presentation('3_1'))
    >>> cert.payload['target'], cert.payload['pair']
    ('S3', [0, 1])
    """
    if budget is None:
        budget = Budget()
    Q = P.with_relators(extra_relators)
    involution = [(P.distinguished, 2)]
    for name in ladder:
        target = get_target(name)
        for constraints in (involution, []):
            homs = iter_homomorphisms(Q, target, constraints, budget)
            for count, h in enumerate(homs):
                if count >= budget.max_candidates:
                    break
                pair = h.noncommuting_pair()
                if pair is not None:
                    return _quotient_certificate(
                        NON_ABELIAN_QUOTIENT, P, h,
                        {
                            'pair': list(pair),
                            'extra_relators': [
                                str(r) for r in extra_relators
                            ],
                        },
                        extra_relators
                    )
    return Inconclusive(
        f'no nonabelian image in {", ".join(ladder)} within budget'
    )


def _projection(p1: int, p2: int, word: Word) -> Optional[FiniteHomomorphism]:
    """Projection onto one cyclic factor that kills ``word^2``, if any."""
    sums = exponent_vector(word, 2)
    for factor, p in ((0, p1), (1, p2)):
        if (2*int(sums[factor])) % p == 0:
            target = cyclic_group(p)
            trivial = tuple(range(p))
            images = [trivial, trivial]
            images[factor] = target.generators[0]
            return FiniteHomomorphism(target, tuple(images))
    return None


FREIHEITSSATZ_LADDER = ('S3', 'S4', 'S5', 'PSL(2,5)', 'PSL(2,7)')


def verify_freiheitssatz_instance(
    p1: int, p2: int, g: DihedralProductElement, budget: Budget,
    ladder: Sequence[str] = FREIHEITSSATZ_LADDER,
    max_field: int = DEFAULT_MAX_FIELD
) -> Outcome:
    """Certify ``< a1, a2 | a1^p1, a2^p2, g^2 >`` has a nontrivial quotient.

    A projection onto one cyclic factor is used when it kills ``g^2``.
    Otherwise the small targets in ``ladder`` are searched for images of
    orders ``p1`` and ``p2``, and then ``PSL(2, ell)`` for primes ``ell``
    up to ``max_field``.

    >>> from algunknot.constructors import make_element
    >>> g = make_element(3, 3, ((1, 1), (2, 1)))
    >>> verify_freiheitssatz_instance(3, 3, g, Budget()).payload['target']
    'S3'
    """
    Q = freiheitssatz_presentation(p1, p2, g)
    word = g.to_word(a_offset=0)
    payload = {'primes': [p1, p2], 'g': str(g), 'word': str(word)}
    h = _projection(p1, p2, word)
    if h is not None:
        return _quotient_certificate(
            NON_TRIVIAL_QUOTIENT, Q, h, dict(payload, method='projection')
        )
    for name in ladder:
        homs = hom_search(
            Q, get_target(name), [(0, p1), (1, p2)], budget, limit=1,
            conjugate_meridians=False
        )
        if homs:
            return _quotient_certificate(
                NON_TRIVIAL_QUOTIENT, Q, homs[0],
                dict(payload, method='search')
            )
    representation = psl2_search(Q, (p1, p2), budget, max_field)
    if representation is not None:
        return _quotient_certificate(
            NON_TRIVIAL_QUOTIENT, Q, representation.homomorphism(),
            dict(payload, method='psl2', **representation.to_dict())
        )
    return Inconclusive(
        f'no nontrivial image of F({p1},{p2}; {g}) in {", ".join(ladder)} '
        f'or PSL(2, ell) for ell <= {max_field}'
    )


SweepCell = Tuple[DihedralProductElement, DihedralProductElement, Outcome]


def freiheitssatz_sweep(
    p1: int, p2: int, length: int, budget: Budget,
    progress: Callable = identity
) -> Iterator[SweepCell]:
    """``(v, g, outcome)`` for every alternating ``v`` up to ``length``.

    Here ``g = [z, v]``, so ``g^2`` is the image of ``[z, z^v]`` in the
    free product part.
    """
    cells = list(enumerate_alternating_words(p1, p2, length))
    for v in progress(cells):
        g = commutator_with_z(p1, p2, v)
        yield v, g, verify_freiheitssatz_instance(p1, p2, g, budget)


def _dihedral_coloring(P: Presentation):
    """First odd prime ``p`` with a surjection of ``P`` onto ``D_p``."""
    if not P.is_all_meridian() or not P.has_uniform_abelianization():
        return None
    for p in determinant_primes(P):
        if p == 2:
            continue
        h = dihedral_surjection(P, p)
        if h is not None:
            return p, h
    return None


def lower_bound_afw_two(
    P1: Presentation, P2: Presentation, budget: Budget,
    progress: Callable = identity, verbose: bool = False
) -> Outcome:
    """Certify that two finger-move relators are needed for ``P1 # P2``.

    Each summand is colored onto a dihedral group ``D_p``; together the
    colorings surject the sum onto ``(Z_p1 * Z_p2) x| Z_2``, which is
    checked relator by relator. A single relator ``[z, z^v]`` leaves a
    nontrivial free product quotient, hence a nonabelian quotient, and
    this is checked for every ``v`` up to ``budget.max_word_length``.
    """
    colorings = []
    for k, P in enumerate((P1, P2), start=1):
        coloring = _dihedral_coloring(P)
        if coloring is None:
            det = (
                determinant(P) if P.has_uniform_abelianization() else None
            )
            return Inconclusive(
                f'summand {k} has determinant {det} with no odd prime '
                'coloring'
            )
        colorings.append(coloring)
    (p1, h1), (p2, h2) = colorings
    S = connected_sum(P1, P2)
    assignment = dihedral_assignment(p1, p2, (h1, h2))
    defects = assignment_defects(S, p1, p2, assignment)
    if defects:
        raise RuntimeError(
            f'Colorings do not surject onto G({p1},{p2}): {defects}'
        )
    length = budget.max_word_length
    if verbose:
        print(f'Sweeping G({p1},{p2}) up to length {length}')
    instances = []
    for v, g, outcome in freiheitssatz_sweep(p1, p2, length, budget, progress):
        if not outcome:
            return Inconclusive(
                f'sweep instance v={v} inconclusive: {outcome.reason}'
            )
        instances.append(outcome.to_dict())
    return Certificate(
        BOUND_WITNESS, S.presentation_hash,
        payload={
            'invariant': 'a_fw',
            'direction': 'lower',
            'bound': 2,
            'primes': [p1, p2],
            'assignment': [str(assignment[k]) for k in range(S.gen_count)],
            'sweep_length': length,
            'instance_count': len(instances),
        },
        replay_data={
            'presentation': S.to_dict(),
            'summands': [P1.to_dict(), P2.to_dict()],
            'surjections': [h1.to_dict(), h2.to_dict()],
            'instances': instances,
        },
    )
