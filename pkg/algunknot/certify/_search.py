"""
Upper-bound searches over candidate relators.

A bound ``c`` for a relator kind is witnessed by ``c`` relators whose
quotient is certified infinite cyclic. Candidate tuples are tried by
total length and then lexicographically, and the first success in that
order is returned whether or not the search runs in parallel.
"""
import time
from itertools import islice
from math import gcd
from multiprocessing import Pool
from typing import Callable, Iterator, List, Optional, Sequence, Tuple
import psutil
from ..utils import identity
from ..words import Word, enumerate_candidate_conjugators
from ..constructors import (
    Presentation, connected_sum_many, ribbon_presentation
)
from ..alexander import determinant
from ._budget import Budget, Inconclusive
from ._certificate import Certificate, BOUND_WITNESS
from ._certify import Outcome, certify_infinite_cyclic
from ._relators import RELATOR_KINDS, relator_for, combined_relator


def default_workers() -> int:
    return psutil.cpu_count(logical=True) or 1


def bound_certificate(
    P: Presentation, kind: str, relators: Sequence[Word],
    witnesses: Sequence[Sequence[Word]], quotient: Certificate
) -> Certificate:
    """Upper bound ``len(relators)`` on the invariant of ``kind``."""
    return Certificate(
        BOUND_WITNESS, P.presentation_hash,
        payload={
            'invariant': kind,
            'direction': 'upper',
            'bound': len(relators),
            'relators': [str(r) for r in relators],
            'witnesses': [[str(w) for w in group] for group in witnesses],
        },
        replay_data={
            'presentation': P.to_dict(),
            'quotient': quotient.to_dict(),
        },
    )


def candidate_tuples(
    candidates: Sequence[Word], c: int
) -> Iterator[Tuple[Word, ...]]:
    """Strictly increasing ``c``-tuples, by total length then lexicographic.

    ``candidates`` must already be sorted by length then lexicographic.

    >>> ws = [Word.parse(t) for t in ('x0', 'x1', 'x0^2')]
    >>> [' '.join(str(w) for w in t) for t in candidate_tuples(ws, 2)]
    ['x0 x1', 'x0 x0^2', 'x1 x0^2']
    """
    lengths = [len(w) for w in candidates]
    if c == 0:
        yield ()
        return
    if len(candidates) < c:
        return
    chosen: List[int] = []

    def extend(start: int, remaining: int, slots: int) -> Iterator[tuple]:
        if slots == 0:
            if remaining == 0:
                yield tuple(candidates[i] for i in chosen)
            return
        for i in range(start, len(candidates) - slots + 1):
            if lengths[i]*slots > remaining:
                break
            chosen.append(i)
            yield from extend(i + 1, remaining - lengths[i], slots - 1)
            chosen.pop()

    smallest = sum(lengths[:c])
    largest = sum(lengths[-c:])
    for total in range(smallest, largest + 1):
        yield from extend(0, total, c)


def _may_be_cyclic(Q: Presentation) -> bool:
    """False when the determinant already rules out an infinite cyclic group.

    The determinant is only defined when all generators have the same
    abelian image, so anything else goes on to coset enumeration.
    """
    if not Q.has_uniform_abelianization():
        return True
    return determinant(Q) == 1


def _try_candidate(
    args: Tuple[Presentation, str, Tuple[Word, ...], Budget]
) -> Optional[Certificate]:
    P, kind, ws, budget = args
    x = P.meridian_word
    relators = [relator_for(kind, x, w) for w in ws]
    Q = P.with_relators(relators)
    if not _may_be_cyclic(Q):
        return None
    quotient = certify_infinite_cyclic(
        Q, budget, max_cosets=budget.candidate_cosets
    )
    if not quotient:
        return None
    return bound_certificate(P, kind, relators, [[w] for w in ws], quotient)


def _first_success(
    jobs: Iterator[tuple], workers: int, deadline: float
) -> Tuple[Optional[Certificate], bool]:
    """First certificate in job order, and whether time ran out."""
    if workers <= 1:
        for job in jobs:
            if time.monotonic() > deadline:
                return None, True
            result = _try_candidate(job)
            if result is not None:
                return result, False
        return None, False
    with Pool(workers) as pool:
        for result in pool.imap(_try_candidate, jobs, chunksize=4):
            if result is not None:
                pool.terminate()
                return result, False
            if time.monotonic() > deadline:
                pool.terminate()
                return None, True
    return None, False


def search_upper_bound(
    P: Presentation,
    kind: str,
    c_max: int,
    budget: Budget,
    workers: int = 1,
    c_min: int = 0,
    progress: Callable = identity,
    verbose: bool = False,
) -> Outcome:
    """Search for ``c <= c_max`` relators of ``kind`` abelianizing ``P``.

    The relator shape is ``w`` for ``ma_qiu``, ``[x, w]`` for ``a_st``
    and ``[x, x^w]`` for ``a_fw``, with ``x`` the distinguished meridian.
    At ``c = 0`` the group itself is certified infinite cyclic. Each
    candidate quotient whose determinant is defined and other than 1 is
    skipped before enumerating cosets.

    >>> from algunknot.constructors import catalog_presentation
    >>> cert = search_upper_bound(catalog_presentation('3_1'), 'a_fw', 1,
    ...                           Budget(max_word_length=2))
    >>> cert.bound
    1
    """
    if kind not in RELATOR_KINDS:
        raise ValueError(
            f'Unknown relator kind {kind!r}, '
            f'choose from {sorted(RELATOR_KINDS)}'
        )
    if c_max < 0 or c_min < 0:
        raise ValueError(f'c_min={c_min} and c_max={c_max} must be >= 0')
    deadline = time.monotonic() + budget.time_limit
    if c_min == 0 and _may_be_cyclic(P):
        direct = certify_infinite_cyclic(
            P, budget, max_cosets=budget.candidate_cosets
        )
        if direct:
            return bound_certificate(P, kind, [], [], direct)
    candidates = [
        w for w in islice(
            enumerate_candidate_conjugators(
                P.gen_count, P.distinguished, budget.max_word_length
            ),
            budget.max_candidates + 1
        )
        if not w.is_identity()
    ][:budget.max_candidates]
    for c in range(max(c_min, 1), c_max + 1):
        if verbose:
            print(f'Trying {c} {kind} relators on {P!r}')
        tuples = islice(candidate_tuples(candidates, c), budget.max_candidates)
        jobs = ((P, kind, ws, budget) for ws in progress(tuples))
        result, timed_out = _first_success(jobs, workers, deadline)
        if result is not None:
            return result
        if timed_out:
            return Inconclusive(
                f'time limit {budget.time_limit}s reached at c={c}'
            )
    return Inconclusive(
        f'no {kind} witness with c <= {c_max} among '
        f'{len(candidates)} candidates up to length {budget.max_word_length}'
    )


def _summand_offsets(Ps: Sequence[Presentation]) -> List[int]:
    offsets = []
    total = 0
    for P in Ps:
        offsets.append(total)
        total += P.gen_count
    return offsets


def _witness_words(certificate: Certificate) -> List[Word]:
    return [
        Word.parse(text)
        for group in certificate.payload['witnesses'] for text in group
    ]


def combine_summand_witnesses(
    Ps: Sequence[Presentation], certificates: Sequence[Certificate],
    kind: str, budget: Budget
) -> Outcome:
    """Additive upper bound for a connected sum from summand witnesses.

    The witnesses of every summand, shifted into the sum, are used
    together with the meridian of the sum.
    """
    if len(Ps) != len(certificates):
        raise ValueError(
            f'Got {len(certificates)} certificates for {len(Ps)} summands'
        )
    S = connected_sum_many(Ps)
    x = S.meridian_word
    witnesses: List[List[Word]] = []
    for offset, certificate in zip(_summand_offsets(Ps), certificates):
        if certificate.payload.get('invariant') != kind:
            raise ValueError(
                f'Certificate bounds {certificate.payload.get("invariant")}, '
                f'not {kind}'
            )
        witnesses += [[w.shift(offset)] for w in _witness_words(certificate)]
    relators = [relator_for(kind, x, group[0]) for group in witnesses]
    quotient = certify_infinite_cyclic(S.with_relators(relators), budget)
    if not quotient:
        return quotient
    return bound_certificate(S, kind, relators, witnesses, quotient)


def verify_nonadditivity(
    Ps: Sequence[Presentation],
    js: Sequence[int],
    budget: Budget,
    c: int = 1,
    kind: str = 'a_st',
    workers: int = 1,
) -> Outcome:
    """Abelianize a connected sum with only ``c`` combined relators.

    Relator ``k`` combines the ``k``-th witness of every summand. The twist
    numbers ``js`` must be pairwise coprime.

    >>> from algunknot.constructors import catalog_presentation
    >>> verify_nonadditivity([catalog_presentation('3_1')]*2, [2, 2],
    ...                      Budget())
    Traceback (most recent call last):
    ...
    ValueError: js=[2, 2] are not pairwise coprime
    """
    if len(Ps) != len(js) or not Ps:
        raise ValueError(f'Need one twist number per summand, got js={js}')
    for i in range(len(js)):
        for j in range(i + 1, len(js)):
            if gcd(js[i], js[j]) != 1:
                raise ValueError(f'js={list(js)} are not pairwise coprime')
    if kind not in ('a_st', 'a_fw'):
        raise ValueError(f'Witnesses of kind {kind!r} cannot be combined')
    if len(Ps) == 1:
        return search_upper_bound(Ps[0], kind, c, budget, workers)
    S = connected_sum_many(Ps)
    columns: List[List[Word]] = []
    for offset, P in zip(_summand_offsets(Ps), Ps):
        certificate = search_upper_bound(P, kind, c, budget, workers)
        if not certificate:
            return Inconclusive(
                f'summand {P!r} has no {kind} witness: {certificate.reason}'
            )
        ws = [w.shift(offset) for w in _witness_words(certificate)]
        ws += [Word.identity()]*(c - len(ws))
        columns.append(ws)
    witnesses = [[ws[k] for ws in columns] for k in range(c)]
    relators = [
        combined_relator(group, kind, S.meridian_word) for group in witnesses
    ]
    quotient = certify_infinite_cyclic(S.with_relators(relators), budget)
    if not quotient:
        return quotient
    return bound_certificate(S, kind, relators, witnesses, quotient)


def ribbon_stabilization_bound(
    conjugators: Sequence[Word], budget: Budget
) -> Outcome:
    """Stabilization bound by the fusion count of a ribbon presentation.

    With ``u_j = g_0 ... g_(j-1)`` the relator ``[x0, u_j]`` identifies the
    ``j``-th meridian with ``x0``, so ``n`` such relators leave a cyclic
    group.

    >>> cert = ribbon_stabilization_bound([Word.parse('x1')], Budget())
    >>> cert.bound
    1
    """
    P = ribbon_presentation(len(conjugators), conjugators)
    x = P.meridian_word
    witnesses = []
    u = Word.identity()
    for g in conjugators:
        u = u*g
        witnesses.append([u])
    relators = [relator_for('a_st', x, group[0]) for group in witnesses]
    quotient = certify_infinite_cyclic(P.with_relators(relators), budget)
    if not quotient:
        return quotient
    return bound_certificate(P, 'a_st', relators, witnesses, quotient)
