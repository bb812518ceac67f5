"""
Two-generator representations into ``PSL(2, ell)`` over prime fields.

One generator becomes an upper triangular matrix ``[[lam, s], [0, 1/lam]]``
and the other a companion matrix ``[[0, -1], [1, alpha]]``. The trace of
their product is ``s + alpha/lam``, so as ``s`` runs over the field the
family meets every pair whose triangular generator has an eigenvalue in
``F_ell``. All ``s`` are checked against the relators in one numpy batch,
and a hit becomes a pair of permutations of the projective line, which is
what certificates store.
"""
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple
import numpy as np
from sympy import isprime, primerange
from ..constructors import Presentation
from ._budget import Budget
from ._finite_groups import FiniteHomomorphism, Perm, projective_line_group

DEFAULT_MAX_FIELD = 400

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]


def is_scalar(M: np.ndarray, ell: int) -> np.ndarray:
    """Which matrices in a ``(..., 2, 2)`` stack are ``I`` or ``-I``."""
    a = M[..., 0, 0]
    return (
        (M[..., 0, 1] == 0) & (M[..., 1, 0] == 0) & (M[..., 1, 1] == a)
        & ((a == 1) | (a == ell - 1))
    )


def projective_action(M: Matrix, ell: int) -> Perm:
    """``x -> (a x + b)/(c x + d)`` on ``0..ell-1`` and ``ell`` for infinity.

    >>> projective_action(((0, 4), (1, 0)), 5)
    (5, 4, 2, 3, 1, 0)
    """
    (a, b), (c, d) = M
    infinity = ell
    images = []
    for x in range(ell):
        denominator = (c*x + d) % ell
        if denominator == 0:
            images.append(infinity)
        else:
            images.append((a*x + b)*pow(denominator, -1, ell) % ell)
    if c % ell == 0:
        images.append(infinity)
    else:
        images.append(a*pow(c, -1, ell) % ell)
    return tuple(images)


def _companion(alpha: int, ell: int) -> np.ndarray:
    return np.array([[0, ell - 1], [1, alpha]], dtype=np.int64)


@lru_cache(maxsize=None)
def companion_traces(ell: int, order: int) -> Tuple[int, ...]:
    """Traces whose companion matrix has prime ``order`` in ``PSL(2, ell)``.

    >>> companion_traces(7, 3)
    (1, 6)
    """
    traces = []
    for alpha in range(ell):
        C = _companion(alpha, ell)
        acc = np.eye(2, dtype=np.int64)
        for _ in range(order):
            acc = acc @ C % ell
        if is_scalar(acc, ell):
            traces.append(alpha)
    return tuple(traces)


def _powers(M: np.ndarray, order: int, ell: int) -> List[np.ndarray]:
    # M^order is -I or I, so exponents reduce mod 2*order
    powers = [np.broadcast_to(np.eye(2, dtype=np.int64), M.shape)]
    for _ in range(2*order - 1):
        powers.append(powers[-1] @ M % ell)
    return powers


def _relators_hold(
    P: Presentation, images: Sequence[np.ndarray], orders: Sequence[int],
    ell: int
) -> np.ndarray:
    powers = [
        _powers(M, order, ell) for M, order in zip(images, orders)
    ]
    batch = images[0].shape[:-2]
    keep = np.ones(batch, dtype=bool)
    for relator in P.relators:
        acc = np.broadcast_to(np.eye(2, dtype=np.int64), batch + (2, 2))
        for generator, exponent in relator.syllables:
            period = 2*orders[generator]
            acc = acc @ powers[generator][exponent % period] % ell
        keep &= is_scalar(acc, ell)
    return keep


@dataclass(frozen=True)
class MatrixRepresentation:
    """Generator images in ``SL(2, ell)``, read modulo sign."""

    field: int
    matrices: Tuple[Matrix, ...]

    def homomorphism(self) -> FiniteHomomorphism:
        return FiniteHomomorphism(
            projective_line_group(self.field),
            tuple(projective_action(M, self.field) for M in self.matrices)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'field': self.field,
            'matrices': [[list(row) for row in M] for M in self.matrices],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'MatrixRepresentation':
        return cls(
            int(data['field']),
            tuple(
                tuple(tuple(int(x) for x in row) for row in M)
                for M in data['matrices']
            )
        )


def _field_search(
    P: Presentation, orders: Sequence[int], triangular: int, ell: int
) -> Optional[MatrixRepresentation]:
    p = orders[triangular]
    if (ell - 1) % p:
        return None
    other = 1 - triangular
    traces = companion_traces(ell, orders[other])
    shears = np.arange(ell, dtype=np.int64)
    for lam in range(2, ell):
        if pow(lam, p, ell) != 1:
            continue
        T = np.zeros((ell, 2, 2), dtype=np.int64)
        T[:, 0, 0] = lam
        T[:, 0, 1] = shears
        T[:, 1, 1] = pow(lam, -1, ell)
        for alpha in traces:
            images = [T, T]
            images[other] = np.broadcast_to(_companion(alpha, ell), T.shape)
            hits = np.flatnonzero(_relators_hold(P, images, orders, ell))
            if len(hits):
                k = int(hits[0])
                return MatrixRepresentation(ell, tuple(
                    tuple(tuple(int(x) for x in row) for row in M[k])
                    for M in images
                ))
    return None


def psl2_search(
    P: Presentation, orders: Sequence[int],
    budget: Optional[Budget] = None, max_field: int = DEFAULT_MAX_FIELD
) -> Optional[MatrixRepresentation]:
    """Representation of a two-generator ``P`` in some ``PSL(2, ell)``.

    Generator ``i`` goes to an element of order ``orders[i]``, an odd
    prime. Fields are tried in increasing order up to ``max_field``, so
    the first hit is the same on every run. Returns None when nothing is
    found or the budget's time runs out.

    >>> from algunknot.constructors import make_element
    >>> from algunknot.constructors import freiheitssatz_presentation
    >>> Q = freiheitssatz_presentation(
    ...     3, 5, make_element(3, 5, ((1, 1), (2, 1))))
    >>> psl2_search(Q, (3, 5)).homomorphism().is_trivial()
    False
    """
    if P.gen_count != 2 or len(orders) != 2:
        raise ValueError(
            f'Need two generators and two orders, got {P.gen_count} and '
            f'{len(orders)}'
        )
    for p in orders:
        if p == 2 or not isprime(p):
            raise ValueError(f'Image order {p} must be an odd prime')
    deadline = None
    if budget is not None:
        deadline = time.monotonic() + budget.time_limit
    for ell in primerange(5, max_field + 1):
        for triangular in (0, 1):
            if deadline is not None and time.monotonic() > deadline:
                return None
            found = _field_search(P, orders, triangular, ell)
            if found is not None:
                return found
    return None
