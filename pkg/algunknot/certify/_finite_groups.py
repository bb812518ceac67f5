"""
Finite permutation groups and backtracking homomorphism search.

Permutations are integer arrays ``perm[i] = image of i``. Words act as
composed functions with the rightmost letter applied first, so the image
of ``l1 l2 ... lk`` is ``l1 o l2 o ... o lk``.
"""
import re
import time
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import (
    Any, Dict, Iterator, List, Optional, Sequence, Tuple
)
import numpy as np
from sympy import isprime
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup
from ..utils import identity
from ..words import Word, GeneratorId, Homomorphism
from ..constructors import Presentation
from ._budget import Budget

Perm = Tuple[int, ...]
OrderConstraint = Tuple[GeneratorId, int]


@dataclass(frozen=True)
class FiniteGroupSpec:
    """Finite target group given by permutation generators."""

    name: str
    degree: int
    generators: Tuple[Perm, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'degree': self.degree,
            'generators': [list(g) for g in self.generators],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FiniteGroupSpec':
        return cls(
            data['name'], data['degree'],
            tuple(tuple(g) for g in data['generators'])
        )


def symmetric_group(n: int) -> FiniteGroupSpec:
    """``S_n`` on ``n`` points, ``n <= 8``.

    >>> symmetric_group(3).degree
    3
    """
    if not 2 <= n <= 8:
        raise ValueError(f'Symmetric group S{n} unsupported, need 2 <= n <= 8')
    generators = tuple(
        tuple(int(i) for i in g.array_form)
        for g in SymmetricGroup(n).generators
    )
    return FiniteGroupSpec(f'S{n}', n, generators)


def cyclic_group(n: int) -> FiniteGroupSpec:
    """``Z_n`` acting on itself by translation.

    >>> cyclic_group(5).generators
    ((1, 2, 3, 4, 0),)
    """
    if n < 2:
        raise ValueError(f'Cyclic group Z{n} unsupported, need n >= 2')
    return FiniteGroupSpec(
        f'Z{n}', n, (tuple((i + 1) % n for i in range(n)),)
    )


def psl2(ell: int) -> FiniteGroupSpec:
    """``PSL(2, ell)`` as a search target, ``ell`` prime <= 13."""
    if not isprime(ell) or ell > 13:
        raise ValueError(f'PSL(2,{ell}) unsupported, need a prime <= 13')
    return projective_line_group(ell)


def projective_line_group(ell: int) -> FiniteGroupSpec:
    """``PSL(2, ell)`` acting on the projective line over ``F_ell``.

    The points are ``0..ell-1`` and ``ell`` for infinity; the generators
    are ``x -> x + 1`` and ``x -> -1/x``. Any prime is accepted, since
    nothing here enumerates the group.

    >>> projective_line_group(31).degree
    32
    """
    if not isprime(ell):
        raise ValueError(f'PSL(2,{ell}) needs a prime field, got {ell}')
    infinity = ell
    translate = tuple(
        [(x + 1) % ell for x in range(ell)] + [infinity]
    )
    invert = [0]*(ell + 1)
    invert[0] = infinity
    invert[infinity] = 0
    for x in range(1, ell):
        invert[x] = (-pow(x, -1, ell)) % ell
    return FiniteGroupSpec(
        f'PSL(2,{ell})', ell + 1, (translate, tuple(invert))
    )


def cayley_table_group(
    name: str, table: Sequence[Sequence[int]]
) -> FiniteGroupSpec:
    """Group given by a multiplication table, as its left regular action.

    >>> cayley_table_group('Z3', [[0, 1, 2], [1, 2, 0], [2, 0, 1]]).degree
    3
    """
    T = np.asarray(table, dtype=np.int64)
    n = T.shape[0]
    if T.ndim != 2 or T.shape != (n, n) or n == 0:
        raise ValueError(f'Cayley table of {name} must be square')
    if T.min() < 0 or T.max() >= n:
        raise ValueError(f'Cayley table of {name} has out-of-range entries')
    for axis in (0, 1):
        if not np.all(np.sort(T, axis=axis) == np.sort(
            np.arange(n)[:, None] if axis == 0 else np.arange(n)[None, :],
            axis=axis
        )):
            raise ValueError(f'Cayley table of {name} is not a Latin square')
    if not np.array_equal(T[T, :], T[:, T]):
        raise ValueError(f'Cayley table of {name} is not associative')
    generators = tuple(tuple(int(x) for x in T[a]) for a in range(n))
    return FiniteGroupSpec(name, n, generators)


_PSL_PATTERN = re.compile(r'^PSL\(2,\s*(\d+)\)$')
_SYM_PATTERN = re.compile(r'^S(\d+)$')
_CYCLIC_PATTERN = re.compile(r'^Z(\d+)$')


def target_from_name(name: str) -> FiniteGroupSpec:
    """Resolve ``S<n>``, ``Z<n>`` or ``PSL(2,<ell>)``."""
    match = _CYCLIC_PATTERN.match(name)
    if match:
        return cyclic_group(int(match.group(1)))
    match = _SYM_PATTERN.match(name)
    if match:
        return symmetric_group(int(match.group(1)))
    match = _PSL_PATTERN.match(name)
    if match:
        return psl2(int(match.group(1)))
    raise ValueError(f'Unsupported target group {name!r}')


DEFAULT_LADDER = (
    'S3', 'S4', 'S5', 'PSL(2,5)', 'PSL(2,7)',
    'S6', 'S7', 'S8', 'PSL(2,11)', 'PSL(2,13)'
)

# Register your targets here.
TARGETS: Dict[str, FiniteGroupSpec] = {
    name: target_from_name(name) for name in DEFAULT_LADDER
}


def register_target(spec: FiniteGroupSpec):
    TARGETS[spec.name] = spec


def get_target(name: str) -> FiniteGroupSpec:
    if name in TARGETS:
        return TARGETS[name]
    return target_from_name(name)


@dataclass(frozen=True)
class _GroupData:
    elements: np.ndarray
    inverses: np.ndarray
    orders: np.ndarray
    class_ids: np.ndarray
    class_reps: Tuple[int, ...]
    lookup: Dict[bytes, int]


@lru_cache(maxsize=None)
def group_data(spec: FiniteGroupSpec) -> _GroupData:
    """Elements, orders and conjugacy classes, computed once per target."""
    group = PermutationGroup([Permutation(list(g)) for g in spec.generators])
    forms = sorted(
        tuple(int(i) for i in af) for af in group.generate(af=True)
    )
    elements = np.array(forms, dtype=np.int64).reshape(-1, spec.degree)
    lookup = {row.tobytes(): k for k, row in enumerate(elements)}
    inverses = np.argsort(elements, axis=1)
    orders = np.array(
        [Permutation(list(row)).order() for row in forms], dtype=np.int64
    )

    def index_of(p: Permutation) -> int:
        form = Permutation(p.array_form, size=spec.degree).array_form
        return lookup[np.array(form, dtype=np.int64).tobytes()]

    classes = sorted(
        (sorted(index_of(p) for p in cls)
         for cls in group.conjugacy_classes()),
        key=lambda members: members[0]
    )
    class_ids = np.full(len(elements), -1, dtype=np.int64)
    for class_id, members in enumerate(classes):
        class_ids[members] = class_id
    reps = tuple(members[0] for members in classes)
    return _GroupData(elements, inverses, orders, class_ids, reps, lookup)


def element_index(spec: FiniteGroupSpec, perm: Sequence[int]) -> int:
    data = group_data(spec)
    key = np.asarray(perm, dtype=np.int64).tobytes()
    if key not in data.lookup:
        raise ValueError(f'{tuple(perm)} is not an element of {spec.name}')
    return data.lookup[key]


@lru_cache(maxsize=None)
def element_words(spec: FiniteGroupSpec) -> Dict[int, Word]:
    """Shortest words in the target generators, by breadth-first search."""
    data = group_data(spec)
    gens = [np.asarray(g, dtype=np.int64) for g in spec.generators]
    start = data.lookup[np.arange(spec.degree, dtype=np.int64).tobytes()]
    words = {start: Word.identity()}
    queue = deque([start])
    while queue:
        k = queue.popleft()
        acc = data.elements[k]
        for i, g in enumerate(gens):
            for sign, perm in ((1, g), (-1, np.argsort(g))):
                image = data.lookup[acc[perm].tobytes()]
                if image not in words:
                    words[image] = words[k]*Word.generator(i, sign)
                    queue.append(image)
    return words


def evaluate_word(
    images: Sequence[np.ndarray], w: Word, degree: int
) -> np.ndarray:
    """Permutation image of ``w`` under generator images."""
    acc = np.arange(degree, dtype=np.int64)
    for generator, exponent in w.syllables:
        perm = np.asarray(images[generator], dtype=np.int64)
        if exponent < 0:
            perm = np.argsort(perm)
        for _ in range(abs(exponent)):
            acc = acc[perm]
    return acc


@dataclass(frozen=True)
class FiniteHomomorphism:
    """Homomorphism onto a finite permutation group, by generator images."""

    target: FiniteGroupSpec
    images: Tuple[Perm, ...]

    def evaluate(self, w: Word) -> np.ndarray:
        if w.max_generator() >= len(self.images):
            raise ValueError(f'Word {w} uses generators with no image')
        return evaluate_word(
            [np.array(p) for p in self.images], w, self.target.degree
        )

    def kills(self, w: Word) -> bool:
        return bool(np.all(
            self.evaluate(w) == np.arange(self.target.degree)
        ))

    def is_trivial(self) -> bool:
        identity_perm = tuple(range(self.target.degree))
        return all(p == identity_perm for p in self.images)

    def noncommuting_pair(self) -> Optional[Tuple[int, int]]:
        """First pair of generators whose images do not commute."""
        for i in range(len(self.images)):
            for j in range(i + 1, len(self.images)):
                a = np.array(self.images[i])
                b = np.array(self.images[j])
                if not np.array_equal(a[b], b[a]):
                    return (i, j)
        return None

    def homomorphism(self) -> Homomorphism:
        """The same map as words in the target's generators."""
        words = element_words(self.target)
        return Homomorphism(
            [words[element_index(self.target, p)] for p in self.images],
            len(self.target.generators)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'target': self.target.to_dict(),
            'images': [list(p) for p in self.images],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FiniteHomomorphism':
        return cls(
            FiniteGroupSpec.from_dict(data['target']),
            tuple(tuple(int(i) for i in p) for p in data['images'])
        )


def _compose_batch(
    acc: np.ndarray, perms: np.ndarray
) -> np.ndarray:
    """Row-wise ``acc o perms`` for batches of shape (m, degree)."""
    return np.take_along_axis(acc, perms, axis=1)


def iter_homomorphisms(
    P: Presentation,
    target: FiniteGroupSpec,
    constraints: Sequence[OrderConstraint] = (),
    budget: Optional[Budget] = None,
    conjugate_meridians: bool = True,
    progress=identity,
) -> Iterator[FiniteHomomorphism]:
    """Homomorphisms from the group of ``P`` to ``target``, lazily.

    The distinguished meridian ranges over conjugacy class representatives,
    so each homomorphism is found up to conjugation. With
    ``conjugate_meridians`` the other meridians are kept in the class of
    its image. Relators are checked as soon as all their generators have
    images.
    """
    data = group_data(target)
    required: Dict[int, int] = {}
    for generator, order in constraints:
        if not 0 <= generator < P.gen_count:
            raise ValueError(f'Constraint on unknown generator x{generator}')
        required[generator] = order
    deadline = None
    if budget is not None:
        deadline = time.monotonic() + budget.time_limit

    d = P.distinguished
    order = [d] + [g for g in range(P.gen_count) if g != d]
    position = {g: k for k, g in enumerate(order)}
    checks: List[List[Word]] = [[] for _ in order]
    for r in P.relators:
        last = max(position[g] for g in r.generators())
        checks[last].append(r)

    all_indices = np.arange(len(data.elements))

    def candidates(level: int, assigned: List[int]) -> np.ndarray:
        g = order[level]
        if level == 0:
            pool = np.array(data.class_reps, dtype=np.int64)
        elif conjugate_meridians and P.meridians[g]:
            pool = all_indices[data.class_ids == data.class_ids[assigned[0]]]
        else:
            pool = all_indices
        if g in required:
            pool = pool[data.orders[pool] == required[g]]
        return pool

    def survivors(level: int, assigned: List[int], pool: np.ndarray):
        if not checks[level] or len(pool) == 0:
            return pool
        g = order[level]
        fixed = {
            order[k]: data.elements[assigned[k]] for k in range(level)
        }
        batch = data.elements[pool]
        batch_inv = data.inverses[pool]
        keep = np.ones(len(pool), dtype=bool)
        for r in checks[level]:
            acc = np.tile(np.arange(target.degree), (len(pool), 1))
            for generator, exponent in r.syllables:
                for _ in range(abs(exponent)):
                    if generator == g:
                        acc = _compose_batch(
                            acc, batch if exponent > 0 else batch_inv
                        )
                    else:
                        perm = fixed[generator]
                        if exponent < 0:
                            perm = np.argsort(perm)
                        acc = acc[:, perm]
            keep &= np.all(acc == np.arange(target.degree), axis=1)
        return pool[keep]

    assigned: List[int] = []

    def search(level: int) -> Iterator[FiniteHomomorphism]:
        if deadline is not None and time.monotonic() > deadline:
            return
        if level == len(order):
            images = [None]*P.gen_count
            for k, g in enumerate(order):
                images[g] = tuple(int(x) for x in data.elements[assigned[k]])
            yield FiniteHomomorphism(target, tuple(images))
            return
        pool = survivors(level, assigned, candidates(level, assigned))
        iterable = progress(pool) if level == 0 else pool
        for index in iterable:
            assigned.append(int(index))
            yield from search(level + 1)
            assigned.pop()

    yield from search(0)


def hom_search(
    P: Presentation,
    target: FiniteGroupSpec,
    constraints: Sequence[OrderConstraint] = (),
    budget: Optional[Budget] = None,
    limit: Optional[int] = None,
    conjugate_meridians: bool = True,
) -> List[FiniteHomomorphism]:
    """Up to ``limit`` homomorphisms, in deterministic order.

    >>> from algunknot.constructors import catalog_presentation
    >>> homs = hom_search(catalog_presentation('3_1'), symmetric_group(3),
    ...                   [(0, 2)], limit=3)
    >>> [h.noncommuting_pair() for h in homs]
    [None, (0, 1), (0, 1)]
    """
    if limit is None:
        limit = budget.max_candidates if budget is not None else 1
    found = []
    for h in iter_homomorphisms(
        P, target, constraints, budget, conjugate_meridians
    ):
        found.append(h)
        if len(found) >= limit:
            break
    return found
