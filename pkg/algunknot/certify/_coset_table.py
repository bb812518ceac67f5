"""
Todd-Coxeter coset enumeration, HLT strategy with periodic lookahead.

Column ``2g`` of the table is the action of generator ``x_g`` and column
``2g + 1`` the action of its inverse, so ``c ^ 1`` is the inverse column.
"""
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union
import numpy as np
from ..words import Word
from ..constructors import Presentation
from ._budget import Budget

LOOKAHEAD_START = 4096


@dataclass(frozen=True)
class Completed:
    index: int

    def __str__(self) -> str:
        return f'Completed({self.index})'


@dataclass(frozen=True)
class Exhausted:
    reason: str

    def __str__(self) -> str:
        return f'Exhausted({self.reason})'


Status = Union[Completed, Exhausted]


class _CosetLimit(Exception):
    pass


class _TimeLimit(Exception):
    pass


def word_columns(w: Word) -> List[int]:
    """Table columns read along ``w``.

    >>> word_columns(Word.parse('x1^2.x0^-1'))
    [2, 2, 1]
    """
    return [2*g + (0 if s > 0 else 1) for g, s in w.letters()]


class CosetTable:
    """Coset table of a subgroup of a finitely presented group.

    Parameters
    ----------
    P : Presentation
        The group.
    subgroup_gens : Sequence[Word]
        Generators of the subgroup whose cosets are enumerated.
    max_cosets : int
        Most rows the table may ever hold, live or dead.
    time_limit : Optional[float]
        Wall-clock seconds before giving up.
    """

    def __init__(
        self, P: Presentation, subgroup_gens: Sequence[Word],
        max_cosets: int, time_limit: Optional[float] = None
    ):
        self.presentation = P
        self.subgroup_gens = tuple(subgroup_gens)
        self.max_cosets = max_cosets
        self.time_limit = time_limit
        self.n_columns = 2*P.gen_count
        self.relators = [word_columns(r) for r in P.relators]
        self.subgroup_words = [word_columns(w) for w in self.subgroup_gens]
        self.table: List[List[Optional[int]]] = [[None]*self.n_columns]
        self.p: List[int] = [0]
        self.peak = 1
        self.status: Optional[Status] = None
        self._next_lookahead = LOOKAHEAD_START
        self._deadline: Optional[float] = None

    @property
    def omega(self) -> List[int]:
        """Live cosets."""
        return [c for c in range(len(self.p)) if self.p[c] == c]

    def define(self, alpha: int, column: int):
        if len(self.table) >= self.max_cosets:
            raise _CosetLimit()
        beta = len(self.table)
        self.table.append([None]*self.n_columns)
        self.p.append(beta)
        self.table[alpha][column] = beta
        self.table[beta][column ^ 1] = alpha
        if len(self.table) > self.peak:
            self.peak = len(self.table)

    def scan(self, alpha: int, word: List[int], fill: bool = False):
        table = self.table
        f = alpha
        b = alpha
        i = 0
        j = len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    def rep(self, k: int) -> int:
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def merge(self, k: int, lamda: int, queue: List[int]):
        phi = self.rep(k)
        psi = self.rep(lamda)
        if phi != psi:
            mu, v = min(phi, psi), max(phi, psi)
            self.p[v] = mu
            queue.append(v)

    def coincidence(self, alpha: int, beta: int):
        table = self.table
        queue: List[int] = []
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.pop(0)
            for column in range(self.n_columns):
                delta = table[gamma][column]
                if delta is None:
                    continue
                table[delta][column ^ 1] = None
                mu = self.rep(gamma)
                nu = self.rep(delta)
                if table[mu][column] is not None:
                    self.merge(nu, table[mu][column], queue)
                elif table[nu][column ^ 1] is not None:
                    self.merge(mu, table[nu][column ^ 1], queue)
                else:
                    table[mu][column] = nu
                    table[nu][column ^ 1] = mu

    def look_ahead(self):
        """Scan every live coset under every relator without defining."""
        p = self.p
        for beta in range(len(self.table)):
            if p[beta] != beta:
                continue
            for word in self.relators:
                self.scan(beta, word)
                if p[beta] != beta:
                    break

    def compress(self) -> List[int]:
        """Drop dead cosets; returns the old-to-new index map."""
        live = self.omega
        mapping = [-1]*len(self.table)
        for new, old in enumerate(live):
            mapping[old] = new
        for old in range(len(self.table)):
            if mapping[old] < 0:
                mapping[old] = mapping[self.rep(old)]
        self.table = [
            [None if v is None else mapping[v] for v in self.table[old]]
            for old in live
        ]
        self.p = list(range(len(live)))
        return mapping

    def _check_time(self):
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise _TimeLimit()

    def run(self) -> Status:
        """Enumerate until the table closes or a limit is reached."""
        if self.time_limit is not None:
            self._deadline = time.monotonic() + self.time_limit
        try:
            for word in self.subgroup_words:
                self.scan(0, word, fill=True)
            alpha = 0
            while alpha < len(self.table):
                self._check_time()
                if self.p[alpha] == alpha:
                    for word in self.relators:
                        self.scan(alpha, word, fill=True)
                        if self.p[alpha] < alpha:
                            break
                    if self.p[alpha] == alpha:
                        for column in range(self.n_columns):
                            if self.table[alpha][column] is None:
                                self.define(alpha, column)
                alpha += 1
                if len(self.table) >= self._next_lookahead:
                    alpha = self._lookahead_at(alpha)
        except _CosetLimit:
            self.status = Exhausted(
                f'coset limit {self.max_cosets} reached'
            )
            return self.status
        except _TimeLimit:
            self.status = Exhausted(f'time limit {self.time_limit}s reached')
            return self.status
        self.compress()
        self.status = Completed(len(self.table))
        return self.status

    def _lookahead_at(self, alpha: int) -> int:
        """Lookahead and compress between two coset iterations.

        Returns the position of the next coset to process.
        """
        self.look_ahead()
        processed_live = sum(
            1 for c in range(alpha) if self.p[c] == c
        )
        self.compress()
        self._next_lookahead = max(2*len(self.table), LOOKAHEAD_START)
        return processed_live

    @property
    def index(self) -> Optional[int]:
        if isinstance(self.status, Completed):
            return self.status.index
        return None

    def permutations(self) -> np.ndarray:
        """Action of each generator on the cosets of a completed table."""
        if not isinstance(self.status, Completed):
            raise ValueError(f'Table is not completed: {self.status}')
        return np.array(
            [[row[2*g] for row in self.table]
             for g in range(self.presentation.gen_count)],
            dtype=np.int64
        ).reshape(self.presentation.gen_count, len(self.table))

    def is_consistent(self) -> bool:
        """Every relator closes at every coset; subgroup fixes coset 0."""
        if not isinstance(self.status, Completed):
            return False
        table = self.table
        for row in table:
            if any(v is None for v in row):
                return False
        for c, row in enumerate(table):
            for column in range(self.n_columns):
                if table[row[column]][column ^ 1] != c:
                    return False

        def trace(c: int, word: List[int]) -> int:
            for column in word:
                c = table[c][column]
            return c

        for c in range(len(table)):
            if any(trace(c, word) != c for word in self.relators):
                return False
        return all(trace(0, word) == 0 for word in self.subgroup_words)


def todd_coxeter(
    P: Presentation, subgroup_gens: Sequence[Word], budget: Budget,
    max_cosets: Optional[int] = None
) -> CosetTable:
    """Enumerate the cosets of ``<subgroup_gens>`` in the group of ``P``.

    ``max_cosets`` overrides ``budget.max_cosets``.

    >>> from algunknot.constructors import catalog_presentation
    >>> trefoil = catalog_presentation('3_1')
    >>> gens = [Word.generator(0), Word.generator(1)]
    >>> todd_coxeter(trefoil, gens, Budget()).status
    Completed(index=1)
    """
    limit = budget.max_cosets if max_cosets is None else max_cosets
    C = CosetTable(P, subgroup_gens, limit, budget.time_limit)
    C.run()
    return C
