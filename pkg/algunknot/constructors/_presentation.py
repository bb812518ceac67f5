"""
Finite group presentations with marked meridian generators.
"""
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple
import numpy as np
from ..utils import hash_json
from ..words import Word, GeneratorId, exponent_vector


class Presentation:
    """Finite presentation with meridian bookkeeping.

    Relators are stored freely and cyclically reduced, with duplicates
    under cyclic rotation and inversion removed. Trivial relators are
    dropped.

    Parameters
    ----------
    gen_count : int
        Number of generators ``x0, ..., x{n-1}``.
    relators : Iterable[Word]
        Relator words.
    meridians : Optional[Sequence[bool]]
        Meridian flag of each generator. All generators are meridians if
        omitted.
    distinguished : GeneratorId
        Index of the distinguished meridian.
    label : Optional[str]
        Display name. Not part of the canonical serialization.

    Examples
    --------
    >>> P = Presentation(2, [Word.parse('x0.x1.x0.x1^-1.x0^-1.x1^-1')])
    >>> P.gen_count, len(P.relators)
    (2, 1)
    >>> str(Presentation(1, []))
    '< x0 | >'
    """

    def __init__(
        self,
        gen_count: int,
        relators: Iterable[Word] = (),
        meridians: Optional[Sequence[bool]] = None,
        distinguished: GeneratorId = 0,
        label: Optional[str] = None,
    ):
        if gen_count < 1:
            raise ValueError(f'gen_count={gen_count} must be at least 1')
        if meridians is None:
            meridians = [True]*gen_count
        if len(meridians) != gen_count:
            raise ValueError(
                f'Got {len(meridians)} meridian flags '
                f'for {gen_count} generators'
            )
        if not 0 <= distinguished < gen_count:
            raise ValueError(
                f'Distinguished meridian x{distinguished} out of range'
            )
        if not meridians[distinguished]:
            raise ValueError(
                f'Distinguished generator x{distinguished} is not a meridian'
            )
        self._gen_count = gen_count
        self._meridians = tuple(bool(flag) for flag in meridians)
        self._distinguished = distinguished
        self.label = label

        cleaned: List[Word] = []
        keys = set()
        for relator in relators:
            if not isinstance(relator, Word):
                raise TypeError(f'Relator {relator!r} is not a Word')
            if relator.max_generator() >= gen_count:
                raise ValueError(
                    f'Relator {relator} uses a generator beyond '
                    f'x{gen_count - 1}'
                )
            reduced = relator.cyclic_reduce()
            if reduced.is_identity():
                continue
            key = reduced.cyclic_key()
            if key in keys:
                continue
            keys.add(key)
            cleaned.append(reduced)
        self._relators = tuple(cleaned)

    @property
    def gen_count(self) -> int:
        return self._gen_count

    @property
    def relators(self) -> Tuple[Word, ...]:
        return self._relators

    @property
    def meridians(self) -> Tuple[bool, ...]:
        return self._meridians

    @property
    def distinguished(self) -> GeneratorId:
        return self._distinguished

    @property
    def meridian_word(self) -> Word:
        return Word.generator(self._distinguished)

    @property
    def meridian_indices(self) -> List[int]:
        return [i for i, flag in enumerate(self._meridians) if flag]

    def is_all_meridian(self) -> bool:
        return all(self._meridians)

    def has_uniform_abelianization(self) -> bool:
        """True if sending every generator to ``t`` is well defined."""
        return all(r.exponent_sum() == 0 for r in self._relators)

    def with_relators(
        self, extra: Iterable[Word], label: Optional[str] = None
    ) -> 'Presentation':
        """Same generators with extra relators appended."""
        return Presentation(
            self._gen_count,
            list(self._relators) + list(extra),
            self._meridians,
            self._distinguished,
            label=label if label is not None else self.label,
        )

    def require_meridian(self, generator: GeneratorId):
        if not 0 <= generator < self._gen_count:
            raise ValueError(
                f'Generator x{generator} out of range for '
                f'{self._gen_count} generators'
            )
        if not self._meridians[generator]:
            raise ValueError(f'Generator x{generator} is not a meridian')

    def exponent_matrix(self) -> np.ndarray:
        """Relator-by-generator matrix of exponent sums."""
        matrix = np.zeros((len(self._relators), self._gen_count), dtype=int)
        for i, relator in enumerate(self._relators):
            matrix[i] = exponent_vector(relator, self._gen_count)
        return matrix

    def total_length(self) -> int:
        return sum(len(r) for r in self._relators)

    def to_dict(self) -> Dict[str, Any]:
        """Canonical serialization used for hashing and certificates."""
        return {
            'generators': self._gen_count,
            'relators': [str(r) for r in self._relators],
            'meridians': list(self._meridians),
            'distinguished': self._distinguished,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Presentation':
        return cls(
            data['generators'],
            [Word.parse(text) for text in data['relators']],
            data.get('meridians'),
            data.get('distinguished', 0),
        )

    @property
    def presentation_hash(self) -> str:
        return hash_json(self.to_dict())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(self.presentation_hash)

    def __str__(self) -> str:
        generators = ', '.join(f'x{i}' for i in range(self._gen_count))
        relators = ', '.join(str(r) for r in self._relators)
        return f'< {generators} | {relators} >'.replace('|  >', '| >')

    def __repr__(self) -> str:
        name = f' {self.label!r}' if self.label else ''
        return (
            f'<Presentation{name}: {self._gen_count} generators, '
            f'{len(self._relators)} relators>'
        )


def validate_presentation(P: Presentation) -> List[str]:
    """List of violated invariants, empty when the presentation is valid."""
    problems = []
    if not P.meridians[P.distinguished]:
        problems.append('distinguished generator is not a meridian')
    if not any(P.meridians):
        problems.append('no meridian generators')
    keys = set()
    for relator in P.relators:
        if relator.is_identity():
            problems.append('trivial relator stored')
        if not relator.is_cyclically_reduced():
            problems.append(f'relator {relator} is not cyclically reduced')
        if relator.max_generator() >= P.gen_count:
            problems.append(f'relator {relator} uses unknown generators')
        key = relator.cyclic_key()
        if key in keys:
            problems.append(f'relator {relator} is duplicated')
        keys.add(key)
    return problems
