"""
Resource budgets and the inconclusive outcome.
"""
from dataclasses import dataclass, asdict, replace
from typing import Any, Dict
from ..utils import get_label

DEFAULT_MAX_COSETS = 1_000_000
DEFAULT_MAX_WORD_LENGTH = 6
DEFAULT_MAX_CANDIDATES = 5000
DEFAULT_TIME_LIMIT = 300.0
DEFAULT_CANDIDATE_COSETS = 20_000


@dataclass(frozen=True)
class Budget:
    """Limits for one certification call.

    Parameters
    ----------
    max_cosets : int
        Coset table size limit for direct certifications.
    max_word_length : int
        Longest candidate conjugator or sweep word.
    max_candidates : int
        Most candidates tried per relator slot in a search.
    time_limit : float
        Wall-clock seconds per certification call.
    candidate_cosets : int
        Coset table size limit for each candidate inside a search.
    """

    max_cosets: int = DEFAULT_MAX_COSETS
    max_word_length: int = DEFAULT_MAX_WORD_LENGTH
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    time_limit: float = DEFAULT_TIME_LIMIT
    candidate_cosets: int = DEFAULT_CANDIDATE_COSETS

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value <= 0:
                raise ValueError(f'Budget {name}={value} must be positive')

    def with_changes(self, **changes) -> 'Budget':
        return replace(self, **changes)

    @property
    def label(self) -> str:
        """Budget class used in cache keys; the time limit is excluded.

        >>> Budget(max_cosets=10, max_word_length=2).label
        'c10_w2_n5000_k20000'
        """
        return (
            f'c{self.max_cosets}_w{self.max_word_length}'
            f'_n{self.max_candidates}_k{self.candidate_cosets}'
        )

    def __str__(self) -> str:
        return get_label('Budget', asdict(self))

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Budget':
        return cls(**data)


@dataclass(frozen=True)
class Inconclusive:
    """A semi-decision that found no certificate within budget."""

    reason: str

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> Dict[str, Any]:
        return {'status': 'Inconclusive', 'reason': self.reason}
