"""
Freely reduced words over indexed generators.

Words are immutable and hashable, so they can be shared between worker
processes and used as dictionary keys.
"""
import re
from typing import Iterable, FrozenSet, List, Optional, Tuple
import numpy as np

GeneratorId = int
Syllable = Tuple[int, int]
ExponentVector = np.ndarray

_SYLLABLE_PATTERN = re.compile(r'^x(\d+)(?:\^(-?\d+))?$')


def _free_reduce(raw: Iterable[Tuple[int, int]]) -> Tuple[Syllable, ...]:
    """Free reduction with a stack of syllables."""
    stack: List[List[int]] = []
    for generator, exponent in raw:
        generator = int(generator)
        exponent = int(exponent)
        if generator < 0:
            raise ValueError(
                f'Generator index {generator} must be nonnegative'
            )
        if exponent == 0:
            continue
        if stack and stack[-1][0] == generator:
            stack[-1][1] += exponent
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([generator, exponent])
    return tuple((g, e) for g, e in stack)


def _letter_key(generator: int, sign: int) -> int:
    # Positive letter before its inverse, then by generator index.
    return 2*generator + (0 if sign > 0 else 1)


class Word:
    """Freely reduced word stored in syllable form.

    Each syllable is a pair ``(generator, exponent)`` and adjacent
    syllables always have distinct generators.

    Parameters
    ----------
    raw : Iterable[Tuple[int, int]]
        Pairs of generator index and exponent, in any state of reduction.

    Examples
    --------
    >>> Word([(0, 2), (0, 3)])
    Word('x0^5')
    >>> str(Word([(0, 1), (1, 1), (1, -1), (2, 1)]))
    'x0.x2'
    >>> str(Word.parse('x1^-1.x0^2') * Word.parse('x0^-2'))
    'x1^-1'
    """

    __slots__ = ('_syllables', '_hash')

    def __init__(self, raw: Iterable[Tuple[int, int]] = ()):
        self._syllables = _free_reduce(raw)
        self._hash: Optional[int] = None

    @classmethod
    def _from_reduced(cls, syllables: Tuple[Syllable, ...]) -> 'Word':
        word = cls.__new__(cls)
        word._syllables = syllables
        word._hash = None
        return word

    @classmethod
    def identity(cls) -> 'Word':
        return cls._from_reduced(())

    @classmethod
    def generator(cls, index: GeneratorId, exponent: int = 1) -> 'Word':
        return cls([(index, exponent)])

    @classmethod
    def parse(cls, text: str) -> 'Word':
        """Parse the compact text form, e.g. ``x0^2.x1^-1``.

        The identity is written ``1``; the empty string is accepted too.
        """
        text = text.strip()
        if text in ('', '1'):
            return cls.identity()
        raw = []
        for token in text.split('.'):
            match = _SYLLABLE_PATTERN.match(token.strip())
            if match is None:
                raise ValueError(
                    f'Malformed word syllable {token!r} in {text!r}'
                )
            exponent = int(match.group(2)) if match.group(2) else 1
            if exponent == 0:
                raise ValueError(f'Zero exponent in word {text!r}')
            raw.append((int(match.group(1)), exponent))
        return cls(raw)

    @property
    def syllables(self) -> Tuple[Syllable, ...]:
        return self._syllables

    def is_identity(self) -> bool:
        return not self._syllables

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self._syllables)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._syllables == other._syllables

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._syllables)
        return self._hash

    def __reduce__(self):
        return (Word, (self._syllables,))

    def __mul__(self, other: 'Word') -> 'Word':
        if not isinstance(other, Word):
            return NotImplemented
        if not other._syllables:
            return self
        if not self._syllables:
            return other
        return Word(self._syllables + other._syllables)

    def __pow__(self, n: int) -> 'Word':
        if n < 0:
            return self.inverse() ** (-n)
        if len(self._syllables) == 1:
            generator, exponent = self._syllables[0]
            return Word([(generator, exponent*n)])
        return Word(self._syllables * n)

    def inverse(self) -> 'Word':
        return Word._from_reduced(
            tuple((g, -e) for g, e in reversed(self._syllables))
        )

    def letters(self) -> List[Tuple[int, int]]:
        """Expanded letters ``(generator, +1 or -1)``."""
        result = []
        for generator, exponent in self._syllables:
            sign = 1 if exponent > 0 else -1
            result.extend([(generator, sign)]*abs(exponent))
        return result

    def generators(self) -> FrozenSet[int]:
        return frozenset(g for g, _ in self._syllables)

    def max_generator(self) -> int:
        """Largest generator index appearing, or -1 for the identity."""
        return max((g for g, _ in self._syllables), default=-1)

    def exponent_sum(self) -> int:
        return sum(e for _, e in self._syllables)

    def shift(self, offset: int) -> 'Word':
        """Reindex every generator by ``offset``."""
        return Word._from_reduced(
            tuple((g + offset, e) for g, e in self._syllables)
        )

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Length-then-lexicographic key by (generator index, sign)."""
        return (
            len(self),
            tuple(_letter_key(g, s) for g, s in self.letters())
        )

    def is_cyclically_reduced(self) -> bool:
        syllables = self._syllables
        return len(syllables) < 2 or syllables[0][0] != syllables[-1][0]

    def cyclic_reduce(self) -> 'Word':
        """Cyclically reduced conjugate obtained by trimming the ends.

        >>> str(Word.parse('x0.x1.x0^-1').cyclic_reduce())
        'x1'
        >>> str(Word.parse('x0.x1.x0^2').cyclic_reduce())
        'x0^3.x1'
        """
        syllables = list(self._syllables)
        while len(syllables) >= 2 and syllables[0][0] == syllables[-1][0]:
            generator = syllables[0][0]
            exponent = syllables[0][1] + syllables[-1][1]
            middle = syllables[1:-1]
            if exponent == 0:
                syllables = middle
            else:
                syllables = [(generator, exponent)] + middle
        return Word._from_reduced(tuple(syllables))

    def cyclic_key(self) -> Tuple[Syllable, ...]:
        """Canonical key up to cyclic rotation and inversion."""
        reduced = self.cyclic_reduce()._syllables
        if not reduced:
            return ()
        inverse = tuple((g, -e) for g, e in reversed(reduced))
        candidates = []
        for syllables in (reduced, inverse):
            for i in range(len(syllables)):
                candidates.append(syllables[i:] + syllables[:i])
        return min(candidates)

    def __str__(self) -> str:
        if not self._syllables:
            return '1'
        return '.'.join(
            f'x{g}' if e == 1 else f'x{g}^{e}' for g, e in self._syllables
        )

    def __repr__(self) -> str:
        return f"Word('{self}')"


def reduce(raw: Iterable[Tuple[GeneratorId, int]]) -> Word:
    """Freely reduce a list of (generator, exponent) pairs.

    >>> str(reduce([(0, 1), (0, -1)]))
    '1'
    >>> str(reduce([(0, 2), (0, 3)]))
    'x0^5'
    """
    return Word(raw)


def conjugate(a: Word, g: Word) -> Word:
    """The conjugate ``a^g = g^-1 a g``."""
    return g.inverse() * a * g


def commutator(a: Word, b: Word) -> Word:
    """The commutator ``[a, b] = a^-1 b^-1 a b``.

    With this convention ``x^w = x [x, w]``.

    >>> str(commutator(Word.generator(0), Word.generator(1)))
    'x0^-1.x1^-1.x0.x1'
    """
    return a.inverse() * b.inverse() * a * b


def exponent_vector(w: Word, gen_count: int) -> ExponentVector:
    """Total signed exponent of each generator.

    >>> exponent_vector(Word.parse('x0^2.x1^-1'), 2).tolist()
    [2, -1]
    """
    vector = np.zeros(gen_count, dtype=np.int64)
    for generator, exponent in w.syllables:
        if generator >= gen_count:
            raise ValueError(
                f'Generator x{generator} out of range for '
                f'{gen_count} generators'
            )
        vector[generator] += exponent
    return vector
