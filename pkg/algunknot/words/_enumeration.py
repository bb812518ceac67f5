"""
Deterministic enumeration of reduced words.

Order is by length and then lexicographic on letters, where letters are
ordered by generator index with each positive letter before its inverse.
"""
from typing import Iterator, List, Optional, Tuple
from ._word import Word, GeneratorId

Letter = Tuple[int, int]


def _letters(gen_count: int) -> List[Letter]:
    return [(g, s) for g in range(gen_count) for s in (1, -1)]


def _words_of_length(letters: List[Letter], length: int) -> Iterator[Word]:
    prefix: List[Letter] = []

    def extend(last: Optional[Letter]) -> Iterator[Word]:
        if len(prefix) == length:
            yield Word(prefix)
            return
        for letter in letters:
            if last is not None and letter == (last[0], -last[1]):
                continue
            prefix.append(letter)
            yield from extend(letter)
            prefix.pop()

    yield from extend(None)


def enumerate_reduced_words(gen_count: int, max_length: int) -> Iterator[Word]:
    """All freely reduced words of length at most ``max_length``.

    >>> [str(w) for w in enumerate_reduced_words(1, 2)]
    ['1', 'x0', 'x0^-1', 'x0^2', 'x0^-2']
    """
    if max_length < 0:
        raise ValueError(f'max_length={max_length} must be nonnegative')
    letters = _letters(gen_count)
    yield Word.identity()
    for length in range(1, max_length + 1):
        yield from _words_of_length(letters, length)


def _meridian_core(word: Word, meridian: GeneratorId) -> Word:
    """Strip the leading and trailing powers of the meridian."""
    syllables = word.syllables
    if syllables and syllables[0][0] == meridian:
        syllables = syllables[1:]
    if syllables and syllables[-1][0] == meridian:
        syllables = syllables[:-1]
    return Word._from_reduced(syllables)


def enumerate_candidate_conjugators(
    gen_count: int, meridian: GeneratorId, max_length: int
) -> Iterator[Word]:
    """Candidate conjugators with zero abelianized exponent.

    Every generator is taken to be a meridian, so a word lies in the
    commutator subgroup exactly when its total exponent vanishes. Words
    that differ only by multiplying powers of ``meridian`` on either side
    give the same relator up to a boundary twist; only the first one in
    enumeration order is yielded.

    >>> [str(w) for w in enumerate_candidate_conjugators(2, 0, 2)]
    ['1', 'x0.x1^-1', 'x0^-1.x1']
    """
    if not 0 <= meridian < gen_count:
        raise ValueError(
            f'Meridian x{meridian} out of range for {gen_count} generators'
        )
    seen = set()
    for word in enumerate_reduced_words(gen_count, max_length):
        if word.exponent_sum() != 0:
            continue
        core = _meridian_core(word, meridian)
        if core in seen:
            continue
        seen.add(core)
        yield word
