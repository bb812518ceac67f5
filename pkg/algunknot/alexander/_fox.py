"""
Fox free differential calculus.
"""
from typing import Dict, List
from ..words import Word, GeneratorId
from ..constructors import Presentation
from ._laurent import LaurentPoly, LaurentMatrix


class GroupRingElement:
    """Element of the integral group ring of a free group.

    >>> x = GroupRingElement.from_word(Word.generator(0))
    >>> str(x - GroupRingElement.one())
    '-1 + x0'
    """

    __slots__ = ('_terms',)

    def __init__(self, terms: Dict[Word, int] = None):
        if terms is None:
            terms = {}
        self._terms = {w: int(c) for w, c in terms.items() if c != 0}

    @classmethod
    def one(cls) -> 'GroupRingElement':
        return cls({Word.identity(): 1})

    @classmethod
    def from_word(cls, w: Word, c: int = 1) -> 'GroupRingElement':
        return cls({w: c})

    @property
    def terms(self) -> Dict[Word, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def add_term(self, w: Word, c: int):
        """In-place accumulation, used while building derivatives."""
        value = self._terms.get(w, 0) + c
        if value:
            self._terms[w] = value
        else:
            self._terms.pop(w, None)

    def __add__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        result = GroupRingElement(self._terms)
        for w, c in other._terms.items():
            result.add_term(w, c)
        return result

    def __neg__(self) -> 'GroupRingElement':
        return GroupRingElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        return self + (-other)

    def __mul__(self, other) -> 'GroupRingElement':
        if isinstance(other, int):
            return GroupRingElement(
                {w: c*other for w, c in self._terms.items()}
            )
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        result = GroupRingElement()
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                result.add_term(w1*w2, c1*c2)
        return result

    def __rmul__(self, other) -> 'GroupRingElement':
        if isinstance(other, Word):
            return GroupRingElement.from_word(other)*self
        return self*other

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def abelianize(self) -> LaurentPoly:
        """Send every generator to ``t``."""
        coefficients: Dict[int, int] = {}
        for w, c in self._terms.items():
            e = w.exponent_sum()
            coefficients[e] = coefficients.get(e, 0) + c
        return LaurentPoly(coefficients)

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        ordered = sorted(
            self._terms.items(), key=lambda item: item[0].sort_key()
        )
        parts = []
        for w, c in ordered:
            if c == 1:
                text = str(w)
            elif c == -1:
                text = f'-{w}'
            else:
                text = f'{c}*{w}'
            parts.append(text)
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self) -> str:
        return f'GroupRingElement({self})'


def fox_derivative(w: Word, g: GeneratorId) -> GroupRingElement:
    """Fox derivative of ``w`` with respect to generator ``g``.

    >>> str(fox_derivative(Word.parse('x0^-1'), 0))
    '-x0^-1'
    >>> str(fox_derivative(Word.parse('x0.x1.x0^-1.x1^-1'), 0))
    '1 - x0.x1.x0^-1'
    """
    result = GroupRingElement()
    prefix = Word.identity()
    for generator, exponent in w.syllables:
        if generator == g:
            if exponent > 0:
                for k in range(exponent):
                    result.add_term(prefix*Word.generator(g, k), 1)
            else:
                for k in range(1, -exponent + 1):
                    result.add_term(prefix*Word.generator(g, -k), -1)
        prefix = prefix*Word.generator(generator, exponent)
    return result


def abelianized_fox_derivative(w: Word, g: GeneratorId) -> LaurentPoly:
    """``fox_derivative(w, g).abelianize()`` without building group words.

    >>> str(abelianized_fox_derivative(Word.parse('x0.x1.x0^-1.x1^-1'), 0))
    '1-t'
    """
    coefficients: Dict[int, int] = {}
    height = 0
    for generator, exponent in w.syllables:
        if generator == g:
            if exponent > 0:
                exponents = range(height, height + exponent)
                sign = 1
            else:
                exponents = range(height + exponent, height)
                sign = -1
            for e in exponents:
                coefficients[e] = coefficients.get(e, 0) + sign
        height += exponent
    return LaurentPoly(coefficients)


def alexander_matrix(P: Presentation) -> LaurentMatrix:
    """Relator-by-generator matrix of abelianized Fox derivatives.

    >>> from algunknot.constructors import catalog_presentation
    >>> alexander_matrix(catalog_presentation('unknot')).shape
    (0, 1)
    """
    if not P.has_uniform_abelianization():
        raise ValueError(
            f'Presentation {P!r} has mixed abelianization classes; '
            'every relator needs exponent sum 0'
        )
    entries: List[List[LaurentPoly]] = [
        [abelianized_fox_derivative(r, j) for j in range(P.gen_count)]
        for r in P.relators
    ]
    return LaurentMatrix(len(P.relators), P.gen_count, entries)
