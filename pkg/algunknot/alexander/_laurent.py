"""
Integer Laurent polynomials in ``t`` and dense matrices of them.
"""
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union
import numpy as np
import sympy

T = sympy.Symbol('t')

_TERM = re.compile(r'([+-])?(\d+)?(?:\*?(t)(?:\^(-?\d+))?)?')


class LaurentPoly:
    """Finite sum of integer multiples of powers of ``t``.

    Coefficients are stored as a map from exponent to nonzero integer, so
    the empty map is the zero polynomial.

    Examples
    --------
    >>> p = LaurentPoly.parse('-1+t-t^2')
    >>> str(p * LaurentPoly({1: 1}))
    '-t+t^2-t^3'
    >>> p.evaluate(-1)
    -3
    """

    __slots__ = ('_coefficients',)

    def __init__(self, coefficients: Dict[int, int] = None):
        if coefficients is None:
            coefficients = {}
        self._coefficients = {
            int(e): int(c) for e, c in coefficients.items() if c != 0
        }

    @classmethod
    def constant(cls, c: int) -> 'LaurentPoly':
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> 'LaurentPoly':
        return cls({exponent: c})

    @classmethod
    def parse(cls, text: str) -> 'LaurentPoly':
        """Parse the ascending ``-1+t-t^2`` form. ``0`` is the zero poly."""
        text = text.replace(' ', '')
        if text in ('', '0'):
            return cls()
        coefficients: Dict[int, int] = {}
        position = 0
        while position < len(text):
            match = _TERM.match(text, position)
            if (
                match is None or match.end() == position
                or (match.group(2) is None and match.group(3) is None)
                or (position > 0 and match.group(1) is None)
            ):
                raise ValueError(f'Malformed Laurent polynomial {text!r}')
            sign = -1 if match.group(1) == '-' else 1
            c = int(match.group(2)) if match.group(2) else 1
            if match.group(3) is None:
                exponent = 0
            elif match.group(4) is None:
                exponent = 1
            else:
                exponent = int(match.group(4))
            coefficients[exponent] = coefficients.get(exponent, 0) + sign*c
            position = match.end()
        return cls(coefficients)

    @property
    def coefficients(self) -> Dict[int, int]:
        return dict(self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    def min_exponent(self) -> int:
        return min(self._coefficients, default=0)

    def max_exponent(self) -> int:
        return max(self._coefficients, default=0)

    def shift(self, k: int) -> 'LaurentPoly':
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._coefficients.items()})

    def evaluate(self, t: int) -> Union[int, Fraction]:
        """Value at an integer, exact.

        Negative exponents at ``t`` other than 1 and -1 give a Fraction.
        """
        total = Fraction(0)
        for e, c in self._coefficients.items():
            total += c*Fraction(t)**e
        if total.denominator == 1:
            return int(total)
        return total

    def normalize(self) -> 'LaurentPoly':
        """Unit multiple with lowest exponent 0 and positive top term."""
        if self.is_zero():
            return self
        result = self.shift(-self.min_exponent())
        if result._coefficients[result.max_exponent()] < 0:
            result = -result
        return result

    def to_sympy(self) -> sympy.Poly:
        """The same polynomial over ZZ; exponents must be nonnegative."""
        if self.min_exponent() < 0:
            raise ValueError(f'{self} has negative exponents')
        return sympy.Poly(
            sum(c*T**e for e, c in self._coefficients.items()),
            T, domain='ZZ'
        )

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> 'LaurentPoly':
        return cls({
            monom[0]: int(c) for monom, c in poly.terms()
        })

    def __add__(self, other) -> 'LaurentPoly':
        other = _coerce(other)
        result = dict(self._coefficients)
        for e, c in other._coefficients.items():
            result[e] = result.get(e, 0) + c
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly({e: -c for e, c in self._coefficients.items()})

    def __sub__(self, other) -> 'LaurentPoly':
        return self + (-_coerce(other))

    def __rsub__(self, other) -> 'LaurentPoly':
        return _coerce(other) - self

    def __mul__(self, other) -> 'LaurentPoly':
        other = _coerce(other)
        result: Dict[int, int] = {}
        for e1, c1 in self._coefficients.items():
            for e2, c2 in other._coefficients.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1*c2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coefficients.items())))

    def __str__(self) -> str:
        if not self._coefficients:
            return '0'
        text = ''
        for e in sorted(self._coefficients):
            c = self._coefficients[e]
            sign = '-' if c < 0 else '+'
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                power = 't' if e == 1 else f't^{e}'
                body = power if magnitude == 1 else f'{magnitude}{power}'
            text += sign + body
        return text[1:] if text.startswith('+') else text

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, np.integer)):
        return LaurentPoly.constant(int(value))
    raise TypeError(f'Cannot use {value!r} as a Laurent polynomial')


class LaurentMatrix:
    """Dense ``rows x cols`` grid of Laurent polynomials.

    >>> M = LaurentMatrix(1, 2, [['1-t', 't-1']])
    >>> M.evaluate(-1).tolist()
    [[2, -2]]
    """

    def __init__(
        self, rows: int, cols: int,
        entries: Sequence[Sequence[Union[LaurentPoly, str, int]]] = None
    ):
        if rows < 0 or cols < 0:
            raise ValueError(f'Invalid shape ({rows}, {cols})')
        if entries is None:
            entries = [[LaurentPoly()]*cols for _ in range(rows)]
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ValueError(
                f'Entries do not match the shape ({rows}, {cols})'
            )
        self.rows = rows
        self.cols = cols
        self._entries: Tuple[Tuple[LaurentPoly, ...], ...] = tuple(
            tuple(_entry(value) for value in row) for row in entries
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: Tuple[int, int]) -> LaurentPoly:
        i, j = key
        return self._entries[i][j]

    def row(self, i: int) -> Tuple[LaurentPoly, ...]:
        return self._entries[i]

    def delete_column(self, j: int) -> 'LaurentMatrix':
        if not 0 <= j < self.cols:
            raise ValueError(f'Column {j} out of range')
        return LaurentMatrix(
            self.rows, self.cols - 1,
            [row[:j] + row[j + 1:] for row in self._entries]
        )

    def evaluate(self, t: int) -> np.ndarray:
        """Integer matrix obtained by substituting ``t``.

        Uses Python integers so large entries never overflow.
        """
        if t not in (1, -1):
            raise ValueError(
                f'Only units t = 1 or -1 give integer matrices, got {t}'
            )
        values = np.zeros((self.rows, self.cols), dtype=object)
        for i, row in enumerate(self._entries):
            for j, entry in enumerate(row):
                values[i, j] = int(entry.evaluate(t))
        return values

    def to_sympy(self) -> sympy.Matrix:
        """Polynomial matrix, each row shifted to nonnegative exponents.

        Row shifts change minors only by units.
        """
        rows: List[List[sympy.Expr]] = []
        for row in self._entries:
            low = min(
                (entry.min_exponent() for entry in row if not entry.is_zero()),
                default=0
            )
            rows.append([
                entry.shift(-low).to_sympy().as_expr() for entry in row
            ])
        return sympy.Matrix(self.rows, self.cols, lambda i, j: rows[i][j])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        body = '; '.join(
            ', '.join(str(entry) for entry in row) for row in self._entries
        )
        return f'LaurentMatrix({self.rows}x{self.cols}: [{body}])'


def _entry(value) -> LaurentPoly:
    if isinstance(value, str):
        return LaurentPoly.parse(value)
    return _coerce(value)


def laurent_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    total = LaurentPoly()
    for poly in polys:
        total = total + poly
    return total
