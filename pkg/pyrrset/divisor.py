# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet divisor algebra
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

from fractions import Fraction
import re
from typing import Iterable, Iterator, Tuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r'^-?\d+(/\d+)?$')


class DimensionMismatchException(ValueError):
    """
    An exception raised when two objects that must share a
    dimension (divisors, structures, region specs) do not.
    """
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual

    def __str__(self):
        return f'Dimension mismatch: expected {self.expected}, got {self.actual}'


# -- Rationals

def parse_rational(text: str) -> Fraction:
    """
    Parse a rational from its text form, ``"a/b"`` or ``"a"``.

    Raises:
        ValueError: if the text is not of that form, or the denominator is zero.
    """
    text = str(text).strip()
    if not _RATIONAL_PATTERN.match(text):
        raise ValueError(f'Invalid rational: {text!r}')
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f'Zero denominator in rational: {text!r}')


def format_rational(value: Fraction) -> str:
    """
    Format a rational as ``"a/b"``, or ``"a"`` when it is an integer.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def to_rational(value: RationalLike) -> Fraction:
    """
    Convert an int, Fraction or rational string to a Fraction.
    Floats are refused so that nothing inexact enters the core.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f'Refusing inexact value {value!r}')
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


# -- Divisor

class Divisor:
    """
    A point of ℚⁿ, viewed as a rational-valued function on ``n`` sites.

    Divisors are immutable. Components are exact `fractions.Fraction`
    values and are accessed with 0-based indexing.

    Args:
        components: The components, as ints, Fractions or rational strings.

    Raises:
        ValueError: If no components are given.
    """
    __slots__ = ('_components',)

    def __init__(self, components: Iterable[RationalLike]):
        values = tuple(to_rational(c) for c in components)
        if len(values) == 0:
            raise ValueError('A divisor needs at least one component')
        object.__setattr__(self, '_components', values)

    def __setattr__(self, name, value):
        raise AttributeError('Divisor is immutable')

    @classmethod
    def zero(cls, n: int) -> 'Divisor':
        return cls([0] * n)

    @classmethod
    def parse(cls, text: str) -> 'Divisor':
        """
        Parse a comma-separated list of rationals, e.g. ``"3,-1"``.
        """
        return cls(parse_rational(part) for part in str(text).split(','))

    # -- Sequence protocol

    @property
    def components(self) -> Tuple[Fraction, ...]:
        return self._components

    def __len__(self) -> int:
        return len(self._components)

    def __getitem__(self, index: int) -> Fraction:
        return self._components[index]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._components)

    # -- Arithmetic

    def _check_length(self, other: 'Divisor'):
        if len(other) != len(self):
            raise DimensionMismatchException(len(self), len(other))

    def __add__(self, other: 'Divisor') -> 'Divisor':
        if not isinstance(other, Divisor):
            return NotImplemented
        self._check_length(other)
        return Divisor(a + b for a, b in zip(self, other))

    def __sub__(self, other: 'Divisor') -> 'Divisor':
        if not isinstance(other, Divisor):
            return NotImplemented
        self._check_length(other)
        return Divisor(a - b for a, b in zip(self, other))

    def __neg__(self) -> 'Divisor':
        return Divisor(-a for a in self)

    def __mul__(self, scalar: RationalLike) -> 'Divisor':
        if isinstance(scalar, Divisor):
            return NotImplemented
        factor = to_rational(scalar)
        return Divisor(factor * a for a in self)

    __rmul__ = __mul__

    # -- Comparison and hashing

    def __eq__(self, other) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def __repr__(self):
        return f'Divisor({str(self)!r})'

    def __str__(self):
        return ','.join(format_rational(c) for c in self._components)

    def to_json_list(self):
        return [format_rational(c) for c in self._components]


# -- Operations

def degree(x: Divisor) -> Fraction:
    """
    Return the degree of a divisor, the exact sum of its components.
    """
    return sum(x, Fraction(0))


def positive_part(x: Divisor) -> Divisor:
    """
    Return x⁺, the componentwise maximum of ``x`` and zero.
    """
    return Divisor(max(c, 0) for c in x)


def negative_part(x: Divisor) -> Divisor:
    """
    Return x⁻, the componentwise minimum of ``x`` and zero.
    """
    return Divisor(min(c, 0) for c in x)


def taxicab(x: Divisor, y: Divisor) -> Fraction:
    """
    Return the exact ℓ¹ distance between two divisors.

    Raises:
        DimensionMismatchException: if the divisors have different lengths.
    """
    if len(x) != len(y):
        raise DimensionMismatchException(len(x), len(y))
    return sum((abs(a - b) for a, b in zip(x, y)), Fraction(0))


def leq(x: Divisor, y: Divisor) -> bool:
    """
    Return `True` iff ``x(i) <= y(i)`` for every coordinate.

    Raises:
        DimensionMismatchException: if the divisors have different lengths.
    """
    if len(x) != len(y):
        raise DimensionMismatchException(len(x), len(y))
    return all(a <= b for a, b in zip(x, y))


def sup_norm(x: Divisor) -> Fraction:
    return max(abs(c) for c in x)
