"""Non-empty finite sets of integers under set addition.

A :class:`FinSet` is an immutable, strictly increasing tuple of 64-bit
integers.  ``X + Y`` is the sumset, ``X + k`` a translation and ``-X`` the
elementwise negation.  Every arithmetic result is range-checked and raises
:class:`~pfinz.errors.IntegerOverflow` rather than wrapping.

Text form is ``{a,b,c}``, e.g. ``{-3,0,5}``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from . import kernels
from .errors import (
    EmptySetError,
    IntegerOverflow,
    InvalidIntervalError,
    ParseError,
)

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

#: spans below this use the dense bitset sumset path
BITSET_THRESHOLD = 4096


def checked(value: int) -> int:
    """Return ``value`` unchanged, raising IntegerOverflow outside int64."""
    if value < INT64_MIN or value > INT64_MAX:
        raise IntegerOverflow(f"{value} does not fit in 64 bits")
    return value


class FinSet:
    """A non-empty finite set of integers (an element of P_fin(Z))."""

    __slots__ = ("_elems",)

    def __init__(self, values: Iterable[int]):
        elems = tuple(sorted(set(values)))
        if not elems:
            raise EmptySetError("the empty set is not an element of P_fin(Z)")
        for v in elems:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"FinSet elements must be integers, got {v!r}")
        checked(elems[0])
        checked(elems[-1])
        self._elems = elems

    @classmethod
    def _trusted(cls, elems: tuple) -> FinSet:
        # elems already sorted, deduplicated and in range
        obj = cls.__new__(cls)
        obj._elems = elems
        return obj

    @property
    def elems(self) -> tuple:
        return self._elems

    @property
    def min(self) -> int:
        return self._elems[0]

    @property
    def max(self) -> int:
        return self._elems[-1]

    def __len__(self) -> int:
        return len(self._elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self._elems)

    def __contains__(self, value) -> bool:
        return value in self._elems

    def __eq__(self, other) -> bool:
        if isinstance(other, FinSet):
            return self._elems == other._elems
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._elems)

    def __add__(self, other):
        if isinstance(other, FinSet):
            return sumset(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return translate(self, other)
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return translate(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return translate(self, checked(-other))
        return NotImplemented

    def __rsub__(self, other):
        # k - X
        if isinstance(other, int) and not isinstance(other, bool):
            return translate(negate(self), other)
        return NotImplemented

    def __neg__(self) -> FinSet:
        return negate(self)

    def __repr__(self) -> str:
        return f"FinSet({format_set(self)})"

    def __str__(self) -> str:
        return format_set(self)


def make(values: Iterable[int]) -> FinSet:
    """Sorted, deduplicated FinSet of ``values``; raises EmptySetError on ``[]``."""
    return FinSet(values)


def singleton(value: int) -> FinSet:
    return FinSet._trusted((checked(value),))


ZERO = FinSet._trusted((0,))


def sumset(x: FinSet, y: FinSet, threshold: int = BITSET_THRESHOLD) -> FinSet:
    return FinSet._trusted(kernels.sumset(x._elems, y._elems, threshold))


def k_fold(x: FinSet, k: int) -> FinSet:
    """The k-fold sumset ``x + ... + x``; ``k_fold(x, 0)`` is ``{0}``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    result = ZERO
    power = x
    while k:
        if k & 1:
            result = sumset(result, power)
        k >>= 1
        if k:
            power = sumset(power, power)
    return result


def negate(x: FinSet) -> FinSet:
    return FinSet._trusted(kernels.negate(x._elems))


def translate(x: FinSet, k: int) -> FinSet:
    return FinSet._trusted(kernels.translate(x._elems, checked(k)))


def interval(a: int, b: int) -> FinSet:
    """The discrete interval ``{a, a+1, ..., b}``."""
    if a > b:
        raise InvalidIntervalError(f"empty interval [{a}, {b}]")
    checked(a)
    checked(b)
    return FinSet._trusted(tuple(range(a, b + 1)))


def delta_minus(x: FinSet) -> int:
    return checked(x.min - x.max)


def delta_plus(x: FinSet) -> int:
    return checked(x.min + x.max)


def reduce(x: FinSet) -> FinSet:
    """Canonical representative ``x - min x`` of the translation class of x."""
    if x.min == 0:
        return x
    return translate(x, checked(-x.min))


def is_reduced(x: FinSet) -> bool:
    return x.min == 0


def rev(x: FinSet) -> FinSet:
    """The reversal ``max x - x``."""
    return translate(negate(x), x.max)


def parse_set(text: str) -> FinSet:
    """Parse ``{a,b,...}`` (whitespace allowed, decimal, optional minus)."""
    n = len(text)
    i = 0

    def skip(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    i = skip(i)
    if i >= n or text[i] != "{":
        raise ParseError("expected '{'", text, i)
    i = skip(i + 1)
    if i < n and text[i] == "}":
        raise ParseError("empty set literal", text, i)
    values = []
    while True:
        start = i
        if i < n and text[i] == "-":
            i += 1
        digits = i
        while i < n and text[i].isdigit() and text[i].isascii():
            i += 1
        if i == digits:
            raise ParseError("expected an integer", text, start)
        values.append(int(text[start:i]))
        i = skip(i)
        if i >= n:
            raise ParseError("expected ',' or '}'", text, i)
        if text[i] == "}":
            i = skip(i + 1)
            if i != n:
                raise ParseError("trailing characters", text, i)
            break
        if text[i] != ",":
            raise ParseError("expected ',' or '}'", text, i)
        i = skip(i + 1)
    return FinSet(values)


def format_set(x: FinSet) -> str:
    return "{" + ",".join(map(str, x._elems)) + "}"
