"""Pure-Python set-arithmetic kernels.

Every function takes and returns strictly increasing tuples of ints that fit
in a signed 64-bit word.  The compiled module ``_ckernels`` exposes the same
functions with the same behaviour; ``pfinz.kernels`` picks one at import.
"""

import heapq
from itertools import groupby

from .errors import IntegerOverflow

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def _check(value):
    if value < INT64_MIN or value > INT64_MAX:
        raise IntegerOverflow(f"{value} does not fit in 64 bits")
    return value


def sumset_merge(xs, ys):
    _check(xs[0] + ys[0])
    _check(xs[-1] + ys[-1])
    copies = [[x + y for y in ys] for x in xs]
    return tuple(k for k, _ in groupby(heapq.merge(*copies)))


def sumset_bitset(xs, ys):
    base = _check(xs[0] + ys[0])
    _check(xs[-1] + ys[-1])
    y0 = ys[0]
    ymask = 0
    for y in ys:
        ymask |= 1 << (y - y0)
    x0 = xs[0]
    acc = 0
    for x in xs:
        acc |= ymask << (x - x0)
    bits = bin(acc)[:1:-1]
    return tuple(base + i for i, c in enumerate(bits) if c == "1")


def sumset(xs, ys, threshold):
    span = (xs[-1] - xs[0]) + (ys[-1] - ys[0])
    if span < threshold:
        return sumset_bitset(xs, ys)
    return sumset_merge(xs, ys)


def translate(xs, k):
    _check(xs[0] + k)
    _check(xs[-1] + k)
    return tuple(x + k for x in xs)


def negate(xs):
    _check(-xs[0])
    return tuple(-x for x in reversed(xs))
