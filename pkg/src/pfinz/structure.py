"""Reduced quotients, homomorphisms to Z and the decomposition of automorphisms.

Over Z the minimizer is ``min``, the reduced quotient of P_fin(Z) is
represented by sets ``X - min X``, and every automorphism factors as

    X -> f(X - min X) + a*min X + b*max X,   f in {id, rev}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import finset
from .autgroup import AutElem, IDENTIFY_SWEEP, PROBE_SETS, apply
from .errors import (
    NotDecomposableError,
    NotHomomorphismError,
    NotReducedError,
    ParseError,
)
from .finset import FinSet, checked, make


def minimizer(x: FinSet) -> int:
    return x.min


@dataclass(frozen=True)
class HomDescriptor:
    """The homomorphism ``X -> a*min X + b*max X`` from P_fin(Z) to Z."""

    a: int
    b: int

    def __call__(self, x: FinSet) -> int:
        return self.a * x.min + self.b * x.max


def hom_extract(bb: Callable[[FinSet], int], sweep: Optional[Iterable[FinSet]] = None) -> HomDescriptor:
    """Read ``(a, b)`` off a black-box homomorphism and check it on ``sweep``."""
    h = HomDescriptor(-bb(make([-1, 0])), bb(make([0, 1])))
    for x in IDENTIFY_SWEEP if sweep is None else sweep:
        if bb(x) != h(x):
            raise NotHomomorphismError(f"value on {x} is {bb(x)}, expected {h(x)}")
    return h


_ORIENTATIONS = ("id", "rev")


@dataclass(frozen=True)
class Decomposition:
    """``X -> f(X - min X) + a*min X + b*max X`` with ``f`` one of id, rev."""

    f: str
    a: int
    b: int

    def __post_init__(self):
        if self.f not in _ORIENTATIONS:
            raise ValueError(f"f must be 'id' or 'rev', got {self.f!r}")

    def __call__(self, x: FinSet) -> FinSet:
        return eval_decomposition(self, x)

    def __str__(self) -> str:
        return f"{self.f} ; a={self.a} ; b={self.b}"


_DECOMP_RE = re.compile(r"\s*(id|rev)\s*;\s*a\s*=\s*(-?\d+)\s*;\s*b\s*=\s*(-?\d+)\s*")


def parse_decomposition(text: str) -> Decomposition:
    m = _DECOMP_RE.fullmatch(text)
    if m is None:
        raise ParseError("expected 'id|rev ; a=<int> ; b=<int>'", text, 0)
    return Decomposition(m.group(1), int(m.group(2)), int(m.group(3)))


def eval_decomposition(d: Decomposition, x: FinSet) -> FinSet:
    base = finset.reduce(x)
    if d.f == "rev":
        base = finset.rev(base)
    return finset.translate(base, checked(checked(d.a * x.min) + checked(d.b * x.max)))


def decompose(bb: Callable[[FinSet], FinSet], sweep: Optional[Iterable[FinSet]] = None) -> Decomposition:
    """Factor a black-box automorphism; probes ``{0,1,3}``, ``{0,1}``, ``{1}``."""
    p1, p01, _, p013 = PROBE_SETS
    img = bb(p013).elems
    gaps = tuple(img[i + 1] - img[i] for i in range(len(img) - 1))
    if gaps == (1, 2):
        f = "id"
    elif gaps == (2, 1):
        f = "rev"
    else:
        raise NotDecomposableError(f"image of {p013} has gap pattern {gaps}")
    b = bb(p01).min
    single = bb(p1)
    if len(single) != 1:
        raise NotDecomposableError(f"image of {p1} is {single}, not a singleton")
    d = Decomposition(f, single.min - b, b)
    for x in IDENTIFY_SWEEP if sweep is None else sweep:
        if bb(x) != eval_decomposition(d, x):
            raise NotDecomposableError(f"{d} disagrees with the map on {x}")
    return d


def quotient_action(e: AutElem, x: FinSet) -> FinSet:
    """Induced map of ``e`` on the reduced quotient: id or rev."""
    if not finset.is_reduced(x):
        raise NotReducedError(f"{x} does not have minimum 0")
    return finset.reduce(apply(e, x))
