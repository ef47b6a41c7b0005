"""Automorphisms of P_fin(Z) as closed-form descriptors.

Every automorphism is ``sign * h`` where ``h`` is one of

* ``f[alpha]``: X -> X + alpha*min X - alpha*max X
* ``g[alpha]``: X -> X + (alpha-1)*min X - (alpha+1)*max X

and ``sign * h`` negates the image elementwise.  Descriptors compose in O(1)
through the family table

    f[a] o f[b] = f[a+b]     f[a] o g[b] = g[a+b]
    g[a] o f[b] = g[a-b]     g[a] o g[b] = f[a-b]

together with ``h(-X) = -h'(X)`` where ``h'`` is ``h`` with alpha negated.

The group is isomorphic to Z2 x Dih_inf.  The Z2 factor is generated by the
central involution ``-g[0]`` (X -> min X + max X - X); see :func:`to_z2dih`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .errors import NotRecognizedError, ParseError
from .finset import (
    FinSet,
    checked,
    delta_minus,
    delta_plus,
    make,
    negate,
    translate,
)


class Family(enum.Enum):
    F = "f"
    G = "g"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class AutElem:
    """Descriptor ``(sign, family, alpha)`` of an automorphism of P_fin(Z)."""

    sign: int
    family: Family
    alpha: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not isinstance(self.family, Family):
            raise TypeError(f"family must be a Family, got {self.family!r}")

    def __call__(self, x: FinSet) -> FinSet:
        return apply(self, x)

    def __mul__(self, other: AutElem) -> AutElem:
        return compose(self, other)

    def __pow__(self, n: int) -> AutElem:
        return power(self, n)

    def coefficients(self) -> tuple:
        """``(a, b)`` with unsigned part ``X -> X + a*min X + b*max X``."""
        if self.family is Family.F:
            return self.alpha, -self.alpha
        return self.alpha - 1, -(self.alpha + 1)

    def __str__(self) -> str:
        return format_descriptor(self)


@dataclass(frozen=True)
class DihElem:
    """Element of Dih_inf: reflection flag and translation.

    ``(s1, n1) * (s2, n2) = (s1 xor s2, n1 + (-1)**s1 * n2)``.
    """

    refl: bool
    trans: int

    def __mul__(self, other: DihElem) -> DihElem:
        step = -other.trans if self.refl else other.trans
        return DihElem(self.refl != other.refl, self.trans + step)

    def inverse(self) -> DihElem:
        if self.refl:
            return self
        return DihElem(False, -self.trans)

    def __str__(self) -> str:
        # "s·r^n" labels the pair (True, n)
        return f"s·r^{self.trans}" if self.refl else f"r^{self.trans}"


@dataclass(frozen=True)
class Z2DihElem:
    central: int
    dih: DihElem

    def __post_init__(self):
        if self.central not in (1, -1):
            raise ValueError(f"central must be +1 or -1, got {self.central!r}")

    def __mul__(self, other: Z2DihElem) -> Z2DihElem:
        return z2dih_mul(self, other)

    def __str__(self) -> str:
        return f"({self.central:+d}, {self.dih})"


@dataclass(frozen=True)
class PhiAB:
    """The endomorphism ``X -> X + a*min X + b*max X``."""

    a: int
    b: int

    def __call__(self, x: FinSet) -> FinSet:
        return phi_ab(self, x)

    @property
    def is_automorphism(self) -> bool:
        return self.a + self.b in (0, -2)


@dataclass(frozen=True)
class NotAutomorphism:
    """Rejection from :func:`classify_phi`: ``witness`` is outside the image."""

    sign: int
    a: int
    b: int
    witness: FinSet

    def __str__(self) -> str:
        return f"not-automorphism; unreachable target {self.witness}"


IDENTITY = AutElem(1, Family.F, 0)
NEGATION = AutElem(-1, Family.F, 0)
CENTRAL = AutElem(-1, Family.G, 0)

PROBE_SETS = (make([1]), make([0, 1]), make([1, 2]), make([0, 1, 3]))


def _shift(e: AutElem, x: FinSet) -> int:
    dm = delta_minus(x)
    if e.family is Family.F:
        return checked(e.alpha * dm)
    return checked(checked(e.alpha * dm) - delta_plus(x))


def apply(e: AutElem, x: FinSet) -> FinSet:
    y = translate(x, _shift(e, x))
    return y if e.sign == 1 else negate(y)


def phi_ab(p: PhiAB, x: FinSet) -> FinSet:
    return translate(x, checked(checked(p.a * x.min) + checked(p.b * x.max)))


def identity() -> AutElem:
    return IDENTITY


def _conj(family: Family, alpha: int) -> tuple:
    return family, -alpha


def _table(f1: Family, a: int, f2: Family, b: int) -> tuple:
    if f1 is Family.F:
        return (f2, a + b)
    if f2 is Family.F:
        return (Family.G, a - b)
    return (Family.F, a - b)


def compose(e1: AutElem, e2: AutElem) -> AutElem:
    """Descriptor of ``e1 o e2`` (``e2`` applied first)."""
    fam, alpha = e1.family, e1.alpha
    if e2.sign == -1:
        fam, alpha = _conj(fam, alpha)
    fam, alpha = _table(fam, alpha, e2.family, e2.alpha)
    return AutElem(e1.sign * e2.sign, fam, alpha)


def inverse(e: AutElem) -> AutElem:
    if e.family is Family.F:
        return e if e.sign == -1 else AutElem(1, Family.F, -e.alpha)
    return e if e.sign == 1 else AutElem(-1, Family.G, -e.alpha)


def power(e: AutElem, n: int) -> AutElem:
    if n < 0:
        e, n = inverse(e), -n
    result = IDENTITY
    while n:
        if n & 1:
            result = compose(result, e)
        n >>= 1
        if n:
            e = compose(e, e)
    return result


def conjugate(e1: AutElem, e2: AutElem) -> AutElem:
    """``e1 o e2 o e1^-1``."""
    return compose(compose(e1, e2), inverse(e1))


def augment(u: int) -> AutElem:
    """Augmentation of the group automorphism ``x -> u*x`` of Z."""
    if u == 1:
        return IDENTITY
    if u == -1:
        return NEGATION
    raise ValueError("Z has only the automorphisms x -> x and x -> -x")


def is_inner(e: AutElem) -> bool:
    return e == IDENTITY or e == NEGATION


def target_solvable(a: int, b: int, c: int, d: int) -> bool:
    """Whether some integers y <= z satisfy

        (a+1)*y + b*z = c
        a*y + (b+1)*z = d

    i.e. whether min/max ``(c, d)`` is attainable by X -> X + a*min X + b*max X.
    """
    s = a + b + 1
    rhs = d + a * d - a * c
    if s == 0:
        return rhs == 0
    return rhs % s == 0


def unreachable_target(a: int, b: int, limit: Optional[int] = None) -> Optional[FinSet]:
    """Smallest target ``{c, d}`` that ``phi_ab`` provably misses, or None.

    ``limit`` bounds ``|c|`` and ``|d|``; without it the search is unbounded,
    which is fine because ``{1}`` is always a witness when ``a + b`` is not
    ``0`` or ``-2``.
    """
    if a + b in (0, -2):
        return None
    for span in range(0, (2 * limit + 1) if limit is not None else 1 << 62):
        for c in _cs_for_span(span, limit):
            d = c + span
            if limit is not None and abs(d) > limit:
                continue
            if not target_solvable(a, b, c, d):
                return make([c, d])
    return None


def _cs_for_span(span: int, limit: Optional[int]) -> Iterator[int]:
    yield 0
    bound = limit if limit is not None else span + 2
    for m in range(1, bound + 1):
        yield m
        yield -m


def classify_phi(sign: int, a: int, b: int):
    """Classify ``sign * phi_{a,b}``: an AutElem, or NotAutomorphism."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a + b == 0:
        return AutElem(sign, Family.F, a)
    if a + b == -2:
        return AutElem(sign, Family.G, a + 1)
    witness = unreachable_target(a, b)
    if sign == -1:
        witness = negate(witness)
    return NotAutomorphism(sign, a, b, witness)


def descriptors(alpha_bound: int) -> list:
    """All descriptors with ``|alpha| <= alpha_bound``.

    Ordered by sign (+ first), family (f first), then alpha as 0, 1, -1, 2, ...
    so that the first failing descriptor of a sweep is the simplest one.
    """
    alphas = [0] + [v for k in range(1, alpha_bound + 1) for v in (k, -k)]
    return [
        AutElem(sign, fam, alpha)
        for sign in (1, -1)
        for fam in (Family.F, Family.G)
        for alpha in alphas
    ]


def _gaps(x: FinSet) -> tuple:
    e = x.elems
    return tuple(e[i + 1] - e[i] for i in range(len(e) - 1))


def identify(bb: Callable[[FinSet], FinSet], sweep: Optional[Iterable[FinSet]] = None) -> AutElem:
    """Recover the descriptor of a black-box automorphism.

    Three probes decide everything: the gap pattern of ``bb({0,1,3})`` gives
    the sign, and the minima of the sign-corrected images of ``{0,1}`` and
    ``{1,2}`` give family and alpha.  The answer is then checked against
    ``bb`` on ``sweep`` (default: :data:`IDENTIFY_SWEEP`).
    """
    _, p01, p12, p013 = PROBE_SETS
    gaps = _gaps(bb(p013))
    if gaps == (1, 2):
        sign = 1
    elif gaps == (2, 1):
        sign = -1
    else:
        raise NotRecognizedError(f"image of {p013} has gap pattern {gaps}")

    def unsigned_min(y: FinSet) -> int:
        return y.min if sign == 1 else -y.max

    m01 = unsigned_min(bb(p01))
    step = unsigned_min(bb(p12)) - m01
    if step == 1:
        e = AutElem(sign, Family.F, -m01)
    elif step == -1:
        e = AutElem(sign, Family.G, -m01 - 1)
    else:
        raise NotRecognizedError(f"probe minima differ by {step}")

    for x in IDENTIFY_SWEEP if sweep is None else sweep:
        if bb(x) != apply(e, x):
            raise NotRecognizedError(f"candidate {e} disagrees with the map on {x}")
    return e


def _identify_sweep() -> tuple:
    from itertools import combinations

    sets = [make(c) for k in range(1, 5) for c in combinations(range(-4, 5), k)]
    return tuple(sets[::5][:50])


IDENTIFY_SWEEP = _identify_sweep()


_ETA = {Family.F: False, Family.G: True}
_ETA_INV = {False: Family.F, True: Family.G}


def to_z2dih(e: AutElem) -> Z2DihElem:
    """Coordinates of ``e`` in Z2 x Dih_inf.

    ``+h`` maps to ``(+1, eta(h))`` with eta(f[a]) = (False, a) and
    eta(g[a]) = (True, a).  ``-h`` is factored through the central element
    as ``-f[a] = c o g[-a]`` and ``-g[a] = c o f[-a]``.
    """
    if e.sign == 1:
        return Z2DihElem(1, DihElem(_ETA[e.family], e.alpha))
    return Z2DihElem(-1, DihElem(not _ETA[e.family], -e.alpha))


def from_z2dih(z: Z2DihElem) -> AutElem:
    fam = _ETA_INV[z.dih.refl]
    if z.central == 1:
        return AutElem(1, fam, z.dih.trans)
    # c o h with c = -g[0]
    flipped = Family.G if fam is Family.F else Family.F
    return AutElem(-1, flipped, -z.dih.trans)


def z2dih_mul(z1: Z2DihElem, z2: Z2DihElem) -> Z2DihElem:
    return Z2DihElem(z1.central * z2.central, z1.dih * z2.dih)


_DESCRIPTOR_RE = re.compile(r"\s*(-?)([fg])\[\s*(-?\d+)\s*\]\s*")
_Z2DIH_RE = re.compile(r"\s*\(\s*([+-]1)\s*,\s*(?:(s)\s*[·*.]\s*)?r\^\s*(-?\d+)\s*\)\s*")


def parse_descriptor(text: str) -> AutElem:
    """Parse ``f[a]``, ``g[a]``, ``-f[a]`` or ``-g[a]``."""
    m = _DESCRIPTOR_RE.fullmatch(text)
    if m is None:
        pos = len(text) - len(text.lstrip())
        if pos < len(text) and text[pos] == "-":
            pos += 1
        if pos < len(text) and text[pos] in "fg":
            pos += 1
        raise ParseError("expected a descriptor like f[1] or -g[-2]", text, pos)
    sign = -1 if m.group(1) else 1
    return AutElem(sign, Family(m.group(2)), int(m.group(3)))


def format_descriptor(e: AutElem) -> str:
    return f"{'-' if e.sign == -1 else ''}{e.family.value}[{e.alpha}]"


def parse_z2dih(text: str) -> Z2DihElem:
    """Parse ``(+1, r^n)`` or ``(-1, s·r^n)`` (``*`` accepted for ``·``)."""
    m = _Z2DIH_RE.fullmatch(text)
    if m is None:
        raise ParseError("expected (±1, r^n) or (±1, s·r^n)", text, 0)
    return Z2DihElem(int(m.group(1)), DihElem(m.group(2) is not None, int(m.group(3))))
