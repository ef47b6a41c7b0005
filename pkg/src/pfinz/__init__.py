"""Automorphisms of the finitary power monoid of the integers.

Modules: :mod:`~pfinz.finset` (set arithmetic), :mod:`~pfinz.autgroup`
(automorphism descriptors and Z2 x Dih_inf coordinates),
:mod:`~pfinz.structure` (reduced quotients and decompositions),
:mod:`~pfinz.oracle` (exhaustive verification suites), :mod:`~pfinz.cli`.
"""

from .autgroup import (
    AutElem,
    DihElem,
    Family,
    NotAutomorphism,
    PhiAB,
    Z2DihElem,
    apply,
    classify_phi,
    compose,
    conjugate,
    identify,
    inverse,
    power,
    to_z2dih,
    from_z2dih,
)
from .finset import FinSet, interval, make, parse_set
from .kernels import BACKEND

__all__ = [
    "AutElem", "DihElem", "Family", "NotAutomorphism", "PhiAB", "Z2DihElem",
    "apply", "classify_phi", "compose", "conjugate", "identify", "inverse",
    "power", "to_z2dih", "from_z2dih", "FinSet", "interval", "make",
    "parse_set", "BACKEND",
]
