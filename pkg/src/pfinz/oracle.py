"""Exhaustive bounded-universe verification.

Every suite here re-derives the value it checks from first principles: sets
are combined with a naive double loop and automorphisms are evaluated from
their raw coefficient pairs, so closed forms in :mod:`pfinz.autgroup` are
validated pointwise and never used to validate themselves.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, replace
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Optional

from . import autgroup, finset, kernels, structure
from .autgroup import (
    CENTRAL,
    IDENTITY,
    NEGATION,
    PROBE_SETS,
    AutElem,
    DihElem,
    Family,
    PhiAB,
    Z2DihElem,
)
from .errors import (
    InvalidWindowError,
    NotDecomposableError,
    NotRecognizedError,
    OracleDisagreement,
)
from .finset import FinSet, make

MAX_FAILURES = 100


# corpus
# ------

@dataclass(frozen=True)
class Corpus:
    """All non-empty subsets of ``[lo, hi]`` with at most ``max_size`` elements,
    ordered by size and then lexicographically."""

    lo: int
    hi: int
    max_size: int
    sets: tuple

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __str__(self):
        return f"corpus({self.lo},{self.hi},{self.max_size})"


def enumerate_corpus(lo: int, hi: int, max_size: int) -> Corpus:
    if lo > hi:
        raise InvalidWindowError(f"empty window [{lo}, {hi}]")
    if max_size < 1:
        raise InvalidWindowError("max_size must be at least 1")
    points = range(lo, hi + 1)
    sets = tuple(
        FinSet._trusted(c)
        for k in range(1, min(max_size, len(points)) + 1)
        for c in combinations(points, k)
    )
    return Corpus(lo, hi, max_size, sets)


def corpus_size(lo: int, hi: int, max_size: int) -> int:
    n = hi - lo + 1
    return sum(comb(n, k) for k in range(1, max_size + 1))


# reports
# -------

@dataclass
class Failure:
    identity: str
    inputs: str
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class VerificationReport:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    elapsed_ms: float = 0.0
    notes: list = field(default_factory=list)
    suites: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def check(self, ok: bool, identity: str, inputs, expected=None, actual=None) -> bool:
        self.checks += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(Failure(identity, _render(inputs), _render(expected), _render(actual)))
        return ok

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "failure_count": self.failure_count,
            "failures": [f.to_dict() for f in self.failures],
            "notes": list(self.notes),
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
        }
        if self.suites:
            d["suites"] = [s.to_dict(timing) for s in self.suites]
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, ensure_ascii=False)

    def summary_lines(self) -> list:
        rows = self.suites or [self]
        lines = [
            f"{'PASS' if r.passed else 'FAIL'}  {r.suite:<28} checks={r.checks:<8} failures={r.failure_count}"
            for r in rows
        ]
        for r in rows:
            for f in r.failures[:3]:
                lines.append(f"  {r.suite}: {f.identity} on {f.inputs}: expected {f.expected}, got {f.actual}")
            for note in r.notes:
                lines.append(f"  note[{r.suite}]: {note}")
        if self.suites:
            lines.append(
                f"{'PASS' if self.passed else 'FAIL'}  {self.suite}: {len(self.suites)} suites, "
                f"{self.checks} checks, {self.failure_count} failures"
            )
        return lines


def _render(value) -> str:
    if value is None:
        return ""
    if isinstance(value, tuple):
        return ", ".join(map(str, value))
    return str(value)


def merge_reports(name: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    children = sorted(reports, key=lambda r: r.suite)
    total = VerificationReport(name, suites=children)
    for r in children:
        total.checks += r.checks
        total.failure_count += r.failure_count
        total.elapsed_ms += r.elapsed_ms
        for f in r.failures:
            if len(total.failures) < MAX_FAILURES:
                total.failures.append(replace(f, identity=f"{r.suite}/{f.identity}"))
    return total


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed_ms = (time.perf_counter() - start) * 1000.0
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# reference evaluation
# --------------------

def naive_sumset(x: FinSet, y: FinSet) -> FinSet:
    return make({a + b for a in x.elems for b in y.elems})


def ref_phi(a: int, b: int, x: FinSet) -> FinSet:
    shift = a * min(x.elems) + b * max(x.elems)
    return make(v + shift for v in x.elems)


def ref_coefficients(family: Family, alpha: int) -> tuple:
    if family is Family.F:
        return alpha, -alpha
    return alpha - 1, -(alpha + 1)


def ref_apply(e: AutElem, x: FinSet) -> FinSet:
    y = ref_phi(*ref_coefficients(e.family, e.alpha), x)
    return y if e.sign == 1 else make(-v for v in y.elems)


def check_morphism(bb: Callable[[FinSet], FinSet], corpus: Corpus, name: str = "morphism") -> VerificationReport:
    """Check ``bb(X+Y) == bb(X) + bb(Y)`` for every ordered pair of the corpus."""
    start = time.perf_counter()
    report = VerificationReport(name)
    images = [bb(x) for x in corpus]
    for i, x in enumerate(corpus):
        bx = images[i]
        for j, y in enumerate(corpus):
            lhs = bb(finset.sumset(x, y))
            rhs = naive_sumset(bx, images[j])
            report.check(lhs == rhs, "bb(X+Y)=bb(X)+bb(Y)", (x, y), rhs, lhs)
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


# suites
# ------

@_timed
def suite_finset(corpus: Corpus, pair_corpus: Corpus) -> VerificationReport:
    r = VerificationReport("finset_identities")
    backends = kernels.available_backends()
    zero = make([0])
    for x in pair_corpus:
        r.check(finset.sumset(x, zero) == x, "{0} neutral", x, x, finset.sumset(x, zero))
        for y in pair_corpus:
            s = finset.sumset(x, y)
            ref = naive_sumset(x, y)
            r.check(s == ref, "sumset", (x, y), ref, s)
            for name, mod in backends.items():
                for path in (mod.sumset_merge, mod.sumset_bitset):
                    got = path(x.elems, y.elems)
                    r.check(got == ref.elems, f"{name}.{path.__name__}", (x, y), ref, make(got))
            r.check(s.min == x.min + y.min and s.max == x.max + y.max, "min/max additive", (x, y))
            r.check(s == finset.sumset(y, x), "commutative", (x, y))
            r.check((len(s) == 1) == (len(x) == 1 and len(y) == 1), "units are singletons", (x, y))
            r.check(len(s) <= len(x) * len(y), "|X+Y| <= |X||Y|", (x, y))
    small = [s for s in pair_corpus if len(s) <= 2 and s.min >= -2 and s.max <= 2]
    for x in small:
        for y in small:
            xy = naive_sumset(x, y)
            for z in small:
                lhs = finset.sumset(finset.sumset(x, y), z)
                rhs = naive_sumset(xy, z)
                r.check(lhs == rhs, "associative", (x, y, z), rhs, lhs)
    for x in corpus:
        neg = make(-v for v in x.elems)
        r.check(finset.negate(x) == neg, "negate", x, neg, finset.negate(x))
        r.check(finset.negate(finset.negate(x)) == x, "negate involution", x)
        r.check(finset.delta_minus(neg) == finset.delta_minus(x), "delta- negation invariant", x)
        red = finset.reduce(x)
        r.check(red == make(v - min(x.elems) for v in x.elems), "reduce", x)
        r.check(0 in red and finset.reduce(red) == red, "reduce idempotent", x)
        rv = finset.rev(red)
        r.check(rv == make(max(red.elems) - v for v in red.elems), "rev", red)
        r.check(finset.rev(rv) == red, "rev involution on reduced", red)
        for k in range(-3, 4):
            t = finset.translate(x, k)
            r.check(t == make(v + k for v in x.elems), "translate", (x, k))
            r.check(finset.delta_minus(t) == finset.delta_minus(x), "delta-(X+k)", (x, k))
            r.check(finset.delta_plus(t) == finset.delta_plus(x) + 2 * k, "delta+(X+k)", (x, k))
            r.check(finset.rev(t) == finset.rev(x), "rev(X+k)=rev(X)", (x, k))
            r.check(finset.reduce(t) == red, "reduce(X+k)=reduce(X)", (x, k))
        acc = make([0])
        for k in range(0, 4):
            got = finset.k_fold(x, k)
            r.check(got == acc, "k_fold", (x, k), acc, got)
            acc = naive_sumset(acc, x)
    return r


@_timed
def suite_intervals(pair_corpus: Corpus, mn_bound: int = 6) -> VerificationReport:
    """Interval sandwich identities used to extract homomorphisms to Z."""
    r = VerificationReport("interval_sandwich")
    down, up = make([-1, 0]), make([0, 1])
    for h in range(mn_bound + 1):
        for k in range(mn_bound + 1):
            expected = make(range(-h, k + 1))
            got = finset.sumset(finset.k_fold(down, h), finset.k_fold(up, k))
            r.check(got == expected, "[-h,k] = h{-1,0} + k{0,1}", (h, k), expected, got)
            r.check(finset.interval(-h, k) == expected, "interval", (h, k))
    for x in pair_corpus:
        lo, hi = min(x.elems), max(x.elems)
        for m in range(mn_bound + 1):
            for n in range(mn_bound + 1):
                if hi - lo > m + n:
                    continue
                mid = make(range(-m + lo, n + hi + 1))
                got = naive_sumset(finset.interval(-m, n), x)
                r.check(got == mid, "[-m,n] + X = [-m+min X, n+max X]", (x, m, n), mid, got)
                if m < lo or n < -hi:
                    continue
                left = finset.sumset(finset.k_fold(down, m - lo), finset.k_fold(up, n + hi))
                r.check(left == mid, "(m-min X){-1,0} + (n+max X){0,1}", (x, m, n), mid, left)
                right = finset.sumset(finset.sumset(finset.k_fold(down, m), finset.k_fold(up, n)), x)
                r.check(right == mid, "m{-1,0} + n{0,1} + X", (x, m, n), mid, right)
    return r


@_timed
def suite_endomorphism(alpha_bound: int, pair_corpus: Corpus) -> VerificationReport:
    r = VerificationReport("endomorphism")
    for e in autgroup.descriptors(alpha_bound):
        for x in pair_corpus:
            got, ref = autgroup.apply(e, x), ref_apply(e, x)
            r.check(got == ref, f"apply {e}", x, ref, got)
        sub = check_morphism(lambda x: autgroup.apply(e, x), pair_corpus, name=str(e))
        r.checks += sub.checks
        r.failure_count += sub.failure_count
        for f in sub.failures:
            if len(r.failures) < MAX_FAILURES:
                r.failures.append(replace(f, identity=f"{e}: {f.identity}"))
    return r


@_timed
def check_composition_table(
    alpha_bound: int,
    corpus: Corpus,
    compose_fn: Callable[[AutElem, AutElem], AutElem] = autgroup.compose,
) -> VerificationReport:
    """compose(e1, e2) against pointwise ``e1(e2(X))`` for all descriptor pairs."""
    r = VerificationReport("composition_table")
    descs = autgroup.descriptors(alpha_bound)
    inner = {e: [ref_apply(e, x) for x in corpus] for e in descs}
    for e1 in descs:
        for e2 in descs:
            h = compose_fn(e1, e2)
            for x, y in zip(corpus, inner[e2]):
                expected = ref_apply(e1, y)
                actual = ref_apply(h, x)
                r.check(actual == expected, f"{e1} o {e2} = {h}", x, expected, actual)
    return r


@_timed
def suite_delta_calculus(alpha_bound: int, corpus: Corpus) -> VerificationReport:
    r = VerificationReport("delta_calculus")

    def dm(s):
        return min(s.elems) - max(s.elems)

    def dp(s):
        return min(s.elems) + max(s.elems)

    for x in corpus:
        for k in range(-3, 4):
            y = make(v + k for v in x.elems)
            r.check(finset.delta_minus(y) == dm(x) + k - k, "delta-(Y+k) = delta-(Y)", (x, k))
            r.check(finset.delta_plus(y) == dp(x) + k + k, "delta+(Y+k) = delta+(Y)+2k", (x, k))
        for alpha in range(-alpha_bound, alpha_bound + 1):
            fx = ref_apply(AutElem(1, Family.F, alpha), x)
            gx = ref_apply(AutElem(1, Family.G, alpha), x)
            r.check(fx == finset.translate(x, alpha * finset.delta_minus(x)), "f(X) = X + alpha delta-(X)", (x, alpha))
            r.check(gx == finset.translate(fx, -finset.delta_plus(x)), "g(X) = f(X) - delta+(X)", (x, alpha))
            r.check(finset.delta_minus(gx) == finset.delta_minus(x), "delta-(g(X)) = delta-(X)", (x, alpha),
                    finset.delta_minus(x), finset.delta_minus(gx))
            expected = 2 * alpha * finset.delta_minus(x) - finset.delta_plus(x)
            r.check(finset.delta_plus(gx) == expected, "delta+(g(X)) = 2 alpha delta-(X) - delta+(X)",
                    (x, alpha), expected, finset.delta_plus(gx))
    return r


@_timed
def suite_sign_commutation(alpha_bound: int, corpus: Corpus) -> VerificationReport:
    """h(-X) = -h'(X) with h' the same family at -alpha."""
    r = VerificationReport("sign_commutation")
    for fam in (Family.F, Family.G):
        for alpha in range(-alpha_bound, alpha_bound + 1):
            h, h_neg = AutElem(1, fam, alpha), AutElem(1, fam, -alpha)
            for x in corpus:
                lhs = ref_apply(h, make(-v for v in x.elems))
                rhs = make(-v for v in ref_apply(h_neg, x).elems)
                r.check(lhs == rhs, f"{h}(-X) = -{h_neg}(X)", x, rhs, lhs)
    return r


def _pointwise_equal(e1: AutElem, e2: AutElem, corpus) -> bool:
    return all(ref_apply(e1, x) == ref_apply(e2, x) for x in corpus)


def _iterate(e: AutElem, n: int, x: FinSet) -> FinSet:
    for _ in range(n):
        x = ref_apply(e, x)
    return x


@_timed
def suite_inverse_torsion(bound: int, corpus: Corpus, max_power: int = 6) -> VerificationReport:
    r = VerificationReport("inverse_torsion")
    # the probe sets separate all descriptors, so small corpora stay conclusive
    sample = tuple(corpus) + PROBE_SETS
    for e in autgroup.descriptors(bound):
        inv = autgroup.inverse(e)
        r.check(autgroup.compose(e, inv) == IDENTITY, "compose(e, inverse(e)) = id", e, IDENTITY, autgroup.compose(e, inv))
        r.check(autgroup.compose(inv, e) == IDENTITY, "compose(inverse(e), e) = id", e, IDENTITY, autgroup.compose(inv, e))
        for x in corpus:
            back = ref_apply(inv, ref_apply(e, x))
            r.check(back == x, f"{inv}({e}(X)) = X", x, x, back)
        involution = all(_iterate(e, 2, x) == x for x in sample)
        expected_involution = (
            e == IDENTITY
            or (e.sign == 1 and e.family is Family.G)
            or (e.sign == -1 and e.family is Family.F)
            or e == CENTRAL
        )
        r.check(involution == expected_involution, "e o e = id exactly on the torsion set", e,
                expected_involution, involution)
        r.check((autgroup.power(e, 2) == IDENTITY) == expected_involution, "power(e,2) = id", e)
        for n in range(-max_power, max_power + 1):
            p = autgroup.power(e, n)
            ref = e if n >= 0 else inv
            r.check(all(ref_apply(p, x) == _iterate(ref, abs(n), x) for x in sample), "power(e,n) pointwise", (e, n))
        if e.sign == -1 and e.family is Family.G and e.alpha != 0:
            r.check(autgroup.power(e, 2) == AutElem(1, Family.F, -2 * e.alpha), "(-g[a])^2 = f[-2a]", e)
            for n in range(1, max_power + 1):
                moved = any(_iterate(e, n, x) != x for x in sample)
                r.check(moved, "-g[a] has infinite order", (e, n))
    return r


@_timed
def suite_phi_ab(coef_bound: int, corpus: Corpus) -> VerificationReport:
    r = VerificationReport("phi_ab_extremes")
    for a in range(-coef_bound, coef_bound + 1):
        for b in range(-coef_bound, coef_bound + 1):
            p = PhiAB(a, b)
            for x in corpus:
                y = autgroup.phi_ab(p, x)
                ref = ref_phi(a, b, x)
                r.check(y == ref, "phi_ab", (p, x), ref, y)
                lo, hi = min(x.elems), max(x.elems)
                r.check(y.min == (a + 1) * lo + b * hi, "min phi(X) = (a+1)min X + b max X", (p, x))
                r.check(y.max == a * lo + (b + 1) * hi, "max phi(X) = a min X + (b+1)max X", (p, x))
    return r


def surjectivity_witness(
    a: int,
    b: int,
    search_bound: int,
    preimage_corpus: Optional[Corpus] = None,
) -> Optional[FinSet]:
    """Target ``{c, d}`` (``|c|, |d| <= search_bound``) outside the image of phi_{a,b}.

    The candidate comes from the solvability test of the extremes system and
    is confirmed by brute force: no set in ``preimage_corpus`` (default
    ``corpus(-12, 12, 2)``) is mapped to a set with those extremes.
    """
    w = autgroup.unreachable_target(a, b, limit=search_bound)
    if w is None:
        return None
    pre = preimage_corpus if preimage_corpus is not None else enumerate_corpus(-12, 12, 2)
    for x in pre:
        y = ref_phi(a, b, x)
        if min(y.elems) == w.min and max(y.elems) == w.max:
            raise OracleDisagreement(f"phi_{{{a},{b}}}({x}) = {y} reaches witness {w}")
    return w


@_timed
def suite_classification(coef_bound: int, corpus: Corpus, preimage_corpus: Corpus) -> VerificationReport:
    r = VerificationReport("classification")
    for a in range(-coef_bound, coef_bound + 1):
        for b in range(-coef_bound, coef_bound + 1):
            extremes = None
            for sign in (1, -1):
                res = autgroup.classify_phi(sign, a, b)
                is_aut = a + b in (0, -2)
                r.check(isinstance(res, AutElem) == is_aut, "descriptor iff a+b in {0,-2}", (sign, a, b), is_aut, res)
                if isinstance(res, AutElem):
                    for x in corpus:
                        y = ref_phi(a, b, x)
                        if sign == -1:
                            y = make(-v for v in y.elems)
                        r.check(ref_apply(res, x) == y, f"{res} = {sign:+d}phi_({a},{b})", x, y, ref_apply(res, x))
                    r.check(surjectivity_witness(a, b, 3, preimage_corpus) is None, "no witness for automorphism", (a, b))
                    continue
                if extremes is None:
                    extremes = set()
                    for x in preimage_corpus:
                        y = ref_phi(a, b, x)
                        extremes.add((min(y.elems), max(y.elems)))
                w = res.witness
                target = (w.min, w.max) if sign == 1 else (-w.max, -w.min)
                r.check(target not in extremes, "classify witness unreachable", (sign, a, b), "unreachable", w)
                try:
                    sw = surjectivity_witness(a, b, 3, preimage_corpus)
                except OracleDisagreement as exc:
                    r.check(False, "surjectivity witness", (a, b), "unreachable", str(exc))
                    continue
                r.check(sw is not None and (sw.min, sw.max) not in extremes, "surjectivity witness unreachable",
                        (a, b), "unreachable", sw)
    return r


@_timed
def suite_conjugation(bound: int, corpus: Corpus) -> VerificationReport:
    r = VerificationReport("conjugation")
    g0 = AutElem(1, Family.G, 0)
    for alpha in range(-bound, bound + 1):
        fa = AutElem(1, Family.F, alpha)
        got = autgroup.conjugate(g0, fa)
        r.check(got == AutElem(1, Family.F, -alpha), "g0 o f[a] o g0^-1 = f[-a]", alpha, f"f[{-alpha}]", got)
        for phi in autgroup.descriptors(bound):
            got = autgroup.conjugate(phi, fa)
            # for -h the Z2 factor flips the family: -f[b] = c o g[-b], -g[b] = c o f[-b]
            preserves = (phi.family is Family.F) == (phi.sign == 1)
            expected = fa if preserves else AutElem(1, Family.F, -alpha)
            r.check(got == expected, "phi o f[a] o phi^-1", (phi, fa), expected, got)
            phi_inv = autgroup.inverse(phi)
            for x in corpus:
                ref = ref_apply(phi, ref_apply(fa, ref_apply(phi_inv, x)))
                r.check(ref_apply(got, x) == ref, "conjugate pointwise", (phi, fa, x), ref, ref_apply(got, x))
    return r


def check_centrality(candidate: AutElem, alpha_bound: int, corpus: Optional[Corpus] = None) -> VerificationReport:
    """``candidate`` commutes with every descriptor with ``|alpha| <= alpha_bound``
    and squares to the identity; both in closed form and pointwise on ``corpus``."""
    start = time.perf_counter()
    corpus = corpus if corpus is not None else enumerate_corpus(-3, 3, 3)
    r = VerificationReport(f"centrality[{candidate}]")
    sq = autgroup.compose(candidate, candidate)
    r.check(sq == IDENTITY, "candidate squares to the identity", candidate, IDENTITY, sq)
    for e in autgroup.descriptors(alpha_bound):
        left, right = autgroup.compose(candidate, e), autgroup.compose(e, candidate)
        r.check(left == right, "c o e = e o c", e, left, right)
        for x in corpus:
            lx = ref_apply(candidate, ref_apply(e, x))
            rx = ref_apply(e, ref_apply(candidate, x))
            r.check(lx == rx, "c(e(X)) = e(c(X))", (e, x), lx, rx)
    r.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return r


@_timed
def suite_centrality(bound: int, corpus: Corpus) -> VerificationReport:
    r = VerificationReport("centrality")
    good = check_centrality(CENTRAL, bound, corpus)
    r.checks += good.checks
    r.failure_count += good.failure_count
    r.failures.extend(good.failures)
    for x in corpus:
        expected = make(min(x.elems) + max(x.elems) - v for v in x.elems)
        r.check(autgroup.apply(CENTRAL, x) == expected, "-g[0](X) = min X + max X - X", x, expected, autgroup.apply(CENTRAL, x))
    bad = check_centrality(NEGATION, bound, corpus)
    witness = bad.failures[0] if bad.failures else None
    r.check(not bad.passed, "negation -f[0] is not central", NEGATION, "a non-commuting witness", witness and witness.inputs)
    if witness is not None:
        r.notes.append(f"-f[0] fails centrality: {witness.identity} at e={witness.inputs}")
    return r


def literal_sign_map(z: Z2DihElem) -> AutElem:
    """The literal reading (±1, h) -> ±h with h = eta^-1 of the Dih part."""
    fam = Family.G if z.dih.refl else Family.F
    return AutElem(z.central, fam, z.dih.trans)


@_timed
def suite_isomorphism(
    bound: int,
    corpus: Corpus,
    to_fn: Callable[[AutElem], Z2DihElem] = autgroup.to_z2dih,
    from_fn: Callable[[Z2DihElem], AutElem] = autgroup.from_z2dih,
) -> VerificationReport:
    r = VerificationReport("isomorphism")
    descs = autgroup.descriptors(bound)
    images = {e: to_fn(e) for e in descs}
    r.check(len(set(images.values())) == len(descs), "to_z2dih injective", bound)
    for e in descs:
        r.check(from_fn(images[e]) == e, "from_z2dih(to_z2dih(e)) = e", e, e, from_fn(images[e]))
    zs = [Z2DihElem(s, DihElem(f, n)) for s in (1, -1) for f in (False, True) for n in range(-bound, bound + 1)]
    for z in zs:
        r.check(to_fn(from_fn(z)) == z, "to_z2dih(from_z2dih(z)) = z", z, z, to_fn(from_fn(z)))
    for e1 in descs:
        for e2 in descs:
            lhs = to_fn(autgroup.compose(e1, e2))
            rhs = autgroup.z2dih_mul(images[e1], images[e2])
            r.check(lhs == rhs, "to_z2dih(e1 o e2) = to_z2dih(e1) * to_z2dih(e2)", (e1, e2), rhs, lhs)
    dih = [DihElem(f, n) for f in (False, True) for n in range(-2, 3)]
    for p in dih:
        r.check(p * DihElem(False, 0) == p == DihElem(False, 0) * p, "Dih identity", p)
        r.check(p * p.inverse() == DihElem(False, 0), "Dih inverse", p)
        for q in dih:
            for s in dih:
                r.check((p * q) * s == p * (q * s), "Dih associative", (p, q, s))
    # the literal (±1, h) -> ±h reading, reported for comparison only
    broken, first = 0, None
    for z1 in zs:
        for z2 in zs:
            lhs = literal_sign_map(autgroup.z2dih_mul(z1, z2))
            rhs = autgroup.compose(literal_sign_map(z1), literal_sign_map(z2))
            if not _pointwise_equal(lhs, rhs, PROBE_SETS):
                broken += 1
                first = first or (z1, z2, lhs, rhs)
    differ = sum(1 for z in zs if not _pointwise_equal(literal_sign_map(z), from_fn(z), corpus))
    r.notes.append(
        f"literal map (±1,h) -> ±h breaks the homomorphism law on {broken}/{len(zs) ** 2} pairs"
        + (f", e.g. {first[0]} * {first[1]}: {first[2]} vs {first[3]}" if first else "")
    )
    r.notes.append(f"literal map and central-element map differ pointwise on {differ}/{len(zs)} elements over {corpus}")
    return r


@_timed
def suite_decomposition(bound: int, corpus: Corpus, hom_bound: int = 5) -> VerificationReport:
    r = VerificationReport("decomposition")
    for e in autgroup.descriptors(bound):
        try:
            d = structure.decompose(lambda x: ref_apply(e, x), sweep=corpus)
        except NotDecomposableError as exc:
            r.check(False, "decompose", e, "a decomposition", exc)
            continue
        for x in corpus:
            got, ref = structure.eval_decomposition(d, x), ref_apply(e, x)
            r.check(got == ref, f"eval({d}) = {e}", x, ref, got)
        r.check((d.f == "id") == (e.sign == 1), "id branch iff orientation preserving", e, e.sign, d.f)
        back = autgroup.classify_phi(1, d.a - 1, d.b) if d.f == "id" else autgroup.classify_phi(-1, -d.a, -(d.b + 1))
        r.check(back == e, "classify_phi of decomposition coefficients", (e, d), e, back)
    for a in range(-hom_bound, hom_bound + 1):
        for b in range(-hom_bound, hom_bound + 1):
            def bb(x, a=a, b=b):
                return a * min(x.elems) + b * max(x.elems)
            h = structure.hom_extract(bb, sweep=corpus)
            r.check((h.a, h.b) == (a, b), "hom_extract", (a, b), (a, b), (h.a, h.b))
    return r


@_timed
def suite_reduced_quotient(bound: int, corpus: Corpus, pair_corpus: Corpus) -> VerificationReport:
    r = VerificationReport("reduced_quotient")
    for x in pair_corpus:
        for y in pair_corpus:
            s = naive_sumset(x, y)
            r.check(structure.minimizer(s) == structure.minimizer(x) + structure.minimizer(y), "minimizer additive", (x, y))
            r.check(finset.reduce(s) == naive_sumset(finset.reduce(x), finset.reduce(y)), "reduce additive", (x, y))
    reduced = sorted({finset.reduce(x) for x in pair_corpus}, key=lambda s: (len(s), s.elems))
    for e in autgroup.descriptors(bound):
        for x in reduced:
            got = structure.quotient_action(e, x)
            expected = x if e.sign == 1 else make(max(x.elems) - v for v in x.elems)
            r.check(got == expected, f"quotient action of {e}", x, expected, got)
        for x in reduced[:20]:
            for y in reduced[:20]:
                lhs = structure.quotient_action(e, naive_sumset(x, y))
                rhs = naive_sumset(structure.quotient_action(e, x), structure.quotient_action(e, y))
                r.check(lhs == rhs, "quotient action additive", (e, x, y), rhs, lhs)
    return r


class _CountingMap:
    def __init__(self, fn):
        self.fn = fn
        self.calls = 0

    def __call__(self, x):
        self.calls += 1
        return self.fn(x)


@_timed
def suite_identify(bound: int, corpus: Corpus) -> VerificationReport:
    r = VerificationReport("identify")
    sweep = autgroup.IDENTIFY_SWEEP
    for e in autgroup.descriptors(bound):
        bb = _CountingMap(lambda x, e=e: ref_apply(e, x))
        try:
            got = autgroup.identify(bb)
        except NotRecognizedError as exc:
            r.check(False, "identify", e, e, exc)
            continue
        r.check(got == e, "identify", e, e, got)
        r.check(bb.calls - len(sweep) <= 4, "at most 4 probes", e, 4, bb.calls - len(sweep))
    rogue = lambda x: finset.translate(x, len(x))
    try:
        autgroup.identify(rogue)
        r.check(False, "non-automorphism rejected", "X -> X + |X|", "NotRecognized", "a descriptor")
    except NotRecognizedError:
        r.check(True, "non-automorphism rejected", "X -> X + |X|")
    bad = check_morphism(rogue, enumerate_corpus(-1, 1, 2))
    r.check(not bad.passed, "X -> X + |X| fails the morphism law", "X -> X + |X|")
    return r


@_timed
def suite_faithfulness(bound: int) -> VerificationReport:
    r = VerificationReport("faithfulness")
    descs = autgroup.descriptors(bound)
    probes = {e: [ref_apply(e, p) for p in PROBE_SETS] for e in descs}
    for i, e1 in enumerate(descs):
        for e2 in descs[i + 1:]:
            r.check(probes[e1] != probes[e2], "distinct descriptors differ on a probe set", (e1, e2))
    for e in descs:
        r.check(autgroup.is_inner(e) == (e in (IDENTITY, NEGATION)), "is_inner", e)
    r.check(autgroup.augment(1) == IDENTITY and autgroup.augment(-1) == NEGATION, "augment", (1, -1))
    for x in PROBE_SETS:
        r.check(ref_apply(autgroup.augment(-1), x) == make(-v for v in x.elems), "augment(-1) negates", x)
    return r


# mutations
# ---------

def _mutant_gg(e1: AutElem, e2: AutElem) -> AutElem:
    # table entry g[a] o g[b] corrupted to f[a+b]
    alpha = -e1.alpha if e2.sign == -1 else e1.alpha
    if e1.family is Family.G and e2.family is Family.G:
        return AutElem(e1.sign * e2.sign, Family.F, alpha + e2.alpha)
    fam, alpha = autgroup._table(e1.family, alpha, e2.family, e2.alpha)
    return AutElem(e1.sign * e2.sign, fam, alpha)


def _mutant_no_sign_rule(e1: AutElem, e2: AutElem) -> AutElem:
    fam, alpha = autgroup._table(e1.family, e1.alpha, e2.family, e2.alpha)
    return AutElem(e1.sign * e2.sign, fam, alpha)


def _literal_to(e: AutElem) -> Z2DihElem:
    return Z2DihElem(e.sign, DihElem(e.family is Family.G, e.alpha))


MUTATIONS = ("corrupted-gg-entry", "wrong-sign-rule", "wrong-central-element")


def run_mutation(name: str, alpha_bound: int, corpus: Corpus) -> VerificationReport:
    """Run the suites a mutation should break; the mutation suite passes iff
    at least one concrete witness is found."""
    start = time.perf_counter()
    if name == "corrupted-gg-entry":
        inner = [check_composition_table(alpha_bound, corpus, compose_fn=_mutant_gg)]
    elif name == "wrong-sign-rule":
        inner = [check_composition_table(alpha_bound, corpus, compose_fn=_mutant_no_sign_rule)]
    elif name == "wrong-central-element":
        inner = [
            check_centrality(NEGATION, max(alpha_bound, 1), corpus),
            suite_isomorphism(max(alpha_bound, 1), corpus, to_fn=_literal_to, from_fn=literal_sign_map),
        ]
    else:
        raise ValueError(f"unknown mutation {name!r}")
    r = VerificationReport(f"mutation:{name}")
    for sub in inner:
        witness = sub.failures[0] if sub.failures else None
        r.check(witness is not None, f"{sub.suite} detects the mutation", name, "a witness", "none")
        if witness is not None:
            r.notes.append(f"caught by {sub.suite}: {witness.identity} on {witness.inputs} "
                           f"(expected {witness.expected}, got {witness.actual})")
    r.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return r


# driver
# ------

@dataclass(frozen=True)
class VerifyConfig:
    lo: int = -4
    hi: int = 4
    max_size: int = 4
    alpha_bound: int = 3
    mutate: bool = False
    pair_lo: Optional[int] = None
    pair_hi: Optional[int] = None
    pair_max_size: Optional[int] = None
    group_bound: int = 5
    coef_bound: int = 5
    decomp_bound: int = 4
    identify_bound: int = 10
    mn_bound: int = 6

    def corpus(self) -> Corpus:
        return enumerate_corpus(self.lo, self.hi, self.max_size)

    def pair_corpus(self) -> Corpus:
        """Smaller corpus for suites quantified over pairs of sets."""
        if self.pair_lo is not None and self.pair_hi is not None:
            return enumerate_corpus(self.pair_lo, self.pair_hi, self.pair_max_size or min(self.max_size, 3))
        lo, hi = max(self.lo, -3), min(self.hi, 3)
        if lo > hi:
            lo, hi = self.lo, min(self.hi, self.lo + 6)
        return enumerate_corpus(lo, hi, self.pair_max_size or min(self.max_size, 3))


def run_all(config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """Run every suite (and, with ``mutate``, every built-in mutation)."""
    start = time.perf_counter()
    corpus, pairs = config.corpus(), config.pair_corpus()
    preimage = enumerate_corpus(-6, 6, 4)
    reports = [
        suite_finset(corpus, pairs),
        suite_intervals(pairs, config.mn_bound),
        suite_endomorphism(config.alpha_bound, pairs),
        check_composition_table(config.alpha_bound, pairs),
        suite_delta_calculus(config.alpha_bound, corpus),
        suite_sign_commutation(config.alpha_bound, corpus),
        suite_inverse_torsion(config.group_bound, pairs),
        suite_phi_ab(config.coef_bound, pairs),
        suite_classification(config.coef_bound, pairs, preimage),
        suite_conjugation(config.group_bound, pairs),
        suite_centrality(config.group_bound, pairs),
        suite_isomorphism(config.group_bound, pairs),
        suite_decomposition(config.decomp_bound, pairs, config.coef_bound),
        suite_reduced_quotient(config.group_bound, corpus, pairs),
        suite_identify(config.identify_bound, pairs),
        suite_faithfulness(config.group_bound),
    ]
    if config.mutate:
        reports.extend(run_mutation(m, max(config.alpha_bound, 1), pairs) for m in MUTATIONS)
    total = merge_reports("all", reports)
    total.notes.append(f"kernel backend: {kernels.BACKEND}")
    total.notes.append(f"corpus {corpus} ({len(corpus)} sets), pair corpus {pairs} ({len(pairs)} sets)")
    total.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return total
