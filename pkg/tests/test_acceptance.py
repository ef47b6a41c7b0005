"""Exit criteria, one test per criterion.

All checks are exact integer comparisons (tolerance 0).  Run directly with
``python tests/test_acceptance.py`` for a one-line-per-criterion summary; under
pytest the same lines appear in the terminal summary.
"""

import time

import pytest

from pfinz import autgroup, oracle
from pfinz.autgroup import CENTRAL, NEGATION, AutElem, Family, PhiAB
from pfinz.oracle import enumerate_corpus

RESULTS = {}


def record(number, title, ok, detail):
    RESULTS[number] = (title, ok, detail)
    assert ok, f"criterion {number} ({title}): {detail}"


def _elapsed(start):
    return time.perf_counter() - start


def criterion_1():
    start = time.perf_counter()
    corpus = enumerate_corpus(-3, 3, 3)
    r = oracle.suite_endomorphism(2, corpus)
    secs = _elapsed(start)
    n = len(autgroup.descriptors(2))
    ok = r.passed and n == 20 and secs < 30
    return ok, f"{n} descriptors, {r.checks} checks, {r.failure_count} failures, {secs:.1f}s (< 30s)"


def criterion_2():
    start = time.perf_counter()
    corpus = enumerate_corpus(-3, 3, 3)
    r = oracle.check_composition_table(3, corpus)
    secs = _elapsed(start)
    n = len(autgroup.descriptors(3))
    ok = r.passed and n == 28 and r.checks == 784 * len(corpus) and secs < 120
    return ok, f"{n} descriptors, {n * n} pairs, {r.checks} checks, {r.failure_count} failures, {secs:.1f}s (< 120s)"


def criterion_3():
    r = oracle.suite_intervals(enumerate_corpus(-3, 3, 3), mn_bound=6)
    return r.passed and r.checks > 0, f"{r.checks} checks, {r.failure_count} failures"


def criterion_4():
    r = oracle.suite_delta_calculus(3, enumerate_corpus(-4, 4, 4))
    return r.passed, f"{r.checks} checks over corpus(-4,4,4), {r.failure_count} failures"


def criterion_5():
    corpus = enumerate_corpus(-3, 3, 3)
    preimage = enumerate_corpus(-6, 6, 4)
    r = oracle.suite_classification(5, corpus, preimage)
    extra_ok, extra_checks = True, 0
    for a in range(-5, 6):
        for b in range(-5, 6):
            res = autgroup.classify_phi(1, a, b)
            if isinstance(res, AutElem):
                for x in corpus:
                    extra_checks += 1
                    extra_ok &= autgroup.apply(res, x) == autgroup.phi_ab(PhiAB(a, b), x)
            else:
                w = oracle.surjectivity_witness(a, b, 3, preimage)
                extra_checks += 1
                extra_ok &= w is not None
    return r.passed and extra_ok, f"{r.checks + extra_checks} checks, {r.failure_count} failures"


def criterion_6():
    corpus = enumerate_corpus(-3, 3, 3)
    conj = oracle.suite_conjugation(5, corpus)
    good = oracle.check_centrality(CENTRAL, 5, corpus)
    bad = oracle.check_centrality(NEGATION, 5, corpus)
    iso = oracle.suite_isomorphism(5, corpus)
    witness = bad.failures[0].inputs if bad.failures else None
    ok = conj.passed and good.passed and not bad.passed and witness is not None and iso.passed
    return ok, (
        f"(a) conjugation {conj.checks} checks ok={conj.passed}; (b) -g[0] central={good.passed}, "
        f"-f[0] central={bad.passed} witness e={witness}; (c) isomorphism {iso.checks} checks ok={iso.passed}"
    )


def criterion_7():
    r = oracle.suite_inverse_torsion(5, enumerate_corpus(-3, 3, 3), max_power=6)
    return r.passed, f"{r.checks} checks, {r.failure_count} failures"


def criterion_8():
    r = oracle.suite_decomposition(4, enumerate_corpus(-3, 3, 3), hom_bound=5)
    return r.passed, f"{r.checks} checks, {r.failure_count} failures"


def criterion_9():
    r = oracle.suite_identify(10, enumerate_corpus(-3, 3, 3))
    n = len(autgroup.descriptors(10))
    return r.passed, f"{n} descriptors, {r.checks} checks, {r.failure_count} failures"


def criterion_10():
    report = oracle.run_all(oracle.VerifyConfig(mutate=True))
    muts = {s.suite: s for s in report.suites if s.suite.startswith("mutation:")}
    expected = {f"mutation:{m}" for m in oracle.MUTATIONS}
    caught = all(s.passed and any("caught by" in n for n in s.notes) for s in muts.values())
    ok = set(muts) == expected and caught and report.passed
    return ok, f"{len(muts)} mutations caught={caught}; full run {len(report.suites)} suites passed={report.passed}"


CRITERIA = [
    (1, "endomorphism suite", criterion_1),
    (2, "composition-table oracle", criterion_2),
    (3, "interval sandwich identities", criterion_3),
    (4, "delta calculus", criterion_4),
    (5, "classification of phi_{a,b}", criterion_5),
    (6, "Z2 x Dih_inf structure", criterion_6),
    (7, "inverse and torsion", criterion_7),
    (8, "decomposition round-trip", criterion_8),
    (9, "identify from black-box access", criterion_9),
    (10, "mutation sensitivity", criterion_10),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    ok, detail = fn()
    record(number, title, ok, detail)


def summary_lines():
    return [
        f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {title} -- {detail}"
        for n, (title, ok, detail) in sorted(RESULTS.items())
    ]


if __name__ == "__main__":
    for number, title, fn in CRITERIA:
        ok, detail = fn()
        RESULTS[number] = (title, ok, detail)
    print("\n".join(summary_lines()))
