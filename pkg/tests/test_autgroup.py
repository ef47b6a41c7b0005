import pytest
from hypothesis import given
from hypothesis import strategies as st

from pfinz import autgroup
from pfinz.autgroup import (
    CENTRAL,
    IDENTITY,
    NEGATION,
    PROBE_SETS,
    AutElem,
    DihElem,
    Family,
    NotAutomorphism,
    PhiAB,
    Z2DihElem,
    apply,
    augment,
    classify_phi,
    compose,
    conjugate,
    descriptors,
    format_descriptor,
    from_z2dih,
    identify,
    inverse,
    is_inner,
    parse_descriptor,
    parse_z2dih,
    phi_ab,
    power,
    to_z2dih,
    z2dih_mul,
)
from pfinz.errors import IntegerOverflow, NotRecognizedError, ParseError
from pfinz.finset import delta_minus, delta_plus, make, negate, translate

from conftest import finsets

F, G = Family.F, Family.G


def brute(sign, fam, alpha):
    """Pointwise map straight from the defining formulas."""
    a, b = (alpha, -alpha) if fam == "f" else (alpha - 1, -(alpha + 1))

    def m(x):
        shift = a * min(x) + b * max(x)
        return make(sign * (v + shift) for v in x)

    return m


def E(text):
    return parse_descriptor(text)


def same_map(e, fn, corpus):
    return all(apply(e, x) == fn(x) for x in corpus)


alphas = st.integers(-6, 6)
elems = st.builds(AutElem, st.sampled_from([1, -1]), st.sampled_from([F, G]), alphas)


class TestApply:
    def test_identity(self, small_corpus):
        assert all(apply(E("f[0]"), x) == x for x in small_corpus)

    def test_examples(self, S):
        # f_1({0,2}) = {0,2} + delta-({0,2}) = {0,2} - 2
        assert apply(E("f[1]"), S(0, 2)) == S(-2, 0)
        assert apply(E("-f[1]"), S(0, 2)) == S(0, 2)
        # g_0({0,2}) = {0,2} - delta+({0,2})
        assert apply(E("g[0]"), S(0, 2)) == S(-2, 0)

    def test_matches_defining_formulas(self, small_corpus):
        for e in descriptors(4):
            assert same_map(e, brute(e.sign, e.family.value, e.alpha), small_corpus), e

    @given(elems, finsets(), finsets())
    def test_endomorphism(self, e, x, y):
        assert apply(e, x + y) == apply(e, x) + apply(e, y)

    def test_overflow(self, S):
        with pytest.raises(IntegerOverflow):
            apply(AutElem(1, F, 1 << 62), S(0, 3))

    def test_callable(self, S):
        assert E("f[1]")(S(0, 2)) == S(-2, 0)


class TestPhiAB:
    def test_examples(self, S):
        assert phi_ab(PhiAB(0, 0), S(1, 4)) == S(1, 4)
        assert phi_ab(PhiAB(1, -1), S(0, 2)) == S(-2, 0) == apply(E("f[1]"), S(0, 2))
        # {0,1} + 1*min + 1*max = {0,1} + 1
        assert phi_ab(PhiAB(1, 1), S(0, 1)) == make({v + 1 * 0 + 1 * 1 for v in (0, 1)}) == S(1, 2)

    @given(st.integers(-4, 4), st.integers(-4, 4), finsets())
    def test_extremes(self, a, b, x):
        y = phi_ab(PhiAB(a, b), x)
        assert y.min == (a + 1) * x.min + b * x.max
        assert y.max == a * x.min + (b + 1) * x.max

    def test_is_automorphism(self):
        assert PhiAB(3, -3).is_automorphism and PhiAB(0, -2).is_automorphism
        assert not PhiAB(1, 1).is_automorphism


class TestCompose:
    @pytest.mark.parametrize(
        "e1,e2,expected",
        [
            ("f[1]", "f[2]", "f[3]"),
            ("g[1]", "g[1]", "f[0]"),
            ("-f[1]", "-f[2]", "f[1]"),
            ("g[2]", "f[1]", "g[1]"),
            ("f[1]", "g[2]", "g[3]"),
        ],
    )
    def test_examples(self, e1, e2, expected, small_corpus):
        got = compose(E(e1), E(e2))
        assert got == E(expected)
        # pointwise composition oracle
        for x in small_corpus:
            assert apply(got, x) == apply(E(e1), apply(E(e2), x))

    def test_table_pointwise(self, small_corpus):
        ds = descriptors(2)
        maps = {e: brute(e.sign, e.family.value, e.alpha) for e in ds}
        for e1 in ds:
            for e2 in ds:
                h = compose(e1, e2)
                assert all(maps[e1](maps[e2](x)) == brute(h.sign, h.family.value, h.alpha)(x) for x in small_corpus)

    @given(elems, elems, elems)
    def test_associative(self, a, b, c):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(alphas, finsets())
    def test_sign_commutation(self, alpha, x):
        for fam in (F, G):
            assert apply(AutElem(1, fam, alpha), negate(x)) == negate(apply(AutElem(1, fam, -alpha), x))

    def test_operators(self):
        assert E("f[1]") * E("f[2]") == E("f[3]")
        assert E("f[1]") ** 3 == E("f[3]")


class TestInverse:
    def test_examples(self):
        assert inverse(E("f[5]")) == E("f[-5]")
        assert inverse(E("-f[3]")) == E("-f[3]")
        assert compose(E("-f[3]"), E("-f[3]")) == IDENTITY
        assert inverse(E("g[4]")) == E("g[4]")
        assert inverse(E("-g[4]")) == E("-g[-4]")

    @given(elems)
    def test_two_sided(self, e):
        assert compose(e, inverse(e)) == IDENTITY == compose(inverse(e), e)

    def test_identity(self):
        assert autgroup.identity() == AutElem(1, F, 0)


class TestPower:
    def test_examples(self):
        assert power(E("f[1]"), 4) == E("f[4]")
        assert power(E("g[2]"), 2) == IDENTITY
        assert power(E("f[1]"), -3) == E("f[-3]")
        assert power(E("-g[2]"), 0) == IDENTITY

    @given(elems, st.integers(-8, 8))
    def test_repeated_composition(self, e, n):
        base = e if n >= 0 else inverse(e)
        acc = IDENTITY
        for _ in range(abs(n)):
            acc = compose(acc, base)
        assert power(e, n) == acc

    def test_torsion(self):
        for e in descriptors(5):
            involution = power(e, 2) == IDENTITY
            expected = e == IDENTITY or (e.sign, e.family) in ((1, G), (-1, F)) or e == CENTRAL
            assert involution == expected, e
            if e.sign == -1 and e.family is G and e.alpha:
                assert power(e, 2) == AutElem(1, F, -2 * e.alpha)
                assert all(power(e, n) != IDENTITY for n in range(1, 7))


class TestClassify:
    def test_examples(self, small_corpus):
        assert classify_phi(1, 1, -1) == E("f[1]")
        g1 = classify_phi(1, 0, -2)
        assert g1 == E("g[1]")
        assert all(apply(g1, x) == phi_ab(PhiAB(0, -2), x) for x in small_corpus)
        res = classify_phi(1, 1, 1)
        assert isinstance(res, NotAutomorphism) and res.witness == make([1])
        assert str(res) == "not-automorphism; unreachable target {1}"

    def test_negative_sign(self, small_corpus):
        assert classify_phi(-1, 2, -2) == E("-f[2]")
        assert classify_phi(-1, 2, -4) == E("-g[3]")
        res = classify_phi(-1, 1, 1)
        assert res.witness == make([-1])

    def test_degenerate_system(self):
        # a+b+1 = 0: max of the image is always 0, so {1} is missed
        res = classify_phi(1, 0, -1)
        assert isinstance(res, NotAutomorphism) and res.witness == make([1])

    @given(st.integers(-5, 5), st.integers(-5, 5))
    def test_iff(self, a, b):
        assert isinstance(classify_phi(1, a, b), AutElem) == (a + b in (0, -2))

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            classify_phi(2, 0, 0)

    def test_solvability(self):
        # phi_{1,1}(X) has min 2 min X + max X, max min X + 2 max X: both = 3y on singletons
        assert not autgroup.target_solvable(1, 1, 1, 1)
        assert autgroup.target_solvable(1, 1, 3, 3)
        assert autgroup.unreachable_target(1, -1) is None


class TestConjugate:
    def test_examples(self):
        assert conjugate(E("g[0]"), E("f[3]")) == E("f[-3]")
        assert conjugate(E("f[7]"), E("f[3]")) == E("f[3]")
        assert conjugate(E("-g[0]"), E("f[3]")) == E("f[3]")

    def test_normal_subgroup(self):
        for phi in descriptors(5):
            if phi.sign != 1:
                continue
            for alpha in range(-5, 6):
                expected = alpha if phi.family is F else -alpha
                assert conjugate(phi, AutElem(1, F, alpha)) == AutElem(1, F, expected)


class TestInner:
    def test_augment(self, S):
        assert apply(augment(-1), S(0, 1, 3)) == S(-3, -1, 0)
        assert augment(1) == IDENTITY
        with pytest.raises(ValueError):
            augment(2)

    def test_is_inner(self):
        assert is_inner(E("f[0]")) and is_inner(E("-f[0]"))
        assert not is_inner(E("f[1]"))
        assert apply(E("f[1]"), make([0, 1])) != apply(E("f[0]"), make([0, 1]))
        # f[1] and -f[0] agree on {0,1}; {1} separates them
        assert apply(E("f[1]"), make([0, 1])) == apply(E("-f[0]"), make([0, 1]))
        assert apply(E("f[1]"), make([1])) != apply(E("-f[0]"), make([1]))


class TestCentral:
    def test_central_map(self, small_corpus):
        for x in small_corpus:
            assert apply(CENTRAL, x) == translate(negate(x), delta_plus(x))

    def test_commutes(self):
        for e in descriptors(5):
            assert compose(CENTRAL, e) == compose(e, CENTRAL)

    def test_negation_is_not_central(self):
        f1 = E("f[1]")
        assert compose(f1, NEGATION) == E("-f[-1]") != compose(NEGATION, f1)


class TestIdentify:
    @pytest.mark.parametrize("text", ["f[2]", "-g[0]", "f[0]", "g[-7]", "-f[3]", "-g[10]"])
    def test_recovers(self, text):
        e = E(text)
        calls = []

        def bb(x):
            calls.append(x)
            return brute(e.sign, e.family.value, e.alpha)(x)

        assert identify(bb) == e
        assert len(calls) - len(autgroup.IDENTIFY_SWEEP) <= 4

    def test_identity_map(self):
        assert identify(lambda x: x) == IDENTITY

    def test_rejects(self):
        with pytest.raises(NotRecognizedError):
            identify(lambda x: translate(x, len(x)))
        with pytest.raises(NotRecognizedError):
            identify(lambda x: make([0]))

    def test_sweep_size(self):
        assert len(autgroup.IDENTIFY_SWEEP) == 50


class TestDihedral:
    def test_law(self):
        r, s = DihElem(False, 1), DihElem(True, 0)
        e = DihElem(False, 0)
        assert s * s == e
        assert s * r * s == DihElem(False, -1)
        assert all(DihElem(True, n) * DihElem(True, n) == e for n in range(-4, 5))

    @given(st.booleans(), st.integers(-9, 9), st.booleans(), st.integers(-9, 9), st.booleans(), st.integers(-9, 9))
    def test_associative(self, a, m, b, n, c, k):
        p, q, t = DihElem(a, m), DihElem(b, n), DihElem(c, k)
        assert (p * q) * t == p * (q * t)
        assert p * p.inverse() == DihElem(False, 0)


class TestZ2Dih:
    def test_examples(self):
        assert to_z2dih(E("f[0]")) == Z2DihElem(1, DihElem(False, 0))
        assert to_z2dih(E("g[0]")) == Z2DihElem(1, DihElem(True, 0))
        assert to_z2dih(E("-f[2]")) == Z2DihElem(-1, DihElem(True, -2))
        assert compose(CENTRAL, E("g[-2]")) == E("-f[2]")
        g0, fa = to_z2dih(E("g[0]")), to_z2dih(E("f[3]"))
        assert z2dih_mul(z2dih_mul(g0, fa), g0) == to_z2dih(E("f[-3]"))

    @given(elems, elems)
    def test_homomorphism(self, a, b):
        assert to_z2dih(compose(a, b)) == z2dih_mul(to_z2dih(a), to_z2dih(b))

    def test_bijection(self):
        ds = descriptors(5)
        images = [to_z2dih(e) for e in ds]
        assert len(set(images)) == len(ds)
        assert all(from_z2dih(z) == e for z, e in zip(images, ds))


class TestText:
    @pytest.mark.parametrize("text", ["f[1]", "g[-2]", "-f[0]", "-g[3]"])
    def test_round_trip(self, text):
        assert format_descriptor(parse_descriptor(text)) == text

    @pytest.mark.parametrize("text", ["h[1]", "f1", "f[1", "--f[1]", "f[x]", ""])
    def test_invalid(self, text):
        with pytest.raises(ParseError):
            parse_descriptor(text)

    def test_z2dih(self):
        assert str(to_z2dih(E("g[0]"))) == "(+1, s·r^0)"
        assert str(to_z2dih(E("-f[2]"))) == "(-1, s·r^-2)"
        assert str(to_z2dih(E("f[4]"))) == "(+1, r^4)"
        assert parse_z2dih("(-1, s*r^-2)") == parse_z2dih("(-1, s·r^-2)") == to_z2dih(E("-f[2]"))
        with pytest.raises(ParseError):
            parse_z2dih("(+2, r^0)")

    def test_validation(self):
        with pytest.raises(ValueError):
            AutElem(0, F, 1)
        with pytest.raises(TypeError):
            AutElem(1, "f", 1)
