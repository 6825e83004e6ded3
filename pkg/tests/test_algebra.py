"""Exact-arithmetic layer: polynomials, series, factors, fractions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agcheck.algebra import (BinomialFactor, ExpansionRegionError, LaurentPoly,
                             RationalFn, Series, divide_exact, expand_factor,
                             expand_rational, first_difference, rational_add,
                             series_mul)

from oracles import convolve, eval_rational_fn, eval_terms, geometric_terms

P = LaurentPoly


def terms(poly):
    return dict(poly.items())


small_exp = st.integers(min_value=-4, max_value=4)
small_coeff = st.integers(min_value=-6, max_value=6).filter(lambda c: c != 0)
polys = st.dictionaries(st.tuples(small_exp, small_exp), small_coeff, max_size=6).map(P)
canonical_factors = st.tuples(st.integers(0, 4), st.integers(-3, 4)).filter(
    lambda ab: ab[0] > 0 or (ab[0] == 0 and ab[1] > 0)).map(lambda ab: BinomialFactor(*ab))


class TestLaurentPoly:
    def test_add_cancels(self):
        assert (P.monomial(1, 1) + P.monomial(1, 1, -1)).is_zero

    def test_add_disjoint(self):
        assert terms(P.one() + P.monomial(1, 1)) == {(0, 0): 1, (1, 1): 1}

    def test_add_doubles(self):
        p = P.one() + P.monomial(1, 1)
        assert terms(p + p) == {(0, 0): 2, (1, 1): 2}

    def test_mul_difference_of_squares(self):
        p = P({(0, 0): 1, (1, 0): -1})
        q = P({(0, 0): 1, (1, 0): 1})
        assert terms(p * q) == {(0, 0): 1, (2, 0): -1}

    def test_mul_laurent_units(self):
        assert P.monomial(-1, -1) * P.monomial(1, 1) == P.one()

    def test_square(self):
        p = P.one() + P.monomial(1, 1)
        assert terms(p ** 2) == {(0, 0): 1, (1, 1): 2, (2, 2): 1}

    def test_zero_coefficients_never_stored(self):
        p = P({(0, 0): 0, (1, 2): 3})
        assert terms(p) == {(1, 2): 3}

    @given(polys, polys, polys)
    @settings(max_examples=60)
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    def test_text_rendering(self):
        p = P({(0, 0): 1, (1, 1): 1, (2, 1): 1})
        assert p.text() == "1 + q*z + q^2*z"
        assert P.zero().text() == "0"
        assert P({(2, 1): -1, (0, 2): 3}).text() == "3*z^2 + -q^2*z"
        assert P.monomial(-1, 0).text() == "q^-1"

    @given(polys)
    @settings(max_examples=40)
    def test_machine_terms_round_trip(self, p):
        assert P.from_machine_terms(p.machine_terms()) == p

    def test_support_box(self):
        p = P({(-1, 2): 1, (3, 0): -2})
        assert p.support_box() == ((-1, 3), (0, 2))
        assert P.zero().support_box() is None


class TestExpandFactor:
    def test_positive_region(self):
        s = expand_factor(1, 1, 3)
        assert terms(s.poly) == {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1}

    def test_negative_region(self):
        s = expand_factor(-2, -1, 5)
        assert terms(s.poly) == {(2, 1): -1, (4, 2): -1}

    def test_negative_region_z_free(self):
        s = expand_factor(-1, 0, 3)
        assert terms(s.poly) == {(1, 0): -1, (2, 0): -1, (3, 0): -1}

    def test_mixed_region_rejected(self):
        with pytest.raises(ExpansionRegionError, match="unsupported expansion region"):
            expand_factor(1, -1, 5)
        with pytest.raises(ExpansionRegionError):
            expand_factor(-2, 3, 5)

    def test_zero_q_exponent_rejected(self):
        with pytest.raises(ValueError):
            expand_factor(0, 2, 5)

    @pytest.mark.parametrize("alpha,beta", [(1, 0), (1, 1), (2, 1), (3, 2), (-1, 0),
                                            (-1, -1), (-2, -1), (-3, -2)])
    def test_expansion_inverts_factor(self, alpha, beta):
        # expand(1/(1-w)) * (1-w) == 1 through the cutoff, in both regions;
        # the expansion needs a margin of |alpha| because a negative-region
        # factor lowers q-degrees by |alpha| when multiplied back in
        D = 9
        s = expand_factor(alpha, beta, D + abs(alpha))
        product = (s.poly * P({(0, 0): 1, (alpha, beta): -1})).truncate_q(D)
        assert product == P.one()

    def test_matches_stated_convention(self):
        for alpha, beta in [(2, 1), (1, 0), (-1, -1), (-3, -1)]:
            assert terms(expand_factor(alpha, beta, 8).poly) == geometric_terms(alpha, beta, 8)


class TestSeries:
    def test_mul_of_geometric_series(self):
        got = series_mul(expand_factor(1, 1, 3), expand_factor(2, 1, 3))
        # frozen from the convolution oracle
        expected = convolve(geometric_terms(1, 1, 3), geometric_terms(2, 1, 3), cutoff=3)
        assert expected == {(0, 0): 1, (1, 1): 1, (2, 1): 1, (2, 2): 1, (3, 2): 1, (3, 3): 1}
        assert terms(got.poly) == expected
        assert got.cutoff == 3

    def test_mul_identity_and_zero(self):
        x = expand_factor(1, 1, 4)
        assert x * Series.of_one(4) == x
        assert (x * Series.zero(4)).poly.is_zero

    def test_cutoff_is_min(self):
        prod = expand_factor(1, 0, 5) * expand_factor(1, 0, 3)
        assert prod.cutoff == 3

    def test_truncates_on_construction(self):
        s = Series(P({(0, 0): 1, (7, 0): 5}), 3)
        assert terms(s.poly) == {(0, 0): 1}

    def test_rejects_negative_support(self):
        with pytest.raises(ValueError, match="first quadrant"):
            Series(P.monomial(-1, 0), 3)
        with pytest.raises(ValueError, match="first quadrant"):
            Series(P.monomial(1, -1), 3)

    def test_shift(self):
        s = expand_factor(1, 1, 3).shifted(2, 1)
        assert terms(s.poly) == {(2, 1): 1, (3, 2): 1}


class TestRationalFn:
    one_over = staticmethod(lambda *fs: RationalFn.over_oriented_factors(
        1, 0, 0, P.one(), fs))

    def test_add_zero(self):
        x = self.one_over((1, 1))
        assert rational_add(x, RationalFn.zero()) is x
        assert rational_add(RationalFn.zero(), x) is x

    def test_add_inverse(self):
        x = self.one_over((1, 1))
        assert rational_add(x, -x) == RationalFn.zero()

    def test_common_denominator(self):
        x = self.one_over((1, 0))
        y = self.one_over((2, 0))
        s = rational_add(x, y)
        # numerator over the union denominator: (1-q^2) + (1-q) = 2 - q - q^2
        assert terms(s.numerator) == {(0, 0): 2, (1, 0): -1, (2, 0): -1}
        assert sorted(s.denominator) == [BinomialFactor(1, 0), BinomialFactor(2, 0)]
        # cross-check at a rational point
        assert eval_rational_fn(s, Fraction(2), Fraction(3)) == \
            Fraction(1) / (1 - 2) + Fraction(1) / (1 - 4)

    def test_union_denominator_multiset(self):
        x = RationalFn.over_oriented_factors(1, 0, 0, P.one(), [(1, 0), (1, 0)])
        y = self.one_over((1, 0))
        s = rational_add(x, y)
        assert sorted(s.denominator) == [BinomialFactor(1, 0)] * 2

    def test_canonicalization_identity_on_numerators(self):
        # (1 - q^-a z^-b) == (-q^-a z^-b) * (1 - q^a z^b) as values
        a, b = 2, 1
        lhs = RationalFn.from_parts(1, 0, 0, P({(0, 0): 1, (-a, -b): -1}))
        rhs = RationalFn.from_parts(-1, -a, -b, P({(0, 0): 1, (a, b): -1}))
        assert lhs == rhs

    def test_canonicalization_of_denominator_factor(self):
        # 1/(1 - q^-a z^-b) == -q^a z^b / (1 - q^a z^b)
        a, b = 3, 1
        built = self.one_over((-a, -b))
        manual = RationalFn.from_parts(-1, a, b, P.one(), [BinomialFactor(a, b)])
        assert built == manual
        assert eval_rational_fn(built, Fraction(2), Fraction(5)) == \
            Fraction(1) / (1 - Fraction(1, 2**a * 5**b))

    def test_equality_is_denominator_insensitive(self):
        # 1/(1-q) == (1+q)/(1-q^2)
        x = self.one_over((1, 0))
        y = RationalFn.over_oriented_factors(1, 0, 0, P({(0, 0): 1, (1, 0): 1}), [(2, 0)])
        assert x == y
        assert not (x == self.one_over((2, 0)))


class TestDivideExact:
    def test_difference_of_squares(self):
        num = P({(0, 0): 1, (2, 2): -1})
        got = divide_exact(num, BinomialFactor(1, 1))
        assert terms(got) == {(0, 0): 1, (1, 1): 1}

    def test_not_divisible(self):
        assert divide_exact(P({(0, 0): 1, (1, 0): -1}), BinomialFactor(1, 1)) is None

    def test_zero(self):
        assert divide_exact(P.zero(), BinomialFactor(2, 1)).is_zero

    def test_z_direction_factor(self):
        g = P({(0, 0): 1, (1, 3): 2})
        f = BinomialFactor(0, 2)
        assert divide_exact(g * f.as_poly(), f) == g

    @given(polys, canonical_factors)
    @settings(max_examples=80)
    def test_round_trip(self, g, f):
        assert divide_exact(g * f.as_poly(), f) == g


class TestExpandRational:
    def test_two_factor_product(self):
        fn = RationalFn.over_oriented_factors(1, 0, 0, P.one(), [(1, 1), (2, 1)])
        s = expand_rational(fn, 2)
        assert terms(s.poly) == {(0, 0): 1, (1, 1): 1, (2, 1): 1, (2, 2): 1}

    def test_bare_unit(self):
        fn = RationalFn.from_parts(-1, 2, 1, P.one())
        assert terms(expand_rational(fn, 5).poly) == {(2, 1): -1}

    def test_matches_naive_factor_product(self):
        # the chain-sum fast path agrees with multiplying expand_factor results
        fn = RationalFn.over_oriented_factors(1, 1, 1, P.one(), [(1, 1), (-2, -1), (3, 1)])
        D = 12
        naive = Series(P.monomial(1, 1), D)
        for alpha, beta in [(1, 1), (-2, -1), (3, 1)]:
            naive = naive * expand_factor(alpha, beta, D)
        assert expand_rational(fn, D) == naive

    def test_negative_unit_exponents_keep_exactness(self):
        # q^-2 z^-1 / (1 - q^2 z)(1 - q z): all emitted terms still land in
        # the first quadrant and stay exact through the cutoff
        fn = RationalFn.over_oriented_factors(1, 0, 0, P.one(), [(-2, -1), (1, 1)])
        D = 6
        naive = Series.of_one(D + 10) * expand_factor(-2, -1, D + 10) * expand_factor(1, 1, D + 10)
        assert terms(expand_rational(fn, D).poly) == terms(naive.poly.truncate_q(D))

    def test_mixed_region_propagates(self):
        fn = RationalFn.from_parts(1, 0, 0, P.one(), [BinomialFactor(2, -1)])
        with pytest.raises(ExpansionRegionError):
            expand_rational(fn, 4)


def test_first_difference():
    p = P({(0, 0): 1, (2, 1): 3})
    q = P({(0, 0): 1, (2, 1): 4, (5, 0): 1})
    assert first_difference(p, q) == (2, 1, 3, 4)
    assert first_difference(p, p) is None
