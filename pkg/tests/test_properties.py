"""Randomised invariants; the fixed-count sweeps live in the acceptance suite."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from stretchfactor.homology import TwistWord, action, char_poly, curve_classes_chain, transvection, xtrain_curve_classes
from stretchfactor.intpoly import (
    AlgebraicReal,
    IntPoly,
    is_palindromic,
    isolate_real_roots,
    power_min_poly,
    real_root_count,
    reciprocal,
    unit_circle_location,
)
from stretchfactor.matrix import charpoly

coeff = st.integers(min_value=-20, max_value=20)


@st.composite
def polys(draw, min_degree=1, max_degree=8, monic=False, nonzero_constant=False):
    n = draw(st.integers(min_value=min_degree, max_value=max_degree))
    cs = draw(st.lists(coeff, min_size=n, max_size=n))
    lead = 1 if monic else draw(coeff.filter(bool))
    if nonzero_constant and n > 0:
        cs[0] = cs[0] or draw(coeff.filter(bool))
    return IntPoly(cs + [lead])


@st.composite
def twist_words(draw, max_genus=4, max_len=20):
    g = draw(st.integers(min_value=2, max_value=max_genus))
    labels = sorted(xtrain_curve_classes(g))
    letters = draw(
        st.lists(st.tuples(st.sampled_from(labels), st.sampled_from([1, -1])), min_size=0, max_size=max_len)
    )
    return g, TwistWord.of(letters)


class TestPolynomialIdentities:
    @given(polys(nonzero_constant=True))
    def test_reciprocal_involution(self, p):
        assert reciprocal(reciprocal(p)) == p

    @given(polys(nonzero_constant=True), polys(nonzero_constant=True))
    def test_reciprocal_multiplicative(self, p, q):
        assert reciprocal(p * q) == reciprocal(p) * reciprocal(q)

    @given(polys(max_degree=5))
    def test_times_reciprocal_is_palindromic(self, p):
        assert is_palindromic(p * reciprocal(p)) or p[0] == 0

    @given(polys(), st.fractions(min_value=-10, max_value=10, max_denominator=50))
    def test_evaluation_matches_fraction_arithmetic(self, p, x):
        assert p(x) == sum(Fraction(c) * x**i for i, c in enumerate(p.coeffs))


class TestRoots:
    @settings(max_examples=60, deadline=None)
    @given(polys(max_degree=7))
    def test_real_root_count_against_numpy(self, p):
        sf_roots = isolate_real_roots(p)
        r = np.roots(list(reversed(p.coeffs)))
        reals = sorted(z.real for z in r if abs(z.imag) < 1e-7)
        # float roots may merge close pairs; only check well-separated spectra
        assume(all(b - a > 1e-4 for a, b in zip(reals, reals[1:])))
        assume(all(abs(z.imag) > 1e-4 or abs(z.imag) < 1e-9 for z in r))
        assert len(sf_roots) == len(reals)
        for a, x in zip(sf_roots, reals):
            assert float(a) == pytest.approx(x, abs=1e-6)

    @settings(max_examples=40, deadline=None)
    @given(polys(max_degree=6))
    def test_isolated_roots_are_ordered_and_vanish(self, p):
        roots = isolate_real_roots(p)
        for a, b in zip(roots, roots[1:]):
            assert a < b
        for a in roots:
            assert a.sign_of(p) == 0
        assert real_root_count(p) >= len(roots)

    @given(st.fractions(min_value=-50, max_value=50, max_denominator=100))
    def test_rational_round_trip(self, r):
        a = AlgebraicReal.from_rational(r)
        assert a == r and a.approx(5) == r


class TestUnitCircle:
    @settings(max_examples=80, deadline=None)
    @given(polys(max_degree=8, nonzero_constant=True))
    def test_counts_sum_to_degree(self, p):
        loc = unit_circle_location(p)
        assert loc.inside + loc.on + loc.outside == p.degree

    @settings(max_examples=80, deadline=None)
    @given(polys(max_degree=6, nonzero_constant=True))
    def test_reciprocal_swaps_inside_and_outside(self, p):
        a, b = unit_circle_location(p), unit_circle_location(reciprocal(p))
        assert (a.inside, a.on, a.outside) == (b.outside, b.on, b.inside)


class TestPowers:
    @settings(max_examples=40, deadline=None)
    @given(polys(max_degree=4, monic=True), st.integers(1, 3), st.integers(1, 3))
    def test_composition(self, p, a, b):
        assert power_min_poly(power_min_poly(p, a), b) == power_min_poly(p, a * b)

    @settings(max_examples=40, deadline=None)
    @given(polys(max_degree=5, monic=True), st.integers(1, 4))
    def test_matches_matrix_power(self, p, k):
        n = p.degree
        comp = [[0] * n for _ in range(n)]
        for i in range(1, n):
            comp[i][i - 1] = 1
        for i in range(n):
            comp[i][n - 1] = -p[i]
        m = [row[:] for row in comp]
        for _ in range(k - 1):
            m = [[sum(m[i][t] * comp[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        assert charpoly(m) == power_min_poly(p, k)


class TestSymplectic:
    @settings(max_examples=60, deadline=None)
    @given(twist_words())
    def test_action_is_symplectic(self, gw):
        g, w = gw
        m = action(w, xtrain_curve_classes(g), g)
        assert m.is_symplectic() and m.det() == 1

    @settings(max_examples=40, deadline=None)
    @given(twist_words(max_len=12))
    def test_char_poly_reciprocal_up_to_sign(self, gw):
        g, w = gw
        p = char_poly(action(w, xtrain_curve_classes(g), g))
        assert reciprocal(p) in (p, -p)

    @settings(max_examples=40, deadline=None)
    @given(twist_words(max_len=12))
    def test_word_times_inverse_is_identity(self, gw):
        g, w = gw
        t = xtrain_curve_classes(g)
        assert action(w, t, g).then(action(w.inverse(), t, g)).matrix == action("", t, g).matrix

    @given(st.integers(2, 5), st.data())
    def test_transvections_unipotent(self, g, data):
        c = data.draw(st.lists(st.integers(-3, 3), min_size=2 * g, max_size=2 * g))
        sign = data.draw(st.sampled_from([1, -1]))
        assert char_poly(transvection(c, sign, g)) == (IntPoly.x() - 1) ** (2 * g)

    @given(st.integers(2, 6))
    def test_chain_table_is_calibrated(self, g):
        t = curve_classes_chain(g)
        assert len(t) == 2 * g
