from fractions import Fraction

import numpy as np
import pytest

from stretchfactor.errors import DegenerateInput, Disconnected, InputError, NotCoxeter, NotHyperbolic, OutOfRange
from stretchfactor.graphspec import StarlikeTree, char_poly_adjacency, realize_starlike
from stretchfactor.intpoly import IntPoly, largest_real_root, salem_family_poly
from stretchfactor.thurston import (
    CurveSystem,
    PATag,
    classify_word,
    config_graph,
    gram,
    lifted_poly,
    nu,
    nu_field,
    nu_min_factor,
    nu_poly,
    parse_ab_word,
    rho_generators,
    standard_system,
    stretch_TATB,
)

X = IntPoly.x()


def desc(*coeffs):
    return IntPoly(reversed(coeffs))


def top_root(p):
    return largest_real_root(p)


class TestCurveSystem:
    def test_standard_2_3(self):
        s = standard_system(2, 3)
        assert [list(r) for r in s.matrix] == [[1, 1], [0, 1], [0, 1], [0, 1]]
        assert s.names_a == ("c1", "c2_1", "c2_2", "c2_3")
        assert s.names_b == ("d1", "d2")
        assert s.fills

    def test_standard_2_4(self):
        assert [list(r) for r in standard_system(2, 4).matrix] == [[1, 1]] + [[0, 1]] * 4

    @pytest.mark.parametrize("g, k", [(1, 3), (2, 2), (0, 5)])
    def test_standard_range(self, g, k):
        with pytest.raises(OutOfRange):
            standard_system(g, k)

    def test_parse(self):
        s = CurveSystem.parse("1 1\n0 1\n")
        assert s.shape == (2, 2) and not s.fills
        for bad in ["", "1 x", "1 1\n1"]:
            with pytest.raises(InputError):
                CurveSystem.parse(bad)
        with pytest.raises(InputError):
            CurveSystem.from_matrix([[-1]])

    def test_connectivity(self):
        assert standard_system(3, 3).is_connected()
        s = CurveSystem.from_matrix([[1, 0], [0, 1]])
        assert not s.is_connected()
        assert CurveSystem.from_matrix([[1, 0], [1, 0]]).has_empty_line()


class TestConfigGraph:
    def test_matches_starlike(self):
        assert config_graph(standard_system(2, 3)).is_isomorphic_tree(realize_starlike(StarlikeTree((2, 1, 1, 1))))
        assert config_graph(standard_system(3, 4)).is_isomorphic_tree(realize_starlike(StarlikeTree((4, 1, 1, 1, 1))))

    def test_single_intersection(self):
        g = config_graph(CurveSystem.from_matrix([[1]]))
        assert g.n == 2 and len(g.edges) == 1

    def test_multi_edge(self):
        with pytest.raises(NotCoxeter):
            config_graph(CurveSystem.from_matrix([[2]]))


class TestNu:
    def test_filling_pair(self):
        assert nu(CurveSystem.from_matrix([[2]])) == 4

    def test_standard_2_3(self):
        s = standard_system(2, 3)
        assert gram(s) == [[2, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1]]
        expected = max(np.linalg.eigvalsh(np.array(gram(s), dtype=float)))
        assert float(nu(s)) == pytest.approx(expected, rel=1e-12)

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            nu(CurveSystem.from_matrix([[1, 0], [0, 1]]))

    def test_min_factor_vanishes(self):
        s = standard_system(4, 5)
        assert nu(s).sign_of(nu_min_factor(s)) == 0
        assert nu_min_factor(s).degree <= nu_poly(s).degree

    def test_nu_is_mu_squared(self):
        # nu is the square of the configuration graph's spectral radius
        s = standard_system(3, 5)
        mu = top_root(char_poly_adjacency(config_graph(s)))
        assert mu.sign_of(nu_poly(s).compose(X**2)) == 0

    @pytest.mark.parametrize("g", range(2, 8))
    @pytest.mark.parametrize("k", range(3, 7))
    def test_lifted_family(self, g, k):
        assert lifted_poly(standard_system(g, k)) == salem_family_poly(g, k)


class TestRho:
    def setup_method(self):
        self.sys = standard_system(2, 4)
        self.f = nu_field(self.sys)
        self.ta, self.tb = rho_generators(self.sys, self.f)

    def test_product_trace(self):
        t = (self.ta @ self.tb).trace()
        assert t == self.f.sub(self.f.const(2), self.f.nu())

    def test_generator_invariants(self):
        one, two = self.f.const(1), self.f.const(2)
        for m in (self.ta, self.tb):
            assert m.trace() == two
            assert m.det() == one

    def test_inverse(self):
        assert (self.tb @ self.tb.inverse()).is_identity()
        assert (self.ta.inverse() @ self.ta).is_identity()

    def test_sign_of_sqrt(self):
        f = self.f
        w = f.sqrt_nu()
        assert f.sign(w) == 1
        assert f.sign(f.sub(w, f.const(2))) == 1  # nu > 4
        assert f.sign(f.sub(f.mul(w, w), f.nu())) == 0

    def test_enclosure(self):
        lo, hi = self.f.enclose(self.f.nu(), Fraction(1, 10**8))
        assert hi - lo < Fraction(1, 10**8)
        v = float(nu(self.sys))
        assert lo <= v <= hi


class TestClassifyWord:
    def test_ab_on_2_4(self):
        c = classify_word(standard_system(2, 4), ["A", "B"])
        assert c.tag is PATag.PSEUDO_ANOSOV
        assert c.minpoly_candidate == desc(1, -2, -2, -2, 1)
        assert c.stretch == top_root(desc(1, -2, -2, -2, 1))
        assert not c.conditional_on_filling

    def test_single_twist_parabolic(self):
        assert classify_word(standard_system(2, 4), "A").tag is PATag.PARABOLIC
        assert classify_word(standard_system(2, 4), ["B⁻¹"]).tag is PATag.PARABOLIC

    def test_elliptic(self):
        c = classify_word(CurveSystem.from_matrix([[1]]), "AB")
        assert c.tag is PATag.ELLIPTIC and c.trace == "1"
        assert c.conditional_on_filling

    def test_filling_pair_parabolic(self):
        # nu = 4 gives trace -2
        assert classify_word(CurveSystem.from_matrix([[2]]), "AB").tag is PATag.PARABOLIC

    def test_quadratic_case(self):
        c = classify_word(CurveSystem.from_matrix([[3]]), "AB")
        assert c.minpoly_candidate == desc(1, -7, 1)

    def test_conjugation_invariance(self):
        s = standard_system(3, 4)
        base = classify_word(s, "AB")
        assert classify_word(s, "BA").stretch == base.stretch
        assert classify_word(s, "aABA").stretch == base.stretch

    def test_inverse_has_same_stretch(self):
        s = standard_system(2, 5)
        assert classify_word(s, "ba").stretch == classify_word(s, "AB").stretch

    def test_longer_word(self):
        c = classify_word(standard_system(2, 4), "AAB")
        assert c.tag is PATag.PSEUDO_ANOSOV
        assert c.minpoly_candidate == desc(1, -8, -2, -8, 1)

    def test_mixed_signs(self):
        # A b has trace 2 + nu, no cancellation with the inverse
        c = classify_word(standard_system(2, 3), "Ab")
        assert c.tag is PATag.PSEUDO_ANOSOV
        assert float(c.stretch) > float(classify_word(standard_system(2, 3), "AB").stretch)

    def test_errors(self):
        with pytest.raises(DegenerateInput):
            classify_word(standard_system(2, 4), "")
        with pytest.raises(InputError):
            parse_ab_word("AC")

    def test_parse_forms(self):
        assert parse_ab_word("AbB") == [("A", 1), ("B", -1), ("B", 1)]
        assert parse_ab_word(["A^-1", "B"]) == [("A", -1), ("B", 1)]


class TestStretchTATB:
    def test_examples(self):
        assert stretch_TATB(standard_system(2, 4)) == top_root(desc(1, -2, -2, -2, 1))
        assert stretch_TATB(standard_system(2, 3)) == top_root(desc(1, -1, -1, -1, 1))

    def test_not_hyperbolic(self):
        with pytest.raises(NotHyperbolic):
            stretch_TATB(CurveSystem.from_matrix([[2]]))
        with pytest.raises(NotHyperbolic):
            stretch_TATB(CurveSystem.from_matrix([[1]]))

    def test_trace_relation_float(self):
        s = standard_system(3, 3)
        v, lam = float(nu(s)), float(stretch_TATB(s))
        assert lam * lam - lam * (v - 2) + 1 == pytest.approx(0, abs=1e-9)

    @pytest.mark.parametrize("g, k", [(2, 6), (4, 3), (6, 4)])
    def test_agrees_with_word(self, g, k):
        s = standard_system(g, k)
        assert classify_word(s, "AB").stretch == stretch_TATB(s)
