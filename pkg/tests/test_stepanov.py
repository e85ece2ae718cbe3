from fractions import Fraction

import pytest

from mucrit.fp import FpSet
from mucrit.poly import FpPoly
from mucrit.qalg import QPoly, QQuadElem
from mucrit.stepanov import (
    alpha11_obstruction,
    annihilated_poly,
    d_alpha_l,
    d_operator,
    gamma_cross_check,
    gamma_numeric,
    gamma_symbolic,
    identity_catalog_run_all,
    lemma5_lemma6_numeric,
    lemma13_symbolic,
    quadratic_integer_solutions,
    rat2_check,
    rat3_check,
    verify_G_zero,
)

F41 = FpSet(41, [0, 1, 9, 32, 40])


class TestRatRelations:
    def test_f41_everywhere(self):
        for a in F41:
            assert rat2_check(F41, a)
            assert rat3_check(F41, a)

    def test_two_element_always_fails(self):
        # the relation would force 1 = 1/2
        for p in [13, 41, 97]:
            A = FpSet(p, [0, 1])
            assert not rat2_check(A, 0)

    def test_cross_shape_f13(self):
        # {0, +-1, +-i} with i^2 = -1: i = 5 mod 13
        A = FpSet(13, [0, 1, 12, 5, 8])
        for a in A:
            assert rat2_check(A, a)
            assert rat3_check(A, a)

    def test_scaled_translated_cross(self, rng):
        p = 13
        base = [0, 1, 12, 5, 8]
        for _ in range(5):
            u = rng.randrange(1, p)
            t = rng.randrange(p)
            A = FpSet(p, [(u * x + t) % p for x in base])
            assert all(rat2_check(A, a) and rat3_check(A, a) for a in A)

    def test_fractional_transforms_inherit_relations(self):
        # images of the d-critical difference set under the reciprocal map
        # must satisfy both relations at every element (d = 20 not in {2, 6})
        from mucrit.hp import fractional_transform

        for a in F41:
            image = fractional_transform(F41, a)
            for x in image:
                assert rat2_check(image, x)
                assert rat3_check(image, x)


class TestDOperator:
    def test_annihilates_approximant_fp(self, rng):
        for p in [10007, 1000003]:
            for _ in range(100):
                a = rng.randrange(p)
                s = rng.randrange(1, p)
                alpha = rng.randint(3, 12)
                g = annihilated_poly(p, a, s, alpha)
                assert d_operator(g, alpha).is_zero()

    def test_quintic_symbolic(self):
        x = QPoly.var("x", ("x", "b"))
        b = QPoly.var("b", ("x", "b"))
        f = x**5 - x + b
        assert d_operator(f, 5) == -3600 * b * x

    def test_quintic_numeric(self):
        p = 10007
        for bb in (0, 1, 17):
            f = FpPoly(p, [bb, p - 1, 0, 0, 0, 1])
            got = d_operator(f, 5)
            assert got == FpPoly(p, [0, (-3600 * bb) % p])

    def test_degree_bound(self, rng):
        p = 97
        for _ in range(10):
            deg = rng.randint(4, 9)
            g = FpPoly(p, [rng.randrange(p) for _ in range(deg)] + [1])
            alpha = rng.randint(3, 8)
            out = d_operator(g, alpha)
            assert out.is_zero() or out.degree <= 2 * deg - 4

    def test_degree11_kernel_needs_negative_linear_term(self):
        # the x-coefficient sign decides annihilation: +x leaves -1306800 x^8
        x = QPoly.var("x")
        plus = d_operator(x**11 + 11 * x**6 + x, 11)
        minus = d_operator(x**11 + 11 * x**6 - x, 11)
        assert minus.is_zero()
        assert plus == -1306800 * x**8


class TestGZero:
    def test_symbolic(self):
        assert verify_G_zero()

    def test_spot_values(self):
        # numeric instances of the same bracket expression
        def G(a, T):
            def ff(x, m):
                r = 1
                for i in range(m):
                    r *= x - i
                return r

            return (
                4 * a * (a - 2) * (a * T + T + 1) * (ff(a, 3) * T + 3 * ff(a, 2) * (T + 1))
                - 3 * (a - 1) * (a - 2) * (ff(a, 2) * T + 2 * a * (T + 1)) ** 2
                - a * (a + 1) * T * (ff(a, 4) * T + 4 * ff(a, 3) * (T + 1))
            )

        assert G(7, 3) == 0
        assert G(2, 1) == 0


class TestDAlphaL:
    def test_factorization(self):
        expanded, factored, ok = d_alpha_l()
        assert ok and expanded == factored

    def test_integer_solutions(self):
        assert quadratic_integer_solutions() == [(0, 2), (0, 3), (1, 5), (6, 11)]

    def test_l_equals_alpha_minus_one_kills(self):
        expanded, _, _ = d_alpha_l()
        for alpha in range(2, 12):
            val = expanded.substitute("a", alpha).substitute("l", alpha - 1)
            assert val.eval_scalar() == 0


class TestAlpha11:
    def test_report(self):
        rep = alpha11_obstruction()
        assert not rep.printed_poly_annihilated
        assert rep.kernel_poly_annihilated
        assert rep.coefficient_display_ok
        assert rep.coefficient_factorizations_ok
        assert rep.fpp_square_identity_ok
        assert rep.fpf3_identity_ok
        assert rep.square_reduction_ok
        assert rep.linear_reduction_ok
        assert rep.product_reduction_ok
        assert rep.final_reduction_ok
        assert rep.xi5_value == Fraction(15, 338)

    def test_printed_d_value(self):
        rep = alpha11_obstruction()
        x = QPoly.var("x")
        assert rep.printed_d_value == -1306800 * x**8

    def test_derived_residual(self):
        # the from-scratch criterion leaves 72600 xi^8, nonzero in any
        # characteristic > 121
        rep = alpha11_obstruction()
        xi = QPoly.var("xi")
        assert rep.derived_criterion_residual == 72600 * xi**8

    def test_numeric_path(self):
        rep = alpha11_obstruction(p=127)
        assert rep.numeric_checks_ok
        with pytest.raises(ValueError):
            alpha11_obstruction(p=113)  # below 121


class TestGammas:
    def test_symbolic_gamma0_inverse(self):
        g = gamma_symbolic()
        w = QQuadElem.generator()
        assert g["gamma0"].inverse() == 2 * w + 1
        assert (2 * g["gamma0"].inverse() - 1).inverse() == w * Fraction(-4, 9) + Fraction(1, 9)

    def test_numeric_cross_check_p19(self):
        assert gamma_cross_check(19, 3, 3, 9)

    def test_numeric_cross_check_requires_half_group(self):
        with pytest.raises(ValueError):
            gamma_cross_check(13, 3, 2, 4)

    def test_numeric_guards(self):
        with pytest.raises(ZeroDivisionError):
            gamma_numeric(13, 2, 2, 1)

    def test_gamma_numeric_matches_definition(self):
        p, alpha, k, d = 13, 2, 2, 4
        g = gamma_numeric(p, alpha, k, d)
        assert g["gamma0"] == alpha * (alpha + 1) * pow(d - 1, p - 2, p) % p
        assert g["gamma3"] == (alpha - (k + 1) * pow(2, p - 2, p)) % p

    def test_gamma_values_bundle(self):
        from mucrit.stepanov import GAMMA_NAMES, gamma_values

        gs = gamma_values(19, 3, 3, 9)
        assert set(gs.numeric) == set(GAMMA_NAMES)
        assert set(gs.symbolic) == set(GAMMA_NAMES)
        for name in GAMMA_NAMES:
            assert gs.symbolic[name].eval_mod(19, 3, k=3) == gs.numeric[name]
        sym_only = gamma_values(None, None, None, None)
        assert sym_only.numeric is None


class TestLemma13:
    def test_full_report(self):
        rep = lemma13_symbolic()
        assert rep.ok
        assert rep.display1_ok and rep.display2_ok
        assert rep.final_ok
        assert rep.alpha7_expansion_ok and rep.alpha7_collapse_ok
        assert rep.inv_gamma0_ok and rep.inv_two_over_gamma0_minus_one_ok


class TestIdentityCatalog:
    def test_all_entries_pass(self):
        results = identity_catalog_run_all()
        assert all(results.values()), {k: v for k, v in results.items() if not v}

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            from mucrit.stepanov import identity_catalog_check

            identity_catalog_check("nope")

    def test_resultant_oracle(self):
        sympy = pytest.importorskip("sympy")
        z = sympy.symbols("z")
        r = sympy.resultant(3 * (1 + z**2) - (1 + z) ** 2, 9 * (1 + z**3) - (1 + z) ** 3, z)
        assert r == 216

    def test_g_zero_oracle(self):
        sympy = pytest.importorskip("sympy")
        a, T = sympy.symbols("a T")

        def ff(x, m):
            r = sympy.Integer(1)
            for i in range(m):
                r *= x - i
            return r

        G = (
            4 * a * (a - 2) * (a * T + T + 1) * (ff(a, 3) * T + 3 * ff(a, 2) * (T + 1))
            - 3 * (a - 1) * (a - 2) * (ff(a, 2) * T + 2 * a * (T + 1)) ** 2
            - a * (a + 1) * T * (ff(a, 4) * T + 4 * ff(a, 3) * (T + 1))
        )
        assert sympy.expand(G) == 0


class TestLemma56:
    def test_f41_direct(self):
        rep = lemma5_lemma6_numeric(F41, 20)
        assert rep.critical and not rep.exempt
        assert rep.p2_identity_ok and rep.p3_identity_ok
        assert rep.recentered_vanishing_ok

    def test_f13_exempt(self):
        rep = lemma5_lemma6_numeric(FpSet(13, [0, 1, 10]), 6)
        assert rep.exempt

    def test_shifted_f41(self):
        for t in (7, 19):
            rep = lemma5_lemma6_numeric(F41.translate(t), 20)
            assert rep.p2_identity_ok and rep.p3_identity_ok

    def test_non_critical_rejected(self):
        with pytest.raises(ValueError):
            lemma5_lemma6_numeric(FpSet(41, [0, 1, 2, 3, 4]), 20)
