from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mucrit.qalg import QPoly, QQuadElem, falling

small_fracs = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)


class TestQPoly:
    def test_basic_arithmetic(self):
        x = QPoly.var("x")
        f = (x + 1) * (x - 1)
        assert f == x**2 - 1
        assert (x + Fraction(1, 2)) * 2 == 2 * x + 1

    def test_variable_alignment(self):
        x = QPoly.var("x")
        y = QPoly.var("y")
        f = x + y
        assert f.vars == ("x", "y")
        assert f.coefficient("y", 1) == QPoly.const(1, ("x",))

    def test_degree_and_coefficient(self):
        x = QPoly.var("x", ("x", "y"))
        y = QPoly.var("y", ("x", "y"))
        f = x**2 * y + 3 * y**2
        assert f.degree("x") == 2
        assert f.coefficient("x", 2) == QPoly.var("y")
        assert f.coefficient("x", 0) == 3 * QPoly.var("y") ** 2

    def test_derivative(self):
        x = QPoly.var("x")
        assert (x**3).derivative("x") == 3 * x**2

    def test_substitute(self):
        x = QPoly.var("x", ("x", "y"))
        y = QPoly.var("y", ("x", "y"))
        f = x**2 + y
        g = f.substitute("x", QPoly.var("y"))
        assert g == QPoly.var("y") ** 2 + QPoly.var("y")
        assert f.substitute("x", 2).substitute("y", 3).eval_scalar() == 7

    def test_eval_mod(self):
        x = QPoly.var("x")
        f = x * Fraction(1, 2) + Fraction(1, 3)
        p = 13
        want = (7 * 5 + 9) % p  # 1/2 = 7, 1/3 = 9 mod 13
        assert f.eval_mod(p, x=5) == want

    def test_falling_factorial(self):
        a = QPoly.var("a")
        assert falling(a, 0) == QPoly.const(1, ("a",))
        assert falling(a, 3) == a * (a - 1) * (a - 2)
        assert falling(a, 2).substitute("a", 7).eval_scalar() == 42


class TestQQuadElem:
    def test_generator_square(self):
        w = QQuadElem.generator()
        assert w * w == QQuadElem(0, Fraction(-1, 2))

    def test_inverse_of_constant_norm(self):
        w = QQuadElem.generator()
        x = 4 * w + 1
        assert x.norm() == QPoly.const(9, ("k",))
        assert x.inverse() == w * Fraction(-4, 9) + Fraction(1, 9)
        assert x * x.inverse() == QQuadElem(0, 1)

    def test_zero_inverse_rejected(self):
        with pytest.raises(ZeroDivisionError):
            QQuadElem(0, 0).inverse()

    def test_inexact_division_rejected(self):
        # norm of w + k is k^2 + 1/2, which does not divide the conjugate parts
        x = QQuadElem.generator() + QQuadElem.k()
        with pytest.raises(ValueError):
            x.inverse()

    def test_pow(self):
        w = QQuadElem.generator()
        assert w**2 == QQuadElem(0, Fraction(-1, 2))
        assert w**3 == w * Fraction(-1, 2)
        assert (2 * w + 1) ** 0 == QQuadElem(0, 1)

    def test_eval_mod(self):
        # w = 3 satisfies 2*9 + 1 = 19 == 0 mod 19
        x = QQuadElem(2, 5)
        assert x.eval_mod(19, 3) == (2 * 3 + 5) % 19
        with pytest.raises(ValueError):
            x.eval_mod(19, 4)

    @given(small_fracs, small_fracs, small_fracs, small_fracs)
    @settings(max_examples=60, deadline=None)
    def test_conjugate_product_is_norm(self, u1, v1, u2, v2):
        x = QQuadElem(QPoly.const(u1, ("k",)), QPoly.const(v1, ("k",)))
        prod = x * x.conjugate()
        assert prod.u.is_zero()
        assert prod.v == x.norm()
        y = QQuadElem(QPoly.const(u2, ("k",)), QPoly.const(v2, ("k",)))
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()

    @given(small_fracs, small_fracs)
    @settings(max_examples=40, deadline=None)
    def test_inverse_roundtrip_rational(self, u, v):
        x = QQuadElem(QPoly.const(u, ("k",)), QPoly.const(v, ("k",)))
        if not x.is_zero():
            assert x * x.inverse() == QQuadElem(0, 1)
