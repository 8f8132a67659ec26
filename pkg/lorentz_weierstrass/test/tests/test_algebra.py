import numpy as np
from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st

from lorentz_weierstrass.algebra import (
    cos,
    cosh,
    elementary,
    EpsScalar,
    exp,
    inverse,
    masked_inverse,
    mul,
    sin,
    sinh,
    split_iso,
    split_iso_inverse,
)
from lorentz_weierstrass.exceptions import ContractViolation, NullDivisor

reals = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
small = st.floats(min_value=-2, max_value=2, allow_nan=False, allow_infinity=False)
signs = st.sampled_from([1, -1])

TAU = EpsScalar.unit(-1)
UNIT_I = EpsScalar.unit(1)


def random_scalars(rng, eps, size, bound=1.0):
    return EpsScalar(rng.uniform(-bound, bound, size), rng.uniform(-bound, bound, size), eps)


class TestMul(SimpleTestCase):
    def test_tau_squared_is_one(self):
        self.assertTrue(mul(TAU, TAU).isclose(EpsScalar(1.0, 0.0, -1), tol=0))

    def test_i_squared_is_minus_one(self):
        self.assertTrue(mul(UNIT_I, UNIT_I).isclose(EpsScalar(-1.0, 0.0, 1), tol=0))

    def test_conjugate_null_elements_multiply_to_zero(self):
        product = EpsScalar(1, 1, -1) * EpsScalar(1, -1, -1)
        self.assertEqual((product.re, product.im), (0.0, 0.0))

    def test_mismatched_eps(self):
        with self.assertRaises(ContractViolation):
            mul(UNIT_I, TAU)
        with self.assertRaises(ContractViolation):
            UNIT_I + TAU

    def test_complex_interop(self):
        z = EpsScalar(1.5, -2.0, 1)
        self.assertEqual(complex(z * (2 + 1j)), (1.5 - 2j) * (2 + 1j))
        with self.assertRaises(ContractViolation):
            TAU * 1j

    def test_integer_powers(self):
        self.assertTrue((TAU ** 3).isclose(TAU, tol=0))
        self.assertTrue((UNIT_I ** 4).isclose(EpsScalar(1.0, 0.0, 1), tol=0))
        z = EpsScalar(3.0, 1.0, -1)
        self.assertTrue((z ** -1).isclose(inverse(z)))

    def test_numpy_operands(self):
        z = EpsScalar(np.array([1.0, 2.0]), np.array([0.5, -0.5]), -1)
        left = np.array([2.0, 3.0]) * z
        right = z * np.array([2.0, 3.0])
        self.assertIsInstance(left, EpsScalar)
        np.testing.assert_array_equal(left.re, right.re)
        np.testing.assert_array_equal(left.im, right.im)

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            TAU.re = 2.0

    @given(small, small, small, small, small, small, signs)
    def test_ring_axioms(self, a, b, c, d, e, f, eps):
        x, y, z = EpsScalar(a, b, eps), EpsScalar(c, d, eps), EpsScalar(e, f, eps)
        self.assertTrue(((x * y) * z).isclose(x * (y * z), tol=1e-9))
        self.assertTrue((x * (y + z)).isclose(x * y + x * z, tol=1e-9))
        self.assertTrue((x * y).isclose(y * x, tol=0))

    @given(reals, reals, signs)
    def test_squared_norm_is_real(self, a, b, eps):
        z = EpsScalar(a, b, eps)
        self.assertEqual((z * z.conj()).im, 0.0)
        self.assertEqual((z * z.conj()).re, z.squared_norm())


class TestInverse(SimpleTestCase):
    def test_real_lorentz_number(self):
        self.assertTrue(inverse(EpsScalar(2.0, 0.0, -1)).isclose(EpsScalar(0.5, 0.0, -1), tol=0))

    def test_zero_divisor(self):
        with self.assertRaises(NullDivisor):
            inverse(EpsScalar(1.0, 1.0, -1))
        with self.assertRaises(ZeroDivisionError):
            EpsScalar(1.0, 0.0, 1) / EpsScalar(0.0, 0.0, 1)

    def test_three_plus_tau(self):
        z = EpsScalar(3.0, 1.0, -1)
        self.assertTrue(inverse(z).isclose(EpsScalar(3 / 8, -1 / 8, -1), tol=1e-15))
        self.assertTrue((inverse(z) * z).isclose(EpsScalar(1.0, 0.0, -1), tol=1e-15))

    def test_masked_inverse(self):
        z = EpsScalar(np.array([2.0, 1.0, -3.0]), np.array([0.0, -1.0, 1.0]), -1)
        reciprocal, valid = masked_inverse(z)
        np.testing.assert_array_equal(valid, [True, False, True])
        self.assertTrue(np.isnan(reciprocal.re[1]))
        self.assertAlmostEqual(reciprocal.re[0], 0.5)
        self.assertAlmostEqual(reciprocal.re[2], -3 / 8)


class TestElementary(SimpleTestCase):
    def test_exp_of_tau_y(self):
        value = exp(EpsScalar(0.0, 0.7, -1))
        self.assertAlmostEqual(value.re, np.cosh(0.7), places=14)
        self.assertAlmostEqual(value.im, np.sinh(0.7), places=14)

    def test_exp_of_zero(self):
        for eps in (1, -1):
            self.assertTrue(exp(EpsScalar(0.0, 0.0, eps)).isclose(EpsScalar(1.0, 0.0, eps), tol=0))

    def test_tau_symmetries(self):
        z = EpsScalar(0.3, 0.4, -1)
        self.assertTrue(cosh(TAU * z).isclose(cosh(z), tol=1e-15))
        self.assertTrue(sinh(TAU * z).isclose(TAU * sinh(z), tol=1e-15))

    def test_complex_functions(self):
        z = EpsScalar(0.3, -1.2, 1)
        self.assertAlmostEqual(complex(sin(z)), np.sin(0.3 - 1.2j))
        self.assertAlmostEqual(complex(cos(z)), np.cos(0.3 - 1.2j))

    def test_unknown_function(self):
        with self.assertRaises(ContractViolation):
            elementary("tan", TAU)

    def test_exp_addition_law(self):
        rng = np.random.default_rng(20240611)
        for eps in (1, -1):
            z = random_scalars(rng, eps, 10_000)
            w = random_scalars(rng, eps, 10_000)
            expected = exp(z + w)
            actual = exp(z) * exp(w)
            scale = np.maximum(1.0, expected.magnitude())
            self.assertLessEqual(np.max((actual - expected).magnitude() / scale), 1e-10)

    def test_hyperbolic_pythagoras(self):
        rng = np.random.default_rng(7)
        for eps in (1, -1):
            z = random_scalars(rng, eps, 10_000)
            identity = cosh(z) * cosh(z) - sinh(z) * sinh(z)
            self.assertLessEqual(np.max(np.abs(identity.re - 1.0)), 1e-10)
            self.assertLessEqual(np.max(np.abs(identity.im)), 1e-10)

    def test_conjugation_and_norm_are_multiplicative(self):
        rng = np.random.default_rng(11)
        for eps in (1, -1):
            z = random_scalars(rng, eps, 10_000)
            w = random_scalars(rng, eps, 10_000)
            self.assertTrue((z * w).conj().isclose(z.conj() * w.conj(), tol=1e-12))
            np.testing.assert_allclose(
                (z * w).squared_norm(), z.squared_norm() * w.squared_norm(), rtol=0, atol=1e-10
            )


class TestSplitIso(SimpleTestCase):
    def test_phi_of_two_plus_tau(self):
        pair = split_iso(EpsScalar(2.0, 1.0, -1))
        self.assertEqual((pair.u, pair.v), (3.0, 1.0))

    def test_phi_of_zero(self):
        pair = split_iso(EpsScalar(0.0, 0.0, -1))
        self.assertEqual((pair.u, pair.v), (0.0, 0.0))

    def test_phi_is_multiplicative(self):
        z, w = EpsScalar(1.0, 1.0, -1), EpsScalar(2.0, -1.0, -1)
        product = split_iso(z * w)
        factors = split_iso(z) * split_iso(w)
        self.assertEqual((product.u, product.v), (factors.u, factors.v))

    def test_phi_intertwines_random_products(self):
        rng = np.random.default_rng(3)
        z = random_scalars(rng, -1, 10_000, bound=5.0)
        w = random_scalars(rng, -1, 10_000, bound=5.0)
        product = split_iso(z * w)
        factors = split_iso(z) * split_iso(w)
        self.assertLessEqual(np.max(np.abs(product.u - factors.u)), 1e-10)
        self.assertLessEqual(np.max(np.abs(product.v - factors.v)), 1e-10)

    @given(reals, reals)
    def test_round_trip(self, a, b):
        z = split_iso_inverse(split_iso(EpsScalar(a, b, -1)))
        self.assertTrue(z.isclose(EpsScalar(a, b, -1), tol=1e-14))

    def test_complex_values_rejected(self):
        with self.assertRaises(ContractViolation):
            split_iso(UNIT_I)
