import numpy as np
import sympy
from django.test import SimpleTestCase

from lorentz_weierstrass.algebra import GridSpec, RealField
from lorentz_weierstrass.exceptions import ContractViolation
from lorentz_weierstrass.gallery import bonnet_rho, get_example, list_examples
from lorentz_weierstrass.geometry import shape_report
from lorentz_weierstrass.liouville import (
    band_residual_profile,
    lambda_consistency,
    lambda_from_chart,
    lambda_from_g,
    liouville_residual,
    liouville_residual_field,
    transform_developing_map,
)
from lorentz_weierstrass.lorentz import rigid_motion
from lorentz_weierstrass.mobius import (
    apply_field,
    AxisAngle,
    from_axis_angle,
    identity,
    to_rotation,
)
from lorentz_weierstrass.weierstrass import (
    from_developing_map,
    gauss_field,
    integrate_immersion,
)


def window(entry, step=1e-3, n=41):
    return GridSpec.window(*entry.base_point, step, n, n)


def random_transformation(rng, eps, k):
    """T_ab for a random axis with <L, L> = k and a moderate angle."""
    angle = rng.uniform(0.0, 2 * np.pi)
    if k == 1:
        r = rng.uniform(-1.0, 1.0)
        rho = np.sqrt(1.0 + r * r)
    else:
        rho = rng.uniform(0.1, 1.0)
        r = np.sqrt(rho * rho - k) * rng.choice([-1.0, 1.0])
    L = np.array([rho * np.cos(angle), rho * np.sin(angle), r])
    return from_axis_angle(AxisAngle(L, rng.uniform(-1.0, 1.0), k), eps)


class TestLambdaFromG(SimpleTestCase):
    def test_reference_lambdas(self):
        for name in ("elliptic_catenoid", "minkowski_bonnet", "hyperbolic_catenoid", "timelike_bonnet"):
            with self.subTest(example=name):
                entry = get_example(name)
                grid = entry.default_grid(21, 21)
                lam = lambda_from_chart(entry.chart, grid)
                x, y = grid.mesh()
                self.assertTrue(np.all(lam.mask))
                np.testing.assert_allclose(lam.values, entry.reference_lambda(x, y), atol=1e-12)

    def test_band_is_masked(self):
        entry = get_example("spacelike_enneper")
        grid = GridSpec(-1.0, 1.0, -1.0, 1.0, 21, 21)
        lam = lambda_from_g(entry.chart.g, entry.chart.g_prime, 1, grid)
        self.assertFalse(lam.mask[20, 10])
        self.assertTrue(np.isnan(lam.values[20, 10]))
        self.assertTrue(lam.mask[10, 10])
        self.assertAlmostEqual(lam.values[10, 10], np.log(0.5))


class TestLiouvilleResidual(SimpleTestCase):
    def test_every_example_solves_the_liouville_equation(self):
        for family in list_examples():
            with self.subTest(example=family.name):
                entry = get_example(family.name)
                lam = lambda_from_chart(entry.chart, window(entry))
                self.assertLessEqual(liouville_residual(lam, entry.eps), 1e-5)

    def test_log_sinh(self):
        grid = GridSpec.window(1.5, 0.0, 1e-3, 41, 41)
        x, _ = grid.mesh()
        lam = RealField(np.log(np.sinh(x)), grid, np.ones(grid.shape, dtype=bool))
        self.assertLessEqual(liouville_residual(lam, 1, steps=grid.steps), 1e-6)

    def test_log_cosh(self):
        grid = GridSpec.window(0.5, 0.2, 1e-3, 41, 41)
        x, _ = grid.mesh()
        lam = RealField(np.log(np.cosh(x)), grid, np.ones(grid.shape, dtype=bool))
        self.assertLessEqual(liouville_residual(lam, -1), 1e-6)

    def test_zero_is_not_a_solution(self):
        grid = GridSpec(0.0, 1.0, 0.0, 1.0, 11, 11)
        lam = RealField(np.zeros(grid.shape), grid, np.ones(grid.shape, dtype=bool))
        for eps in (1, -1):
            self.assertEqual(liouville_residual(lam, eps), 1.0)

    def test_residual_field_is_nan_off_the_interior(self):
        grid = GridSpec(0.0, 1.0, 0.0, 1.0, 11, 11)
        lam = RealField(np.zeros(grid.shape), grid, np.ones(grid.shape, dtype=bool))
        residual, where = liouville_residual_field(lam, 1)
        self.assertFalse(where[0, 5])
        self.assertTrue(np.isnan(residual[0, 5]))
        self.assertEqual(np.count_nonzero(where), 81)

    def test_mismatched_steps(self):
        grid = GridSpec(0.0, 1.0, 0.0, 1.0, 11, 11)
        lam = RealField(np.zeros(grid.shape), grid, np.ones(grid.shape, dtype=bool))
        with self.assertRaises(ContractViolation):
            liouville_residual(lam, 1, steps=(0.2, 0.1))

    def test_no_interior(self):
        grid = GridSpec(0.0, 1.0, 0.0, 1.0, 2, 2)
        lam = RealField(np.zeros(grid.shape), grid, np.ones(grid.shape, dtype=bool))
        with self.assertRaises(ContractViolation):
            liouville_residual(lam, 1)


class TestTransformations(SimpleTestCase):
    def test_identity(self):
        entry = get_example("helicoid")
        z = entry.default_grid(11, 11).points(1)
        g, g_prime = transform_developing_map(entry.chart.g, entry.chart.g_prime, identity(1))
        self.assertTrue(g(z).isclose(entry.chart.g(z), tol=1e-15))
        self.assertTrue(g_prime(z).isclose(entry.chart.g_prime(z), tol=1e-15))

    def test_lambda_is_invariant(self):
        rng = np.random.default_rng(20240613)
        for family in list_examples():
            entry = get_example(family.name)
            chart = entry.chart
            grid = entry.default_grid(21, 21)
            z = grid.points(entry.eps)
            lam = lambda_from_chart(chart, grid)
            for draw in range(20):
                T = random_transformation(rng, entry.eps, (-1, 0, 1)[draw % 3])
                g, g_prime = transform_developing_map(chart.g, chart.g_prime, T)
                moved = lambda_from_g(g, g_prime, entry.eps, grid)
                _, _, denominator = apply_field(T, chart.g(z))
                # nodes close to the pole of T lose digits in g~ conj(g~)
                where = lam.mask & moved.mask & (np.abs(denominator.squared_norm()) > 1e-2)
                with self.subTest(example=family.name, draw=draw):
                    self.assertTrue(np.any(where))
                    self.assertLessEqual(np.max(np.abs(moved.values - lam.values)[where]), 1e-10)

    def test_gauss_map_is_rotated(self):
        rng = np.random.default_rng(53)
        for name in ("minkowski_bonnet", "timelike_bonnet"):
            entry = get_example(name)
            grid = entry.default_grid(21, 21)
            T = random_transformation(rng, entry.eps, -1)
            g, g_prime = transform_developing_map(entry.chart.g, entry.chart.g_prime, T)
            moved = from_developing_map(g, g_prime, entry.eps)
            N, valid = gauss_field(entry.chart, grid)
            N_moved, valid_moved = gauss_field(moved, grid)
            expected = rigid_motion(N, to_rotation(T))
            where = valid & valid_moved
            scale = 1 + np.max(np.abs(expected[where]))
            self.assertLessEqual(np.max(np.abs(N_moved - expected)[where]), 1e-9 * scale)


class TestBandProfile(SimpleTestCase):
    def test_profile_rows(self):
        entry = get_example("spacelike_enneper")
        grid = GridSpec(0.3, 0.9, -0.3, 0.3, 61, 61)
        profile = band_residual_profile(
            entry.chart.g, entry.chart.g_prime, 1, grid, [0.0, 0.05, 0.5, 2.0]
        )
        self.assertEqual([(low, high) for low, high, _, _ in profile], [(0.0, 0.05), (0.05, 0.5), (0.5, 2.0)])
        low, high, worst, count = profile[0]
        self.assertEqual(count, 0)
        self.assertTrue(np.isnan(worst))
        self.assertEqual(sum(row[3] for row in profile), 59 * 59)
        for _, _, worst, count in profile[1:]:
            self.assertGreater(count, 0)
            self.assertLessEqual(worst, 1e-3)


class TestConsistency(SimpleTestCase):
    def test_lambda_agrees_with_the_curvature(self):
        for name in ("elliptic_catenoid", "hyperbolic_catenoid"):
            entry = get_example(name)
            grid = entry.verify_grid()
            report = shape_report(integrate_immersion(entry.chart, grid))
            lam = lambda_from_chart(entry.chart, grid)
            self.assertLessEqual(lambda_consistency(lam, report), 1e-3)


class TestTimelikeBonnetSymbolically(SimpleTestCase):
    def setUp(self):
        self.x, self.y, self.a, self.b = sympy.symbols("x y a b", real=True)
        self.rho = bonnet_rho(self.a, self.b, self.x, self.y, cosh=sympy.cosh)

    def test_rho_xy_vanishes(self):
        self.assertEqual(sympy.diff(self.rho, self.x, self.y), 0)

    def test_log_rho_solves_the_liouville_equation(self):
        x, y, a, b = self.x, self.y, self.a, self.b
        lam = sympy.log(self.rho)
        # rho^2 (lambda_xx - lambda_yy) = a^2 - b^2, which is 1 on the family
        expression = self.rho**2 * (sympy.diff(lam, x, 2) - sympy.diff(lam, y, 2)) - (a**2 - b**2)
        self.assertEqual(sympy.simplify(expression.rewrite(sympy.exp)), 0)

    def test_numeric_rho_matches(self):
        self.assertAlmostEqual(bonnet_rho(2.0, -np.sqrt(3.0), 0.0, 0.0), 2.0 - np.sqrt(3.0))
