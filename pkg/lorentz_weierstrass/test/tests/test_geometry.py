import numpy as np
from django.test import SimpleTestCase

from lorentz_weierstrass.algebra import GridSpec, wirtinger_residual
from lorentz_weierstrass.exceptions import DegenerateMetric, UmbilicOrInvalid
from lorentz_weierstrass.gallery import get_example, list_examples
from lorentz_weierstrass.geometry import (
    cmc_principal_curvatures,
    codazzi_residual,
    conformal_factor_residual,
    coordinate_line_torsion,
    curvatures,
    fundamental_forms,
    gauss_equation_residual,
    hopf_identity_residual,
    lambda_from_curvatures,
    laplacian_residual,
    normal_form_residual,
    shape_report,
)
from lorentz_weierstrass.lorentz import inner
from lorentz_weierstrass.weierstrass import (
    closed_form_surface,
    integrate_immersion,
    phi_field,
)


def window(entry, step=1e-3, n=41):
    return GridSpec.window(*entry.base_point, step, n, n)


def integrated_report(entry, grid=None):
    grid = grid or entry.verify_grid()
    return shape_report(integrate_immersion(entry.chart, grid))


class TestFundamentalForms(SimpleTestCase):
    def test_flat_plane(self):
        grid = GridSpec(0.0, 8.0, 0.0, 8.0, 9, 9)
        plane = closed_form_surface(lambda x, y: np.stack([x, y, 0 * x], axis=-1), grid, 1)
        report = shape_report(plane)
        where = report.mask
        self.assertEqual(np.count_nonzero(where), 25)
        np.testing.assert_array_equal(report.E[where], 1.0)
        np.testing.assert_array_equal(report.G[where], 1.0)
        np.testing.assert_array_equal(report.F[where], 0.0)
        for values in (report.l, report.m, report.n, report.H, report.K):
            np.testing.assert_array_equal(values[where], 0.0)
        np.testing.assert_array_equal(inner(report.N[where], report.N[where]), -1.0)
        self.assertFalse(np.any(report.lambda_mask))

    def test_constant_immersion_is_degenerate(self):
        grid = GridSpec(0.0, 8.0, 0.0, 8.0, 9, 9)
        point = closed_form_surface(lambda x, y: np.zeros(x.shape + (3,)), grid, 1)
        with self.assertRaises(DegenerateMetric):
            fundamental_forms(point)

    def test_catenoid_metric(self):
        entry = get_example("elliptic_catenoid")
        grid = window(entry)
        report = integrated_report(entry, grid)
        x, _ = grid.mesh()
        where = report.mask
        self.assertLessEqual(np.max(np.abs(report.E - np.sinh(x) ** 2)[where]), 1e-5)
        self.assertLessEqual(report.max_abs_F, 1e-6)

    def test_timelike_enneper_metric(self):
        entry = get_example("timelike_enneper")
        report = integrated_report(entry)
        x, y = entry.verify_grid().mesh()
        where = report.mask
        expected = ((1 + x * x - y * y) / 2) ** 2
        self.assertLessEqual(np.max(np.abs(report.E - expected)[where] / expected[where]), 1e-5)
        self.assertLessEqual(report.max_abs_E_minus_eps_G, 1e-6)
        # sign(E G - F^2) = eps
        self.assertTrue(np.all((report.E * report.G - report.F**2)[where] < 0))

    def test_normal_matches_the_gauss_map(self):
        entry = get_example("minkowski_bonnet")
        report = integrated_report(entry)
        where = report.mask
        np.testing.assert_allclose(inner(report.N[where], report.N[where]), -1.0, atol=1e-6)
        # oriented so that l = 1 rather than -1
        np.testing.assert_allclose(report.l[where], 1.0, atol=1e-4)


class TestCurvatures(SimpleTestCase):
    def test_minimality_and_conformality_on_every_example(self):
        for family in list_examples():
            with self.subTest(example=family.name):
                entry = get_example(family.name)
                report = integrated_report(entry, window(entry))
                self.assertLessEqual(report.max_abs_H, 5e-5)
                verify = integrated_report(entry)
                self.assertLessEqual(verify.max_abs_F, 1e-6)
                self.assertLessEqual(verify.max_abs_E_minus_eps_G, 1e-6)

    def test_conformality_across_the_default_domain(self):
        for family in list_examples():
            entry = get_example(family.name)
            inner_domain = entry.default_domain.shrink(0.05)
            for cx in np.linspace(inner_domain.x_min, inner_domain.x_max, 3):
                for cy in np.linspace(inner_domain.y_min, inner_domain.y_max, 3):
                    with self.subTest(example=family.name, centre=(cx, cy)):
                        report = integrated_report(entry, GridSpec.window(cx, cy, 1e-3, 41, 41))
                        self.assertLessEqual(report.max_abs_F, 1e-6)
                        self.assertLessEqual(report.max_abs_E_minus_eps_G, 1e-6)

    def test_catenoid_gauss_curvature(self):
        entry = get_example("elliptic_catenoid")
        grid = entry.verify_grid()
        report = integrated_report(entry, grid)
        x, _ = grid.mesh()
        where = report.mask
        self.assertLessEqual(np.max(np.abs(report.K * np.sinh(x) ** 4 - 1)[where]), 1e-4)

    def test_hyperbolic_catenoid_gauss_curvature(self):
        entry = get_example("hyperbolic_catenoid")
        grid = entry.verify_grid()
        report = integrated_report(entry, grid)
        x, _ = grid.mesh()
        where = report.mask
        self.assertLessEqual(np.max(np.abs(-report.K * np.cosh(x) ** 4 - 1)[where]), 1e-4)

    def test_principal_curvatures(self):
        entry = get_example("elliptic_catenoid")
        grid = entry.verify_grid()
        report = integrated_report(entry, grid)
        x, _ = grid.mesh()
        where = report.mask
        # k1,2 = +-e^{-2 lambda} on a minimal surface
        expected = 1 / np.sinh(x) ** 2
        self.assertLessEqual(np.max(np.abs(report.k1 - expected)[where]), 1e-4)
        self.assertLessEqual(np.max(np.abs(report.k2 + expected)[where]), 1e-4)

    def test_curvatures_accepts_an_explicit_eps(self):
        entry = get_example("hyperbolic_catenoid")
        forms = fundamental_forms(integrate_immersion(entry.chart, entry.verify_grid()))
        np.testing.assert_array_equal(curvatures(forms, -1).K, curvatures(forms).K)

    def test_lambda_from_curvatures(self):
        self.assertEqual(lambda_from_curvatures(0.0, 1.0, 1), 0.0)
        self.assertAlmostEqual(float(lambda_from_curvatures(0.0, -np.exp(-4.0), -1)), 1.0)
        with self.assertRaises(UmbilicOrInvalid):
            lambda_from_curvatures(0.0, 0.0, 1)
        with self.assertRaises(UmbilicOrInvalid):
            lambda_from_curvatures(np.array([0.0, 0.1]), np.array([1.0, -1.0]), 1)

    def test_cmc_principal_curvatures(self):
        k1, k2 = cmc_principal_curvatures(0.0, 0.0, 1)
        self.assertEqual((k1, k2), (1.0, -1.0))
        k1, k2 = cmc_principal_curvatures(np.log(2.0), 0.5, -1)
        self.assertAlmostEqual(float(k1), 0.75)
        self.assertAlmostEqual(float(k2), 0.25)


class TestIdentities(SimpleTestCase):
    def test_identities_on_liouville_charts(self):
        for name in ("spacelike_enneper", "minkowski_bonnet", "timelike_bonnet"):
            with self.subTest(example=name):
                entry = get_example(name)
                report = integrated_report(entry)
                self.assertLessEqual(normal_form_residual(report), 1e-4)
                self.assertLessEqual(hopf_identity_residual(report, entry.chart), 1e-4)
                self.assertLessEqual(gauss_equation_residual(report), 1e-3)
                self.assertLessEqual(conformal_factor_residual(report, entry.chart), 1e-5)

    def test_coordinates_are_harmonic(self):
        for name in ("elliptic_catenoid", "spacelike_enneper", "hyperbolic_catenoid", "timelike_bonnet"):
            with self.subTest(example=name):
                entry = get_example(name)
                surface = integrate_immersion(entry.chart, entry.verify_grid())
                self.assertLessEqual(laplacian_residual(surface, shape_report(surface)), 1e-3)

    def test_lines_of_curvature(self):
        entry = get_example("hyperbolic_catenoid")
        report = integrated_report(entry)
        self.assertLessEqual(np.max(np.abs(report.m[report.mask])), 1e-4)

    def test_codazzi_reduces_to_holomorphy(self):
        entry = get_example("elliptic_catenoid")
        report = integrated_report(entry, window(entry))
        self.assertLessEqual(codazzi_residual(report), 1e-3)


class TestCoordinateLines(SimpleTestCase):
    def test_bonnet_lines_are_planar(self):
        entry = get_example("minkowski_bonnet")
        x0, y0 = entry.base_point
        xs = x0 + np.array([-0.3, 0.0, 0.3])
        ys = y0 + np.array([-0.5, 0.0, 0.5])
        for direction in ("x", "y"):
            torsion = coordinate_line_torsion(entry.chart, direction, xs, ys)
            self.assertLessEqual(np.max(torsion), 1e-5)

    def test_helicoid_lines_are_not_planar(self):
        entry = get_example("helicoid")
        torsion = coordinate_line_torsion(entry.chart, "x", *entry.base_point)
        self.assertGreater(float(torsion), 1e-3)


class TestConvergence(SimpleTestCase):
    """
    Observed order of the stencils under h -> h/2 on the catenoid; the
    Enneper data are polynomial, so the stencils are exact there.
    """

    def setUp(self):
        self.entry = get_example("elliptic_catenoid")
        self.coarse = GridSpec.window(0.8, 0.3, 0.01, 21, 21)
        self.fine = self.coarse.refine()

    def test_mean_curvature(self):
        def max_abs_H(grid):
            surface = closed_form_surface(self.entry.closed_form, grid, 1, chart=self.entry.chart)
            return shape_report(surface).max_abs_H

        order = np.log2(max_abs_H(self.coarse) / max_abs_H(self.fine))
        self.assertGreaterEqual(order, 1.8)

    def test_wirtinger_residual(self):
        def residual(grid):
            return max(wirtinger_residual(component) for component in phi_field(self.entry.chart, grid))

        order = np.log2(residual(self.coarse) / residual(self.fine))
        self.assertGreaterEqual(order, 1.8)
