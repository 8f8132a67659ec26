"""
Verification reports: every invariant of a gallery entry measured on one
grid and compared with the VERIFY_THRESHOLDS limits.

A check that cannot be computed (a blocked integration path, an empty
interior, a point off the hyperboloid ...) is reported as failed with the
error message instead of raising.
"""
import logging
from dataclasses import dataclass, field, replace
from functools import cached_property

import numpy as np

from lorentz_weierstrass import defaults
from lorentz_weierstrass.algebra.grid import wirtinger_residual
from lorentz_weierstrass.algebra.numbers import EpsScalar
from lorentz_weierstrass.exceptions import ContractViolation, LorentzWeierstrassError
from lorentz_weierstrass.gallery import GalleryEntry, WEINGARTEN_NOTE
from lorentz_weierstrass.geometry import (
    conformal_factor_residual,
    gauss_equation_residual,
    hopf_identity_residual,
    normal_form_residual,
    shape_report,
)
from lorentz_weierstrass.liouville import (
    lambda_consistency,
    lambda_from_chart,
    liouville_residual,
    transform_developing_map,
)
from lorentz_weierstrass.lorentz import hyperboloid_residual, rigid_motion, stereo_project
from lorentz_weierstrass.mobius import to_rotation
from lorentz_weierstrass.weierstrass import (
    closed_form_surface,
    from_developing_map,
    gauss_field,
    integrate_immersion,
    period_residual,
    phi_field,
)

logger = logging.getLogger(__name__)

CURVATURE_CHECKS = (
    "max_abs_H",
    "max_abs_F",
    "max_abs_E_minus_eps_G",
    "normal_form",
    "hopf_identity",
    "gauss_equation",
    "conformal_factor",
    "lambda_consistency",
)


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    threshold: float
    passed: bool
    error: str = ""


@dataclass(frozen=True)
class VerificationReport:
    example: str
    eps: int
    params: dict
    grid: object
    checks: tuple
    valid_nodes: int
    total_nodes: int
    notes: tuple = field(default_factory=tuple)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def check(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def as_dict(self):
        grid = self.grid
        return {
            "example": self.example,
            "eps": self.eps,
            "params": dict(self.params),
            "grid": {
                "x_min": grid.x_min,
                "x_max": grid.x_max,
                "y_min": grid.y_min,
                "y_max": grid.y_max,
                "nx": grid.nx,
                "ny": grid.ny,
            },
            "valid_nodes": self.valid_nodes,
            "total_nodes": self.total_nodes,
            "passed": self.passed,
            "checks": [
                {
                    "name": check.name,
                    "value": check.value,
                    "threshold": check.threshold,
                    "passed": check.passed,
                    "error": check.error,
                }
                for check in self.checks
            ],
            "notes": list(self.notes),
        }


class CheckRunner:
    def __init__(self, thresholds=None):
        self.thresholds = thresholds if thresholds is not None else defaults.verify_thresholds()
        self.checks = []

    def run(self, name, compute):
        threshold = float(self.thresholds[name])
        try:
            with np.errstate(all="ignore"):
                value = float(compute())
        except LorentzWeierstrassError as error:
            logger.debug("check %s could not be computed: %s", name, error)
            self.checks.append(Check(name, float("nan"), threshold, False, str(error)))
            return
        if np.isnan(value):
            self.checks.append(Check(name, value, threshold, False, "no node to measure"))
            return
        self.checks.append(Check(name, value, threshold, bool(value <= threshold)))


class _Samples:
    """Sampled quantities of one chart on one grid, computed on first use."""

    def __init__(self, chart, grid):
        self.chart = chart
        self.grid = grid

    @cached_property
    def evaluation(self):
        return self.chart.evaluate(self.grid.points(self.chart.eps))

    @cached_property
    def surface(self):
        return integrate_immersion(self.chart, self.grid)

    @cached_property
    def report(self):
        return shape_report(self.surface)

    @cached_property
    def phi(self):
        return phi_field(self.chart, self.grid)

    @cached_property
    def lam(self):
        return lambda_from_chart(self.chart, self.grid)


def isotropy_residual(phi):
    """max |phi1^2 + phi2^2 - phi3^2| relative to max |phi|^2."""
    p1, p2, p3 = (component.values for component in phi)
    mask = phi[0].mask & phi[1].mask & phi[2].mask
    if not np.any(mask):
        raise ContractViolation("phi is masked at every node")
    square = (p1 * p1 + p2 * p2 - p3 * p3).magnitude()
    scale = p1.magnitude() ** 2 + p2.magnitude() ** 2 + p3.magnitude() ** 2
    return float(np.max(square[mask]) / np.max(scale[mask]))


def phi_wirtinger_residual(phi):
    """Largest d/dzbar of the phi components relative to max |phi|."""
    residual = max(wirtinger_residual(component) for component in phi)
    mask = phi[0].mask
    scale = max(float(np.max(component.values.magnitude()[mask])) for component in phi)
    return residual / scale


def gauss_projection_residual(chart, grid, evaluation=None):
    """max |pi(N) - g| over valid nodes, relative to max(1, max |g|)."""
    if evaluation is None:
        evaluation = chart.evaluate(grid.points(chart.eps))
    N, valid = gauss_field(chart, grid)
    if not np.any(valid):
        raise ContractViolation("the Gauss map is masked at every node")
    projected = stereo_project(N[valid], chart.eps)
    g = EpsScalar(evaluation.g.re[valid], evaluation.g.im[valid], chart.eps)
    scale = max(1.0, float(np.max(g.magnitude())))
    return float(np.max((projected - g).magnitude())) / scale


def gauss_hyperboloid_residual(chart, grid):
    """max |<N, N> + eps| over valid nodes."""
    N, valid = gauss_field(chart, grid)
    if not np.any(valid):
        raise ContractViolation("the Gauss map is masked at every node")
    return float(np.max(hyperboloid_residual(N[valid], chart.eps)))


def isometry_residual(first, second):
    """
    Distance between the E, H and K fields of two shape reports on the same
    grid: E and K relative to their size, H absolute.
    """
    where = first.mask & second.mask
    if not np.any(where):
        raise ContractViolation("the shape reports share no node")
    scale_E = float(np.max(np.abs(first.E[where])))
    scale_K = max(1.0, float(np.max(np.abs(first.K[where]))))
    return max(
        float(np.max(np.abs(first.E - second.E)[where])) / scale_E,
        float(np.max(np.abs(first.H - second.H)[where])),
        float(np.max(np.abs(first.K - second.K)[where])) / scale_K,
    )


def verify_report(entry, grid=None, thresholds=None):
    """Measure every invariant of `entry` on `grid` (default: its verify window)."""
    if grid is None:
        grid = entry.verify_grid()
    chart = entry.chart
    samples = _Samples(chart, grid)
    runner = CheckRunner(thresholds)
    notes = list(entry.notes)

    curvature = entry.curvature_checks
    if curvature:
        runner.run("max_abs_H", lambda: samples.report.max_abs_H)
        runner.run("max_abs_F", lambda: samples.report.max_abs_F)
        runner.run("max_abs_E_minus_eps_G", lambda: samples.report.max_abs_E_minus_eps_G)
    runner.run("isotropy", lambda: isotropy_residual(samples.phi))
    runner.run("wirtinger", lambda: phi_wirtinger_residual(samples.phi))
    runner.run("period", lambda: period_residual(chart, grid.rectangle))
    runner.run("liouville", lambda: liouville_residual(samples.lam, chart.eps))
    runner.run(
        "gauss_projection",
        lambda: gauss_projection_residual(chart, grid, samples.evaluation),
    )
    runner.run("hyperboloid", lambda: gauss_hyperboloid_residual(chart, grid))
    if entry.closed_form is not None:
        runner.run(
            "closed_form",
            lambda: samples.surface.deviation(
                closed_form_surface(
                    entry.closed_form, grid, entry.eps, mask=samples.surface.mask
                )
            ),
        )
    if curvature:
        runner.run("normal_form", lambda: normal_form_residual(samples.report))
        runner.run("hopf_identity", lambda: hopf_identity_residual(samples.report, chart))
        runner.run("gauss_equation", lambda: gauss_equation_residual(samples.report))
        runner.run(
            "conformal_factor", lambda: conformal_factor_residual(samples.report, chart)
        )
        runner.run(
            "lambda_consistency", lambda: lambda_consistency(samples.lam, samples.report)
        )
    elif WEINGARTEN_NOTE not in notes:
        notes.append(WEINGARTEN_NOTE)

    return VerificationReport(
        example=entry.name,
        eps=entry.eps,
        params=dict(entry.params),
        grid=grid,
        checks=tuple(runner.checks),
        valid_nodes=int(np.count_nonzero(samples.evaluation.valid)),
        total_nodes=grid.nx * grid.ny,
        notes=tuple(notes),
    )


def transformed_entry(entry, T):
    """The entry with developing map T o g; its Gauss map is R N for R = to_rotation(T)."""
    if T.eps != entry.eps:
        raise ContractViolation(
            f"{entry.name} has eps={entry.eps}, the transformation has eps={T.eps}"
        )
    if entry.chart.lorentz_conjugate:
        raise ContractViolation("Lorentz-conjugate charts have no developing map to transform")
    g, g_prime = transform_developing_map(entry.chart.g, entry.chart.g_prime, T)
    name = f"{entry.name}_transformed"
    chart = from_developing_map(
        g,
        g_prime,
        entry.eps,
        domain=entry.default_domain,
        singular_predicate=entry.chart.singular_predicate,
        name=name,
    )
    return GalleryEntry(
        name=name,
        eps=entry.eps,
        params=dict(entry.params),
        chart=chart,
        default_domain=entry.default_domain,
        base_point=entry.base_point,
        reference_lambda=entry.reference_lambda,
        notes=entry.notes + ("developing map composed with a Moebius transformation",),
    )


def transform_report(entry, T, grid=None, translation=None, thresholds=None):
    """
    verify_report of the transformed entry, plus the distance between its
    integrated immersion and the rigidly moved original (offset-corrected)
    and the isometry residual of their E, H, K fields.
    """
    if grid is None:
        grid = entry.verify_grid()
    moved = transformed_entry(entry, T)
    report = verify_report(moved, grid, thresholds)
    rotation = to_rotation(T)
    original = _Samples(entry.chart, grid)
    transformed = _Samples(moved.chart, grid)

    def rigid_motion_deviation():
        expected = replace(
            original.surface,
            psi=rigid_motion(original.surface.psi, rotation, translation),
        )
        return transformed.surface.deviation(expected)

    runner = CheckRunner(thresholds)
    runner.run("rigid_motion", rigid_motion_deviation)
    runner.run("isometry", lambda: isometry_residual(original.report, transformed.report))
    return replace(report, checks=report.checks + tuple(runner.checks))
