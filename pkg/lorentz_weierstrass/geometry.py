"""
Finite-difference differential geometry of a sampled immersion into L^3:
first and second fundamental forms, the unit normal, mean and Gaussian
curvature, principal curvatures and the conformal exponent lambda.
"""
import logging
from dataclasses import dataclass, replace

import numpy as np

from lorentz_weierstrass import defaults
from lorentz_weierstrass.algebra.grid import (
    fourth_order_difference,
    GridField,
    interior_mask,
    mixed_difference,
    RealField,
    second_difference,
    wirtinger_residual,
)
from lorentz_weierstrass.algebra.numbers import check_eps, EpsScalar
from lorentz_weierstrass.exceptions import DegenerateMetric, UmbilicOrInvalid
from lorentz_weierstrass.lorentz import cross_l, inner
from lorentz_weierstrass.weierstrass import (
    conformal_factor_field,
    gauss_field,
    hopf_density_field,
    tangents,
)

logger = logging.getLogger(__name__)

DEGENERATE_METRIC_TOLERANCE = 1e-14


@dataclass(frozen=True)
class ShapeReport:
    grid: object
    eps: int
    mask: np.ndarray
    E: np.ndarray
    F: np.ndarray
    G: np.ndarray
    l: np.ndarray  # noqa: E741
    m: np.ndarray
    n: np.ndarray
    N: np.ndarray
    chart: object = None
    H: np.ndarray = None
    K: np.ndarray = None
    k1: np.ndarray = None
    k2: np.ndarray = None
    lam: np.ndarray = None
    lambda_mask: np.ndarray = None

    def _max(self, values, relative_to=None):
        if not np.any(self.mask):
            return float("nan")
        value = float(np.max(np.abs(values[self.mask])))
        if relative_to is not None:
            value /= float(np.max(np.abs(relative_to[self.mask])))
        return value

    @property
    def max_E(self):
        return self._max(self.E)

    @property
    def max_abs_H(self):
        return self._max(self.H)

    @property
    def max_abs_F(self):
        """max |F| relative to max E."""
        return self._max(self.F, relative_to=self.E)

    @property
    def max_abs_E_minus_eps_G(self):
        """max |E - eps G| relative to max E."""
        return self._max(self.E - self.eps * self.G, relative_to=self.E)

    def lambda_field(self):
        return RealField(self.lam, self.grid, self.lambda_mask)


def fundamental_forms(surface):
    """
    E, F, G and the normal N = (psi_x x psi_y) / E from fourth-order central
    differences, l, m, n from second-order ones. Reported at nodes whose 5x5
    neighbourhood is valid.

    On chart-backed grids N is oriented so that pi(N) = g; raw grids keep the
    cross product orientation.
    """
    grid, eps, psi, mask = surface.grid, surface.eps, surface.psi, surface.mask
    hx, hy = grid.steps
    psi_x, ok_x = fourth_order_difference(psi, mask, hx, axis=0)
    psi_y, ok_y = fourth_order_difference(psi, mask, hy, axis=1)
    psi_xx, ok_xx = second_difference(psi, mask, hx, axis=0)
    psi_yy, ok_yy = second_difference(psi, mask, hy, axis=1)
    psi_xy, ok_xy = mixed_difference(psi, mask, (hx, hy))

    reported = interior_mask(mask, 2) & ok_x & ok_y & ok_xx & ok_yy & ok_xy

    with np.errstate(all="ignore"):
        E = inner(psi_x, psi_x)
        F = inner(psi_x, psi_y)
        G = inner(psi_y, psi_y)
        degenerate = reported & ~(np.abs(E) > DEGENERATE_METRIC_TOLERANCE)
        reported &= ~degenerate
        if not np.any(reported):
            raise DegenerateMetric("no node with a non-degenerate metric and a full stencil")
        if np.any(degenerate):
            logger.debug("masked %d nodes with degenerate metric", np.count_nonzero(degenerate))

        N = cross_l(psi_x, psi_y) / E[..., None]
        chart = surface.chart
        if chart is not None and not chart.lorentz_conjugate:
            reference, _ = gauss_field(chart, grid)
            flip = np.sum(N * reference, axis=-1) < 0
            N = np.where(flip[..., None], -N, N)

        l = inner(psi_xx, N)  # noqa: E741
        m = inner(psi_xy, N)
        n = inner(psi_yy, N)

    def keep(values):
        if values.ndim == 3:
            return np.where(reported[..., None], values, np.nan)
        return np.where(reported, values, np.nan)

    return ShapeReport(
        grid=grid,
        eps=check_eps(eps),
        mask=reported,
        E=keep(E),
        F=keep(F),
        G=keep(G),
        l=keep(l),
        m=keep(m),
        n=keep(n),
        N=keep(N),
        chart=chart,
    )


def curvatures(report, eps=None):
    """
    H = -(eps l + n) / (2E), K = (m^2 - l n) / E^2,
    k1,2 = -eps H +- sqrt(H^2 + eps K) and lambda = -log(H^2 + eps K) / 4.
    """
    eps = report.eps if eps is None else check_eps(eps)
    E, l, m, n = report.E, report.l, report.m, report.n
    with np.errstate(all="ignore"):
        H = -(eps * l + n) / (2 * E)
        K = (m * m - l * n) / (E * E)
        discriminant = H * H + eps * K
        root = np.sqrt(np.where(discriminant >= 0, discriminant, np.nan))
        k1 = -eps * H + root
        k2 = -eps * H - root

        H_lambda = H
        if report.chart is not None:
            H_lambda = np.where(np.abs(H) < defaults.minimal_tolerance(), 0.0, H)
        radicand = H_lambda * H_lambda + eps * K
        lambda_mask = report.mask & (radicand > 0)
        lam = np.where(lambda_mask, -0.25 * np.log(np.where(lambda_mask, radicand, 1.0)), np.nan)
    return replace(report, H=H, K=K, k1=k1, k2=k2, lam=lam, lambda_mask=lambda_mask)


def shape_report(surface):
    return curvatures(fundamental_forms(surface))


def lambda_from_curvatures(H, K, eps):
    radicand = np.asarray(H) ** 2 + eps * np.asarray(K)
    if np.any(radicand <= 0):
        raise UmbilicOrInvalid("H^2 + eps K must be positive to define lambda")
    return -0.25 * np.log(radicand)


def cmc_principal_curvatures(lam, H, eps):
    """Principal curvatures of a CMC immersion in Liouville coordinates."""
    scale = np.exp(-2.0 * np.asarray(lam))
    return scale - eps * H, -(scale + eps * H)


def gauss_equation_residual(report):
    """max |K + Delta log sqrt(E)| with Delta = (d_xx + eps d_yy) / E, interior nodes."""
    hx, hy = report.grid.steps
    with np.errstate(all="ignore"):
        log_root = 0.5 * np.log(np.where(report.mask & (report.E > 0), report.E, np.nan))
    valid = report.mask & np.isfinite(log_root)
    xx, ok_xx = second_difference(np.nan_to_num(log_root), valid, hx, axis=0)
    yy, ok_yy = second_difference(np.nan_to_num(log_root), valid, hy, axis=1)
    where = interior_mask(valid, 1) & ok_xx & ok_yy
    if not np.any(where):
        return float("nan")
    residual = report.K + (xx + report.eps * yy) / report.E
    return float(np.max(np.abs(residual[where])))


def laplacian_residual(surface, report):
    """
    max |Delta psi - 2 H N| over interior nodes, Delta = (d_xx + eps d_yy) / E.
    Zero for a minimal immersion: its coordinates are harmonic.
    """
    hx, hy = surface.grid.steps
    psi_xx, ok_xx = second_difference(surface.psi, surface.mask, hx, axis=0)
    psi_yy, ok_yy = second_difference(surface.psi, surface.mask, hy, axis=1)
    where = report.mask & ok_xx & ok_yy
    if not np.any(where):
        return float("nan")
    with np.errstate(all="ignore"):
        laplacian = (psi_xx + report.eps * psi_yy) / report.E[..., None]
        residual = laplacian - 2 * report.H[..., None] * report.N
    return float(np.max(np.linalg.norm(residual[where], axis=-1)))


def hopf_identity_residual(report, chart):
    """max |alpha conj(alpha) - E^2 (H^2 + eps K)| relative to max |alpha conj(alpha)|."""
    alpha = hopf_density_field(chart, report.grid)
    where = report.mask & alpha.mask
    if not np.any(where):
        return float("nan")
    alpha_square = alpha.values.squared_norm()
    curvature = report.E**2 * (report.H**2 + report.eps * report.K)
    scale = float(np.max(np.abs(alpha_square[where])))
    return float(np.max(np.abs(alpha_square - curvature)[where])) / scale


def normal_form_residual(report):
    """Distance of II from dx^2 - eps dy^2: max(|l - 1|, |n + eps|, |m|)."""
    if not np.any(report.mask):
        return float("nan")
    where = report.mask
    return float(
        max(
            np.max(np.abs(report.l[where] - 1.0)),
            np.max(np.abs(report.n[where] + report.eps)),
            np.max(np.abs(report.m[where])),
        )
    )


def conformal_factor_residual(report, chart):
    """max |E - e^{2 lambda}| relative to max E, e^{2 lambda} from the chart."""
    factor = conformal_factor_field(chart, report.grid)
    where = report.mask & factor.mask
    if not np.any(where):
        return float("nan")
    return float(np.max(np.abs(report.E - factor.values)[where])) / report.max_E


def hopf_field(report):
    """
    The Hopf density rebuilt from the second fundamental form:
    (l - n)/2 - i m when eps = +1 and (l + n)/2 + tau m when eps = -1.
    """
    if report.eps == 1:
        values = EpsScalar((report.l - report.n) / 2, -report.m, 1)
    else:
        values = EpsScalar((report.l + report.n) / 2, report.m, -1)
    return GridField(values, report.grid, report.mask)


def codazzi_residual(report):
    """For minimal surfaces Codazzi is the holomorphy of the Hopf density."""
    return wirtinger_residual(hopf_field(report))


def coordinate_line_torsion(chart, direction, x, y, step=1e-3):
    """
    |<a' x a''', a''>| / |a' x a''|^2 for the coordinate line through (x, y)
    in `direction` ("x" or "y"); zero exactly when the line is planar.
    Derivatives come from the chart's exact tangents.
    """
    axis = {"x": 0, "y": 1}[direction]
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    offsets = (-step, 0.0, step)
    samples = []
    for offset in offsets:
        shifted = (x + offset, y) if axis == 0 else (x, y + offset)
        psi_x, psi_y, _ = tangents(chart, EpsScalar(*shifted, chart.eps))
        samples.append(psi_x if axis == 0 else psi_y)
    minus, centre, plus = samples
    first = centre
    second = (plus - minus) / (2 * step)
    third = (plus - 2 * centre + minus) / step**2
    numerator = np.abs(inner(cross_l(first, third), second))
    denominator = np.sum(np.cross(first, second) ** 2, axis=-1)
    return numerator / denominator
