"""
The Weierstrass representation of spacelike (eps = +1) and timelike
(eps = -1) minimal surfaces of L^3.

A chart holds the Weierstrass data (f, g) as evaluators on EpsScalar values.
From it we build the tangent field phi = psi_z, integrate the immersion
psi = 2 Re int phi dz over a grid, and evaluate the Gauss map, the
conformal factor and the Hopf density pointwise.
"""
import logging
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from lorentz_weierstrass import defaults
from lorentz_weierstrass.algebra.grid import GridField, RealField
from lorentz_weierstrass.algebra.numbers import check_eps, EpsScalar, masked_inverse
from lorentz_weierstrass.exceptions import (
    ContractViolation,
    PathBlocked,
    PeriodDetected,
    SingularNode,
)
from lorentz_weierstrass.lorentz import stereo_unproject

logger = logging.getLogger(__name__)

INTEGRATED = "integrated"
CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class ChartSample:
    g: EpsScalar
    g_prime: EpsScalar
    f: EpsScalar
    valid: np.ndarray


@dataclass(frozen=True)
class WeierstrassChart:
    """
    Weierstrass data over a rectangular parameter domain.

    g, g_prime, f (and optionally f_prime) take and return EpsScalar values of
    the chart's eps; they must accept array components. singular_predicate,
    when given, receives the parameter z and returns True at nodes to exclude.
    A Lorentz-conjugate chart integrates the swapped partials
    psi*_x = psi_y, psi*_y = psi_x.
    """

    eps: int
    domain: object
    g: object
    g_prime: object
    f: object
    f_prime: object = None
    singular_predicate: object = None
    lorentz_conjugate: bool = False
    name: str = ""

    def __post_init__(self):
        check_eps(self.eps)

    def evaluate(self, z):
        if z.eps != self.eps:
            raise ContractViolation(f"chart has eps={self.eps}, got a value with eps={z.eps}")
        with np.errstate(all="ignore"):
            g = self.g(z)
            g_prime = self.g_prime(z)
            f = self.f(z)
            valid = np.ones(z.shape, dtype=bool)
            for value in (g, g_prime, f):
                valid &= np.isfinite(value.re) & np.isfinite(value.im)
            valid &= np.abs(g.squared_norm() - self.eps) > defaults.gauss_band()
            valid &= f.squared_norm() > 0
            if self.singular_predicate is not None:
                valid &= ~np.asarray(self.singular_predicate(z), dtype=bool)
        return ChartSample(g, g_prime, f, valid)


@dataclass(frozen=True)
class SurfaceGrid:
    """Sampled immersion psi with shape (nx, ny, 3); mask is True at valid nodes."""

    psi: np.ndarray
    grid: object
    mask: np.ndarray
    eps: int
    provenance: str = INTEGRATED
    chart: object = None
    base_index: tuple = None
    notes: tuple = field(default_factory=tuple)

    @property
    def origin(self):
        return self.grid.origin

    @property
    def steps(self):
        return self.grid.steps

    @property
    def valid_count(self):
        return int(np.count_nonzero(self.mask))

    def deviation(self, other):
        """
        Sup-norm distance to another sampling of the same grid after removing
        the constant offset at this grid's base node.
        """
        common = self.mask & other.mask
        if not np.any(common):
            return float("nan")
        i0, j0 = self.base_index or _nearest_valid(common, self.grid)
        if not common[i0, j0]:
            i0, j0 = _nearest_valid(common, self.grid)
        offset = other.psi[i0, j0] - self.psi[i0, j0]
        difference = other.psi[common] - offset - self.psi[common]
        return float(np.max(np.abs(difference)))


def _single(z):
    if z.is_array:
        raise ContractViolation("expected a single parameter value")


def _phi(eps, f, g):
    g2 = g * g
    if eps == 1:
        i = EpsScalar.unit(1)
        return (f * (1 + g2) * 0.25, i * f * (1 - g2) * 0.25, f * g * -0.5)
    tau = EpsScalar.unit(-1)
    return (f * g * 0.5, f * (1 - g2) * 0.25, tau * f * (1 + g2) * 0.25)


def phi_from_data(chart, z):
    """phi = psi_z at one valid parameter value, as three EpsScalars."""
    _single(z)
    sample = chart.evaluate(z)
    if not sample.valid:
        raise SingularNode(f"{z!r} is not a valid node of the chart")
    return _phi(chart.eps, sample.f, sample.g)


def phi_field(chart, grid):
    z = grid.points(chart.eps)
    sample = chart.evaluate(z)
    return tuple(
        GridField(component, grid, sample.valid)
        for component in _phi(chart.eps, sample.f, sample.g)
    )


def data_from_phi(phi, eps):
    """
    Recover (f, g) from the three components of phi. Nodes where the
    denominator -phi1 + i phi2 (or phi2 + tau phi3) is null are masked.
    """
    eps = check_eps(eps)
    phi1, phi2, phi3 = phi
    unit = EpsScalar.unit(eps)
    if eps == 1:
        half_f = phi1.values - unit * phi2.values
        numerator = phi3.values
        denominator = -half_f
    else:
        half_f = phi2.values + unit * phi3.values
        numerator = phi1.values
        denominator = half_f
    reciprocal, valid = masked_inverse(denominator)
    mask = phi1.mask & phi2.mask & phi3.mask & valid
    f = half_f * 2.0
    g = numerator * reciprocal
    return GridField(f, phi1.grid, mask), GridField(g, phi1.grid, mask)


def from_developing_map(g, g_prime, eps, domain=None, singular_predicate=None, name=""):
    """
    The chart in Liouville coordinates for a developing map g: f = -eps / g',
    so that the Hopf density is identically 1. Nodes where g' is null come
    out NaN and are masked by the chart.
    """
    eps = check_eps(eps)

    def f(z):
        reciprocal, _ = masked_inverse(g_prime(z))
        return reciprocal * float(-eps)

    return WeierstrassChart(
        eps=eps,
        domain=domain,
        g=g,
        g_prime=g_prime,
        f=f,
        singular_predicate=singular_predicate,
        name=name,
    )


def tangents(chart, z):
    """psi_x, psi_y (arrays ending in 3) and the validity mask at z."""
    sample = chart.evaluate(z)
    phi = _phi(chart.eps, sample.f, sample.g)
    psi_x = np.stack([2.0 * component.re for component in phi], axis=-1)
    # dz = u dy and u^2 = -eps, so d/dy of 2 Re int phi dz is -2 eps Im phi
    psi_y = np.stack([-2.0 * chart.eps * component.im for component in phi], axis=-1)
    if chart.lorentz_conjugate:
        psi_x, psi_y = psi_y, psi_x
    return psi_x, psi_y, sample.valid


def _nearest_valid(mask, grid):
    if not np.any(mask):
        raise ContractViolation("no valid node to integrate from")
    x, y = grid.mesh()
    cx, cy = grid.rectangle.center
    distance = np.where(mask, (x - cx) ** 2 + (y - cy) ** 2, np.inf)
    i, j = np.unravel_index(np.argmin(distance), mask.shape)
    return int(i), int(j)


def _run_bounds(valid, start):
    """First and last index of the contiguous valid run containing start."""
    low = start
    while low > 0 and valid[low - 1]:
        low -= 1
    high = start
    while high < len(valid) - 1 and valid[high + 1]:
        high += 1
    return low, high


def _cumulative(values, step, axis=0):
    if values.shape[axis] == 1:
        return np.zeros_like(values)
    if values.shape[axis] == 2:
        return integrate.cumulative_trapezoid(values, dx=step, axis=axis, initial=0)
    return integrate.cumulative_simpson(values, dx=step, axis=axis, initial=0)


def _integrate_line(derivative, valid, start, step):
    """
    Primitive of derivative along one line, zero at start, over the valid run
    through start. Returns (primitive, reached).
    """
    n = len(valid)
    primitive = np.full((n,) + derivative.shape[1:], np.nan)
    reached = np.zeros(n, dtype=bool)
    low, high = _run_bounds(valid, start)
    primitive[start:high + 1] = _cumulative(derivative[start:high + 1], step)
    backward = _cumulative(derivative[low:start + 1][::-1], step)
    primitive[low:start + 1] = -backward[::-1]
    reached[low:high + 1] = True
    return primitive, reached


def _boundary_period(psi_x, psi_y, steps):
    hx, hy = steps
    bottom = integrate.simpson(psi_x[:, 0], dx=hx, axis=0)
    right = integrate.simpson(psi_y[-1, :], dx=hy, axis=0)
    top = integrate.simpson(psi_x[:, -1], dx=hx, axis=0)
    left = integrate.simpson(psi_y[0, :], dx=hy, axis=0)
    return float(np.linalg.norm(bottom + right - top - left))


def _has_holes(mask):
    ring = np.concatenate([mask[0, :], mask[-1, :], mask[:, 0], mask[:, -1]])
    return bool(np.all(ring)) and not bool(np.all(mask[1:-1, 1:-1]))


def integrate_immersion(chart, grid, z0=None):
    """
    psi(z) = 2 Re int_{z0}^{z} phi dz by composite Simpson quadrature along
    the path z0 -> (x, y0) -> (x, y); psi(z0) = 0.

    Raises PathBlocked when a valid node cannot be reached along such a path
    and PeriodDetected when the grid boundary encloses masked nodes around
    which phi has a real period.
    """
    z = grid.points(chart.eps)
    psi_x, psi_y, valid = tangents(chart, z)
    if not np.any(valid):
        raise ContractViolation("every node of the grid is masked")

    if z0 is None:
        i0, j0 = _nearest_valid(valid, grid)
    else:
        i0, j0 = grid.nearest_index(z0.re, z0.im)
        if not valid[i0, j0]:
            raise SingularNode(f"base point {z0!r} is not a valid node")

    if _has_holes(valid):
        residual = _boundary_period(psi_x, psi_y, grid.steps)
        if residual > defaults.period_tolerance():
            raise PeriodDetected(
                f"phi has a real period {residual:.3g} around the masked nodes",
                residual=residual,
            )

    hx, hy = grid.steps
    first_leg, first_reached = _integrate_line(psi_x[:, j0], valid[:, j0], i0, hx)
    psi = np.full(psi_x.shape, np.nan)
    reached = np.zeros(valid.shape, dtype=bool)
    full = first_reached & np.all(valid, axis=1)
    if np.any(full):
        block = psi_y[full]
        columns = np.empty(block.shape)
        columns[:, j0:] = _cumulative(block[:, j0:], hy, axis=1)
        columns[:, :j0 + 1] = -_cumulative(block[:, j0::-1], hy, axis=1)[:, ::-1]
        psi[full] = first_leg[full][:, None, :] + columns
        reached[full] = True
    # columns broken by masked nodes integrate over the run through j0 only
    for i in np.flatnonzero(first_reached & ~full):
        column, column_reached = _integrate_line(psi_y[i, :], valid[i, :], j0, hy)
        psi[i, :] = first_leg[i] + column
        reached[i, :] = column_reached

    unreachable = valid & ~reached
    if np.any(unreachable):
        raise PathBlocked(
            f"{np.count_nonzero(unreachable)} valid nodes cannot be reached "
            f"from the base node along axis-aligned paths"
        )
    logger.debug(
        "integrated %s over %d valid of %d nodes",
        chart.name or "chart",
        np.count_nonzero(valid),
        valid.size,
    )
    return SurfaceGrid(
        psi=np.where(valid[..., None], psi, np.nan),
        grid=grid,
        mask=valid,
        eps=chart.eps,
        provenance=INTEGRATED,
        chart=chart,
        base_index=(i0, j0),
    )


def closed_form_surface(evaluator, grid, eps, mask=None, chart=None):
    """Sample a closed-form immersion (x, y) -> array ending in 3 on the grid."""
    x, y = grid.mesh()
    with np.errstate(all="ignore"):
        psi = np.asarray(evaluator(x, y), dtype=float)
    valid = np.all(np.isfinite(psi), axis=-1)
    if mask is not None:
        valid &= mask
    return SurfaceGrid(
        psi=np.where(valid[..., None], psi, np.nan),
        grid=grid,
        mask=valid,
        eps=check_eps(eps),
        provenance=CLOSED_FORM,
        chart=chart,
    )


def period_residual(chart, loop, samples=None):
    """
    |2 Re of the contour integral of phi dz| around the rectangle `loop`,
    each side sampled with composite Simpson.
    """
    if samples is None:
        samples = defaults.loop_samples()
    if samples % 2 == 0:
        samples += 1
    xs = np.linspace(loop.x_min, loop.x_max, samples)
    ys = np.linspace(loop.y_min, loop.y_max, samples)
    hx, hy = xs[1] - xs[0], ys[1] - ys[0]
    eps = chart.eps

    sides = {
        "bottom": EpsScalar(xs, np.full_like(xs, loop.y_min), eps),
        "right": EpsScalar(np.full_like(ys, loop.x_max), ys, eps),
        "top": EpsScalar(xs, np.full_like(xs, loop.y_max), eps),
        "left": EpsScalar(np.full_like(ys, loop.x_min), ys, eps),
    }
    increments = {}
    for side, z in sides.items():
        psi_x, psi_y, valid = tangents(chart, z)
        if not np.all(valid):
            raise ContractViolation(f"the {side} side of the loop crosses masked nodes")
        if side in ("bottom", "top"):
            increments[side] = integrate.simpson(psi_x, dx=hx, axis=0)
        else:
            increments[side] = integrate.simpson(psi_y, dx=hy, axis=0)
    total = (
        increments["bottom"] + increments["right"] - increments["top"] - increments["left"]
    )
    return float(np.linalg.norm(total))


def _valid_sample(chart, z):
    sample = chart.evaluate(z)
    if not np.all(sample.valid):
        raise SingularNode(f"{z!r} is not a valid node of the chart")
    return sample


def conformal_factor(chart, z):
    """e^{2 lambda} = f conj(f) (1 - eps g conj(g))^2 / 4."""
    sample = _valid_sample(chart, z)
    return _conformal_factor(chart.eps, sample)


def _conformal_factor(eps, sample):
    return sample.f.squared_norm() * (1.0 - eps * sample.g.squared_norm()) ** 2 / 4.0


def conformal_factor_field(chart, grid):
    sample = chart.evaluate(grid.points(chart.eps))
    values = np.where(sample.valid, _conformal_factor(chart.eps, sample), np.nan)
    return RealField(values, grid, sample.valid)


def gauss_map(chart, z):
    """N = pi^{-1}(g); <N, N> = -eps and stereo_project(N) = g."""
    sample = _valid_sample(chart, z)
    return stereo_unproject(sample.g, chart.eps)


def gauss_field(chart, grid):
    """Gauss map on every node, NaN where the chart is masked."""
    sample = chart.evaluate(grid.points(chart.eps))
    valid = sample.valid
    g = EpsScalar(
        np.where(valid, sample.g.re, 0.0), np.where(valid, sample.g.im, 0.0), chart.eps
    )
    N = stereo_unproject(g, chart.eps)
    return np.where(valid[..., None], N, np.nan), valid


def hopf_density(chart, z):
    """alpha = 2 <psi_zz, N> = -eps f g'."""
    sample = _valid_sample(chart, z)
    return sample.f * sample.g_prime * float(-chart.eps)


def hopf_density_field(chart, grid):
    sample = chart.evaluate(grid.points(chart.eps))
    return GridField(sample.f * sample.g_prime * float(-chart.eps), grid, sample.valid)
