"""
Solutions of the Liouville equation  Delta lambda = -eps e^{-4 lambda}  built
from developing maps g, and their invariance under the maps T_ab.
"""
import logging

import numpy as np

from lorentz_weierstrass import defaults
from lorentz_weierstrass.algebra.grid import interior_mask, RealField, second_difference
from lorentz_weierstrass.algebra.numbers import check_eps, masked_inverse
from lorentz_weierstrass.exceptions import ContractViolation
from lorentz_weierstrass.mobius import apply_field

logger = logging.getLogger(__name__)


def _lambda_values(g, g_prime, eps):
    with np.errstate(all="ignore"):
        distance = np.abs(g.squared_norm() - eps)
        radicand = g_prime.squared_norm()
        valid = (
            np.isfinite(g.re)
            & np.isfinite(g.im)
            & np.isfinite(g_prime.re)
            & np.isfinite(g_prime.im)
            & (distance > defaults.gauss_band())
            & (radicand > 0)
        )
        values = (
            np.log(np.abs(1.0 - eps * g.squared_norm()))
            - np.log(2.0)
            - 0.5 * np.log(np.where(valid, radicand, 1.0))
        )
    return np.where(valid, values, np.nan), valid, distance


def lambda_from_g(g, g_prime, eps, grid):
    """
    lambda = log(|1 - eps g conj(g)| / (2 sqrt(g' conj(g')))) on the grid;
    nodes with g' conj(g') <= 0 or inside the g conj(g) = eps band are masked.
    """
    eps = check_eps(eps)
    z = grid.points(eps)
    values, valid, _ = _lambda_values(g(z), g_prime(z), eps)
    if not np.all(valid):
        logger.debug("lambda masked at %d of %d nodes", np.count_nonzero(~valid), valid.size)
    return RealField(values, grid, valid)


def lambda_from_chart(chart, grid):
    return lambda_from_g(chart.g, chart.g_prime, chart.eps, grid)


def liouville_residual_field(lam, eps):
    """
    Pointwise e^{-2 lambda} (lambda_xx + eps lambda_yy) + eps e^{-4 lambda}
    and the interior nodes where it is defined.
    """
    eps = check_eps(eps)
    hx, hy = lam.grid.steps
    values = np.nan_to_num(lam.values)
    xx, ok_xx = second_difference(values, lam.mask, hx, axis=0)
    yy, ok_yy = second_difference(values, lam.mask, hy, axis=1)
    where = interior_mask(lam.mask, 1) & ok_xx & ok_yy
    with np.errstate(all="ignore"):
        residual = np.exp(-2 * values) * (xx + eps * yy) + eps * np.exp(-4 * values)
    return np.where(where, residual, np.nan), where


def liouville_residual(lam, eps, steps=None):
    """max over interior nodes of |Delta lambda + eps e^{-4 lambda}|."""
    if steps is not None and not np.allclose(steps, lam.grid.steps):
        raise ContractViolation("steps do not match the grid of the lambda field")
    residual, where = liouville_residual_field(lam, eps)
    if not np.any(where):
        raise ContractViolation("the lambda field has no interior node")
    return float(np.max(np.abs(residual[where])))


def transform_developing_map(g, g_prime, T):
    """
    g~ = T_ab o g and g~' = g' / (conj(b) g + conj(a))^2. Nodes where the
    denominator is null evaluate to NaN.
    """

    def transformed(z):
        value, _, _ = apply_field(T, g(z))
        return value

    def transformed_prime(z):
        _, _, denominator = apply_field(T, g(z))
        reciprocal, _ = masked_inverse(denominator)
        return g_prime(z) * reciprocal * reciprocal

    return transformed, transformed_prime


def band_residual_profile(g, g_prime, eps, grid, edges):
    """
    Max Liouville residual binned by the distance |g conj(g) - eps| to the
    excluded band. Returns one (low, high, max residual, nodes) row per bin.
    """
    eps = check_eps(eps)
    z = grid.points(eps)
    values, valid, distance = _lambda_values(g(z), g_prime(z), eps)
    residual, where = liouville_residual_field(RealField(values, grid, valid), eps)
    edges = np.asarray(edges, dtype=float)
    profile = []
    for low, high in zip(edges[:-1], edges[1:]):
        selected = where & (distance >= low) & (distance < high)
        count = int(np.count_nonzero(selected))
        worst = float(np.max(np.abs(residual[selected]))) if count else float("nan")
        profile.append((float(low), float(high), worst, count))
    return profile


def lambda_consistency(lam, report):
    """max |lambda - (-log(eps K) / 4)| against the curvature of a sampled surface."""
    where = lam.mask & report.lambda_mask
    if not np.any(where):
        return float("nan")
    return float(np.max(np.abs(lam.values - report.lam)[where]))
