"""
Rectangular parameter grids and mask-aware finite differences.

Arrays are indexed [i, j] with i along x and j along y (numpy "ij" meshgrid
indexing), so a field has shape (nx, ny), optionally followed by component
axes such as the three ambient coordinates of an immersion.
"""
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from lorentz_weierstrass.algebra.numbers import EpsScalar
from lorentz_weierstrass.exceptions import ContractViolation


@dataclass(frozen=True)
class Rectangle:
    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self):
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ContractViolation(f"empty rectangle {self.as_tuple()}")

    def as_tuple(self):
        return (self.x_min, self.x_max, self.y_min, self.y_max)

    @property
    def center(self):
        return ((self.x_min + self.x_max) / 2, (self.y_min + self.y_max) / 2)

    @property
    def width(self):
        return self.x_max - self.x_min

    @property
    def height(self):
        return self.y_max - self.y_min

    def shrink(self, margin):
        return Rectangle(
            self.x_min + margin,
            self.x_max - margin,
            self.y_min + margin,
            self.y_max - margin,
        )

    def contains(self, x, y):
        return (
            (self.x_min <= x) & (x <= self.x_max) & (self.y_min <= y) & (y <= self.y_max)
        )


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise ContractViolation(
                f"a grid needs at least 2 nodes per axis, got {self.nx}x{self.ny}"
            )
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ContractViolation("grid steps must be strictly positive")

    @classmethod
    def from_rectangle(cls, rectangle, nx, ny):
        return cls(*rectangle.as_tuple(), int(nx), int(ny))

    @classmethod
    def window(cls, x, y, step, nx, ny):
        """An nx by ny grid with spacing `step` centred on (x, y)."""
        half_x = step * (nx - 1) / 2
        half_y = step * (ny - 1) / 2
        return cls(x - half_x, x + half_x, y - half_y, y + half_y, int(nx), int(ny))

    @property
    def rectangle(self):
        return Rectangle(self.x_min, self.x_max, self.y_min, self.y_max)

    @property
    def shape(self):
        return (self.nx, self.ny)

    @property
    def steps(self):
        return (
            (self.x_max - self.x_min) / (self.nx - 1),
            (self.y_max - self.y_min) / (self.ny - 1),
        )

    @property
    def origin(self):
        return (self.x_min, self.y_min)

    @property
    def xs(self):
        return np.linspace(self.x_min, self.x_max, self.nx)

    @property
    def ys(self):
        return np.linspace(self.y_min, self.y_max, self.ny)

    def mesh(self):
        return np.meshgrid(self.xs, self.ys, indexing="ij")

    def points(self, eps):
        x, y = self.mesh()
        return EpsScalar(x, y, eps)

    def nearest_index(self, x, y):
        hx, hy = self.steps
        i = int(round((x - self.x_min) / hx))
        j = int(round((y - self.y_min) / hy))
        return (min(max(i, 0), self.nx - 1), min(max(j, 0), self.ny - 1))

    def refine(self):
        """Same rectangle, half the step."""
        return GridSpec(
            self.x_min, self.x_max, self.y_min, self.y_max, 2 * self.nx - 1, 2 * self.ny - 1
        )


def _check_mask(values, mask, grid):
    if np.shape(mask) != grid.shape or np.shape(values)[:2] != grid.shape:
        raise ContractViolation(
            f"field of shape {np.shape(values)} with mask {np.shape(mask)} "
            f"does not match grid {grid.shape}"
        )


@dataclass(frozen=True)
class GridField:
    """EpsScalar samples on a grid; mask is True at valid nodes."""

    values: EpsScalar
    grid: GridSpec
    mask: np.ndarray

    def __post_init__(self):
        _check_mask(self.values.re, self.mask, self.grid)

    @property
    def eps(self):
        return self.values.eps

    @property
    def origin(self):
        return self.grid.origin

    @property
    def steps(self):
        return self.grid.steps


@dataclass(frozen=True)
class RealField:
    values: np.ndarray
    grid: GridSpec
    mask: np.ndarray

    def __post_init__(self):
        _check_mask(self.values, self.mask, self.grid)

    def max_abs(self, where=None):
        where = self.mask if where is None else where & self.mask
        if not np.any(where):
            return float("nan")
        return float(np.max(np.abs(self.values[where])))


def _expand(mask, values):
    return mask.reshape(mask.shape + (1,) * (values.ndim - mask.ndim))


def _shifted(values, mask, offset, axis):
    """values[k + offset] along axis, padded with NaN and False past the edges."""
    shifted = np.full(values.shape, np.nan)
    shifted_mask = np.zeros(mask.shape, dtype=bool)
    n = values.shape[axis]
    if abs(offset) >= n:
        return shifted, shifted_mask
    source = [slice(None)] * values.ndim
    target = [slice(None)] * values.ndim
    if offset > 0:
        source[axis], target[axis] = slice(offset, None), slice(None, n - offset)
    else:
        source[axis], target[axis] = slice(None, n + offset), slice(-offset, None)
    shifted[tuple(target)] = values[tuple(source)]
    shifted_mask[tuple(target[: mask.ndim])] = mask[tuple(source[: mask.ndim])]
    return shifted, shifted_mask


def first_difference(values, mask, step, axis):
    """
    Second-order first derivative along axis: central where both neighbours
    are valid, one-sided three-point stencils next to masked nodes or edges.
    Returns (derivative, valid) with NaN wherever no stencil fits.
    """
    values = np.asarray(values, dtype=float)
    mask = np.asarray(mask, dtype=bool)
    plus, plus_ok = _shifted(values, mask, 1, axis)
    minus, minus_ok = _shifted(values, mask, -1, axis)
    plus2, plus2_ok = _shifted(values, mask, 2, axis)
    minus2, minus2_ok = _shifted(values, mask, -2, axis)

    central = mask & plus_ok & minus_ok
    forward = mask & plus_ok & plus2_ok & ~central
    backward = mask & minus_ok & minus2_ok & ~central & ~forward

    with np.errstate(invalid="ignore", over="ignore"):
        result = np.where(
            _expand(central, values),
            (plus - minus) / (2 * step),
            np.where(
                _expand(forward, values),
                (-3 * values + 4 * plus - plus2) / (2 * step),
                np.where(
                    _expand(backward, values),
                    (3 * values - 4 * minus + minus2) / (2 * step),
                    np.nan,
                ),
            ),
        )
    return result, central | forward | backward


def fourth_order_difference(values, mask, step, axis):
    """
    Fourth-order first derivative along axis where both neighbours on each
    side are valid, first_difference everywhere else.
    """
    values = np.asarray(values, dtype=float)
    mask = np.asarray(mask, dtype=bool)
    result, valid = first_difference(values, mask, step, axis)
    plus, plus_ok = _shifted(values, mask, 1, axis)
    minus, minus_ok = _shifted(values, mask, -1, axis)
    plus2, plus2_ok = _shifted(values, mask, 2, axis)
    minus2, minus2_ok = _shifted(values, mask, -2, axis)
    wide = mask & plus_ok & minus_ok & plus2_ok & minus2_ok

    with np.errstate(invalid="ignore", over="ignore"):
        result = np.where(
            _expand(wide, values),
            (minus2 - 8 * minus + 8 * plus - plus2) / (12 * step),
            result,
        )
    return result, valid


def second_difference(values, mask, step, axis):
    """Second-order second derivative along axis, same stencil policy."""
    values = np.asarray(values, dtype=float)
    mask = np.asarray(mask, dtype=bool)
    shifted = {
        offset: _shifted(values, mask, offset, axis) for offset in (-3, -2, -1, 1, 2, 3)
    }
    central = mask & shifted[1][1] & shifted[-1][1]
    forward = mask & shifted[1][1] & shifted[2][1] & shifted[3][1] & ~central
    backward = (
        mask & shifted[-1][1] & shifted[-2][1] & shifted[-3][1] & ~central & ~forward
    )
    h2 = step * step

    with np.errstate(invalid="ignore", over="ignore"):
        result = np.where(
            _expand(central, values),
            (shifted[1][0] - 2 * values + shifted[-1][0]) / h2,
            np.where(
                _expand(forward, values),
                (2 * values - 5 * shifted[1][0] + 4 * shifted[2][0] - shifted[3][0]) / h2,
                np.where(
                    _expand(backward, values),
                    (2 * values - 5 * shifted[-1][0] + 4 * shifted[-2][0] - shifted[-3][0])
                    / h2,
                    np.nan,
                ),
            ),
        )
    return result, central | forward | backward


def mixed_difference(values, mask, steps):
    """d^2/dxdy as the x-difference of the y-difference."""
    hx, hy = steps
    dy, dy_ok = first_difference(values, mask, hy, axis=1)
    return first_difference(np.nan_to_num(dy), dy_ok, hx, axis=0)


def interior_mask(mask, margin=1):
    """Valid nodes whose whole (2 margin + 1)^2 neighbourhood is valid."""
    mask = np.asarray(mask, dtype=bool)
    if margin <= 0:
        return mask.copy()
    structure = np.ones((2 * margin + 1, 2 * margin + 1), dtype=bool)
    return ndimage.binary_erosion(mask, structure=structure, border_value=0)


def _partials(field):
    hx, hy = field.steps
    a_x, ok_ax = first_difference(field.values.re, field.mask, hx, axis=0)
    a_y, ok_ay = first_difference(field.values.re, field.mask, hy, axis=1)
    b_x, ok_bx = first_difference(field.values.im, field.mask, hx, axis=0)
    b_y, ok_by = first_difference(field.values.im, field.mask, hy, axis=1)
    return a_x, a_y, b_x, b_y, ok_ax & ok_ay & ok_bx & ok_by


def wirtinger_dzbar(field):
    """
    d/dzbar = (d/dx + eps u d/dy) / 2 for f = a + u b, i.e.
    ((a_x - b_y) + u (b_x + eps a_y)) / 2.
    """
    eps = field.eps
    a_x, a_y, b_x, b_y, valid = _partials(field)
    return EpsScalar((a_x - b_y) / 2, (b_x + eps * a_y) / 2, eps), valid


def wirtinger_dz(field):
    """d/dz = (d/dx - eps u d/dy) / 2; equals the derivative of a holomorphic f."""
    eps = field.eps
    a_x, a_y, b_x, b_y, valid = _partials(field)
    return EpsScalar((a_x + b_y) / 2, (b_x - eps * a_y) / 2, eps), valid


def wirtinger_residual(field):
    """
    Max of |df/dzbar| over interior valid nodes, using central differences.
    A field is holomorphic at tolerance t when this is <= t.
    """
    interior = interior_mask(field.mask, 1)
    if min(field.grid.shape) < 3 or not np.any(interior):
        raise ContractViolation(
            "the Wirtinger residual needs a 3x3 block of valid nodes"
        )
    dzbar, valid = wirtinger_dzbar(field)
    where = interior & valid
    return float(np.max(dzbar.magnitude()[where]))
