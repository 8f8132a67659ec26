"""
Lorentz-Minkowski space L^3: R^3 with the metric dx1^2 + dx2^2 - dx3^2.

Vectors are numpy arrays whose last axis has length 3; every function here
broadcasts over leading axes so whole grids of points go through at once.
Matrices act on column vectors, R @ P.
"""
import enum

import numpy as np

from lorentz_weierstrass import defaults
from lorentz_weierstrass.algebra.numbers import check_eps, EpsScalar
from lorentz_weierstrass.exceptions import (
    ContractViolation,
    LightConeError,
    PoleError,
)

SIGNATURE = np.array([1.0, 1.0, -1.0])
ETA = np.diag(SIGNATURE)


class CausalCharacter(str, enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


class RotationKind(str, enum.Enum):
    HYPERBOLIC = "hyperbolic"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"


def lvec(x1, x2, x3):
    return np.array([x1, x2, x3], dtype=float)


def inner(u, v):
    return np.sum(np.asarray(u) * np.asarray(v) * SIGNATURE, axis=-1)


def cross_l(u, v):
    """
    Lorentzian cross product eta (u x v), characterised by
    inner(cross_l(u, v), w) = det[u; v; w].
    """
    return np.cross(u, v) * SIGNATURE


def causal_character(v, tol=None):
    if tol is None:
        tol = defaults.causal_tolerance()
    square = float(inner(v, v))
    if abs(square) <= tol:
        return CausalCharacter.LIGHTLIKE
    return CausalCharacter.SPACELIKE if square > 0 else CausalCharacter.TIMELIKE


def hyperboloid_residual(P, eps):
    """|<P, P> + eps|, zero on H^2_eps."""
    return np.abs(inner(P, P) + eps)


def stereo_project(P, eps, tol=None):
    """
    Stereographic projection of H^2_eps onto the parameter plane:
    (u + i v) / (1 - w) for eps = +1 and (-v + tau w) / (u + 1) for eps = -1.
    """
    eps = check_eps(eps)
    P = np.asarray(P, dtype=float)
    if tol is None:
        tol = defaults.pole_tolerance()
    off_sheet = np.max(hyperboloid_residual(P, eps))
    if off_sheet > defaults.hyperboloid_tolerance():
        raise ContractViolation(
            f"point is not on the hyperboloid <P,P> = {-eps} (residual {off_sheet:.3g})"
        )
    u, v, w = P[..., 0], P[..., 1], P[..., 2]
    if eps == 1:
        denominator = 1.0 - w
        numerator = (u, v)
    else:
        denominator = u + 1.0
        numerator = (-v, w)
    if np.any(np.abs(denominator) < tol):
        pole = "north pole (0,0,1)" if eps == 1 else "pole (-1,0,0)"
        raise PoleError(f"cannot project the {pole}")
    return EpsScalar(numerator[0] / denominator, numerator[1] / denominator, eps)


def stereo_unproject(z, eps, tol=None):
    """Inverse of stereo_project; the result lies on H^2_eps."""
    eps = check_eps(eps)
    if z.eps != eps:
        raise ContractViolation(f"expected an eps={eps} value, got eps={z.eps}")
    if tol is None:
        tol = defaults.pole_tolerance()
    norm = z.squared_norm()
    if eps == 1:
        denominator = norm - 1.0
        if np.any(np.abs(denominator) < tol):
            raise LightConeError("|z| = 1 has no preimage on H^2_+")
        components = (-2.0 * z.re, -2.0 * z.im, 1.0 + norm)
    else:
        denominator = 1.0 + norm
        if np.any(np.abs(denominator) < tol):
            raise LightConeError("1 + z conj(z) = 0 has no preimage on H^2_-")
        components = (1.0 - norm, -2.0 * z.re, 2.0 * z.im)
    return np.stack(components, axis=-1) / np.expand_dims(denominator, -1)


def ck_sk(theta, k, eps):
    """
    c_k, s_k: cos/sin for k = -1, cosh/sinh for k = 1 and (1, -eps theta) for
    k = 0, so that c_k^2 - k s_k^2 = 1.
    """
    eps = check_eps(eps)
    if k == -1:
        return np.cos(theta), np.sin(theta)
    if k == 0:
        if np.ndim(theta) == 0:
            return 1.0, -eps * float(theta)
        theta = np.asarray(theta, dtype=float)
        return np.ones_like(theta), -eps * theta
    if k == 1:
        return np.cosh(theta), np.sinh(theta)
    raise ContractViolation(f"k must be -1, 0 or 1, got {k!r}")


def canonical_rotation(kind, theta):
    kind = RotationKind(kind)
    if kind is RotationKind.HYPERBOLIC:
        c, s = np.cosh(theta), np.sinh(theta)
        return np.array([[1.0, 0.0, 0.0], [0.0, c, s], [0.0, s, c]])
    if kind is RotationKind.ELLIPTIC:
        c, s = np.cos(theta), np.sin(theta)
        return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    half = theta * theta / 2
    return np.array(
        [
            [1.0, -theta, theta],
            [theta, 1.0 - half, half],
            [theta, -half, 1.0 + half],
        ]
    )


def is_pseudo_orthogonal(A, tol=None):
    if tol is None:
        tol = defaults.pseudo_orthogonal_tolerance()
    A = np.asarray(A, dtype=float)
    if A.shape != (3, 3) or not np.all(np.isfinite(A)):
        return False
    return bool(np.max(np.abs(A.T @ ETA @ A - ETA)) <= tol)


def classify_lorentz(A, tol=None):
    """
    Connected component of O_1(3) containing A, labelled by the signs of
    det A and a33: "++" is the special orthochronous group.
    """
    if not is_pseudo_orthogonal(A, tol):
        return "not_pseudo_orthogonal"
    A = np.asarray(A, dtype=float)
    det_sign = "+" if np.linalg.det(A) > 0 else "-"
    time_sign = "+" if A[2, 2] > 0 else "-"
    return det_sign + time_sign


def rigid_motion(points, rotation=None, translation=None):
    """R P + t for every point along the last axis."""
    points = np.asarray(points, dtype=float)
    if rotation is not None:
        points = points @ np.asarray(rotation, dtype=float).T
    if translation is not None:
        points = points + np.asarray(translation, dtype=float)
    return points
