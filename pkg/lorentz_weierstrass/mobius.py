"""
K-bilinear transformations T_ab(z) = (a z + eps b) / (conj(b) z + conj(a)) with
a conj(a) - eps b conj(b) = 1, and their dictionary with rotations of
O_1^{++}(3) acting on the hyperboloid H^2_eps through stereographic projection.
"""
import logging
from dataclasses import dataclass

import numpy as np

from lorentz_weierstrass import defaults
from lorentz_weierstrass.algebra.numbers import (
    check_eps,
    EpsScalar,
    inverse,
    masked_inverse,
    mul,
)
from lorentz_weierstrass.exceptions import (
    ConstraintViolation,
    ContractViolation,
    DenominatorOnNullCone,
    NullDivisor,
)
from lorentz_weierstrass.lorentz import (
    causal_character,
    CausalCharacter,
    ck_sk,
    cross_l,
    inner,
    RotationKind,
)

logger = logging.getLogger(__name__)


def _as_scalar(value, eps):
    if isinstance(value, EpsScalar):
        if value.eps != eps:
            raise ContractViolation(f"coefficient has eps={value.eps}, expected {eps}")
        return value
    if isinstance(value, complex):
        if eps != 1:
            raise ContractViolation("complex coefficients need eps=+1")
        return EpsScalar(value.real, value.imag, 1)
    return EpsScalar(value, 0.0, eps)


def constraint_residual(a, b, eps):
    """|a conj(a) - eps b conj(b) - 1|"""
    return abs(float(a.squared_norm() - eps * b.squared_norm()) - 1.0)


@dataclass(frozen=True)
class MobiusParams:
    a: EpsScalar
    b: EpsScalar
    eps: int

    def __post_init__(self):
        check_eps(self.eps)
        if self.a.eps != self.eps or self.b.eps != self.eps:
            raise ContractViolation("a, b and the transformation must share eps")
        if self.a.is_array or self.b.is_array:
            raise ContractViolation("Mobius coefficients are single numbers")
        residual = constraint_residual(self.a, self.b, self.eps)
        if residual > defaults.mobius_constraint_tolerance():
            raise ConstraintViolation(
                f"a conj(a) - eps b conj(b) = 1 violated by {residual:.3g}",
                residual=residual,
            )

    def __call__(self, z):
        return apply(self, z)


def new_mobius(a, b, eps):
    eps = check_eps(eps)
    return MobiusParams(_as_scalar(a, eps), _as_scalar(b, eps), eps)


def identity(eps):
    return new_mobius(1.0, 0.0, eps)


def inverse_params(T):
    return MobiusParams(T.a.conj(), -T.b, T.eps)


def _denominator(T, z):
    return mul(T.b.conj(), z) + T.a.conj()


def apply(T, z):
    z = _as_scalar(z, T.eps)
    try:
        reciprocal = inverse(_denominator(T, z))
    except NullDivisor:
        raise DenominatorOnNullCone(
            f"conj(b) z + conj(a) is on the null cone at z={z!r}"
        )
    return mul(mul(T.a, z) + T.eps * T.b, reciprocal)


def apply_field(T, z):
    """
    Apply T to an array-valued z; nodes where the denominator is null are
    NaN and False in the returned mask.
    """
    denominator = _denominator(T, z)
    reciprocal, valid = masked_inverse(denominator)
    return mul(mul(T.a, z) + T.eps * T.b, reciprocal), valid, denominator


def compose(T1, T2):
    """T1 after T2, i.e. apply(compose(T1, T2), z) = T1(T2(z))."""
    if T1.eps != T2.eps:
        raise ContractViolation("cannot compose transformations of different eps")
    eps = T1.eps
    a = mul(T1.a, T2.a) + eps * mul(T1.b, T2.b.conj())
    b = mul(T1.a, T2.b) + mul(T1.b, T2.a.conj())
    residual = constraint_residual(a, b, eps)
    if residual > defaults.mobius_renormalize_limit():
        raise ConstraintViolation(
            f"composition drifted off a conj(a) - eps b conj(b) = 1 by {residual:.3g}",
            residual=residual,
        )
    if residual > 1e-12:
        scale = np.sqrt(float(a.squared_norm() - eps * b.squared_norm()))
        logger.debug("renormalizing composed coefficients (residual %.3g)", residual)
        a, b = a * (1.0 / scale), b * (1.0 / scale)
    return MobiusParams(a, b, eps)


@dataclass(frozen=True)
class AxisAngle:
    """Rotation axis L = (p, q, r) with p^2 + q^2 - r^2 = k and angle theta."""

    L: np.ndarray
    theta: float
    k: int

    def __post_init__(self):
        if self.k not in (-1, 0, 1):
            raise ContractViolation(f"k must be -1, 0 or 1, got {self.k!r}")
        L = np.asarray(self.L, dtype=float)
        if L.shape != (3,):
            raise ContractViolation("the axis is a single vector of L^3")
        object.__setattr__(self, "L", L)
        residual = abs(float(inner(L, L)) - self.k)
        if residual > 1e-10:
            raise ConstraintViolation(
                f"p^2 + q^2 - r^2 = {self.k} violated by {residual:.3g}",
                residual=residual,
            )

    @classmethod
    def from_direction(cls, direction, theta, tol=None):
        """
        Normalise a direction to <L, L> = +-1; lightlike directions are kept
        as given, so their length scales the parabolic angle.
        """
        direction = np.asarray(direction, dtype=float)
        character = causal_character(direction, tol)
        if character is CausalCharacter.LIGHTLIKE:
            if not np.any(direction):
                raise ContractViolation("the rotation axis cannot be the zero vector")
            return cls(direction, float(theta), 0)
        square = float(inner(direction, direction))
        return cls(
            direction / np.sqrt(abs(square)),
            float(theta),
            1 if character is CausalCharacter.SPACELIKE else -1,
        )


def classify_rotation(ax):
    return {
        1: RotationKind.HYPERBOLIC,
        -1: RotationKind.ELLIPTIC,
        0: RotationKind.PARABOLIC,
    }[ax.k]


def from_axis_angle(ax, eps):
    eps = check_eps(eps)
    p, q, r = ax.L
    c, s = ck_sk(ax.theta / 2, ax.k, eps)
    if eps == 1:
        a = EpsScalar(c, -r * s, 1)
        b = EpsScalar(q * s, -p * s, 1)
    else:
        a = EpsScalar(c, p * s, -1)
        b = EpsScalar(r * s, -q * s, -1)
    return MobiusParams(a, b, eps)


def rotate_point(ax, P, eps):
    """
    P1 = c_k(theta) P - 2 s_k(theta/2)^2 <P, L> L + eps s_k(theta) (P x L),
    the rotation fixing the direction of L.
    """
    eps = check_eps(eps)
    P = np.asarray(P, dtype=float)
    L = ax.L
    c_full, s_full = ck_sk(ax.theta, ax.k, eps)
    _, s_half = ck_sk(ax.theta / 2, ax.k, eps)
    return (
        c_full * P
        - 2 * s_half**2 * np.expand_dims(inner(P, L), -1) * L
        + eps * s_full * cross_l(P, L)
    )


def to_rotation(T):
    """
    The matrix R of O_1^{++}(3) with pi^{-1}(T(pi(P))) = R P on H^2_eps.

    With c = c_k(theta/2) and M = s_k(theta/2) L read off (a, b), the rotation
    is P -> (2c^2 - 1) P - 2 <P, M> M + 2 eps c (P x M).
    """
    eps = T.eps
    c = T.a.re
    if eps == 1:
        M = np.array([-T.b.im, T.b.re, -T.a.im])
    else:
        M = np.array([T.a.im, -T.b.im, T.b.re])
    basis = np.eye(3)
    images = (
        (2 * c * c - 1) * basis
        - 2 * np.outer(inner(basis, M), M)
        + 2 * eps * c * cross_l(basis, M)
    )
    return images.T
