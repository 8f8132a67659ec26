"""
Scalars of the algebra K_eps: complex numbers when eps = +1 and Lorentz
(paracomplex, split-complex) numbers when eps = -1.

An element is re + u * im where the imaginary unit u squares to -eps, so
i * i = -1 and tau * tau = 1. Components may be floats or numpy arrays of a
common shape; arrays are how whole grids of values are carried around.
"""
from dataclasses import dataclass
from numbers import Real

import numpy as np

from lorentz_weierstrass import defaults
from lorentz_weierstrass.exceptions import ContractViolation, NullDivisor


def check_eps(eps):
    if eps not in (1, -1):
        raise ContractViolation(f"eps must be +1 or -1, got {eps!r}")
    return int(eps)


def _component(value):
    if np.ndim(value) == 0:
        return float(value)
    return np.asarray(value, dtype=float)


class EpsScalar:
    __slots__ = ("re", "im", "eps")
    # numpy operands defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, re, im=0.0, eps=1):
        object.__setattr__(self, "eps", check_eps(eps))
        re, im = _component(re), _component(im)
        if isinstance(re, np.ndarray) or isinstance(im, np.ndarray):
            re, im = np.broadcast_arrays(re, im)
            re, im = re.copy(), im.copy()
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    @classmethod
    def unit(cls, eps):
        """The imaginary unit: i for eps = +1, tau for eps = -1."""
        return cls(0.0, 1.0, eps)

    @classmethod
    def from_complex(cls, value):
        value = np.asarray(value, dtype=complex)
        if value.ndim == 0:
            return cls(value.real.item(), value.imag.item(), 1)
        return cls(value.real, value.imag, 1)

    @classmethod
    def from_real(cls, value, eps):
        return cls(value, 0.0, eps)

    def to_complex(self):
        if self.eps != 1:
            raise ContractViolation("only eps=+1 values are complex numbers")
        if self.is_array:
            return self.re + 1j * self.im
        return complex(self.re, self.im)

    def __complex__(self):
        value = self.to_complex()
        if isinstance(value, np.ndarray):
            raise TypeError("cannot convert an array-valued EpsScalar to complex")
        return value

    @property
    def is_array(self):
        return isinstance(self.re, np.ndarray)

    @property
    def shape(self):
        return np.shape(self.re)

    def __getitem__(self, index):
        return EpsScalar(self.re[index], self.im[index], self.eps)

    def __repr__(self):
        unit = "i" if self.eps == 1 else "tau"
        return f"EpsScalar({self.re!r} + {unit}*{self.im!r})"

    def _coerce(self, other):
        if isinstance(other, EpsScalar):
            if other.eps != self.eps:
                raise ContractViolation(
                    f"cannot combine eps={self.eps} with eps={other.eps}"
                )
            return other
        if isinstance(other, (Real, np.ndarray, np.floating, np.integer)):
            if isinstance(other, np.ndarray) and np.iscomplexobj(other):
                if self.eps != 1:
                    raise ContractViolation("complex operand with eps=-1")
                return EpsScalar(other.real, other.imag, 1)
            return EpsScalar(other, 0.0, self.eps)
        if isinstance(other, complex):
            if self.eps != 1:
                raise ContractViolation("complex operand with eps=-1")
            return EpsScalar(other.real, other.imag, 1)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return EpsScalar(self.re + other.re, self.im + other.im, self.eps)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return EpsScalar(self.re - other.re, self.im - other.im, self.eps)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return EpsScalar(-self.re, -self.im, self.eps)

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, inverse(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return mul(other, inverse(self))

    def __pow__(self, exponent):
        if not isinstance(exponent, (int, np.integer)):
            return NotImplemented
        if exponent < 0:
            return inverse(self) ** -exponent
        result = EpsScalar(np.ones_like(self.re), np.zeros_like(self.im), self.eps)
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            base = mul(base, base)
            exponent >>= 1
        return result

    def conj(self):
        return EpsScalar(self.re, -self.im, self.eps)

    def squared_norm(self):
        """z * conj(z) = re^2 + eps * im^2, a real number (negative allowed for eps=-1)."""
        return self.re * self.re + self.eps * self.im * self.im

    def norm(self):
        return np.sqrt(np.abs(self.squared_norm()))

    def magnitude(self):
        """Euclidean size of the component pair, used for residual reductions."""
        return np.hypot(self.re, self.im)

    def is_null(self, tol_null=None):
        if tol_null is None:
            tol_null = null_tolerance(self)
        return np.abs(self.squared_norm()) <= tol_null

    def isclose(self, other, tol=1e-12):
        other = self._coerce(other)
        return bool(np.all(np.hypot(self.re - other.re, self.im - other.im) <= tol))


def null_tolerance(z):
    """Scale-aware band around the null cone: scale * (1 + |re| + |im|)^2."""
    scale = defaults.null_tolerance_scale()
    return scale * (1.0 + np.abs(z.re) + np.abs(z.im)) ** 2


def mul(a, b):
    if a.eps != b.eps:
        raise ContractViolation(f"cannot multiply eps={a.eps} by eps={b.eps}")
    eps = a.eps
    return EpsScalar(
        a.re * b.re - eps * a.im * b.im,
        a.re * b.im + a.im * b.re,
        eps,
    )


def inverse(z, tol_null=None):
    """
    Return conj(z) / (z * conj(z)).

    Raises NullDivisor when |z conj(z)| <= tol_null anywhere, i.e. for zero
    and, when eps = -1, for the zero divisors |re| = |im|.
    """
    if tol_null is None:
        tol_null = null_tolerance(z)
    norm = z.squared_norm()
    if np.any(np.abs(norm) <= tol_null):
        raise NullDivisor(f"{z!r} lies on the null cone and has no inverse")
    return EpsScalar(z.re / norm, -z.im / norm, z.eps)


def masked_inverse(z, tol_null=None):
    """
    Inverse of an array-valued z that tolerates null entries: these become
    NaN and are reported False in the returned validity mask.
    """
    if tol_null is None:
        tol_null = null_tolerance(z)
    norm = np.asarray(z.squared_norm(), dtype=float)
    valid = np.abs(norm) > tol_null
    safe = np.where(valid, norm, 1.0)
    re = np.where(valid, z.re / safe, np.nan)
    im = np.where(valid, -z.im / safe, np.nan)
    return EpsScalar(re, im, z.eps), valid


@dataclass(frozen=True)
class SplitPair:
    """Image of a Lorentz number under Phi(a + tau b) = (a + b, a - b)."""

    u: object
    v: object

    def __mul__(self, other):
        if not isinstance(other, SplitPair):
            return NotImplemented
        return SplitPair(self.u * other.u, self.v * other.v)

    def __add__(self, other):
        if not isinstance(other, SplitPair):
            return NotImplemented
        return SplitPair(self.u + other.u, self.v + other.v)


def split_iso(z):
    if z.eps != -1:
        raise ContractViolation("the split isomorphism is defined for eps=-1 only")
    return SplitPair(z.re + z.im, z.re - z.im)


def split_iso_inverse(pair):
    return EpsScalar((pair.u + pair.v) / 2, (pair.u - pair.v) / 2, -1)
