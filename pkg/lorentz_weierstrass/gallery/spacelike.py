"""Spacelike (eps = +1) examples: developing maps, domains and closed forms."""
import numpy as np

from lorentz_weierstrass.algebra.elementary import exp
from lorentz_weierstrass.algebra.grid import Rectangle
from lorentz_weierstrass.algebra.numbers import EpsScalar
from lorentz_weierstrass.gallery.base import ExampleFamily, register, UnitCircleFamily

# principal branch of sqrt(i)
SQRT_I = EpsScalar(np.cos(np.pi / 4), np.sin(np.pi / 4), 1)


def _constant(z, value):
    return EpsScalar(np.full(z.shape, value.re), np.full(z.shape, value.im), z.eps)


def _rotated(x, y):
    """Real and imaginary parts of sqrt(i) z."""
    return (x - y) / np.sqrt(2), (x + y) / np.sqrt(2)


@register()
class SpacelikeEnneper(ExampleFamily):
    name = "spacelike_enneper"
    eps = 1
    verbose_name = "Spacelike Enneper surface of the first kind"

    def developing_map(self, params):
        return (lambda z: z), (lambda z: _constant(z, EpsScalar(1.0, 0.0, 1)))

    def raw_domain(self, params):
        return Rectangle(-0.6, 0.6, -0.6, 0.6)

    def closed_form(self, params):
        def psi(x, y):
            return np.stack(
                [
                    -0.5 * (x + x**3 / 3 - y * y * x),
                    0.5 * (y + y**3 / 3 - x * x * y),
                    (x * x - y * y) / 2,
                ],
                axis=-1,
            )

        return psi

    def reference_lambda(self, params):
        return lambda x, y: np.log(np.abs(1 - x * x - y * y) / 2)

    def notes(self, params):
        return ("excluded locus x^2 + y^2 = 1",)


@register()
class EllipticCatenoid(ExampleFamily):
    name = "elliptic_catenoid"
    eps = 1
    verbose_name = "Elliptic catenoid (catenoid of 1st kind)"
    conjugate_name = "helicoid"

    def developing_map(self, params):
        return (lambda z: -exp(z)), (lambda z: -exp(z))

    def raw_domain(self, params):
        return Rectangle(0.0, 1.5, -1.5, 1.5)

    def closed_form(self, params):
        def psi(x, y):
            return np.stack([np.sinh(x) * np.cos(y), np.sinh(x) * np.sin(y), x], axis=-1)

        return psi

    def reference_lambda(self, params):
        return lambda x, y: np.log(np.sinh(x))


@register()
class MinkowskiBonnet(UnitCircleFamily):
    name = "minkowski_bonnet"
    eps = 1
    verbose_name = "Minkowski-Bonnet surface"
    conjugate_name = "minkowski_thomsen"

    def developing_map(self, params):
        a, b = params["a"], params["b"]
        return (lambda z: exp(z) * -a - b), (lambda z: exp(z) * -a)

    def raw_domain(self, params):
        x_min = float(np.arcsinh(params["b"] / params["a"]))
        return Rectangle(x_min, x_min + 1.5, -1.5, 1.5)

    def closed_form(self, params):
        a, b = params["a"], params["b"]

        def psi(x, y):
            decay = np.exp(-x) / a
            return np.stack(
                [
                    (-decay + a * np.cosh(x)) * np.cos(y) + b * x,
                    a * np.sinh(x) * np.sin(y) + b * y,
                    x - b * decay * np.cos(y),
                ],
                axis=-1,
            )

        return psi

    def reference_lambda(self, params):
        a, b = params["a"], params["b"]
        return lambda x, y: np.log(a * np.sinh(x) + b * np.cos(y))

    def notes(self, params):
        return ("domain sinh x > b/a",)


@register()
class Helicoid(ExampleFamily):
    name = "helicoid"
    eps = 1
    verbose_name = "Helicoid of 1st kind"

    def developing_map(self, params):
        return (
            (lambda z: -exp(SQRT_I * z)),
            (lambda z: -(SQRT_I * exp(SQRT_I * z))),
        )

    def raw_domain(self, params):
        return Rectangle(0.75, 2.25, -0.75, 0.75)

    def closed_form(self, params):
        def psi(x, y):
            u, v = _rotated(x, y)
            return np.stack([np.sin(v) * np.cosh(u), -np.cos(v) * np.cosh(u), v], axis=-1)

        return psi

    def reference_lambda(self, params):
        return lambda x, y: np.log(np.sinh(_rotated(x, y)[0]))

    def notes(self, params):
        return ("sqrt(i) = exp(i pi / 4), principal branch", "domain x > y")


@register()
class MinkowskiThomsen(UnitCircleFamily):
    name = "minkowski_thomsen"
    eps = 1
    verbose_name = "Minkowski-Thomsen surface"

    def developing_map(self, params):
        a, b = params["a"], params["b"]
        return (
            (lambda z: -(exp(SQRT_I * z) * a + b)),
            (lambda z: -(SQRT_I * exp(SQRT_I * z) * a)),
        )

    def raw_domain(self, params):
        # sinh((x - y) / sqrt 2) > b / a, as printed for the family
        x_min = float(np.sqrt(2) * np.arcsinh(params["b"] / params["a"])) + 0.75
        return Rectangle(x_min, x_min + 1.5, -0.75, 0.75)

    def closed_form(self, params):
        a, b = params["a"], params["b"]

        def psi(x, y):
            u, v = _rotated(x, y)
            decay = np.exp(-u) / a
            return np.stack(
                [
                    (decay + a * np.sinh(u)) * np.sin(v) + b * v,
                    -a * np.cosh(u) * np.cos(v) - b * u,
                    v + b * decay * np.sin(v),
                ],
                axis=-1,
            )

        return psi

    def reference_lambda(self, params):
        a, b = params["a"], params["b"]

        def lam(x, y):
            u, v = _rotated(x, y)
            return np.log(a * np.sinh(u) + b * np.cos(v))

        return lam

    def notes(self, params):
        return ("domain sinh((x - y)/sqrt 2) > b/a", "sqrt(i) = exp(i pi / 4)")
