"""Timelike (eps = -1) examples over the Lorentz numbers."""
import numpy as np

from lorentz_weierstrass.algebra.elementary import exp
from lorentz_weierstrass.algebra.grid import Rectangle
from lorentz_weierstrass.algebra.numbers import EpsScalar
from lorentz_weierstrass.gallery.base import ExampleFamily, HyperbolaFamily, register


def bonnet_rho(a, b, x, y, cosh=np.cosh):
    """
    rho = a cosh x + b cosh y, so that lambda = log rho for the timelike
    Bonnet family. Pass sympy.cosh to get a symbolic expression.
    """
    return a * cosh(x) + b * cosh(y)


@register()
class TimelikeEnneper(ExampleFamily):
    name = "timelike_enneper"
    eps = -1
    verbose_name = "Timelike Enneper surface"

    def developing_map(self, params):
        def one(z):
            return EpsScalar(np.ones(z.shape), np.zeros(z.shape), -1)

        return (lambda z: z), one

    def raw_domain(self, params):
        return Rectangle(-0.6, 0.6, -0.6, 0.6)

    def closed_form(self, params):
        def psi(x, y):
            return np.stack(
                [
                    (x * x + y * y) / 2,
                    0.5 * (x - x**3 / 3 - y * y * x),
                    0.5 * (y + y**3 / 3 + x * x * y),
                ],
                axis=-1,
            )

        return psi

    def reference_lambda(self, params):
        return lambda x, y: np.log(np.abs(1 + x * x - y * y) / 2)

    def notes(self, params):
        return ("excluded locus x^2 - y^2 = -1",)


@register()
class HyperbolicCatenoid(ExampleFamily):
    name = "hyperbolic_catenoid"
    eps = -1
    verbose_name = "Hyperbolic catenoid of 1st kind"

    def developing_map(self, params):
        return (lambda z: -exp(z)), (lambda z: -exp(z))

    def raw_domain(self, params):
        return Rectangle(-0.75, 0.75, -0.75, 0.75)

    def closed_form(self, params):
        def psi(x, y):
            return np.stack([x, np.cosh(x) * np.cosh(y), -np.cosh(x) * np.sinh(y)], axis=-1)

        return psi

    def reference_lambda(self, params):
        return lambda x, y: np.log(np.cosh(x))


@register()
class TimelikeBonnet(HyperbolaFamily):
    name = "timelike_bonnet"
    eps = -1
    verbose_name = "Timelike Bonnet-type surface"

    def developing_map(self, params):
        a, b = params["a"], params["b"]
        return (lambda z: exp(z) * -a - b), (lambda z: exp(z) * -a)

    def raw_domain(self, params):
        # a cosh x > -b cosh y must hold on the whole strip |y| <= 0.75
        ratio = -params["b"] / params["a"] * np.cosh(0.75)
        if ratio < 1:
            return Rectangle(-0.75, 0.75, -0.75, 0.75)
        x_min = float(np.arccosh(ratio))
        return Rectangle(x_min, x_min + 1.5, -0.75, 0.75)

    def closed_form(self, params):
        a, b = params["a"], params["b"]

        def psi(x, y):
            decay = np.exp(-x) / a
            return np.stack(
                [
                    x - b * decay * np.cosh(y),
                    (decay + a * np.sinh(x)) * np.cosh(y) + b * x,
                    -a * np.cosh(x) * np.sinh(y) - b * y,
                ],
                axis=-1,
            )

        return psi

    def reference_lambda(self, params):
        a, b = params["a"], params["b"]
        return lambda x, y: np.log(bonnet_rho(a, b, x, y))

    def notes(self, params):
        return ("domain a cosh x > -b cosh y",)
