import numpy as np

from lorentz_weierstrass.algebra.numbers import (
    EpsScalar,
    split_iso,
    split_iso_inverse,
    SplitPair,
)
from lorentz_weierstrass.exceptions import ContractViolation

ELEMENTARY_FUNCTIONS = {
    "exp": np.exp,
    "cosh": np.cosh,
    "sinh": np.sinh,
    "sin": np.sin,
    "cos": np.cos,
}


def elementary(kind, z):
    """
    Evaluate one of exp, cosh, sinh, sin, cos at z.

    Complex values use numpy's complex functions. Lorentz values are mapped
    through the split isomorphism, where every entire function acts on the
    two real coordinates independently, e.g. exp(x + tau y) becomes
    (e^(x+y), e^(x-y)) which maps back to e^x (cosh y + tau sinh y).
    """
    try:
        function = ELEMENTARY_FUNCTIONS[kind]
    except KeyError:
        raise ContractViolation(
            f"unknown elementary function {kind!r}, "
            f"choose from {', '.join(ELEMENTARY_FUNCTIONS)}"
        )
    if z.eps == 1:
        return EpsScalar.from_complex(function(z.to_complex()))
    pair = split_iso(z)
    return split_iso_inverse(SplitPair(function(pair.u), function(pair.v)))


def exp(z):
    return elementary("exp", z)


def cosh(z):
    return elementary("cosh", z)


def sinh(z):
    return elementary("sinh", z)


def sin(z):
    return elementary("sin", z)


def cos(z):
    return elementary("cos", z)
