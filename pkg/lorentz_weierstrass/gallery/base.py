import logging
import re
from dataclasses import dataclass, field

import numpy as np
from django.utils.module_loading import import_string

from lorentz_weierstrass import defaults
from lorentz_weierstrass.algebra.grid import GridSpec, Rectangle
from lorentz_weierstrass.exceptions import ParamConstraintViolation, UnknownExample
from lorentz_weierstrass.weierstrass import from_developing_map

logger = logging.getLogger(__name__)

EXAMPLE_FAMILIES = []

# parameter values shown in the figures of each two-parameter family
FIGURE_PARAMETERS = {
    "minkowski_bonnet": (0.5, 0.8, 1.0),
    "minkowski_thomsen": (0.5, 0.8, 1.0),
    "timelike_bonnet": (3.0, 2.0, 1.0),
}

PARAM_TOLERANCE = 1e-9


def register():
    """Register the decorated class as a gallery family.

    Usage:

        from lorentz_weierstrass.gallery import ExampleFamily, register

        @register()
        class MyFamily(ExampleFamily):
            name = "my_family"
            eps = 1
    """

    def _wrapper(cls):
        if cls not in EXAMPLE_FAMILIES:
            EXAMPLE_FAMILIES.append(cls)
        return cls

    return _wrapper


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    eps: int
    params: dict
    chart: object
    default_domain: Rectangle
    base_point: tuple
    closed_form: object = None
    reference_lambda: object = None
    notes: tuple = field(default_factory=tuple)

    @property
    def curvature_checks(self):
        """Lorentz-conjugate surfaces have a non-diagonalizable Weingarten map."""
        return not self.chart.lorentz_conjugate

    def default_grid(self, nx=201, ny=201):
        return GridSpec.from_rectangle(self.default_domain, nx, ny)

    def verify_grid(self):
        window = defaults.verify_window()
        return GridSpec.window(
            *self.base_point, window["step"], window["nx"], window["ny"]
        )


class ExampleFamily:
    """
    A named family of minimal surfaces in Liouville coordinates, given by its
    developing map g. Subclasses declare `name`, `eps` and implement
    `developing_map` and `raw_domain`; the closed forms are optional.
    """

    name: str
    eps: int
    verbose_name = ""
    param_names = ()
    constraint = ""
    conjugate_name = None

    def __init__(self):
        # Subclasses should declare a name and an eps
        if not hasattr(self, "name") or not hasattr(self, "eps"):
            raise NotImplementedError(
                "Create a subclass of ExampleFamily with name and eps attributes"
            )
        if not re.match(r"^[a-z][a-z0-9_]*$", self.name):
            raise ValueError(
                "The name attribute must use lower case letters, digits and underscores"
            )
        if self.eps not in (1, -1):
            raise ValueError("The eps attribute must be 1 or -1")

    def resolve_params(self, **params):
        unexpected = {key for key, value in params.items() if value is not None} - set(
            self.param_names
        )
        if unexpected:
            raise ParamConstraintViolation(
                f"{self.name} takes no parameter {', '.join(sorted(unexpected))}"
            )
        return {}

    def developing_map(self, params):
        raise NotImplementedError

    def raw_domain(self, params):
        raise NotImplementedError

    def closed_form(self, params):
        return None

    def reference_lambda(self, params):
        return None

    def singular_predicate(self, params):
        return None

    def notes(self, params):
        return ()

    def default_domain(self, params):
        raw = self.raw_domain(params)
        step = max(raw.width, raw.height) / 200
        return raw.shrink(defaults.domain_margin_steps() * step)

    def build(self, **params):
        params = self.resolve_params(**params)
        g, g_prime = self.developing_map(params)
        domain = self.default_domain(params)
        chart = from_developing_map(
            g,
            g_prime,
            self.eps,
            domain=domain,
            singular_predicate=self.singular_predicate(params),
            name=self.name,
        )
        return GalleryEntry(
            name=self.name,
            eps=self.eps,
            params=params,
            chart=chart,
            default_domain=domain,
            base_point=domain.center,
            closed_form=self.closed_form(params),
            reference_lambda=self.reference_lambda(params),
            notes=tuple(self.notes(params)),
        )


class UnitCircleFamily(ExampleFamily):
    """Families with a^2 + b^2 = 1, 0 < a <= 1, 0 <= b < 1."""

    param_names = ("a", "b")
    constraint = "a^2 + b^2 = 1, 0 < a <= 1, 0 <= b < 1"
    default_a = 0.8

    def resolve_params(self, a=None, b=None, **params):
        super().resolve_params(**params)
        if a is None and b is None:
            a = self.default_a
        if b is None:
            b = float(np.sqrt(max(1.0 - a * a, 0.0)))
        elif a is None:
            a = float(np.sqrt(max(1.0 - b * b, 0.0)))
        a, b = float(a), float(b)
        if not (0 < a <= 1 and 0 <= b < 1) or abs(a * a + b * b - 1) > PARAM_TOLERANCE:
            raise ParamConstraintViolation(
                f"{self.name} needs {self.constraint}, got a={a!r}, b={b!r}"
            )
        return {"a": a, "b": b}


class HyperbolaFamily(ExampleFamily):
    """Families with a^2 - b^2 = 1, a >= 1, b <= 0."""

    param_names = ("a", "b")
    constraint = "a^2 - b^2 = 1, a >= 1, b <= 0"
    default_a = 2.0

    def resolve_params(self, a=None, b=None, **params):
        super().resolve_params(**params)
        if a is None and b is None:
            a = self.default_a
        if b is None:
            b = -float(np.sqrt(max(a * a - 1.0, 0.0)))
        elif a is None:
            a = float(np.sqrt(1.0 + b * b))
        a, b = float(a), float(b)
        if not (a >= 1 and b <= 0) or abs(a * a - b * b - 1) > PARAM_TOLERANCE:
            raise ParamConstraintViolation(
                f"{self.name} needs {self.constraint}, got a={a!r}, b={b!r}"
            )
        return {"a": a, "b": b}


def list_examples():
    return [family() for family in EXAMPLE_FAMILIES]


def get_family(name):
    for family in EXAMPLE_FAMILIES:
        if family.name == name:
            return family()
    raise UnknownExample(
        f"unknown example {name!r}, choose from "
        f"{', '.join(family.name for family in EXAMPLE_FAMILIES)}"
    )


def get_example(name, params=None, **kwargs):
    """Build the gallery entry `name` with parameters a and/or b."""
    params = dict(params or {}, **kwargs)
    return get_family(name).build(**params)


def load_extra_families():
    """Register the families named in the LORENTZ_WEIERSTRASS_EXTRA_EXAMPLES setting."""
    for path in defaults.extra_examples():
        family = import_string(path)
        register()(family)
        logger.info("registered extra example family %s", path)
