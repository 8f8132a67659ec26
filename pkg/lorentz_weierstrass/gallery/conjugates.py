"""
Conjugate surfaces, and the conj-corrupted charts used as negative controls.

The conjugate of a spacelike surface is obtained by rotating the Liouville
parameter: g*(z) = g(sqrt(i) z). A timelike surface has a Lorentz-conjugate
instead, whose partial derivatives are swapped.
"""
from dataclasses import replace

import numpy as np

from lorentz_weierstrass.algebra.grid import Rectangle
from lorentz_weierstrass.exceptions import ContractViolation
from lorentz_weierstrass.gallery.base import EXAMPLE_FAMILIES, GalleryEntry, get_example
from lorentz_weierstrass.gallery.spacelike import SQRT_I
from lorentz_weierstrass.weierstrass import from_developing_map

CONJUGATE = "conjugate"
LORENTZ_CONJUGATE = "lorentz_conjugate"

WEINGARTEN_NOTE = "Weingarten not diagonalizable, curvature verification skipped"


def _rotated_domain(domain):
    """An axis-aligned square whose image under z -> sqrt(i) z lies in `domain`."""
    cx, cy = domain.center
    # z* = exp(-i pi/4) z for the centre
    x = (cx + cy) / np.sqrt(2)
    y = (cy - cx) / np.sqrt(2)
    half = min(domain.width, domain.height) / (2 * np.sqrt(2))
    return Rectangle(x - half, x + half, y - half, y + half)


def _rotated_predicate(predicate):
    def rotated(z):
        return predicate(SQRT_I * z)

    return rotated


def _rotated_lambda(lam):
    """lambda*(x, y) = lambda((x - y)/sqrt 2, (x + y)/sqrt 2)"""

    def rotated(x, y):
        return lam((x - y) / np.sqrt(2), (x + y) / np.sqrt(2))

    return rotated


def _spacelike_conjugate(entry):
    chart = entry.chart
    g, g_prime = chart.g, chart.g_prime

    def g_star(z):
        return g(SQRT_I * z)

    def g_star_prime(z):
        return SQRT_I * g_prime(SQRT_I * z)

    singular_predicate = chart.singular_predicate
    if singular_predicate is not None:
        singular_predicate = _rotated_predicate(singular_predicate)

    family_name = _conjugate_family_name(entry)
    if family_name is not None:
        reference = get_example(family_name, entry.params)
        domain, base_point = reference.default_domain, reference.base_point
        closed_form, reference_lambda = reference.closed_form, reference.reference_lambda
        name = reference.name
    else:
        domain = _rotated_domain(entry.default_domain)
        base_point = domain.center
        closed_form = None
        reference_lambda = entry.reference_lambda
        if reference_lambda is not None:
            reference_lambda = _rotated_lambda(reference_lambda)
        name = f"{entry.name}_conjugate"

    new_chart = from_developing_map(
        g_star,
        g_star_prime,
        1,
        domain=domain,
        singular_predicate=singular_predicate,
        name=name,
    )
    return GalleryEntry(
        name=name,
        eps=1,
        params=dict(entry.params),
        chart=new_chart,
        default_domain=domain,
        base_point=base_point,
        closed_form=closed_form,
        reference_lambda=reference_lambda,
        notes=entry.notes + (f"conjugate of {entry.name}",),
    )


def _conjugate_family_name(entry):
    for family in EXAMPLE_FAMILIES:
        if family.name == entry.name:
            return family.conjugate_name
    return None


def _lorentz_conjugate(entry):
    name = f"{entry.name}_lorentz_conjugate"
    return GalleryEntry(
        name=name,
        eps=-1,
        params=dict(entry.params),
        chart=replace(entry.chart, lorentz_conjugate=True, name=name),
        default_domain=entry.default_domain,
        base_point=entry.base_point,
        notes=entry.notes + (WEINGARTEN_NOTE,),
    )


def conjugate_surface(entry, kind=None):
    """
    The conjugate (eps = +1) or Lorentz-conjugate (eps = -1) companion of a
    gallery entry. `kind`, when given, must match the entry's causal type.
    """
    expected = CONJUGATE if entry.eps == 1 else LORENTZ_CONJUGATE
    if kind is not None and kind != expected:
        raise ContractViolation(
            f"{entry.name} has eps={entry.eps} and admits a {expected}, not a {kind}"
        )
    if entry.eps == 1:
        return _spacelike_conjugate(entry)
    return _lorentz_conjugate(entry)


def corrupted_entry(entry):
    """The entry with g replaced by conj(g): not holomorphic, must fail verification."""
    chart = entry.chart
    g = chart.g
    name = f"{entry.name}_corrupted"
    return GalleryEntry(
        name=name,
        eps=entry.eps,
        params=dict(entry.params),
        chart=replace(chart, g=lambda z: g(z).conj(), name=name),
        default_domain=entry.default_domain,
        base_point=entry.base_point,
        notes=("g replaced by conj(g)",),
    )
