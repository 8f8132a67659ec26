from lorentz_weierstrass.gallery.base import (  # noqa: F401
    EXAMPLE_FAMILIES,
    ExampleFamily,
    FIGURE_PARAMETERS,
    GalleryEntry,
    get_example,
    get_family,
    HyperbolaFamily,
    list_examples,
    load_extra_families,
    register,
    UnitCircleFamily,
)
from lorentz_weierstrass.gallery import spacelike, timelike  # noqa: F401
from lorentz_weierstrass.gallery.conjugates import (  # noqa: F401
    CONJUGATE,
    conjugate_surface,
    corrupted_entry,
    LORENTZ_CONJUGATE,
    WEINGARTEN_NOTE,
)
from lorentz_weierstrass.gallery.spacelike import SQRT_I  # noqa: F401
from lorentz_weierstrass.gallery.timelike import bonnet_rho  # noqa: F401
