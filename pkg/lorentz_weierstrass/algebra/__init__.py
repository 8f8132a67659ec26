from lorentz_weierstrass.algebra.elementary import (  # noqa: F401
    cos,
    cosh,
    elementary,
    exp,
    sin,
    sinh,
)
from lorentz_weierstrass.algebra.grid import (  # noqa: F401
    first_difference,
    fourth_order_difference,
    GridField,
    GridSpec,
    interior_mask,
    mixed_difference,
    RealField,
    Rectangle,
    second_difference,
    wirtinger_dz,
    wirtinger_dzbar,
    wirtinger_residual,
)
from lorentz_weierstrass.algebra.numbers import (  # noqa: F401
    check_eps,
    EpsScalar,
    inverse,
    masked_inverse,
    mul,
    null_tolerance,
    split_iso,
    split_iso_inverse,
    SplitPair,
)
