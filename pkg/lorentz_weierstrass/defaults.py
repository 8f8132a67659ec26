from django.conf import settings


def _setting(name, default):
    # plain library use works without a configured Django project
    if not settings.configured:
        return default
    return getattr(settings, f"LORENTZ_WEIERSTRASS_{name}", default)


def null_tolerance_scale():
    return _setting("NULL_TOLERANCE_SCALE", 1e-12)


def gauss_band():
    """Width of the band around g*conj(g) = eps whose nodes are masked."""
    return _setting("GAUSS_BAND", 1e-8)


def hyperboloid_tolerance():
    return _setting("HYPERBOLOID_TOLERANCE", 1e-9)


def pole_tolerance():
    return _setting("POLE_TOLERANCE", 1e-12)


def causal_tolerance():
    return _setting("CAUSAL_TOLERANCE", 1e-12)


def pseudo_orthogonal_tolerance():
    return _setting("PSEUDO_ORTHOGONAL_TOLERANCE", 1e-10)


def mobius_constraint_tolerance():
    return _setting("MOBIUS_CONSTRAINT_TOLERANCE", 1e-10)


def mobius_renormalize_limit():
    return _setting("MOBIUS_RENORMALIZE_LIMIT", 1e-8)


def period_tolerance():
    return _setting("PERIOD_TOLERANCE", 1e-6)


def loop_samples():
    return _setting("LOOP_SAMPLES", 201)


def minimal_tolerance():
    return _setting("MINIMAL_TOLERANCE", 1e-4)


def domain_margin_steps():
    return _setting("DOMAIN_MARGIN_STEPS", 3)


def verify_window():
    """
    The grid used by `verify` and `liouville` when no grid flags are given:
    nx * ny nodes spaced `step` apart, centred on the example's base point.
    """
    return _setting("VERIFY_WINDOW", {"nx": 41, "ny": 41, "step": 5e-4})


def verify_thresholds():
    thresholds = {
        "max_abs_H": 5e-5,
        "max_abs_F": 1e-6,
        "max_abs_E_minus_eps_G": 1e-6,
        "isotropy": 1e-12,
        "wirtinger": 1e-5,
        "period": 1e-9,
        "liouville": 1e-5,
        "gauss_projection": 1e-12,
        "hyperboloid": 1e-9,
        "closed_form": 1e-6,
        "normal_form": 1e-4,
        "hopf_identity": 1e-4,
        "gauss_equation": 1e-3,
        "conformal_factor": 1e-5,
        "lambda_consistency": 1e-3,
        "isometry": 1e-6,
        "rigid_motion": 1e-6,
    }
    thresholds.update(_setting("VERIFY_THRESHOLDS", {}))
    return thresholds


def significant_digits():
    return _setting("SIGNIFICANT_DIGITS", 17)


def log_dir():
    return _setting("LOG_DIR", None)


def extra_examples():
    """Dotted paths to ExampleFamily subclasses registered at startup."""
    return _setting("EXTRA_EXAMPLES", [])
