import json
import math

import numpy as np

from lorentz_weierstrass import defaults
from lorentz_weierstrass.algebra.grid import Rectangle
from lorentz_weierstrass.exceptions import ContractViolation


def parse_reals(text, count=None, name="value"):
    """
    Parse a comma separated list of reals such as "1,0,0".
    Raise ContractViolation when `count` is given and does not match.
    """
    try:
        values = tuple(float(part) for part in text.split(","))
    except (AttributeError, ValueError):
        raise ContractViolation(f"{name} must be a comma separated list of numbers, got {text!r}")
    if count is not None and len(values) != count:
        raise ContractViolation(f"{name} needs {count} numbers, got {len(values)}")
    if not all(math.isfinite(value) for value in values):
        raise ContractViolation(f"{name} must be finite, got {text!r}")
    return values


def parse_domain(text):
    """X0,X1,Y0,Y1 -> Rectangle"""
    return Rectangle(*parse_reals(text, 4, name="domain"))


def format_number(value, digits=None):
    if digits is None:
        digits = defaults.significant_digits()
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if value == 0:
        # drops the sign of -0.0
        return "0"
    return f"{value:.{digits}g}"


def to_builtin(value):
    """numpy scalars and arrays to plain Python values, recursively."""
    if isinstance(value, dict):
        return {str(key): to_builtin(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_builtin(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_builtin(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def _encode(value, indent, level):
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return "null"
        return format_number(value)
    if isinstance(value, (int, str)):
        return json.dumps(value)
    pad = "\n" + " " * (indent * (level + 1))
    end = "\n" + " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{json.dumps(key)}: {_encode(item, indent, level + 1)}"
            for key, item in value.items()
        ]
        return "{" + pad + ("," + pad).join(items) + end + "}"
    if not value:
        return "[]"
    items = [_encode(item, indent, level + 1) for item in value]
    return "[" + pad + ("," + pad).join(items) + end + "]"


def dumps_json(data, indent=2):
    """
    JSON text with floats written to the configured significant digits;
    NaN and infinities become null. Key order is preserved.
    """
    return _encode(to_builtin(data), indent, 0)
