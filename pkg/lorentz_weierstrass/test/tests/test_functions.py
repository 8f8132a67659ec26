import json

import numpy as np
from django.test import override_settings, SimpleTestCase

from lorentz_weierstrass.algebra import Rectangle
from lorentz_weierstrass.exceptions import ContractViolation
from lorentz_weierstrass.functions import (
    dumps_json,
    format_number,
    parse_domain,
    parse_reals,
    to_builtin,
)


class TestParseReals(SimpleTestCase):
    def test_list(self):
        self.assertEqual(parse_reals("1,0,-2.5"), (1.0, 0.0, -2.5))

    def test_count(self):
        self.assertEqual(parse_reals("1, 2, 3", 3), (1.0, 2.0, 3.0))
        with self.assertRaises(ContractViolation) as ctx:
            parse_reals("1,2", 3, name="axis")
        self.assertEqual(str(ctx.exception), "axis needs 3 numbers, got 2")

    def test_not_a_number(self):
        with self.assertRaises(ContractViolation):
            parse_reals("1,x")
        with self.assertRaises(ContractViolation):
            parse_reals(None)

    def test_not_finite(self):
        with self.assertRaises(ContractViolation):
            parse_reals("1,nan")
        with self.assertRaises(ContractViolation):
            parse_reals("inf")

    def test_domain(self):
        self.assertEqual(parse_domain("0,1,-1,1"), Rectangle(0.0, 1.0, -1.0, 1.0))
        with self.assertRaises(ContractViolation):
            parse_domain("1,0,-1,1")


class TestFormatNumber(SimpleTestCase):
    def test_seventeen_significant_digits(self):
        self.assertEqual(format_number(0.1), "0.10000000000000001")
        self.assertEqual(format_number(2.0), "2")
        self.assertEqual(float(format_number(np.pi)), np.pi)

    def test_special_values(self):
        self.assertEqual(format_number(-0.0), "0")
        self.assertEqual(format_number(float("nan")), "nan")
        self.assertEqual(format_number(float("-inf")), "-inf")

    def test_digits(self):
        self.assertEqual(format_number(np.pi, digits=3), "3.14")

    @override_settings(LORENTZ_WEIERSTRASS_SIGNIFICANT_DIGITS=5)
    def test_digits_from_settings(self):
        self.assertEqual(format_number(np.pi), "3.1416")


class TestJson(SimpleTestCase):
    def test_to_builtin(self):
        data = to_builtin({"a": np.float64(1.5), "b": np.arange(3), "c": (np.bool_(True), None)})
        self.assertEqual(data, {"a": 1.5, "b": [0, 1, 2], "c": [True, None]})
        self.assertIs(type(data["b"][0]), int)

    def test_dumps_json(self):
        text = dumps_json({"value": 0.1, "missing": float("nan"), "rows": [[1.0, 2.0]], "empty": []})
        self.assertEqual(
            json.loads(text),
            {"value": 0.1, "missing": None, "rows": [[1, 2]], "empty": []},
        )
        self.assertIn('"value": 0.10000000000000001', text)

    def test_key_order_is_kept(self):
        text = dumps_json({"z": 1, "a": 2})
        self.assertLess(text.index('"z"'), text.index('"a"'))
        self.assertEqual(dumps_json({}), "{}")
