#!/usr/bin/env python

import os
import unittest
import os.path as op
from fractions import Fraction
from unittest import mock

from pllab.PlLabException import ValidationError
from pllab.Utils import atomic_write, rational_str, parse_rational, \
    parse_rational_list, parse_int_list, as_int, get_num_workers, THREADS_ENV
from pllab.io.JsonIO import to_jsonable, dumps_json, dumps_csv, load_json_arg
from test_setpath import OUT_DIR


class TestUtils(unittest.TestCase):
    """Test pllab.Utils"""

    def test_atomic_write(self):
        """Test atomic_write leaves only the destination behind."""
        out_dir = op.join(OUT_DIR, "test_atomic_write")
        fn = op.join(out_dir, "a.txt")
        atomic_write(fn, "first\n")
        atomic_write(fn, "second\n")
        with open(fn) as reader:
            self.assertEqual(reader.read(), "second\n")
        self.assertEqual(os.listdir(out_dir), ["a.txt"])

    def test_rationals(self):
        """Rationals are always written p/q."""
        self.assertEqual(rational_str(Fraction(3)), "3/1")
        self.assertEqual(rational_str(Fraction(-2, 4)), "-1/2")
        self.assertEqual(parse_rational("2/6"), Fraction(1, 3))
        self.assertEqual(parse_rational(" 0.25 "), Fraction(1, 4))
        self.assertEqual(parse_rational(5), Fraction(5))
        self.assertRaises(ValidationError, parse_rational, "x")
        self.assertRaises(ValidationError, parse_rational, "1/0")
        self.assertEqual(parse_rational_list("1/2, 1/4"), [Fraction(1, 2), Fraction(1, 4)])
        self.assertEqual(parse_rational_list(""), [])

    def test_parse_int_list(self):
        """Test parse_int_list."""
        self.assertEqual(parse_int_list("3,1"), [3, 1])
        self.assertEqual(parse_int_list("[3, 1]"), [3, 1])
        self.assertRaises(ValidationError, parse_int_list, "3,a")

    def test_as_int(self):
        """Only integers pass; nothing is truncated."""
        self.assertEqual(as_int(3), 3)
        for bad in (2.5, 2.0, "2", True, None):
            self.assertRaises(ValidationError, as_int, bad)

    def test_get_num_workers(self):
        """Workers come from $PLANCHEREL_LAB_THREADS."""
        with mock.patch.dict(os.environ, {THREADS_ENV: "3"}):
            self.assertEqual(get_num_workers(), 3)
        with mock.patch.dict(os.environ, {THREADS_ENV: ""}):
            self.assertEqual(get_num_workers(), 1)
        with mock.patch.dict(os.environ, {THREADS_ENV: "0"}):
            self.assertRaises(ValidationError, get_num_workers)
        with mock.patch.dict(os.environ, {THREADS_ENV: "many"}):
            self.assertRaises(ValidationError, get_num_workers)


class TestJsonIO(unittest.TestCase):
    """Test pllab.io.JsonIO"""

    def test_to_jsonable(self):
        """Fractions become strings, tuples lists."""
        self.assertEqual(to_jsonable({"a": (Fraction(1, 2), 3)}), {"a": ["1/2", 3]})
        self.assertEqual(dumps_json([Fraction(1)]), '[\n  "1/1"\n]\n')
        self.assertRaises(TypeError, to_jsonable, object())

    def test_dumps_csv(self):
        """Test dumps_csv."""
        self.assertEqual(dumps_csv(["k", "p"], [[1, Fraction(1, 2)], ["[2,1]", 1]]),
                         'k,p\n1,1/2\n"[2,1]",1\n')

    def test_load_json_arg(self):
        """Inline JSON or a file."""
        self.assertEqual(load_json_arg("[[1,3],[2]]"), [[1, 3], [2]])
        fn = op.join(OUT_DIR, "test_load_json_arg.json")
        atomic_write(fn, '["1/2"]')
        self.assertEqual(load_json_arg(fn), ["1/2"])
        self.assertRaises(ValidationError, load_json_arg, "[1,")


if __name__ == "__main__":
    unittest.main()
