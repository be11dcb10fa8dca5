#!/usr/bin/env python

import unittest
from argparse import Namespace

from pllab.PlLabException import ValidationError, ResourceLimitError
from pllab.LabOptions import CapOptions, ExperimentConfig, DEFAULT_SEED, MAX_SEED, \
    resolve_seed


class TestCapOptions(unittest.TestCase):
    """Test pllab.LabOptions.CapOptions"""

    def test_defaults(self):
        """Test default caps."""
        caps = CapOptions()
        self.assertEqual(caps.enumeration, 60)
        self.assertEqual(caps.tableau, 12)
        self.assertEqual(caps.exact_threshold, 200)
        self.assertEqual(list(caps.to_dict())[0], "enumeration")
        self.assertTrue("cap_window=14\n" in str(caps))

    def test_check(self):
        """Exceeding a cap raises ResourceLimitError with exit code 2."""
        caps = CapOptions(enumeration=5)
        self.assertEqual(caps.check("enumeration", 5), 5)
        with self.assertRaises(ResourceLimitError) as cm:
            caps.check("enumeration", 6)
        self.assertEqual(cm.exception.exit_code, 2)
        self.assertTrue("cap_enumeration=5" in str(cm.exception))

    def test_validate(self):
        """Caps below their lower bound are rejected."""
        self.assertRaises(ValidationError, CapOptions(zd_dim=1).validate)
        self.assertRaises(ValidationError, CapOptions(tableau=0).validate)
        CapOptions(exact_threshold=0).validate()
        self.assertRaises(ValidationError, CapOptions, bogus=3)


class TestExperimentConfig(unittest.TestCase):
    """Test pllab.LabOptions.ExperimentConfig"""

    def test_from_args(self):
        """Caps and parameters are read from parsed arguments."""
        args = Namespace(subCommand="measure", n=3, seed=9, out=None, fmt="csv",
                         report=None, cap_enumeration=4, cap_tableau=None,
                         log_level="WARN")
        cfg = ExperimentConfig.from_args(args).validate()
        self.assertEqual(cfg.command, "measure")
        self.assertEqual(dict(cfg.params), {"n": 3})
        self.assertEqual(cfg.seed, 9)
        self.assertEqual(cfg.fmt, "csv")
        self.assertEqual(cfg.caps.enumeration, 4)
        self.assertEqual(cfg.caps.tableau, 12)

    def test_validate(self):
        """Test validate."""
        self.assertRaises(ValidationError, ExperimentConfig("measure", fmt="xml").validate)
        self.assertRaises(ValidationError, ExperimentConfig(None).validate)
        self.assertEqual(ExperimentConfig("measure").validate().seed, DEFAULT_SEED)

    def test_resolve_seed(self):
        """Seed 0 draws entropy; seeds are 64-bit."""
        seed = resolve_seed(0)
        self.assertTrue(0 <= seed <= MAX_SEED)
        self.assertEqual(resolve_seed(MAX_SEED), MAX_SEED)
        self.assertEqual(resolve_seed(None), DEFAULT_SEED)
        self.assertRaises(ValidationError, resolve_seed, -1)
        self.assertRaises(ValidationError, resolve_seed, MAX_SEED + 1)


if __name__ == "__main__":
    unittest.main()
