#!/usr/bin/env python
"""Test pllab.plancherel.Growth"""

import math
import unittest
from collections import Counter
from fractions import Fraction

import numpy as np

from pllab.PlLabException import ValidationError, ResourceLimitError
from pllab.LabOptions import CapOptions
from pllab.plancherel.Growth import GrowthState, exact_weights, float_weights, \
    trial_generator, grow, sample_growth
from pllab.young.YoungUtils import log_dim
from pllab.plancherel.Measures import level_measure, transition_prob, total_variation


def _shape_law(n, trials, seed, caps=None):
    shapes = Counter(sample_growth(n, seed, trial, caps).tableau.shape
                     for trial in range(trials))
    return dict((lam, float(c) / trials) for lam, c in shapes.items())


class TestGrowthState(unittest.TestCase):
    """Test GrowthState and the transition weights"""

    def test_weights_match_transition_prob(self):
        """Weights from contents are the exact transition probabilities."""
        state = GrowthState()
        rng = np.random.default_rng(3)
        for _ in range(40):
            rows, add_c, rem_c = state.contents()
            lam = state.shape()
            self.assertEqual(lam.n, state.n)
            weights = [Fraction(num, den) for num, den in exact_weights(add_c, rem_c)]
            self.assertEqual(sum(weights), 1)
            for row, p in zip(rows, weights):
                self.assertEqual(p, transition_prob(lam, lam.add_cell(row)))
            np.testing.assert_allclose(float_weights(add_c, rem_c),
                                       [float(p) for p in weights], rtol=1e-9)
            row = state.add(int(rng.integers(len(weights))))
            self.assertEqual(state.shape(), lam.add_cell(row))

    def test_float_weights_match_log_dim(self):
        """Float weights agree with dim ratios taken from log_dim."""
        state = grow(300, 5, 0)
        rows, add_c, rem_c = state.contents()
        lam = state.shape()
        ratios = [math.exp(log_dim(lam.add_cell(row)) - log_dim(lam)) / (lam.n + 1)
                  for row in rows]
        np.testing.assert_allclose(float_weights(add_c, rem_c), ratios, rtol=1e-8)

    def test_first_row_and_column(self):
        """Test first_row and first_column."""
        state = GrowthState()
        state.add(1)
        state.add(0)
        state.add(2)
        self.assertEqual(state.rows, [0, 1, 0, 2])
        self.assertEqual(state.first_row, 2)
        self.assertEqual(state.first_column, 3)
        self.assertEqual(list(state.shape()), [2, 1, 1])


class TestGrowth(unittest.TestCase):
    """Test grow and sample_growth"""

    def test_deterministic(self):
        """Same seed and trial give the same tableau."""
        a = sample_growth(30, 11, trial=4).tableau
        b = sample_growth(30, 11, trial=4).tableau
        self.assertEqual(a, b)
        self.assertEqual(a.n, 30)
        others = set(sample_growth(30, 11, trial=i).tableau for i in range(20))
        self.assertTrue(len(others) > 1)

    def test_invalid(self):
        """Test validation and caps."""
        self.assertRaises(ValidationError, sample_growth, 0, 1)
        self.assertRaises(ValidationError, trial_generator, -1)
        self.assertRaises(ValidationError, trial_generator, 2 ** 64)
        self.assertRaises(ResourceLimitError, grow, 11, 1, 0, CapOptions(sampling=10))

    def test_row_column_bound(self):
        """lambda1 * lambda1' >= n on large float-path samples."""
        for trial in range(3):
            state = grow(2000, 5, trial)
            self.assertTrue(state.first_row * state.first_column >= 2000)
            self.assertEqual(state.shape().n, 2000)

    def test_exact_path_fidelity(self):
        """Empirical shape law at n=4 is close to Pl_4."""
        law = _shape_law(4, 20000, 20090417)
        expected = dict((lam, float(w)) for lam, w in level_measure(4).items())
        self.assertTrue(total_variation(law, expected) < 0.02)

    def test_exact_path_fidelity_n6(self):
        """Empirical shape law at n=6 is within 0.01 of Pl_6."""
        law = _shape_law(6, 100000, 20090417)
        expected = dict((lam, float(w)) for lam, w in level_measure(6).items())
        self.assertTrue(total_variation(law, expected) < 0.01)

    def test_float_path_fidelity(self):
        """The float path samples the same law."""
        law = _shape_law(4, 20000, 7, CapOptions(exact_threshold=0))
        expected = dict((lam, float(w)) for lam, w in level_measure(4).items())
        self.assertTrue(total_variation(law, expected) < 0.02)


if __name__ == "__main__":
    unittest.main()
