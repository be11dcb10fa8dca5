#!/usr/bin/env python
"""Test pllab.young.YoungUtils"""

import math
import pickle
import unittest
from fractions import Fraction

from pllab.PlLabException import ValidationError, DomainError, ResourceLimitError
from pllab.young.YoungUtils import Partition, EMPTY, enumerate_level, covers_up, \
    covers_down, conjugate, hook_lengths, dim_hook, dim_paths, log_dim, \
    add_cell_ratio, skew_path_count

P = Partition

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


class TestPartition(unittest.TestCase):
    """Test pllab.young.YoungUtils.Partition"""

    def test_init(self):
        """Parts must be positive and weakly decreasing."""
        lam = P([3, 1, 1])
        self.assertEqual(lam.n, 5)
        self.assertEqual(len(lam), 3)
        self.assertEqual(str(lam), "[3,1,1]")
        self.assertEqual(str(EMPTY), "[]")
        self.assertTrue(EMPTY.is_empty)
        self.assertRaises(ValidationError, P, [1, 2])
        self.assertRaises(ValidationError, P, [2, 0])
        self.assertRaises(ValidationError, P, [2.5])
        self.assertRaises(ValidationError, P, ["2"])
        self.assertRaises(ValidationError, P, [True])

    def test_cells(self):
        """Test cells, has_cell and contains."""
        lam = P([2, 1])
        self.assertEqual(lam.cells(), [(0, 0), (0, 1), (1, 0)])
        self.assertTrue(lam.has_cell((1, 0)))
        self.assertFalse(lam.has_cell((1, 1)))
        self.assertTrue(lam.contains(P([1, 1])))
        self.assertFalse(lam.contains(P([1, 1, 1])))
        self.assertFalse(lam.contains(P([3])))

    def test_pickle(self):
        """The empty diagram survives pickling with n == 0."""
        obj = pickle.loads(pickle.dumps(EMPTY))
        self.assertEqual(obj, EMPTY)
        self.assertEqual(obj.n, 0)


class TestYoungUtils(unittest.TestCase):
    """Test pllab.young.YoungUtils"""

    def test_enumerate_level(self):
        """Test enumerate_level order and counts."""
        self.assertEqual(enumerate_level(4),
                         [P([4]), P([3, 1]), P([2, 2]), P([2, 1, 1]), P([1, 1, 1, 1])])
        self.assertEqual(enumerate_level(0), [EMPTY])
        for n, count in enumerate(PARTITION_NUMBERS):
            level = enumerate_level(n)
            self.assertEqual(len(level), count)
            self.assertEqual(len(set(level)), count)
        self.assertRaises(ValidationError, enumerate_level, -1)
        self.assertRaises(ResourceLimitError, enumerate_level, 61)

    def test_covers(self):
        """Test covers_up and covers_down."""
        self.assertEqual(covers_up(P([2, 1])), [P([3, 1]), P([2, 2]), P([2, 1, 1])])
        self.assertEqual(covers_up(EMPTY), [P([1])])
        self.assertEqual(covers_down(P([2, 1])), [P([1, 1]), P([2])])
        self.assertEqual(covers_down(P([2, 2])), [P([2, 1])])
        self.assertRaises(DomainError, covers_down, EMPTY)

    def test_conjugate(self):
        """Test conjugate."""
        self.assertEqual(conjugate(P([3, 1])), P([2, 1, 1]))
        self.assertEqual(conjugate(EMPTY), EMPTY)
        for lam in enumerate_level(7):
            self.assertEqual(conjugate(conjugate(lam)), lam)

    def test_dim_conjugate(self):
        """dim is invariant under conjugation."""
        for n in range(31):
            for lam in enumerate_level(n):
                self.assertEqual(dim_hook(conjugate(lam)), dim_hook(lam))

    def test_covers_inverse(self):
        """covers_up and covers_down are mutually inverse."""
        for n in range(10):
            for lam in enumerate_level(n):
                for big in covers_up(lam):
                    self.assertIn(lam, covers_down(big))
                if n > 0:
                    for mu in covers_down(lam):
                        self.assertIn(lam, covers_up(mu))

    def test_hook_lengths(self):
        """Test hook_lengths, row-major."""
        self.assertEqual(hook_lengths(P([3, 1])), [4, 2, 1, 1])
        self.assertEqual(hook_lengths(P([2, 2])), [3, 2, 2, 1])

    def test_dim_hook(self):
        """Test dim_hook against known values and the path-count oracle."""
        self.assertEqual(dim_hook(EMPTY), 1)
        self.assertEqual(dim_hook(P([3, 1])), 3)
        self.assertEqual(dim_hook(P([2, 2])), 2)
        self.assertEqual(dim_hook(P([4, 2])), 9)
        self.assertEqual(dim_hook(P([3, 2, 1])), 16)
        for n in range(13):
            for lam in enumerate_level(n):
                self.assertEqual(dim_hook(lam), dim_paths(lam))
        self.assertRaises(ResourceLimitError, dim_paths, P([41]))

    def test_burnside(self):
        """Sum of squared dimensions is n!."""
        for n in range(16):
            self.assertEqual(sum(dim_hook(lam) ** 2 for lam in enumerate_level(n)),
                             math.factorial(n))

    def test_up_degree_sum(self):
        """Sum of dim over upper covers is (n+1) dim(lam)."""
        for n in range(16):
            for lam in enumerate_level(n):
                self.assertEqual(sum(dim_hook(big) for big in covers_up(lam)),
                                 (n + 1) * dim_hook(lam))

    def test_log_dim(self):
        """Test log_dim."""
        self.assertAlmostEqual(log_dim(P([3, 2, 1])), math.log(16), places=10)
        self.assertAlmostEqual(log_dim(P([1])), 0.0, places=12)
        for n in range(1, 31):
            for lam in enumerate_level(n):
                self.assertTrue(abs(math.exp(log_dim(lam)) / dim_hook(lam) - 1) < 1e-6, str(lam))

    def test_add_cell_ratio(self):
        """add_cell_ratio is dim(Lam)/dim(lam), exactly."""
        for n in range(8):
            for lam in enumerate_level(n):
                for row in lam.addable_rows():
                    self.assertEqual(add_cell_ratio(lam, row),
                                     Fraction(dim_hook(lam.add_cell(row)), dim_hook(lam)))
        self.assertRaises(DomainError, add_cell_ratio, P([2]), 2)
        self.assertRaises(DomainError, add_cell_ratio, P([2, 2]), 1)

    def test_skew_path_count(self):
        """Test skew_path_count."""
        self.assertEqual(skew_path_count(P([1]), P([2, 1])), 2)
        self.assertEqual(skew_path_count(P([2]), P([1, 1])), 0)
        self.assertEqual(skew_path_count(P([2, 1]), P([2, 1])), 1)
        for lam in enumerate_level(6):
            self.assertEqual(skew_path_count(EMPTY, lam), dim_hook(lam))


if __name__ == "__main__":
    unittest.main()
