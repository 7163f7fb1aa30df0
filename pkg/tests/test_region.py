# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet region test suite
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

from fractions import Fraction
import unittest

import numpy as np

from pyrrset.region import parse_range
from pyrrset.registry import nongraph_sec4, three_vertex, two_vertex
from pyrrset import (
    Divisor,
    DimensionMismatchException,
    RegionSpec,
    RegionSpecException,
    emit_csv,
    emit_svg,
    read_csv,
    sample_region,
)


class TestRegionSpec(unittest.TestCase):
    """
    Test suite for the sampling grid
    """
    def test_parse_range(self):
        """ Test that ranges parse to exact endpoints """
        self.assertEqual(parse_range('-5..5'), (Fraction(-5), Fraction(5)))
        self.assertEqual(parse_range('-1/2..3'), (Fraction(-1, 2), Fraction(3)))
        for text in ('5', '1..2..3', 'a..b'):
            with self.assertRaises(ValueError):
                parse_range(text)

    def test_parse(self):
        """ Test that one range is applied to every axis """
        spec = RegionSpec.parse('-5..5', 2, 41)
        self.assertEqual(spec.box, ((Fraction(-5), Fraction(5)),) * 2)
        self.assertEqual(spec.step(0), Fraction(1, 4))
        self.assertEqual(spec.shape, (41, 41))

        spec = RegionSpec.parse('0..1,0..2', 2, 3)
        self.assertEqual(spec.axis(1), [0, 1, 2])
        with self.assertRaises(DimensionMismatchException):
            RegionSpec.parse('0..1,0..2', 3, 3)

    def test_invalid(self):
        """ Test that empty intervals and low resolutions are refused """
        with self.assertRaises(RegionSpecException):
            RegionSpec([(1, 1)], 3)
        with self.assertRaises(RegionSpecException):
            RegionSpec([(0, 1)], 1)
        with self.assertRaises(RegionSpecException):
            RegionSpec([(0, 1)], True)
        with self.assertRaises(RegionSpecException):
            RegionSpec([], 3)

    def test_points(self):
        """ Test the row-major grid order """
        spec = RegionSpec([(0, 1), (0, 1)], 2)
        self.assertEqual(
            list(spec.points()),
            [Divisor([0, 0]), Divisor([0, 1]), Divisor([1, 0]), Divisor([1, 1])]
        )


class TestSampleRegion(unittest.TestCase):
    """
    Test suite for sampling ℓ and writing the tables
    """
    def setUp(self):
        self.structure = nongraph_sec4()
        self.table = sample_region(self.structure, RegionSpec.parse('-1..1', 2, 3))

    def test_values(self):
        """ Test the sampled values of the shifted staircase """
        values = dict(self.table.rows)
        self.assertEqual(len(values), 9)
        self.assertEqual(values[Divisor([0, 0])], 2)
        self.assertEqual(values[Divisor([1, 1])], 3)
        self.assertEqual(self.table.values[1, 1], 2)

    def test_dimension_mismatch(self):
        """ Test that the grid must match the structure """
        with self.assertRaises(DimensionMismatchException):
            sample_region(self.structure, RegionSpec.parse('-1..1', 3, 3))

    def test_csv(self):
        """ Test the CSV header and that it reads back """
        text = emit_csv(self.table)
        lines = text.splitlines()
        self.assertEqual(lines[0], 'x1,x2,ell')
        self.assertEqual(lines[1], '-1,-1,' + str(self.structure.ell(Divisor([-1, -1]))))
        self.assertEqual(len(lines), 10)
        self.assertEqual(read_csv(text), list(self.table.rows))

    def test_csv_rational(self):
        """ Test that rational grid points are written exactly """
        table = sample_region(two_vertex(Fraction(3, 2)), RegionSpec.parse('0..1', 2, 3))
        text = emit_csv(table)
        self.assertIn('1/2,1/2,', text)
        self.assertEqual(read_csv(text), list(table.rows))

    def test_read_csv_invalid(self):
        """ Test that malformed CSV is refused """
        for text in ('', 'x1,x2\n', 'x1,x2,ell\n1,2\n', 'x2,x1,ell\n'):
            with self.assertRaises(ValueError):
                read_csv(text)

    def test_svg(self):
        """ Test that one shaded cell is drawn per zero of ℓ """
        table = sample_region(self.structure, RegionSpec.parse('-5..5', 2, 11))
        zeros = int(sum(1 for _, value in table.rows if value == 0))
        self.assertGreater(zeros, 0)
        text = emit_svg(table)
        self.assertTrue(text.lstrip().startswith('<?xml'))
        self.assertEqual(text.count('id="ell-zero-'), zeros)

    def test_svg_no_zeros(self):
        """ Test that a grid with ℓ > 0 everywhere draws no shaded cell """
        table = sample_region(nongraph_sec4(), RegionSpec.parse('3..4', 2, 2))
        self.assertEqual(len(table.rows), 4)
        self.assertTrue(all(value > 0 for _, value in table.rows))
        text = emit_svg(table)
        self.assertTrue(text.lstrip().startswith('<?xml'))
        self.assertNotIn('id="ell-zero-', text)

    def test_svg_deterministic(self):
        """ Test that the SVG output is reproducible """
        self.assertEqual(emit_svg(self.table), emit_svg(self.table))

    def test_svg_dimension(self):
        """ Test that only two-dimensional tables are drawn """
        table = sample_region(three_vertex(1, 3, 4), RegionSpec.parse('0..1', 3, 2))
        with self.assertRaises(DimensionMismatchException):
            emit_svg(table)


class TestRegionShape(unittest.TestCase):
    """
    Test suite for the shape of the ℓ = 0 region
    """
    @classmethod
    def setUpClass(cls):
        cls.shifted = sample_region(nongraph_sec4(), RegionSpec.parse('-5..5', 2, 41)).values
        cls.graph = sample_region(two_vertex(4), RegionSpec.parse('-4..6', 2, 41)).values

    def test_shift(self):
        """ Test that the shifted staircase is the graph staircase moved by (-1, -1) """
        self.assertTrue(np.array_equal(self.shifted, self.graph))

    def test_monotone(self):
        """ Test that ℓ grows along both axes, so its zero set is closed downwards """
        for values in (self.shifted, self.graph):
            self.assertTrue(all(values[i, j] <= values[i + 1, j] for i in range(40) for j in range(41)))
            self.assertTrue(all(values[i, j] <= values[i, j + 1] for i in range(41) for j in range(40)))


if __name__ == '__main__':
    unittest.main(failfast=True)
