# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet lattice test suite
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

from fractions import Fraction
import itertools
import unittest

from hypothesis import given, settings, strategies as st

from pyrrset.divisor import sup_norm
from pyrrset.lattice import box_interval
from pyrrset import (
    Divisor,
    DimensionMismatchException,
    EmptyGeneratorsException,
    NonZeroDegreeException,
    SubgroupLattice,
)


def degree_zero_vectors(n):
    return st.lists(st.integers(-9, 9), min_size=n - 1, max_size=n - 1) \
        .map(lambda head: head + [-sum(head)]) \
        .filter(lambda v: abs(v[-1]) <= 9)


small_lattices = st.integers(min_value=2, max_value=4).flatmap(
    lambda n: st.lists(degree_zero_vectors(n), min_size=1, max_size=3).map(
        lambda generators: SubgroupLattice(n, generators)
    )
)


def combine(lattice, coefficients):
    point = Divisor.zero(lattice.n)
    for m, vector in zip(coefficients, lattice.basis):
        point = point + m * vector
    return point


def brute_force_ball(lattice, radius):
    """
    Scan the coefficient box at twice the certified half-width.
    """
    bound = 2 * lattice.coefficient_radius(radius)
    found = set()
    for coefficients in itertools.product(range(-bound, bound + 1), repeat=lattice.rank):
        point = combine(lattice, coefficients)
        if sup_norm(point) <= radius:
            found.add(point)
    return found


class TestSubgroupLattice(unittest.TestCase):
    """
    Test suite for lattice construction
    """
    def test_single_generator(self):
        """ Test that a single generator is its own basis """
        lattice = SubgroupLattice(2, [Divisor([-4, 4])])
        self.assertEqual(lattice.basis, (Divisor([-4, 4]),))
        self.assertEqual(lattice.rank, 1)
        self.assertEqual(lattice.scale, 1)
        self.assertEqual(lattice.coeff_bound_factor, Fraction(1, 4))

    def test_laplacian_rank(self):
        """ Test that the three-vertex Laplacian rows give rank 2 """
        lattice = SubgroupLattice(3, [[4, -1, -3], [-1, 5, -4]])
        self.assertEqual(lattice.rank, 2)

    def test_nonzero_degree(self):
        """ Test that a generator outside V₀ is rejected """
        with self.assertRaises(NonZeroDegreeException):
            SubgroupLattice(2, [[1, 0]])

    def test_dimension_mismatch(self):
        """ Test that generators must have length n """
        with self.assertRaises(DimensionMismatchException):
            SubgroupLattice(2, [[1, -1, 0]])

    def test_empty(self):
        """ Test that the trivial subgroup must be requested """
        with self.assertRaises(EmptyGeneratorsException):
            SubgroupLattice(2, [])
        lattice = SubgroupLattice(2, [], allow_trivial=True)
        self.assertEqual(lattice.rank, 0)
        self.assertEqual(lattice.enumerate_ball(5), [Divisor([0, 0])])
        self.assertTrue(lattice.member(Divisor([0, 0])))
        self.assertFalse(lattice.member(Divisor([1, -1])))

    def test_dependent_generators(self):
        """ Test that dependent generators reduce to a basis of the same group """
        lattice = SubgroupLattice(2, [[2, -2], [3, -3]])
        self.assertEqual(lattice.rank, 1)
        self.assertIn(lattice.basis[0], (Divisor([1, -1]), Divisor([-1, 1])))
        self.assertEqual(len(lattice.generators), 2)

        lattice = SubgroupLattice(3, [[1, -1, 0], [0, 1, -1], [1, 0, -1]])
        self.assertEqual(lattice.rank, 2)
        self.assertTrue(lattice.member(Divisor([1, 0, -1])))

    def test_rational_generators(self):
        """ Test that rational generators are scaled to integers """
        lattice = SubgroupLattice(2, [['1/2', '-1/2']])
        self.assertEqual(lattice.scale, 2)
        self.assertEqual(lattice.member(Divisor([1, -1])).coefficients, (2,))
        self.assertFalse(lattice.member(Divisor(['1/4', '-1/4'])))
        self.assertEqual(
            set(lattice.enumerate_ball(1)),
            {Divisor([0, 0]), Divisor(['1/2', '-1/2']), Divisor(['-1/2', '1/2']),
             Divisor([1, -1]), Divisor([-1, 1])}
        )


class TestMembership(unittest.TestCase):
    """
    Test suite for coset membership
    """
    def test_not_a_graph_shift(self):
        """ Test that neither (2,2) nor (1,1) lies in <(-4,4)> """
        lattice = SubgroupLattice(2, [[-4, 4]])
        self.assertFalse(lattice.member(Divisor([2, 2]) - Divisor([0, 0])))
        self.assertFalse(lattice.member(Divisor([1, 1])))
        self.assertFalse(lattice.member(Divisor([2, -2])))

    def test_witness(self):
        """ Test that a member comes with its coefficients """
        lattice = SubgroupLattice(2, [[4, -4]])
        result = lattice.member(Divisor([3, -1]) - Divisor([-1, 3]))
        self.assertTrue(result)
        self.assertEqual(result.coefficients, (1,))

    def test_zero(self):
        """ Test that zero is a member with zero coefficients """
        lattice = SubgroupLattice(3, [[4, -1, -3], [-1, 5, -4]])
        result = lattice.member(Divisor.zero(3))
        self.assertTrue(result)
        self.assertEqual(result.coefficients, (0, 0))

    def test_length_mismatch(self):
        """ Test that a divisor of the wrong length is refused """
        lattice = SubgroupLattice(2, [[4, -4]])
        with self.assertRaises(DimensionMismatchException):
            lattice.member(Divisor([0, 0, 0]))

    @settings(max_examples=200, deadline=None)
    @given(small_lattices, st.data())
    def test_closure(self, lattice, data):
        """ Test that generators, sums and differences are members """
        for generator in lattice.generators:
            result = lattice.member(generator)
            self.assertTrue(result)
            self.assertEqual(combine(lattice, result.coefficients), generator)
        count = len(lattice.generators)
        a = data.draw(st.lists(st.integers(-3, 3), min_size=count, max_size=count))
        b = data.draw(st.lists(st.integers(-3, 3), min_size=count, max_size=count))
        x = sum((m * g for m, g in zip(a, lattice.generators)), Divisor.zero(lattice.n))
        y = sum((m * g for m, g in zip(b, lattice.generators)), Divisor.zero(lattice.n))
        self.assertTrue(lattice.member(x + y))
        self.assertTrue(lattice.member(x - y))


class TestEchelon(unittest.TestCase):
    """
    Test suite for the triangular basis behind the depth-first searches
    """
    def test_two_vertex(self):
        """ Test the triangular basis of a single generator """
        lattice = SubgroupLattice(2, [[4, -4]])
        self.assertEqual(lattice.echelon, (((-4, 4), 1),))

    @settings(max_examples=100, deadline=None)
    @given(small_lattices)
    def test_triangular(self, lattice):
        """ Test that leads strictly decrease and vectors vanish after them """
        leads = [lead for _, lead in lattice.echelon]
        self.assertEqual(len(leads), lattice.rank)
        self.assertEqual(leads, sorted(set(leads), reverse=True))
        for vector, lead in lattice.echelon:
            self.assertGreater(vector[lead], 0)
            self.assertFalse(any(vector[lead + 1:]))
            self.assertIn(Divisor(vector) * Fraction(1, lattice.scale), lattice)

    def test_box_interval(self):
        """ Test the coefficient range that keeps coordinates in the box """
        self.assertEqual(box_interval([0, 0], [-4, 4], range(2), 9), (-2, 2))
        self.assertEqual(box_interval([3, -3], [-4, 4], range(2), 9), (-1, 3))
        self.assertEqual(box_interval([0, 5], [1, 0], [0, 1], 4), (1, 0))
        with self.assertRaises(ValueError):
            box_interval([0, 0], [0, 1], [0], 4)

    def test_walk_ball(self):
        """ Test that walking a box visits every scaled point once """
        lattice = SubgroupLattice(3, [[4, -1, -3], [-1, 5, -4]])
        points = [point for _, point in lattice.walk_ball(6)]
        self.assertEqual(len(points), len(set(points)))
        self.assertEqual(
            {Divisor(p) for p in points},
            set(lattice.enumerate_ball(6))
        )
        self.assertEqual(list(lattice.walk_ball(-1)), [])
        for coefficients, point in lattice.walk_ball(2):
            rebuilt = Divisor.zero(3)
            for m, (vector, _) in zip(coefficients, lattice.echelon):
                rebuilt = rebuilt + m * Divisor(vector)
            self.assertEqual(rebuilt, Divisor(point))


class TestEnumerateBall(unittest.TestCase):
    """
    Test suite for ball enumeration
    """
    def test_radius_zero(self):
        """ Test that only the identity has norm 0 """
        lattice = SubgroupLattice(2, [[-4, 4]])
        self.assertEqual(lattice.enumerate_ball(0), [Divisor([0, 0])])

    def test_radius_nine(self):
        """ Test the ball of radius 9 in <(-4,4)> """
        lattice = SubgroupLattice(2, [[-4, 4]])
        self.assertEqual(
            set(lattice.enumerate_ball(9)),
            {Divisor([0, 0]), Divisor([-4, 4]), Divisor([4, -4]), Divisor([-8, 8]), Divisor([8, -8])}
        )

    def test_radius_boundary(self):
        """ Test that the boundary of the ball is included """
        lattice = SubgroupLattice(2, [[-3, 3]])
        self.assertEqual(
            set(lattice.enumerate_ball(3)),
            {Divisor([0, 0]), Divisor([-3, 3]), Divisor([3, -3])}
        )

    def test_ordering(self):
        """ Test that points come in lexicographic coefficient order """
        lattice = SubgroupLattice(2, [[-4, 4]])
        basis = lattice.basis[0]
        self.assertEqual(lattice.enumerate_ball(8), [m * basis for m in (-2, -1, 0, 1, 2)])

    def test_negative_radius(self):
        """ Test that a negative radius is refused """
        with self.assertRaises(ValueError):
            SubgroupLattice(2, [[-4, 4]]).enumerate_ball(-1)

    @settings(max_examples=60, deadline=None)
    @given(small_lattices, st.fractions(min_value=0, max_value=5, max_denominator=3))
    def test_oracle(self, lattice, radius):
        """ Test that enumeration agrees with a brute-force scan """
        ball = lattice.enumerate_ball(radius)
        self.assertEqual(len(ball), len(set(ball)))
        self.assertEqual(set(ball), brute_force_ball(lattice, radius))

    @settings(max_examples=100, deadline=None)
    @given(small_lattices,
           st.fractions(min_value=0, max_value=6, max_denominator=2),
           st.fractions(min_value=0, max_value=6, max_denominator=2))
    def test_ball_properties(self, lattice, r1, r2):
        """ Test symmetry, monotonicity and membership of ball points """
        small, large = sorted((r1, r2))
        inner = set(lattice.enumerate_ball(small))
        outer = set(lattice.enumerate_ball(large))
        self.assertIn(Divisor.zero(lattice.n), inner)
        self.assertEqual(inner, {-h for h in inner})
        self.assertTrue(inner <= outer)
        for h in outer:
            self.assertIn(h, lattice)


if __name__ == '__main__':
    unittest.main(failfast=True)
