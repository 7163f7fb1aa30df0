# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet subgroup lattice
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

from dataclasses import dataclass
from fractions import Fraction
import logging
import math
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import Matrix
from sympy import Rational as SymRational
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from pyrrset.divisor import (
    DimensionMismatchException,
    Divisor,
    RationalLike,
    degree,
    to_rational,
)


# -- Exceptions

class NonZeroDegreeException(ValueError):
    """
    An exception raised if a subgroup generator does not lie in V₀.
    """
    def __init__(self, generator: Divisor):
        self.generator = generator

    def __str__(self):
        return f'Generator {self.generator} has degree {degree(self.generator)}, expected 0'


class EmptyGeneratorsException(ValueError):
    """
    An exception raised if no generators are given and the
    trivial subgroup was not explicitly permitted.
    """
    def __str__(self):
        return 'No subgroup generators given (pass allow_trivial=True for H = {0})'


@dataclass(frozen=True)
class Membership:
    """
    The result of a coset membership test.

    Truthy iff the divisor is in the subgroup, in which case
    ``coefficients`` holds integers ``m`` with ``basis · m`` equal to it.
    """
    is_member: bool
    coefficients: Optional[Tuple[int, ...]] = None

    def __bool__(self):
        return self.is_member


def _to_fraction(value) -> Fraction:
    value = SymRational(value)
    return Fraction(int(value.p), int(value.q))


def box_interval(point: Sequence[int],
                 vector: Sequence[int],
                 coordinates: Iterable[int],
                 limit: int) -> Tuple[int, int]:
    """
    The integers m for which ``point + m * vector`` has every listed
    coordinate in ``[-limit, limit]``, as an inclusive range ``(low, high)``.
    The range is empty when ``low > high``.
    """
    low, high = -math.inf, math.inf
    for c in coordinates:
        s, v = point[c], vector[c]
        if v == 0:
            if abs(s) > limit:
                return 1, 0
            continue
        a, b = (-limit - s, limit - s) if v > 0 else (limit - s, -limit - s)
        low = max(low, -(-a // v))
        high = min(high, b // v)
    if low == -math.inf or high == math.inf:
        raise ValueError('Coordinates do not bound the coefficient')
    return low, high


# -- Lattice

class SubgroupLattice:
    """
    A finitely generated subgroup H of V₀ ⊂ ℚⁿ.

    The generators are scaled by the LCM of their denominators so that all
    lattice algebra is over ℤ. The Hermite normal form of the scaled
    generator matrix gives the rank and, for dependent generators, a
    ℤ-basis; linearly independent generators are already a basis and are
    kept. The basis is then LLL-reduced with exact integer arithmetic, which
    keeps the coefficient bound used for enumeration small.

    Args:
        n (int): The dimension of the ambient space.
        generators (list): The generators, each of length ``n`` and degree 0.
        allow_trivial (bool): Permit an empty generator list, giving H = {0}.

    Raises:
        NonZeroDegreeException: if a generator does not have degree 0.
        EmptyGeneratorsException: if no generators are given and
            ``allow_trivial`` is not set.
        DimensionMismatchException: if a generator does not have length ``n``.
    """
    def __init__(self,
                 n: int,
                 generators: Sequence[Divisor],
                 allow_trivial: bool = False):
        self.logger = logging.getLogger(__name__)
        if n < 1:
            raise ValueError(f'Dimension must be positive: got {n}')

        generators = tuple(g if isinstance(g, Divisor) else Divisor(g) for g in generators)
        if len(generators) == 0 and not allow_trivial:
            raise EmptyGeneratorsException()
        for generator in generators:
            if len(generator) != n:
                raise DimensionMismatchException(n, len(generator))
            if degree(generator) != 0:
                raise NonZeroDegreeException(generator)

        self._n = n
        self._generators = generators
        self._scale = math.lcm(1, *(c.denominator for g in generators for c in g))
        self._basis_int = self._reduce_basis()
        self._basis = tuple(
            Divisor(Fraction(v, self._scale) for v in row) for row in self._basis_int
        )
        self._pinv = self._pseudo_inverse()
        self._echelon = self._echelon_basis()
        # row j holds the `basis` coefficients of echelon vector j
        self._echelon_coefficients = tuple(
            self.member(Divisor(Fraction(v, self._scale) for v in vector)).coefficients
            for vector, _ in self._echelon
        )
        self._coeff_bound_factor = max(
            (sum(abs(v) for v in row) for row in self._pinv), default=Fraction(0)
        )
        self.logger.debug(
            f'Lattice of rank {self.rank} in dimension {n}: scale {self._scale}, '
            f'coefficient bound factor {self._coeff_bound_factor}'
        )

    # -- Construction

    def _reduce_basis(self) -> Tuple[Tuple[int, ...], ...]:
        columns = [
            [int(c * self._scale) for c in g] for g in self._generators if any(g)
        ]
        if not columns:
            return ()

        matrix = DomainMatrix(
            [[ZZ(column[i]) for column in columns] for i in range(self._n)],
            (self._n, len(columns)),
            ZZ
        )
        hnf = hermite_normal_form(matrix).to_Matrix()
        rank = hnf.shape[1]
        if rank == len(columns):
            rows = columns
        else:
            self.logger.debug(f'Reduced {len(columns)} dependent generators to rank {rank}')
            rows = [[int(v) for v in hnf[:, j]] for j in range(rank)]

        reduced = DomainMatrix(
            [[ZZ(v) for v in row] for row in rows], (len(rows), self._n), ZZ
        ).lll()
        return tuple(tuple(int(v) for v in row) for row in reduced.to_Matrix().tolist())

    def _echelon_basis(self) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
        """
        The Hermite normal form of the reduced basis, as ``(vector, lead)``
        pairs ordered by decreasing lead, where ``lead`` is the last nonzero
        coordinate of the vector and holds its positive pivot.
        """
        k = self.rank
        if k == 0:
            return ()
        matrix = DomainMatrix(
            [[ZZ(row[i]) for row in self._basis_int] for i in range(self._n)],
            (self._n, k),
            ZZ
        )
        hnf = hermite_normal_form(matrix).to_Matrix()
        rows = []
        for j in range(hnf.shape[1]):
            vector = [int(v) for v in hnf[:, j]]
            lead = max(i for i, v in enumerate(vector) if v)
            if vector[lead] < 0:
                vector = [-v for v in vector]
            rows.append((tuple(vector), lead))
        rows.sort(key=lambda row: -row[1])
        if len({lead for _, lead in rows}) != k:
            raise ArithmeticError(f'Hermite normal form of rank {k} has repeated pivots')
        return tuple(rows)

    def _pseudo_inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """
        The exact left inverse (BᵀB)⁻¹Bᵀ of the basis matrix B, as rows.
        """
        k = self.rank
        if k == 0:
            return ()
        basis = Matrix(self._n, k, lambda i, j: SymRational(self._basis_int[j][i], self._scale))
        pinv = (basis.T * basis).inv() * basis.T
        return tuple(
            tuple(_to_fraction(pinv[j, i]) for i in range(self._n)) for j in range(k)
        )

    # -- Properties

    @property
    def n(self) -> int:
        return self._n

    @property
    def generators(self) -> Tuple[Divisor, ...]:
        """
        tuple: The generators as given, retained for serialisation.
        """
        return self._generators

    @property
    def basis(self) -> Tuple[Divisor, ...]:
        """
        tuple: The reduced, linearly independent ℤ-basis of H.
        """
        return self._basis

    @property
    def rank(self) -> int:
        return len(self._basis_int)

    @property
    def echelon(self) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
        """
        tuple: A triangular basis of ``scale * H`` as ``(vector, lead)``
            pairs. Each vector vanishes after its lead coordinate and the
            leads strictly decrease, so fixing the coefficients in order
            fixes the coordinates from the last one down.
        """
        return self._echelon

    @property
    def scale(self) -> int:
        """
        int: The LCM of the generator denominators; ``scale * h`` is integral
            for every ``h`` in H.
        """
        return self._scale

    @property
    def coeff_bound_factor(self) -> Fraction:
        """
        Fraction: A constant C with ``‖m‖∞ <= C · ‖basis · m‖∞`` for every
            coefficient vector ``m``.
        """
        return self._coeff_bound_factor

    # -- Membership

    def coordinates(self, b: Divisor) -> Tuple[Tuple[Fraction, ...], Divisor]:
        """
        Project a divisor onto the basis.

        Returns:
            (tuple): The rational coefficients ``P · b`` and the residual
            ``b - B · P · b``, which is zero iff ``b`` lies in the span.
        """
        if len(b) != self._n:
            raise DimensionMismatchException(self._n, len(b))
        coefficients = tuple(sum((p * c for p, c in zip(row, b)), Fraction(0)) for row in self._pinv)
        residual = b
        for m, vector in zip(coefficients, self._basis):
            residual = residual - m * vector
        return coefficients, residual

    def member(self, b: Divisor) -> Membership:
        """
        Test whether a divisor is an integer combination of the basis.

        Raises:
            DimensionMismatchException: if ``b`` does not have length ``n``.
        """
        coefficients, residual = self.coordinates(b)
        if any(residual) or any(c.denominator != 1 for c in coefficients):
            return Membership(False)
        return Membership(True, tuple(int(c) for c in coefficients))

    def __contains__(self, b: Divisor) -> bool:
        return bool(self.member(b))

    # -- Enumeration

    def coefficient_radius(self, radius: RationalLike) -> int:
        """
        The coefficient box half-width M covering the ball of ``radius``.
        """
        return math.floor(self._coeff_bound_factor * to_rational(radius))

    def walk_ball(self, limit: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """
        Walk every point of ``scale * H`` with all coordinates in
        ``[-limit, limit]``, depth first over the `echelon` basis.

        Yields:
            (tuple): The echelon coefficients and the scaled point.
        """
        rows = self._echelon
        stops = [lead for _, lead in rows] + [-1]

        def descend(level: int, coefficients: Tuple[int, ...], point: List[int]):
            if level == len(rows):
                yield coefficients, tuple(point)
                return
            vector, lead = rows[level]
            fixed = range(stops[level + 1] + 1, lead + 1)
            low, high = box_interval(point, vector, fixed, limit)
            for m in range(low, high + 1):
                yield from descend(
                    level + 1,
                    coefficients + (m,),
                    [p + m * v for p, v in zip(point, vector)]
                )

        if limit >= 0:
            yield from descend(0, (), [0] * self._n)

    def enumerate_ball(self, radius: RationalLike) -> List[Divisor]:
        """
        Return every h in H with ``‖h‖∞ <= radius``.

        The points are ordered lexicographically by their coefficient vector
        in `basis`.

        Raises:
            ValueError: if the radius is negative.
        """
        radius = to_rational(radius)
        if radius < 0:
            raise ValueError(f'Radius must be nonnegative: got {radius}')

        k = self.rank
        entries = []
        for coefficients, point in self.walk_ball(math.floor(radius * self._scale)):
            in_basis = tuple(
                sum(c * row[i] for c, row in zip(coefficients, self._echelon_coefficients))
                for i in range(k)
            )
            entries.append((in_basis, point))
        entries.sort()
        self.logger.debug(f'Ball of radius {radius}: {len(entries)} points')
        return [Divisor(Fraction(v, self._scale) for v in point) for _, point in entries]

    # -- Serialisation

    def to_json_list(self) -> List[List[str]]:
        return [g.to_json_list() for g in self._generators]

    def __repr__(self):
        generators = ', '.join(f'({g})' for g in self._generators)
        return f'SubgroupLattice(n={self._n}, generators=[{generators}])'
