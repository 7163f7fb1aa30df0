# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet Riemann-Roch structure
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
import json
import logging
import math
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from pyrrset.divisor import (
    DimensionMismatchException,
    Divisor,
    RationalLike,
    degree,
    format_rational,
    positive_part,
    to_rational,
)
from pyrrset.lattice import SubgroupLattice, box_interval


# -- State

class CheckStatus(Enum):
    """
    The outcome of a verification step
    """
    PASS = 'PASS'
    FAIL = 'FAIL'

    def __str__(self):
        return self.value

    @classmethod
    def of(cls, passed: bool) -> 'CheckStatus':
        return cls.PASS if passed else cls.FAIL


class StructureHypothesisException(ValueError):
    """
    An exception raised if a structure violates the degree
    hypotheses and was not built with ``allow_broken``.
    """
    pass


# -- Reports

@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    status: CheckStatus
    detail: str


@dataclass(frozen=True)
class SymmetryEntry:
    """
    The symmetry verdict for one generator ν_i: whether κ - ν_i lies in
    the orbit of some ν_j, and the coefficients of κ - ν_i - ν_j if so.
    """
    index: int
    reflected: Divisor
    match: Optional[int]
    coefficients: Optional[Tuple[int, ...]]

    @property
    def status(self) -> CheckStatus:
        return CheckStatus.of(self.match is not None)


@dataclass(frozen=True)
class SymmetryReport:
    entries: Tuple[SymmetryEntry, ...]

    @property
    def passed(self) -> bool:
        return all(entry.match is not None for entry in self.entries)

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class EllWitness:
    """
    A minimiser of deg((x - ν_i - h)⁺): the value, the 0-based generator
    index ``i``, and the coefficients of ``h`` in the lattice basis.
    """
    value: Fraction
    generator: int
    coefficients: Tuple[int, ...]
    translation: Divisor


def _as_divisor(value) -> Divisor:
    return value if isinstance(value, Divisor) else Divisor(value)


# -- Search

class _PositivePartSearch:
    """
    Depth-first branch and bound for the least deg((y - h)⁺) over h in H.

    Everything is scaled by a common denominator so the search runs over
    integers. Fixing the coefficient of an echelon vector fixes every
    coordinate after the next lead. The positive parts of the fixed
    coordinates, plus the positive part of the degree that the free
    coordinates must still absorb (h has degree 0), bound every completion
    from below. That bound is convex in the coefficient being fixed, so each
    level tries coefficients outward from its minimiser, left before right,
    and stops on a side once the bound there exceeds the best value.

    The search stays in the ball of radius (n - 1)(B + ‖y‖∞) around 0, for
    B the best value so far: outside it deg((y - h)⁺) > B.

    Args:
        lattice (SubgroupLattice): The subgroup H.
        y (Divisor): The point being reduced.
        cap (Fraction): Only values up to ``cap`` are of interest.
        strict (bool): Only values below ``cap`` are of interest.
    """
    def __init__(self, lattice: SubgroupLattice, y: Divisor, cap: Fraction, strict: bool):
        self.n = lattice.n
        self.denominator = math.lcm(lattice.scale, *(c.denominator for c in y))
        factor = self.denominator // lattice.scale
        self.target = [int(c * self.denominator) for c in y]
        self.rows = [(tuple(v * factor for v in vector), lead) for vector, lead in lattice.echelon]
        self.stops = [lead for _, lead in self.rows] + [-1]
        self.heads = [0]
        for t in self.target:
            self.heads.append(self.heads[-1] + t)
        self.spread = max(abs(t) for t in self.target)

        scaled = cap * self.denominator
        self.best = math.ceil(scaled) - 1 if strict else math.floor(scaled)
        self.value = None
        self.point = None
        self.nodes = 0

    @property
    def limit(self) -> int:
        return (self.n - 1) * (self.best + self.spread)

    def run(self) -> Optional[Tuple[Fraction, Divisor]]:
        """
        Returns:
            (tuple): The least value and the first h found attaining it, or
            `None` if no h reaches the cap.
        """
        if self.best < 0:
            return None
        point = [0] * self.n
        start = self.stops[0] + 1
        cost = sum(max(t, 0) for t in self.target[start:])
        if self.rows:
            self._descend(0, point, cost, 0)
        elif cost <= self.best:
            self._record(cost, point)
        if self.point is None:
            return None
        return (
            Fraction(self.value, self.denominator),
            Divisor(Fraction(v, self.denominator) for v in self.point)
        )

    def _record(self, value: int, point: List[int]):
        self.value = value
        self.point = point
        self.best = value - 1

    def _descend(self, level: int, point: List[int], cost: int, fixed_sum: int):
        self.nodes += 1
        vector, lead = self.rows[level]
        fixed = range(self.stops[level + 1] + 1, lead + 1)
        low, high = box_interval(point, vector, fixed, self.limit)
        if low > high:
            return

        free = self.heads[self.stops[level + 1] + 1]
        offset = free + fixed_sum + sum(point[c] for c in fixed)
        slope = sum(vector[c] for c in fixed)

        def bound(m: int) -> int:
            gaps = sum(max(self.target[c] - point[c] - m * vector[c], 0) for c in fixed)
            return cost + gaps + max(offset + m * slope, 0)

        # least minimiser of the convex bound
        lo, hi = low, high
        while lo < hi:
            mid = (lo + hi) // 2
            if bound(mid) <= bound(mid + 1):
                hi = mid
            else:
                lo = mid + 1
        centre = lo
        if bound(centre) > self.best:
            return
        if level == len(self.rows) - 1:
            self._record(bound(centre), [p + centre * v for p, v in zip(point, vector)])
            return

        def branch(m: int):
            child = [p + m * v for p, v in zip(point, vector)]
            child_cost = cost + sum(max(self.target[c] - child[c], 0) for c in fixed)
            self._descend(level + 1, child, child_cost, fixed_sum + sum(child[c] for c in fixed))

        # outward from the minimiser; the bound only grows on either side
        branch(centre)
        left, right = centre - 1, centre + 1
        while left >= low or right <= high:
            if left >= low:
                if bound(left) <= self.best:
                    branch(left)
                    left -= 1
                else:
                    left = low - 1
            if right <= high:
                if bound(right) <= self.best:
                    branch(right)
                    right += 1
                else:
                    right = high + 1


# -- Structure

class RRStructure:
    """
    A Riemann-Roch instance (n, g, κ, 𝒩, H).

    𝒩 is the union of the H-orbits of the ν generators. Exact duplicate
    generators are dropped, keeping the first occurrence.

    Args:
        n (int): The dimension.
        genus (Fraction): The genus g.
        kappa (Divisor): The canonical divisor κ, of degree 2g - 2.
        nu_generators (list): The ν generators, each of degree g - 1.
        lattice (SubgroupLattice): The subgroup H.
        allow_broken (bool): If `True`, degree hypothesis violations are
            logged instead of raised, so that the instance can still be
            evaluated and diagnosed.

    Raises:
        StructureHypothesisException: If there are no ν generators, or a
            degree hypothesis fails and ``allow_broken`` is not set.
        DimensionMismatchException: If any divisor or the lattice does not
            have dimension ``n``.
    """
    def __init__(self,
                 n: int,
                 genus: RationalLike,
                 kappa: Divisor,
                 nu_generators: Sequence[Divisor],
                 lattice: SubgroupLattice,
                 allow_broken: bool = False):
        self.logger = logging.getLogger(__name__)

        kappa = _as_divisor(kappa)
        if len(kappa) != n:
            raise DimensionMismatchException(n, len(kappa))
        if lattice.n != n:
            raise DimensionMismatchException(n, lattice.n)

        generators = []
        for nu in nu_generators:
            nu = _as_divisor(nu)
            if len(nu) != n:
                raise DimensionMismatchException(n, len(nu))
            if nu not in generators:
                generators.append(nu)
        if not generators:
            raise StructureHypothesisException('At least one ν generator is required')

        self._n = n
        self._genus = to_rational(genus)
        self._kappa = kappa
        self._nu_generators = tuple(generators)
        self._lattice = lattice
        self._allow_broken = bool(allow_broken)

        failed = [check for check in self.hypothesis_checks() if check.status is CheckStatus.FAIL]
        if failed and not self._allow_broken:
            raise StructureHypothesisException('; '.join(check.detail for check in failed))
        for check in failed:
            self.logger.warning(f'Structure violates a degree hypothesis: {check.detail}')

    @classmethod
    def from_generators(cls,
                        n: int,
                        genus: RationalLike,
                        kappa: Divisor,
                        nu_generators: Sequence[Divisor],
                        subgroup_generators: Sequence[Divisor],
                        allow_broken: bool = False,
                        allow_trivial: bool = False) -> 'RRStructure':
        lattice = SubgroupLattice(n, subgroup_generators, allow_trivial=allow_trivial)
        return cls(n, genus, kappa, nu_generators, lattice, allow_broken=allow_broken)

    # -- Properties

    @property
    def n(self) -> int:
        return self._n

    @property
    def genus(self) -> Fraction:
        return self._genus

    @property
    def kappa(self) -> Divisor:
        return self._kappa

    @property
    def nu_generators(self) -> Tuple[Divisor, ...]:
        return self._nu_generators

    @property
    def lattice(self) -> SubgroupLattice:
        return self._lattice

    @property
    def allow_broken(self) -> bool:
        return self._allow_broken

    def _check_point(self, x) -> Divisor:
        x = _as_divisor(x)
        if len(x) != self._n:
            raise DimensionMismatchException(self._n, len(x))
        return x

    # -- Hypotheses

    def hypothesis_checks(self) -> List[HypothesisCheck]:
        """
        Check deg(ν_i) = g - 1 for every generator and deg(κ) = 2g - 2.
        """
        checks = []
        expected = self._genus - 1
        for i, nu in enumerate(self._nu_generators, start=1):
            actual = degree(nu)
            checks.append(HypothesisCheck(
                f'deg(nu_{i})',
                CheckStatus.of(actual == expected),
                f'deg(nu_{i}) = {format_rational(actual)}, expected g - 1 = {format_rational(expected)}'
            ))
        expected = 2 * self._genus - 2
        actual = degree(self._kappa)
        checks.append(HypothesisCheck(
            'deg(kappa)',
            CheckStatus.of(actual == expected),
            f'deg(kappa) = {format_rational(actual)}, expected 2g - 2 = {format_rational(expected)}'
        ))
        return checks

    # -- Dimension

    def ell_witness(self, x: Divisor) -> EllWitness:
        """
        Compute ℓ(x) together with a minimising generator and translation.

        The best value B starts at the least deg((x - ν_i)⁺). For h in V₀,
        deg((y - h)⁺) >= ‖h‖∞ / (n - 1) - ‖y‖∞, so no h outside the ball of
        radius (n - 1)(B + ‖y‖∞) beats B; each generator is searched by
        branch and bound inside that ball while B shrinks. Ties go to the
        lowest generator index.

        Raises:
            DimensionMismatchException: if ``x`` does not have length ``n``.
        """
        x = self._check_point(x)
        offsets = [x - nu for nu in self._nu_generators]
        best = min(degree(positive_part(y)) for y in offsets)

        witness = None
        nodes = 0
        for index, y in enumerate(offsets):
            if witness is None:
                search = _PositivePartSearch(self._lattice, y, best, strict=False)
            else:
                search = _PositivePartSearch(self._lattice, y, witness.value, strict=True)
            found = search.run()
            nodes += search.nodes
            if found is not None:
                value, translation = found
                coefficients = self._lattice.member(translation).coefficients
                witness = EllWitness(value, index, coefficients, translation)

        self.logger.debug(
            f'ell({x}) = {witness.value} via nu_{witness.generator + 1} ({nodes} search nodes)'
        )
        return witness

    def ell(self, x: Divisor) -> Fraction:
        """
        Return the dimension ℓ(x) = min over ν in 𝒩 of deg((x - ν)⁺).

        Raises:
            DimensionMismatchException: if ``x`` does not have length ``n``.
        """
        return self.ell_witness(x).value

    def rr_residual(self, x: Divisor) -> Fraction:
        """
        Return ℓ(x) - ℓ(κ - x) - (deg(x) - g + 1), which is zero
        whenever the symmetry condition holds.
        """
        x = self._check_point(x)
        return self.ell(x) - self.ell(self._kappa - x) - (degree(x) - self._genus + 1)

    # -- Orbits

    @cached_property
    def _nu_coordinates(self):
        return [self._lattice.coordinates(nu) for nu in self._nu_generators]

    def _orbit_of(self, x: Divisor) -> Optional[Tuple[int, Tuple[int, ...]]]:
        """
        Find the first j with x - ν_j in H, comparing projections so each
        generator is projected only once.
        """
        coefficients, residual = self._lattice.coordinates(x)
        for j, (nu_coefficients, nu_residual) in enumerate(self._nu_coordinates):
            if residual != nu_residual:
                continue
            difference = [a - b for a, b in zip(coefficients, nu_coefficients)]
            if all(d.denominator == 1 for d in difference):
                return j, tuple(int(d) for d in difference)
        return None

    def verify_symmetry(self) -> SymmetryReport:
        """
        Verify that κ - ν_i lies in 𝒩 for every generator ν_i.

        Since ν ↦ κ - ν is an involution and H acts by translation, checking
        the generators is enough for the whole of 𝒩.
        """
        entries = []
        for i, nu in enumerate(self._nu_generators):
            reflected = self._kappa - nu
            found = self._orbit_of(reflected)
            match, coefficients = found if found else (None, None)
            entries.append(SymmetryEntry(i, reflected, match, coefficients))
        report = SymmetryReport(tuple(entries))
        self.logger.debug(f'Symmetry {CheckStatus.of(report.passed)} over {len(entries)} generators')
        return report

    def in_orbits(self, x: Divisor) -> bool:
        """
        Return `True` iff ``x`` lies in 𝒩, i.e. has degree g - 1 and is
        equivalent to some ν generator.
        """
        x = self._check_point(x)
        return degree(x) == self._genus - 1 and self._orbit_of(x) is not None

    def equivalent(self, x: Divisor, y: Divisor) -> bool:
        """
        Return `True` iff x - y lies in H.
        """
        x = self._check_point(x)
        y = self._check_point(y)
        return x - y in self._lattice

    def equivalent_generators(self) -> List[Tuple[int, int]]:
        """
        List the pairs (i, j), i < j, of distinct ν generators lying in the
        same H-orbit. Such pairs do not change 𝒩 but are redundant.
        """
        pairs = []
        coordinates = self._nu_coordinates
        for i in range(len(coordinates)):
            for j in range(i + 1, len(coordinates)):
                (a, r), (b, s) = coordinates[i], coordinates[j]
                if r == s and all((p - q).denominator == 1 for p, q in zip(a, b)):
                    pairs.append((i, j))
        return pairs

    def with_kappa(self, kappa: Divisor, allow_broken: bool = True) -> 'RRStructure':
        """
        Return a copy of this structure with κ replaced.
        """
        return RRStructure(self._n, self._genus, kappa, self._nu_generators, self._lattice,
                           allow_broken=allow_broken)

    # -- Serialisation

    def to_dict(self) -> dict:
        data = {
            'n': self._n,
            'genus': format_rational(self._genus),
            'kappa': self._kappa.to_json_list(),
            'nu_generators': [nu.to_json_list() for nu in self._nu_generators],
            'H': self._lattice.to_json_list(),
        }
        if self._allow_broken:
            data['allow_broken'] = True
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n'

    @classmethod
    def from_dict(cls, data: dict, allow_broken: Optional[bool] = None) -> 'RRStructure':
        """
        Build a structure from its JSON object form.

        Args:
            data (dict): The decoded structure file.
            allow_broken (bool): Overrides the file's ``allow_broken`` flag
                when not `None`.

        Raises:
            ValueError: if a field is missing or malformed.
        """
        if not isinstance(data, dict):
            raise ValueError('A structure must be a JSON object')
        missing = {'n', 'genus', 'kappa', 'nu_generators', 'H'} - set(data)
        if missing:
            raise ValueError(f'Structure is missing fields: {", ".join(sorted(missing))}')

        n = data['n']
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f'Invalid dimension: {n!r}')
        for key in ('kappa', 'nu_generators', 'H'):
            if not isinstance(data[key], list):
                raise ValueError(f'Field {key!r} must be a list')
        if allow_broken is None:
            allow_broken = data.get('allow_broken', False)
            if not isinstance(allow_broken, bool):
                raise ValueError('Field "allow_broken" must be a boolean')

        # An explicit empty "H" is a request for the trivial subgroup
        return cls.from_generators(
            n,
            to_rational(data['genus']),
            Divisor(data['kappa']),
            [Divisor(nu) for nu in data['nu_generators']],
            [Divisor(h) for h in data['H']],
            allow_broken=allow_broken,
            allow_trivial=True,
        )

    @classmethod
    def from_json(cls, text: str, allow_broken: Optional[bool] = None) -> 'RRStructure':
        return cls.from_dict(json.loads(text), allow_broken=allow_broken)

    @classmethod
    def load(cls, path: Path, allow_broken: Optional[bool] = None) -> 'RRStructure':
        with open(path, 'r') as f:
            return cls.from_json(f.read(), allow_broken=allow_broken)

    def save(self, path: Path):
        with open(path, 'w') as f:
            f.write(self.to_json())

    def __eq__(self, other) -> bool:
        if not isinstance(other, RRStructure):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    __hash__ = None

    def __repr__(self):
        return (f'RRStructure(n={self._n}, genus={format_rational(self._genus)}, '
                f'kappa=({self._kappa}), nu_generators={len(self._nu_generators)}, '
                f'lattice={self._lattice!r})')
