# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet built-in examples
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

import re
from typing import Callable, Dict, List

from pyrrset.divisor import parse_rational
from pyrrset.graph import WeightedGraph
from pyrrset.structure import RRStructure

_TWO_VERTEX_PATTERN = re.compile(r'^two-vertex-p(.+)$')


def two_vertex(p) -> RRStructure:
    """
    The structure of the two-vertex graph with edge weight ``p``.
    """
    return WeightedGraph([[0, p], [p, 0]]).to_structure(1)


def three_vertex(p, q, r) -> RRStructure:
    """
    The structure of the triangle with w12 = p, w13 = q and w23 = r.
    """
    return WeightedGraph([[0, p, q], [p, 0, r], [q, r, 0]]).to_structure(1)


def nongraph_sec4() -> RRStructure:
    """
    H = <(-4, 4)>, 𝒩 the orbit of (2, -2), κ = 0 and g = 1: the staircase of
    the weight-4 two-vertex graph shifted by (-1, -1), which no graph gives.
    """
    return RRStructure.from_generators(2, 1, [0, 0], [[2, -2]], [[-4, 4]])


def nongraph_fig4_printed() -> RRStructure:
    """
    H = <(-3, 3)>, 𝒩 generated by (0, 4) and (1, 3), κ = 0. The generators
    force g = 5, but deg κ = 0 is not 2g - 2, so the instance is broken.
    """
    return RRStructure.from_generators(2, 5, [0, 0], [[0, 4], [1, 3]], [[-3, 3]], allow_broken=True)


def nongraph_fig4_repaired() -> RRStructure:
    """
    The two-generator example with κ = (1, 7), which swaps (0, 4) and (1, 3)
    and satisfies the symmetry condition.
    """
    return RRStructure.from_generators(2, 5, [1, 7], [[0, 4], [1, 3]], [[-3, 3]])


class ExampleRegistry:
    """
    Named built-in structures.

    ``two-vertex-p<p>`` accepts any positive rational weight, e.g.
    ``two-vertex-p7`` or ``two-vertex-p3/2``.
    """
    def __init__(self):
        self._factories: Dict[str, Callable[[], RRStructure]] = {
            'two-vertex-p4': lambda: two_vertex(4),
            'three-vertex-134': lambda: three_vertex(1, 3, 4),
            'nongraph-sec4': nongraph_sec4,
            'nongraph-fig4-printed': nongraph_fig4_printed,
            'nongraph-fig4-repaired': nongraph_fig4_repaired,
        }

    def names(self) -> List[str]:
        return sorted(self._factories) + ['two-vertex-p<p>']

    def __contains__(self, name: str) -> bool:
        if name in self._factories:
            return True
        match = _TWO_VERTEX_PATTERN.match(name)
        if not match:
            return False
        try:
            return parse_rational(match.group(1)) > 0
        except ValueError:
            return False

    def get(self, name: str) -> RRStructure:
        """
        Build the named structure.

        Raises:
            KeyError: if there is no such example.
        """
        if name in self._factories:
            return self._factories[name]()
        if name not in self:
            raise KeyError(f'Unknown example {name!r}')
        return two_vertex(parse_rational(_TWO_VERTEX_PATTERN.match(name).group(1)))


registry = ExampleRegistry()
