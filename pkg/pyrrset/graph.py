# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet graph structures
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

from dataclasses import dataclass
from fractions import Fraction
import itertools
import json
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from pyrrset.divisor import Divisor, RationalLike, format_rational, to_rational
from pyrrset.lattice import SubgroupLattice
from pyrrset.structure import RRStructure

MAX_VERTICES = 10


# -- Exceptions

class InvalidGraphException(ValueError):
    """
    An exception raised if a weight matrix or edge list is not that
    of a finite simple loopless graph with nonnegative weights.
    """
    pass


class DisconnectedGraphException(ValueError):
    """
    An exception raised if the positive-weight edges do not connect
    every vertex.
    """
    def __init__(self, components: int):
        self.components = components

    def __str__(self):
        return f'Graph is not connected: {self.components} components under positive weights'


class TooManyVerticesException(ValueError):
    """
    An exception raised if the permutation construction of the ν
    generators is requested for too many vertices.
    """
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit

    def __str__(self):
        return f'{self.n} vertices exceeds the limit of {self.limit} for the permutation construction'


# -- Graph

class WeightedGraph:
    """
    A finite, connected, simple, loopless graph with nonnegative
    rational edge weights.

    Vertices are numbered from 1 in every public method. Zero weights are
    allowed in the matrix but do not count towards connectivity.

    Args:
        weights: A symmetric n x n matrix of weights with zero diagonal.
        max_vertices (int): The largest ``n`` for which `nu_generators`
            enumerates permutations.

    Raises:
        InvalidGraphException: If the matrix is not square and symmetric with
            a zero diagonal and nonnegative entries.
        DisconnectedGraphException: If the graph is not connected.
    """
    def __init__(self,
                 weights: Sequence[Sequence[RationalLike]],
                 max_vertices: int = MAX_VERTICES):
        self.logger = logging.getLogger(__name__)
        matrix = tuple(tuple(to_rational(w) for w in row) for row in weights)
        n = len(matrix)
        if n < 1:
            raise InvalidGraphException('A graph needs at least one vertex')
        if any(len(row) != n for row in matrix):
            raise InvalidGraphException('The weight matrix must be square')
        for i in range(n):
            if matrix[i][i] != 0:
                raise InvalidGraphException(f'Vertex {i + 1} has a loop of weight {matrix[i][i]}')
            for j in range(n):
                if matrix[i][j] != matrix[j][i]:
                    raise InvalidGraphException(f'Weights w({i + 1},{j + 1}) and w({j + 1},{i + 1}) differ')
                if matrix[i][j] < 0:
                    raise InvalidGraphException(f'Weight w({i + 1},{j + 1}) is negative')

        self._weights = matrix
        self._max_vertices = max_vertices
        self._graph = nx.Graph()
        self._graph.add_nodes_from(range(1, n + 1))
        self._graph.add_weighted_edges_from(
            (i + 1, j + 1, matrix[i][j]) for i in range(n) for j in range(i + 1, n) if matrix[i][j] > 0
        )
        if not nx.is_connected(self._graph):
            raise DisconnectedGraphException(nx.number_connected_components(self._graph))

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Sequence], **kwargs) -> 'WeightedGraph':
        """
        Build a graph from 1-based ``(i, j, weight)`` triples. The symmetric
        closure is applied; listing an edge twice, in either orientation, is
        an error.

        Raises:
            InvalidGraphException: on loops, duplicate edges or bad indices.
        """
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise InvalidGraphException(f'Invalid vertex count: {n!r}')
        weights = [[Fraction(0)] * n for _ in range(n)]
        seen = set()
        for edge in edges:
            if len(edge) != 3:
                raise InvalidGraphException(f'Edge {edge!r} must be [i, j, weight]')
            i, j, weight = edge
            for v in (i, j):
                if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                    raise InvalidGraphException(f'Invalid vertex index {v!r} in edge {edge!r}')
            if i == j:
                raise InvalidGraphException(f'Edge {edge!r} is a loop')
            key = frozenset((i, j))
            if key in seen:
                raise InvalidGraphException(f'Duplicate edge between {i} and {j}')
            seen.add(key)
            weights[i - 1][j - 1] = weights[j - 1][i - 1] = to_rational(weight)
        return cls(weights, **kwargs)

    # -- Properties

    @property
    def n(self) -> int:
        return len(self._weights)

    @property
    def weights(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._weights

    def weight(self, i: int, j: int) -> Fraction:
        return self._weights[i - 1][j - 1]

    def vertex_degree(self, i: int) -> Fraction:
        """
        The sum of the weights of the edges incident to vertex ``i``.
        """
        return Fraction(self._graph.degree(i, weight='weight'))

    # -- Construction

    def laplacian_generators(self) -> List[Divisor]:
        """
        Return the first n - 1 rows h_1, ..., h_{n-1} of the edge-weighted
        Laplacian, each of degree 0.
        """
        n = self.n
        return [
            Divisor(self.vertex_degree(i) if i == j else -self.weight(i, j) for j in range(1, n + 1))
            for i in range(1, n)
        ]

    def nu_generators(self, k: int = 1) -> List[Divisor]:
        """
        Return the distinct ν obtained from every ordering of the vertices
        starting at vertex ``k``.

        For an ordering (j_1, ..., j_n), ν(j_1) = -1 and ν(j_l) is -1 plus
        the total weight from j_l back to the earlier vertices. Orderings are
        visited in lexicographic order and only the first copy of each ν is
        kept.

        Raises:
            TooManyVerticesException: if ``n`` exceeds ``max_vertices``.
            ValueError: if ``k`` is not a vertex.
        """
        n = self.n
        if n > self._max_vertices:
            raise TooManyVerticesException(n, self._max_vertices)
        if not 1 <= k <= n:
            raise ValueError(f'Base vertex {k} is not in 1..{n}')

        others = [v for v in range(1, n + 1) if v != k]
        generators = []
        seen = set()
        for permutation in itertools.permutations(others):
            order = (k,) + permutation
            nu = [Fraction(0)] * n
            for position, vertex in enumerate(order):
                nu[vertex - 1] = -1 + sum((self.weight(earlier, vertex) for earlier in order[:position]), Fraction(0))
            nu = Divisor(nu)
            if nu not in seen:
                seen.add(nu)
                generators.append(nu)
        self.logger.debug(f'{len(generators)} distinct nu generators from base vertex {k}')
        return generators

    def canonical(self) -> Divisor:
        """
        Return κ with κ(j) = deg(v_j) - 2.
        """
        return Divisor(self.vertex_degree(j) - 2 for j in range(1, self.n + 1))

    def genus(self) -> Fraction:
        """
        Return g = 1 + (total edge weight) - n.
        """
        return 1 + Fraction(self._graph.size(weight='weight')) - self.n

    def to_structure(self, k: int = 1) -> RRStructure:
        """
        Assemble the graph's Riemann-Roch structure with base vertex ``k``.
        """
        lattice = SubgroupLattice(self.n, self.laplacian_generators(), allow_trivial=True)
        return RRStructure(self.n, self.genus(), self.canonical(), self.nu_generators(k), lattice)

    # -- Serialisation

    def to_dict(self) -> dict:
        n = self.n
        edges = [
            [i + 1, j + 1, format_rational(self._weights[i][j])]
            for i in range(n) for j in range(i + 1, n) if self._weights[i][j] != 0
        ]
        return {'n': n, 'edges': edges}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n'

    @classmethod
    def from_dict(cls, data: dict, **kwargs) -> 'WeightedGraph':
        if not isinstance(data, dict) or 'n' not in data or 'edges' not in data:
            raise ValueError('A graph must be a JSON object with "n" and "edges"')
        if not isinstance(data['edges'], list):
            raise ValueError('Field "edges" must be a list')
        return cls.from_edges(data['n'], data['edges'], **kwargs)

    @classmethod
    def from_json(cls, text: str, **kwargs) -> 'WeightedGraph':
        return cls.from_dict(json.loads(text), **kwargs)

    @classmethod
    def load(cls, path: Path, **kwargs) -> 'WeightedGraph':
        with open(path, 'r') as f:
            return cls.from_json(f.read(), **kwargs)

    def __repr__(self):
        return f'WeightedGraph(n={self.n}, edges={self.to_dict()["edges"]})'


# -- Graph pattern

@dataclass(frozen=True)
class GraphPatternReport:
    """
    Whether a two-dimensional structure is the two-vertex graph structure
    for the weight ``p`` read off its subgroup H = <(p, -p)>.
    """
    applicable: bool
    weight: Optional[Fraction] = None
    graph_kappa: Optional[Divisor] = None
    graph_nu: Optional[Divisor] = None
    kappa_matches: bool = False
    nu_matches: bool = False

    @property
    def matches(self) -> bool:
        return self.applicable and self.kappa_matches and self.nu_matches


def match_two_vertex_graph(structure: RRStructure) -> GraphPatternReport:
    """
    Compare a structure with the two-vertex graph sharing its subgroup.

    The only two-vertex graph with H = <(p, -p)> has weight ``p`` and gives
    κ = (p - 2, p - 2) and 𝒩 the orbit of (p - 1, -1). The structure is that
    graph's iff κ is equivalent to the graph's κ and every ν generator is
    equivalent to (p - 1, -1).
    """
    if structure.n != 2 or structure.lattice.rank != 1:
        return GraphPatternReport(applicable=False)

    p = abs(structure.lattice.basis[0][0])
    graph_kappa = WeightedGraph([[0, p], [p, 0]]).canonical()
    # the base-vertex-2 representative; base vertex 1 gives (-1, p - 1) in the same orbit
    graph_nu = Divisor([p - 1, -1])
    return GraphPatternReport(
        applicable=True,
        weight=p,
        graph_kappa=graph_kappa,
        graph_nu=graph_nu,
        kappa_matches=structure.equivalent(structure.kappa, graph_kappa),
        nu_matches=all(structure.equivalent(nu, graph_nu) for nu in structure.nu_generators),
    )
