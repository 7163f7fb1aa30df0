# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

__title__ = 'pyRRSet'
__version__ = '1.0.0'
__all__ = [
    'Divisor',
    'degree',
    'positive_part',
    'negative_part',
    'taxicab',
    'leq',
    'parse_rational',
    'format_rational',
    'DimensionMismatchException',
    'SubgroupLattice',
    'Membership',
    'NonZeroDegreeException',
    'EmptyGeneratorsException',
    'RRStructure',
    'CheckStatus',
    'StructureHypothesisException',
    'WeightedGraph',
    'match_two_vertex_graph',
    'InvalidGraphException',
    'DisconnectedGraphException',
    'TooManyVerticesException',
    'RegionSpec',
    'RegionSpecException',
    'sample_region',
    'emit_csv',
    'emit_svg',
    'read_csv',
    'ExampleRegistry',
    'registry',
]

# flake8: noqa: F401
from .divisor import (
    Divisor,
    degree,
    positive_part,
    negative_part,
    taxicab,
    leq,
    parse_rational,
    format_rational,
    DimensionMismatchException
)
from .lattice import (
    SubgroupLattice,
    Membership,
    NonZeroDegreeException,
    EmptyGeneratorsException
)
from .structure import (
    RRStructure,
    CheckStatus,
    StructureHypothesisException
)
from .graph import (
    WeightedGraph,
    match_two_vertex_graph,
    InvalidGraphException,
    DisconnectedGraphException,
    TooManyVerticesException
)
from .region import (
    RegionSpec,
    RegionSpecException,
    sample_region,
    emit_csv,
    emit_svg,
    read_csv
)
from .registry import ExampleRegistry, registry
