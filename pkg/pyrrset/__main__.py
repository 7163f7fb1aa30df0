#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet command line tool
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

import argparse
from fractions import Fraction
import logging
import math
from pathlib import Path
import sys
from typing import List, Optional

import numpy as np

from pyrrset.divisor import Divisor, format_rational
from pyrrset.graph import WeightedGraph, match_two_vertex_graph
from pyrrset.region import RegionSpec, emit_csv, emit_svg, parse_range, sample_region
from pyrrset.registry import registry
from pyrrset.structure import CheckStatus, RRStructure

DEFAULT_SAMPLES = 1000
DEFAULT_SPOT_CHECKS = 200
DEFAULT_SEED = 0
DEFAULT_BOX = '-10..10'
DEFAULT_REGION_BOX = '-5..5'
DEFAULT_RESOLUTION = 41

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

logger = logging.getLogger('pyrrset')


def get_args(argv: Optional[List[str]] = None):
    parser = argparse.ArgumentParser(
        prog='pyrrset',
        description='pyRRSet: Riemann-Roch theory on finite sets',
        epilog='STRUCTURE is a structure JSON file or a built-in example name (see "pyrrset example --list")'
    )
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='Logging level (stderr)')
    subparsers = parser.add_subparsers(dest='command', required=True)

    verify = subparsers.add_parser('verify', help='Check the degree hypotheses, symmetry and Riemann-Roch')
    verify.add_argument('structure', help='Structure file or example name')
    verify.add_argument('--samples', type=int, default=DEFAULT_SPOT_CHECKS, help='Riemann-Roch spot checks')
    verify.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Sampling seed')
    verify.add_argument('--box', default=DEFAULT_BOX, help='Sampling range "lo..hi"')

    ell = subparsers.add_parser('ell', help='Evaluate the dimension of a divisor')
    ell.add_argument('structure', help='Structure file or example name')
    ell.add_argument('--point', required=True, help='Comma-separated rationals, e.g. "3,-1"')
    ell.add_argument('--witness', action='store_true', help='Also print a minimising generator and translation')

    rr_check = subparsers.add_parser('rr-check', help='Check the Riemann-Roch identity on random divisors')
    rr_check.add_argument('structure', help='Structure file or example name')
    rr_check.add_argument('--samples', type=int, default=DEFAULT_SAMPLES, help='Number of samples')
    rr_check.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Sampling seed')
    rr_check.add_argument('--box', default=DEFAULT_BOX, help='Sampling range "lo..hi"')
    rr_check.add_argument('--denominator', type=int, default=1, help='Sample points with this denominator')

    from_graph = subparsers.add_parser('from-graph', help='Build the structure of an edge-weighted graph')
    from_graph.add_argument('graph_file', type=Path, help='Graph JSON file')
    from_graph.add_argument('-k', '--base-vertex', type=int, default=1, help='Base vertex (1-based)')
    from_graph.add_argument('-o', '--output-file', type=Path, help='Output file (default stdout)')

    region = subparsers.add_parser('region', help='Sample the dimension over a grid')
    region.add_argument('structure', help='Structure file or example name')
    region.add_argument('--box', default=DEFAULT_REGION_BOX,
                        help='"lo..hi" for every axis, or one comma-separated range per axis')
    region.add_argument('--resolution', type=int, default=DEFAULT_RESOLUTION, help='Samples per axis')
    region.add_argument('--format', choices=['csv', 'svg'], default='csv', help='Output format')
    region.add_argument('-o', '--output-file', type=Path, help='Output file (default stdout)')

    example = subparsers.add_parser('example', help='Write a built-in structure')
    example.add_argument('name', nargs='?', help='Example name')
    example.add_argument('--list', action='store_true', help='List the built-in examples')
    example.add_argument('-o', '--output-file', type=Path, help='Output file (default stdout)')

    return parser.parse_args(argv)


# -- Helpers

def load_structure(name: str, allow_broken: Optional[bool] = None) -> RRStructure:
    """
    Load a structure file, or fall back to a built-in example of that name.
    """
    path = Path(name)
    if path.is_file():
        return RRStructure.load(path, allow_broken=allow_broken)
    if name in registry:
        return registry.get(name)
    raise ValueError(f'No structure file or built-in example named {name!r}')


def sample_points(n: int, samples: int, seed: int, box: str, denominator: int = 1) -> List[Divisor]:
    """
    Draw divisors with coordinates uniform on {k / denominator} within the box.

    The generator is numpy's ``default_rng(seed)`` (PCG64); one
    ``integers(low, high, endpoint=True)`` call draws a ``(samples, n)``
    array in row order, so a sample's coordinates are consecutive draws.
    """
    if samples < 1:
        raise ValueError(f'Sample count must be positive: got {samples}')
    if denominator < 1:
        raise ValueError(f'Denominator must be positive: got {denominator}')
    lo, hi = parse_range(box)
    low, high = math.ceil(lo * denominator), math.floor(hi * denominator)
    if low > high:
        raise ValueError(f'No point with denominator {denominator} in {box}')
    rng = np.random.default_rng(seed)
    draws = rng.integers(low, high, size=(samples, n), endpoint=True)
    return [Divisor(Fraction(int(v), denominator) for v in row) for row in draws]


def check_residuals(structure: RRStructure, points: List[Divisor]):
    """
    Returns:
        (tuple): The largest absolute residual, the number of nonzero
        residuals and the first counterexample (or `None`).
    """
    largest = Fraction(0)
    failures = 0
    counterexample = None
    for point in points:
        residual = structure.rr_residual(point)
        largest = max(largest, abs(residual))
        if residual != 0:
            failures += 1
            if counterexample is None:
                counterexample = (point, residual)
    return largest, failures, counterexample


def write_output(text: str, output_file: Optional[Path]):
    if output_file is None:
        sys.stdout.write(text)
    else:
        with open(output_file, 'w') as f:
            f.write(text)


# -- Commands

def cmd_verify(args) -> int:
    structure = load_structure(args.structure, allow_broken=True)
    passed = True

    print('hypotheses:')
    for check in structure.hypothesis_checks():
        print(f'  {check.detail}: {check.status}')
        passed &= check.status is CheckStatus.PASS

    print('symmetry:')
    report = structure.verify_symmetry()
    for entry in report.entries:
        label = f'nu_{entry.index + 1}'
        if entry.match is None:
            relation = 'not in N'
        else:
            coefficients = ','.join(str(m) for m in entry.coefficients)
            relation = f'~ nu_{entry.match + 1} (m = {coefficients})'
        print(f'  kappa - {label} = {entry.reflected} {relation}: {entry.status}')
    passed &= report.passed

    points = sample_points(structure.n, args.samples, args.seed, args.box)
    largest, failures, _ = check_residuals(structure, points)
    print(f'riemann-roch: {len(points)} samples, {failures} nonzero, '
          f'max |residual| {format_rational(largest)}: {CheckStatus.of(failures == 0)}')
    passed &= failures == 0

    if structure.n == 2:
        pattern = match_two_vertex_graph(structure)
        if not pattern.applicable:
            print('graph pattern: H is not of the form <(p,-p)>')
        else:
            p = format_rational(pattern.weight)
            verdict = 'two-vertex graph structure' if pattern.matches else 'not a two-vertex graph structure'
            print(f'graph pattern: p = {p}; '
                  f'kappa ~ ({pattern.graph_kappa}): {"yes" if pattern.kappa_matches else "no"}; '
                  f'nu ~ ({pattern.graph_nu}): {"yes" if pattern.nu_matches else "no"}; {verdict}')

    print(f'result: {CheckStatus.of(passed)}')
    return EXIT_OK if passed else EXIT_VIOLATION


def cmd_ell(args) -> int:
    structure = load_structure(args.structure)
    point = Divisor.parse(args.point)
    if not args.witness:
        print(format_rational(structure.ell(point)))
        return EXIT_OK

    witness = structure.ell_witness(point)
    print(format_rational(witness.value))
    coefficients = ','.join(str(m) for m in witness.coefficients)
    print(f'witness: nu_{witness.generator + 1} = {structure.nu_generators[witness.generator]}, '
          f'h = {witness.translation}, m = ({coefficients})')
    return EXIT_OK


def cmd_rr_check(args) -> int:
    structure = load_structure(args.structure)
    points = sample_points(structure.n, args.samples, args.seed, args.box, args.denominator)
    largest, failures, counterexample = check_residuals(structure, points)

    print(f'samples: {len(points)} (seed {args.seed}, box {args.box}, denominator {args.denominator})')
    print(f'max |residual|: {format_rational(largest)}')
    print(f'nonzero residuals: {failures}')
    if counterexample is not None:
        point, residual = counterexample
        print(f'counterexample: x = {point}, residual = {format_rational(residual)}')
    print(f'result: {CheckStatus.of(failures == 0)}')
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


def cmd_from_graph(args) -> int:
    graph = WeightedGraph.load(args.graph_file)
    structure = graph.to_structure(args.base_vertex)
    write_output(structure.to_json(), args.output_file)
    return EXIT_OK


def cmd_region(args) -> int:
    structure = load_structure(args.structure)
    spec = RegionSpec.parse(args.box, structure.n, args.resolution)
    table = sample_region(structure, spec)
    text = emit_svg(table) if args.format == 'svg' else emit_csv(table)
    write_output(text, args.output_file)
    return EXIT_OK


def cmd_example(args) -> int:
    if args.list:
        print('\n'.join(registry.names()))
        return EXIT_OK
    if not args.name:
        raise ValueError('An example name is required (see --list)')
    write_output(registry.get(args.name).to_json(), args.output_file)
    return EXIT_OK


COMMANDS = {
    'verify': cmd_verify,
    'ell': cmd_ell,
    'rr-check': cmd_rr_check,
    'from-graph': cmd_from_graph,
    'region': cmd_region,
    'example': cmd_example,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = get_args(argv)
    logging.basicConfig(level=args.log_level, format='%(levelname)s %(name)s: %(message)s')
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError, TypeError, OSError) as e:
        logger.debug('Command failed', exc_info=True)
        print(f'pyrrset: error: {e}', file=sys.stderr)
        return EXIT_USAGE
    except (MemoryError, RecursionError):
        logger.debug('Command ran out of resources', exc_info=True)
        print('pyrrset: error: ran out of memory; try a smaller box or structure', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
