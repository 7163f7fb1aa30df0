# -*- coding: utf-8 -*-

# ------------------------------------------------------------------------------
#
#  pyRRSet region sampling
#
#  Copyright (c) 2026, pyRRSet developers.
#  All rights reserved.
#
# ------------------------------------------------------------------------------

import csv
from dataclasses import dataclass
from fractions import Fraction
import io
import logging
import math
from typing import Iterator, List, Sequence, Tuple

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle
import numpy as np

from pyrrset.divisor import (
    DimensionMismatchException,
    Divisor,
    RationalLike,
    format_rational,
    parse_rational,
    to_rational,
)
from pyrrset.structure import RRStructure

logger = logging.getLogger(__name__)

# Fixed so that SVG element ids, and hence the output, are reproducible
SVG_HASH_SALT = 'pyrrset'


class RegionSpecException(ValueError):
    """
    An exception raised if a sampling box or resolution is invalid.
    """
    pass


def parse_range(text: str) -> Tuple[Fraction, Fraction]:
    """
    Parse a closed interval written ``"lo..hi"``.

    Raises:
        ValueError: if the text is not of that form.
    """
    parts = str(text).split('..')
    if len(parts) != 2:
        raise ValueError(f'Invalid range {text!r}, expected "lo..hi"')
    return parse_rational(parts[0]), parse_rational(parts[1])


# -- Region spec

class RegionSpec:
    """
    A rational sampling grid: a closed box and a number of samples per axis.

    Grid points on axis ``i`` are ``lo_i + t (hi_i - lo_i) / (resolution - 1)``
    for ``t = 0 .. resolution - 1``, exactly.

    Args:
        box (list): One ``(lo, hi)`` pair per coordinate, with ``lo < hi``.
        resolution (int): Samples per axis, at least 2.

    Raises:
        RegionSpecException: If the box or resolution is invalid.
    """
    def __init__(self, box: Sequence[Tuple[RationalLike, RationalLike]], resolution: int):
        box = tuple((to_rational(lo), to_rational(hi)) for lo, hi in box)
        if not box:
            raise RegionSpecException('The sampling box needs at least one axis')
        for lo, hi in box:
            if not lo < hi:
                raise RegionSpecException(f'Empty interval [{lo}, {hi}]')
        if not isinstance(resolution, int) or isinstance(resolution, bool) or resolution < 2:
            raise RegionSpecException(f'Resolution must be an integer >= 2: got {resolution!r}')
        self.box = box
        self.resolution = resolution

    @classmethod
    def parse(cls, text: str, n: int, resolution: int) -> 'RegionSpec':
        """
        Parse ``"lo..hi"`` (the same range on every axis) or a
        comma-separated list of ``n`` ranges.
        """
        ranges = [parse_range(part) for part in str(text).split(',')]
        if len(ranges) == 1:
            ranges = ranges * n
        if len(ranges) != n:
            raise DimensionMismatchException(n, len(ranges))
        return cls(ranges, resolution)

    @property
    def n(self) -> int:
        return len(self.box)

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.resolution,) * self.n

    def step(self, axis: int) -> Fraction:
        lo, hi = self.box[axis]
        return (hi - lo) / (self.resolution - 1)

    def axis(self, axis: int) -> List[Fraction]:
        lo, _ = self.box[axis]
        step = self.step(axis)
        return [lo + t * step for t in range(self.resolution)]

    def points(self) -> Iterator[Divisor]:
        """
        Iterate over the grid in row-major order, last coordinate fastest.
        """
        axes = [self.axis(i) for i in range(self.n)]
        for index in np.ndindex(*self.shape):
            yield Divisor(axes[i][t] for i, t in enumerate(index))


# -- Sampling

@dataclass(frozen=True)
class RegionTable:
    spec: RegionSpec
    rows: Tuple[Tuple[Divisor, Fraction], ...]

    @property
    def values(self) -> np.ndarray:
        """
        np.ndarray: The ℓ values as an object array indexed by grid position.
        """
        values = np.empty(len(self.rows), dtype=object)
        values[:] = [value for _, value in self.rows]
        return values.reshape(self.spec.shape)


def sample_region(structure: RRStructure, spec: RegionSpec) -> RegionTable:
    """
    Evaluate ℓ at every grid point.

    Raises:
        DimensionMismatchException: if the grid and structure dimensions differ.
    """
    if spec.n != structure.n:
        raise DimensionMismatchException(structure.n, spec.n)
    rows = tuple((point, structure.ell(point)) for point in spec.points())
    logger.debug(f'Sampled {len(rows)} grid points, {sum(1 for _, v in rows if v == 0)} with ell = 0')
    return RegionTable(spec, rows)


# -- Output

def emit_csv(table: RegionTable) -> str:
    """
    Render a table as CSV with header ``x1,...,xn,ell`` and exact rationals.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow([f'x{i + 1}' for i in range(table.spec.n)] + ['ell'])
    for point, value in table.rows:
        writer.writerow(point.to_json_list() + [format_rational(value)])
    return buffer.getvalue()


def read_csv(text: str) -> List[Tuple[Divisor, Fraction]]:
    """
    Parse CSV written by `emit_csv` back into ``(point, ell)`` rows.

    Raises:
        ValueError: if the header or any row is malformed.
    """
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if not header or header[-1] != 'ell' or header[:-1] != [f'x{i + 1}' for i in range(len(header) - 1)]:
        raise ValueError(f'Invalid region CSV header: {header!r}')
    rows = []
    for record in reader:
        if len(record) != len(header):
            raise ValueError(f'Row {record!r} does not match the header')
        rows.append((Divisor(parse_rational(c) for c in record[:-1]), parse_rational(record[-1])))
    return rows


def emit_svg(table: RegionTable) -> str:
    """
    Render a two-dimensional table as SVG, shading the cells with ℓ = 0.

    Each shaded cell is a vector rectangle whose id starts with
    ``ell-zero-``; axis ticks are drawn at the integers. Floats appear only
    in the rendered coordinates.

    Raises:
        DimensionMismatchException: if the table is not two-dimensional.
    """
    spec = table.spec
    if spec.n != 2:
        raise DimensionMismatchException(2, spec.n)

    values = table.values
    xs, ys = spec.axis(0), spec.axis(1)
    dx, dy = spec.step(0), spec.step(1)
    (x_lo, x_hi), (y_lo, y_hi) = spec.box

    figure = Figure(figsize=(6, 6))
    ax = figure.add_subplot()
    for i, j in np.ndindex(values.shape):
        if values[i, j] == 0:
            ax.add_patch(Rectangle(
                (float(xs[i] - dx / 2), float(ys[j] - dy / 2)),
                float(dx), float(dy),
                facecolor='0.6', edgecolor='none', gid=f'ell-zero-{i}-{j}'
            ))
    ax.set_xlim(float(x_lo - dx / 2), float(x_hi + dx / 2))
    ax.set_ylim(float(y_lo - dy / 2), float(y_hi + dy / 2))
    ax.set_xticks(range(math.ceil(x_lo), math.floor(x_hi) + 1))
    ax.set_yticks(range(math.ceil(y_lo), math.floor(y_hi) + 1))
    ax.set_xlabel('x1')
    ax.set_ylabel('x2')
    ax.set_aspect('equal')
    ax.grid(True, linewidth=0.3)

    buffer = io.StringIO()
    with matplotlib.rc_context({'svg.hashsalt': SVG_HASH_SALT, 'svg.fonttype': 'none'}):
        figure.savefig(buffer, format='svg', metadata={'Date': None})
    return buffer.getvalue()
