"""Worked example spaces and a classical hand-built subbase.

The five spaces exercise every structural case the builder handles: a bare
interval, extra isolated points, a sequence converging onto the kernel, a
space with empty kernel, and a disconnected kernel with a far point.
"""
from __future__ import annotations

from fractions import Fraction

from .sets import SymbolicSet
from .space import GeometricSequence, Interval, IsolatedPoint, Space


def interval_space() -> Space:
    return Space((Interval(Fraction(0), Fraction(1)),))


def interval_points_space() -> Space:
    return Space((Interval(Fraction(0), Fraction(1)),
                  IsolatedPoint(Fraction(2)), IsolatedPoint(Fraction(3))))


def interval_sequence_space() -> Space:
    """[0,1] with the members 1 + 2**-k piling onto the kernel endpoint."""
    return Space((Interval(Fraction(0), Fraction(1)),
                  GeometricSequence(Fraction(1), Fraction(1), open_limit=False)))


def converging_sequence_space() -> Space:
    """{0} with the members 2**-k; the kernel is empty."""
    return Space((IsolatedPoint(Fraction(0)),
                  GeometricSequence(Fraction(0), Fraction(1), open_limit=False)))


def two_intervals_point_space() -> Space:
    return Space((Interval(Fraction(0), Fraction(1)),
                  Interval(Fraction(2), Fraction(3)),
                  IsolatedPoint(Fraction(5))))


CORPUS = {
    "interval": interval_space,
    "interval-points": interval_points_space,
    "interval-sequence": interval_sequence_space,
    "converging-sequence": converging_sequence_space,
    "two-intervals-point": two_intervals_point_space,
}


def gray_pairs(space: Space, levels: int) -> list[SymbolicSet]:
    """Zero sides of the classical reflected-binary subbase of an interval.

    Level n keeps the blocks of width 2**-(n+1) whose index is 0 or 3 mod 4,
    regularized inside the space.  On [0,1] the first two zero sides are
    [0,1/2) and [0,1/4)+(3/4,1].
    """
    (comp,) = space.intervals()
    out = []
    for n in range(levels):
        width = (comp.hi - comp.lo) / 2 ** (n + 1)
        blocks = []
        j = 0
        lo = comp.lo
        while lo < comp.hi:
            if j % 4 in (0, 3):
                blocks.append((lo, False, lo + width, False))
            lo += width
            j += 1
        out.append(SymbolicSet.region(space, blocks).regularization())
    return out
