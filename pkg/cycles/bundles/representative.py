# Kodaira
#
# Copyright © 2021 The Kodaira authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.

import logging
from fractions import Fraction
from math import floor
from typing import NamedTuple, Tuple

from .sequences import PartialSums, _ensure_coprime

logger = logging.getLogger(__name__)


class Segment(NamedTuple):
    """
    A straight segment across one column strip of the fundamental rectangle [0, n] x [0, 1].

    ...

    Attributes
    ----------
    index : int
        position j of the segment along the loop.

    column : int
        the strip [column, column + 1] it crosses.

    start, end : Fraction
        heights of its endpoints on the lift, before reduction modulo 1.
    """

    index: int
    column: int
    start: Fraction
    end: Fraction

    def exact_pieces(self):
        """Pieces of the segment cut at the horizontal edges of the rectangle, heights reduced modulo 1."""

        slope = self.end - self.start
        low, high = sorted((self.start, self.end))
        times = [Fraction(0), Fraction(1)]
        if slope:
            times[1:1] = sorted((level - self.start) / slope for level in range(floor(low) + 1, floor(high) + 1)
                                if low < level < high)

        pieces = []
        for before, after in zip(times, times[1:]):
            lower, upper = self.start + before * slope, self.start + after * slope
            offset = floor(min(lower, upper))
            pieces.append(((self.column + before, lower - offset), (self.column + after, upper - offset)))
        return pieces

    def pieces(self):
        """Polylines of exact_pieces in floating point, as drawn."""
        return [[(float(x), float(y)) for x, y in piece] for piece in self.exact_pieces()]


def _cross(origin, first, second):
    return (first[0] - origin[0]) * (second[1] - origin[1]) - (first[1] - origin[1]) * (second[0] - origin[0])


def _piece_meeting(first, second):
    """Common point of two pieces, or None. Overlapping pieces meet at the middle of the overlap."""

    (p1, p2), (q1, q2) = first, second
    direction = (p2[0] - p1[0], p2[1] - p1[1])
    other = (q2[0] - q1[0], q2[1] - q1[1])
    denominator = direction[0] * other[1] - direction[1] * other[0]

    if denominator:
        t = ((q1[0] - p1[0]) * other[1] - (q1[1] - p1[1]) * other[0]) / denominator
        u = ((q1[0] - p1[0]) * direction[1] - (q1[1] - p1[1]) * direction[0]) / denominator
        if 0 <= t <= 1 and 0 <= u <= 1:
            return p1[0] + t * direction[0], p1[1] + t * direction[1]
        return None

    if _cross(p1, p2, q1):
        return None
    # Pieces always advance in x, so collinear ones overlap along an x interval.
    low, high = max(p1[0], q1[0]), min(p2[0], q2[0])
    if low > high:
        return None
    x = (low + high) / 2
    return x, p1[1] + (x - p1[0]) * direction[1] / direction[0]


def segment_crossings(first, second):
    """Points where two segments of one column strip meet, on the drawn rectangle.

    Pieces are intersected pairwise and heights 0 and 1 are identified, so a meeting on a
    horizontal cut is counted once. Meetings on the vertical arcs are endpoints and are
    left out, except for two segments leaving the same marked point.

    Returns
    -------
    int
    """

    if first.column != second.column:
        return 0

    points = set()
    for piece in first.exact_pieces():
        for other in second.exact_pieces():
            point = _piece_meeting(piece, other)
            if point is not None and first.column < point[0] < first.column + 1:
                points.add((point[0], point[1] % 1))

    if (first.start - second.start) % 1 == 0:
        points.add((Fraction(first.column), first.start % 1))
    return len(points)


class PlanarRepresentative:
    """
    Straight-line representative of the loop of 𝕞(r, 𝕕) on the fundamental rectangle.

    Segment j joins the marked point of height (S_j + 1/2)/r on the vertical arc x = j mod n
    to the marked point of height (S_(j+1) + 1/2)/r on the next arc.

    ...

    Attributes
    ----------
    n : int
        number of columns.

    r : int
        the rank.

    degrees : tuple
        the multidegree.

    sums : tuple
        the partial sums S_0, …, S_(nr).

    segments : list
        n·r instances of Segment.
    """

    def __init__(self, r, degrees):
        partial = PartialSums.of(r, degrees)
        self.n = partial.n
        self.r = r
        self.degrees = partial.degrees
        self.sums = partial.sums
        self.segments = [Segment(j, j % self.n, Fraction(2 * self.sums[j] + 1, 2 * r),
                                 Fraction(2 * self.sums[j + 1] + 1, 2 * r))
                         for j in range(self.n * r)]

    def __len__(self):
        return len(self.segments)

    def pair_crossings(self, first, second):
        """Crossings between segments first and second, which must differ."""

        if first == second:
            return 0
        return segment_crossings(self.segments[first], self.segments[second])

    def crossings(self):
        """Crossings of every pair of segments in a common strip, as (first, second, count)."""

        found = []
        for first in range(len(self.segments)):
            for second in range(first + self.n, len(self.segments), self.n):
                count = self.pair_crossings(first, second)
                if count:
                    found.append((first, second, count))
        return found

    def crossing_count(self):
        return sum(count for _, _, count in self.crossings())

    def marked_points(self):
        """Distinct marked points (column, height) visited by the loop."""
        return sorted({(segment.column, float(segment.start % 1)) for segment in self.segments})

    def to_dict(self):
        return {
            'n': self.n,
            'r': self.r,
            'degrees': list(self.degrees),
            'segments': [[segment.column, float(segment.start), float(segment.end)] for segment in self.segments],
            'crossings': self.crossing_count(),
        }


def geometric_representative(r, degrees):
    """Builds the planar representative of the simple loop with rank r and multidegree 𝕕.

    Raises
    ------
    NotCoprime
        when r and the total degree share a factor.
    """

    degrees = tuple(degrees)
    _ensure_coprime(r, degrees)
    representative = PlanarRepresentative(r, degrees)
    logger.debug('Representative of r=%d, 𝕕=%s has %d segments', r, degrees, len(representative))
    return representative
