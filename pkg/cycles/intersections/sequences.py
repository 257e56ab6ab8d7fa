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
from math import gcd

from cycles.errors import HomotopicInputs
from .report import IntersectionReport, SubsequenceWitness, TripleWitness

logger = logging.getLogger(__name__)


def _lcm(first, second):
    return first * second // gcd(first, second)


def _sign(value):
    return (value > 0) - (value < 0)


def _aligned_witnesses(first, second, x, y, period):
    """Witnesses contributed by the column-aligned pair of indices (x, y)."""

    difference = first[x] - second[y]
    if difference == 0:
        return []

    witnesses = [TripleWitness(x, y, q) for q in range(abs(difference) - 1)]

    # Look for the run difference, 0, …, 0, b of the aligned difference sequence.
    for step in range(1, period + 1):
        following = first[x + step] - second[y + step]
        if following != 0:
            if _sign(following) == _sign(difference):
                witnesses.append(SubsequenceWitness(y - x, x, step - 1, _sign(difference)))
            break

    return witnesses


def intersections_cvb(first, second):
    """Geometric intersection number of two CVb loops given by their sequences.

    Parameters
    ----------
    first, second : LoopMatrix
        primitive, non-homotopic sequences with the same number of columns.

    Returns
    -------
    IntersectionReport
        subsequence witnesses and triple witnesses.
    """

    if first.n != second.n:
        raise ValueError('Sequences have different numbers of columns')
    for matrix in (first, second):
        if not matrix.is_primitive():
            raise ValueError(f'{matrix} is not primitive')
    if first.same_loop(second):
        raise HomotopicInputs(f'{first} and {second} describe the same loop')

    n = first.n
    period = n * _lcm(first.r, second.r)

    witnesses = []
    for x in range(len(first)):
        for y in range(x % n, len(second), n):
            witnesses.extend(_aligned_witnesses(first, second, x, y, period))

    logger.debug('Sequences of ranks %d and %d intersect %d times', first.r, second.r, len(witnesses))
    return IntersectionReport(witnesses)


def self_intersections(matrix):
    """Geometric self-intersection number of a primitive CVb loop.

    The aligned pairs (x, y) and (y, x) describe the same crossing, so only x < y is visited.
    """

    if not matrix.is_primitive():
        raise ValueError(f'{matrix} is not primitive')

    n = matrix.n
    period = len(matrix)

    witnesses = []
    for x in range(len(matrix)):
        for y in range(x + n, len(matrix), n):
            witnesses.extend(_aligned_witnesses(matrix, matrix, x, y, period))

    return IntersectionReport(witnesses)
