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

"""Dehn twists acting on sequences and on walks."""
import logging

from cycles.errors import NotSimpleTwistCurve
from cycles.intersections.ribbon import crossings, self_crossings
from cycles.walks.letters import reduce_walk, walks_equivalent
from cycles.walks.matrices import LoopMatrix

logger = logging.getLogger(__name__)


def twist_vertical(matrix, column, power):
    """Twists a sequence along κ_column: every entry of that column grows by power.

    Parameters
    ----------
    matrix : LoopMatrix
        any sequence.

    column : int
        the column i in [0, n).

    power : int
        the exponent l; the multidegree at column i grows by l·r.

    Returns
    -------
    LoopMatrix
    """

    if not 0 <= column < matrix.n:
        raise ValueError(f'Column {column} outside [0, {matrix.n})')
    entries = [entry + power if index % matrix.n == column else entry for index, entry in enumerate(matrix.entries)]
    return LoopMatrix(matrix.n, matrix.r, entries)


def _loop_from(letters, start, forwards):
    """The closed loop read from position start, forwards or backwards."""

    size = len(letters)
    if forwards:
        return [letters[(start + step) % size] for step in range(size)]
    return [letters[(start - 1 - step) % size].inverse() for step in range(size)]


def twist_general(walk, curve, power):
    """Dehn twist of a walk along a simple curve.

    A copy of the curve is spliced in at every crossing, turning left for power +1 and
    right for power -1, and the result is reduced.

    Parameters
    ----------
    walk : CyclicWalk
        the loop being twisted.

    curve : CyclicWalk
        a simple loop.

    power : int
        +1 or -1.

    Returns
    -------
    CyclicWalk
        the reduced twisted walk.
    """

    if power not in (1, -1):
        raise ValueError(f'Walk twists take power 1 or -1, got {power}')
    if self_crossings(curve):
        raise NotSimpleTwistCurve(f'{curve} is not simple')
    if walks_equivalent(walk, curve):
        return walk

    found = crossings(walk, curve)
    if not found:
        return walk

    forwards_letters = list(curve.letters)
    backwards_letters = [letter.inverse() for letter in reversed(curve.letters)]

    insertions = {}
    for crossing in sorted(found, key=lambda crossing: (crossing.i, crossing.orientation, crossing.j)):
        letters = forwards_letters if crossing.orientation > 0 else backwards_letters
        forwards = crossing.leftward == (power > 0)
        insertions.setdefault(crossing.i, []).extend(_loop_from(letters, crossing.j, forwards))

    spliced = []
    for position, letter in enumerate(walk.letters):
        spliced.extend(insertions.get(position, []))
        spliced.append(letter)

    twisted = reduce_walk(spliced, walk.n)
    logger.debug('Twisting %r along %r with power %d crossed %d times', walk, curve, power, len(found))
    return twisted


def twist_power(walk, curve, power):
    """Iterates twist_general |power| times."""

    step = 1 if power > 0 else -1
    for _ in range(abs(power)):
        walk = twist_general(walk, curve, step)
    return walk


def apply_word(walk, word):
    """Applies a TwistWord to a walk, generator by generator."""

    for generator, power in word:
        walk = twist_power(walk, generator.curve(walk.n), power)
    return walk
