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

"""Intersections of arbitrary walks from the cyclic order of half-edges at the vertices of Γ.

Two loops in minimal position meet either inside a maximal common subword, when they
enter and leave it on different sides, or at a single vertex, when their half-edges
interleave.
"""
import logging
from typing import NamedTuple

from cycles.errors import HomotopicInputs
from cycles.walks.letters import end_slot, source, start_slot, walks_equivalent
from .report import CrossingWitness, IntersectionReport

logger = logging.getLogger(__name__)

SLOTS = 4


class Crossing(NamedTuple):
    """A crossing together with the direction in which the second strand passes the first."""

    i: int
    j: int
    length: int
    orientation: int
    leftward: bool

    def witness(self):
        return CrossingWitness(self.i, self.j, self.length, self.orientation)


def _ccw(slot, reference):
    return (slot - reference) % SLOTS


def _reversed_letters(walk):
    return [letter.inverse() for letter in reversed(walk.letters)]


def _common_length(first, second, i, j, bound):
    length = 0
    while length < bound and first[(i + length) % len(first)] == second[(j + length) % len(second)]:
        length += 1
    return length


def _aligned_crossings(first, second, orientation, n, skip_diagonal=False):
    """Crossings between the words first and second, the latter read in one orientation."""

    size, other_size = len(first), len(second)
    bound = size + other_size
    crossings = []

    for i in range(size):
        for j in range(other_size):
            if skip_diagonal and i == j:
                continue

            before, other_before = first[i - 1], second[j - 1]
            if before == other_before:
                continue
            if source(first[i], n) != source(second[j], n):
                continue

            length = _common_length(first, second, i, j, bound)
            if length >= bound:
                # The two words coincide: parallel copies, not a crossing.
                continue

            if length == 0:
                if orientation < 0:
                    continue
                u, v = end_slot(before), start_slot(first[i])
                u_other, v_other = end_slot(other_before), start_slot(second[j])
                if len({u, v, u_other, v_other}) < SLOTS:
                    continue
                between = [0 < _ccw(slot, u) < _ccw(v, u) for slot in (u_other, v_other)]
                if between[0] == between[1]:
                    continue
                leftward = 0 < _ccw(v_other, v) < _ccw(u, v)
            else:
                common_start = start_slot(first[i])
                left_side = _ccw(end_slot(other_before), common_start) < _ccw(end_slot(before), common_start)

                common_end = end_slot(first[(i + length - 1) % size])
                after, other_after = first[(i + length) % size], second[(j + length) % other_size]
                right_side = _ccw(start_slot(other_after), common_end) > _ccw(start_slot(after), common_end)

                if left_side == right_side:
                    continue
                leftward = right_side

            crossings.append(Crossing(i, j, length, orientation, leftward))

    return crossings


def crossings(first, second):
    """All crossings of two non-homotopic walks.

    Parameters
    ----------
    first, second : CyclicWalk
        reduced walks on the same torus.

    Returns
    -------
    list of Crossing
        one entry per crossing, located on the first walk at vertex position i.
    """

    if first.n != second.n:
        raise ValueError('Walks live on tori with different numbers of punctures')
    if walks_equivalent(first, second):
        raise HomotopicInputs(f'{first} and {second} are homotopic')

    forwards = list(second.letters)
    backwards = _reversed_letters(second)
    found = _aligned_crossings(list(first.letters), forwards, 1, first.n)
    found += _aligned_crossings(list(first.letters), backwards, -1, first.n)
    return found


def self_crossings(walk):
    """Crossings of a walk with itself, each counted once."""

    letters = list(walk.letters)
    size = len(letters)
    found = []

    for crossing in _aligned_crossings(letters, letters, 1, walk.n, skip_diagonal=True):
        if crossing.i < crossing.j:
            found.append(crossing)

    for crossing in _aligned_crossings(letters, _reversed_letters(walk), -1, walk.n):
        # The other strand of the same crossing starts at the mirrored alignment.
        partner = ((size - crossing.j - crossing.length) % size, (size - crossing.i - crossing.length) % size)
        if (crossing.i, crossing.j) < partner:
            found.append(crossing)

    return found


def intersections_general(first, second):
    """Geometric intersection number of two non-homotopic walks.

    Parameters
    ----------
    first, second : CyclicWalk
        reduced walks on the same torus.

    Returns
    -------
    IntersectionReport
        one CrossingWitness per crossing.
    """

    found = crossings(first, second)
    logger.debug('Walks of lengths %d and %d cross %d times', len(first), len(second), len(found))
    return IntersectionReport([crossing.witness() for crossing in found])


def self_intersections_general(walk):
    """Geometric self-intersection number of a primitive walk."""
    return IntersectionReport([crossing.witness() for crossing in self_crossings(walk)])
