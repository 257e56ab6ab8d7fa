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

import heapq
import logging

from cycles.errors import NormalizationStuck, NotSpherical
from cycles.intersections.ribbon import crossings
from cycles.intersections.spherical import Classification, classify_spherical
from cycles.walks.letters import pic_walk, vertical_walk, walks_equivalent
from cycles.walks.matrices import homology_class
from .twists import twist_general, twist_power
from .words import PIC, VERT, Generator, TwistWord

logger = logging.getLogger(__name__)

# Upper bound on twist steps of the homology stage.
MAX_STEPS = 10000

# Walks expanded by the search which follows the homology stage.
MAX_EXPANSIONS = 5000


def _oriented(walk):
    """The walk, inverted if needed so that its rank is positive, or its degree when the rank is zero."""

    homology = homology_class(walk)
    if homology.rank < 0 or (homology.rank == 0 and homology.total_degree < 0):
        return walk.inverse()
    return walk


def vertical_crossings(walk):
    """Total number of crossings of the walk with κ_0, …, κ_(n-1)."""

    total = 0
    for column in range(walk.n):
        curve = vertical_walk(walk.n, column)
        if not walks_equivalent(walk, curve):
            total += len(crossings(walk, curve))
    return total


def _untwist_vertically(walk):
    """Vertical twists clearing the multidegree of a rank one walk."""

    walk = _oriented(walk)
    homology = homology_class(walk)
    if homology.rank != 1:
        return walk, []
    steps = [(Generator(VERT, column), -degree) for column, degree in enumerate(homology.multidegree) if degree]
    for generator, power in steps:
        walk = twist_power(walk, generator.curve(walk.n), power)
    return walk, steps


def _descend(walk):
    """Best-first search over single twists until the walk is γ_Pic.

    Walks are expanded by fewest crossings with the vertical loops, then by length. A rank
    one walk crossing every κ_i once is a vertical twist of γ_Pic, so such walks are finished
    by clearing their multidegree.

    Returns
    -------
    list
        (Generator, power) steps carrying the walk to γ_Pic.

    Raises
    ------
    NormalizationStuck
        if γ_Pic is not reached within MAX_EXPANSIONS expansions.
    """

    n = walk.n
    target = pic_walk(n)
    generators = [Generator(PIC)] + [Generator(VERT, column) for column in range(n)]
    curves = [(generator, generator.curve(n)) for generator in generators]

    def key(current):
        return min(current.letters, current.inverse().letters)

    seen = {key(walk)}
    queue = [(vertical_crossings(walk), len(walk), 0, walk, ())]
    pushed = 1
    expansions = 0

    while queue:
        crossing_count, _, _, current, steps = heapq.heappop(queue)
        if walks_equivalent(current, target):
            return list(steps)

        if crossing_count == n:
            untwisted, clearing = _untwist_vertically(current)
            if walks_equivalent(untwisted, target):
                return list(steps) + clearing

        expansions += 1
        if expansions > MAX_EXPANSIONS:
            break

        for generator, curve in curves:
            for power in (1, -1):
                twisted = twist_general(current, curve, power)
                if key(twisted) in seen:
                    continue
                seen.add(key(twisted))
                heapq.heappush(queue, (vertical_crossings(twisted), len(twisted), pushed, twisted,
                                       steps + ((generator, power),)))
                pushed += 1

    raise NormalizationStuck(f'{walk} was not carried to γ_Pic within {MAX_EXPANSIONS} expansions')


def normalize_to_pic(walk):
    """Finds Dehn twists carrying a spherical loop to γ_Pic.

    Runs Euclid on the class (r, d̄) first: vertical twists bring every column degree into
    [0, r) and the total degree below r, then a twist along γ_Pic replaces r by r - d̄. With
    more than one puncture the class (1, 𝟘) does not determine the loop, so the walk reached
    this way is then searched down to ε_0 … ε_(n-1) one twist at a time.

    Parameters
    ----------
    walk : CyclicWalk
        a simple, non-separating, primitive loop.

    Returns
    -------
    TwistWord
        generators whose application carries the walk to ε_0 … ε_(n-1).

    Raises
    ------
    NotSpherical
        if the walk is not spherical.

    NormalizationStuck
        if either stage runs out of steps.
    """

    classification = classify_spherical(walk)
    if classification != Classification.SPHERICAL:
        raise NotSpherical(f'{walk} is not spherical: {classification.value}')

    n = walk.n
    word = TwistWord(n)
    current = walk
    steps = 0

    def apply(generator, power):
        nonlocal current, steps
        current = twist_power(current, generator.curve(n), power)
        word.append(generator, power)
        steps += abs(power)
        if steps > MAX_STEPS:
            raise NormalizationStuck(f'Normalization of {walk} did not terminate after {MAX_STEPS} twists')

    while True:
        current = _oriented(current)
        homology = homology_class(current)
        rank, degrees = homology.rank, homology.multidegree
        if (rank, degrees) == (1, (0,) * n):
            break

        if rank == 0:
            apply(Generator(PIC), -homology.total_degree)
            continue

        for column, degree in enumerate(degrees):
            if degree // rank:
                apply(Generator(VERT, column), -(degree // rank))

        total = homology_class(current).total_degree
        if total // rank:
            apply(Generator(VERT, 0), -(total // rank))

        if homology_class(current) == (1, (0,) * n):
            break
        apply(Generator(PIC), 1)

    if not walks_equivalent(current, pic_walk(n)):
        logger.debug('Class of %r is cleared but the walk is %r, searching', walk, current)
        for generator, power in _descend(current):
            word.append(generator, power)

    logger.debug('Normalized %r with %d generators', walk, len(word))
    return word
