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
from collections import defaultdict

from cycles.errors import NotMinimal
from .complexes import minimize
from .linalg import inv_mod_prime
from .morphisms import cone, hom_basis, random_combination

logger = logging.getLogger(__name__)


def _edges(complex_):
    """One edge per path term of the differential: (source_id, target_id, path, coefficient)."""
    return [(source_id, target_id, path, coefficient)
            for (source_id, target_id), combination in complex_.entries.items()
            for path, coefficient in combination.items()]


def is_band_shaped(complex_):
    """True iff the path terms of the differential form a single cycle through every summand."""

    if not complex_.summands:
        return False

    edges = _edges(complex_)
    valency = defaultdict(int)
    neighbours = defaultdict(set)
    for source_id, target_id, _, _ in edges:
        valency[source_id] += 1
        valency[target_id] += 1
        neighbours[source_id].add(target_id)
        neighbours[target_id].add(source_id)

    if any(valency[summand_id] != 2 for summand_id in complex_.summands):
        return False

    start = next(iter(complex_.summands))
    seen, stack = {start}, [start]
    while stack:
        for neighbour in neighbours[stack.pop()]:
            if neighbour not in seen:
                seen.add(neighbour)
                stack.append(neighbour)
    return len(seen) == len(complex_.summands)


def _traverse(complex_, edges, start, first_edge, lowest):
    """Walks the cycle from start along first_edge, returning its tokens and monodromy."""

    prime = complex_.prime
    tokens = []
    scalar = 1
    current, edge_index = start, first_edge
    used = set()

    for _ in range(len(edges)):
        source_id, target_id, path, coefficient = edges[edge_index]
        used.add(edge_index)
        direction = 1 if current == source_id else -1
        tokens.append((path.label, direction, str(complex_.vertex(current)), complex_.degree(current) - lowest))
        scalar = scalar * (coefficient if direction > 0 else inv_mod_prime(coefficient, prime)) % prime

        current = target_id if direction > 0 else source_id
        following = [index for index, edge in enumerate(edges)
                     if index not in used and current in (edge[0], edge[1])]
        if not following:
            break
        edge_index = following[0]

    return tuple(tokens), scalar


def band_form(complex_):
    """Canonical form of a band shaped complex.

    Parameters
    ----------
    complex_ : ProjectiveComplex
        a minimal band shaped complex.

    Returns
    -------
    tuple
        the least cyclic token word over every start and both directions, with its
        monodromy scalar and the lowest degree.
    """

    if not is_band_shaped(complex_):
        raise ValueError(f'{complex_} is not band shaped')

    edges = _edges(complex_)
    lowest = complex_.degrees()[0]
    best = None
    for start in complex_.summands:
        for index, edge in enumerate(edges):
            if start not in (edge[0], edge[1]):
                continue
            candidate = _traverse(complex_, edges, start, index, lowest)
            if best is None or candidate < best:
                best = candidate

    tokens, scalar = best
    return tokens, scalar, lowest


def same_band_word(first, second):
    """True iff two band shaped complexes agree up to shift and the band scalar."""

    if not (is_band_shaped(first) and is_band_shaped(second)):
        return False
    return band_form(first)[0] == band_form(second)[0]


def is_iso(first, second, seed=0):
    """Decides whether two minimal complexes are isomorphic.

    Parameters
    ----------
    first, second : ProjectiveComplex
        minimal complexes over the same algebra and field.

    seed : int
        seed of the random morphism used when the complexes are not band shaped.

    Returns
    -------
    bool
    """

    for complex_ in (first, second):
        if not complex_.is_minimal():
            raise NotMinimal(f'{complex_} has idempotent entries, minimize it first')

    if first.summand_multiset() != second.summand_multiset():
        return False
    if not first.summands:
        return True

    if is_band_shaped(first) and is_band_shaped(second):
        return band_form(first) == band_form(second)

    basis = hom_basis(first, second, 0)
    if not basis:
        return False
    morphism = random_combination(basis, first.prime, seed)
    remainder = minimize(cone(morphism))
    logger.debug('Cone of a random degree 0 morphism keeps %d summands', len(remainder))
    return not remainder.summands
