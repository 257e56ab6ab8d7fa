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
from typing import NamedTuple, Tuple

from cycles.errors import NotMonotone, NotSimple
from .letters import EPS, KAPPA, CyclicWalk, eps, is_cvb, kappa

logger = logging.getLogger(__name__)


class HomologyClass(NamedTuple):
    """
    Homology of a loop on the n-punctured torus.

    ...

    Attributes
    ----------
    rank : int
        net number of horizontal turns (signed ε count divided by n).

    multidegree : tuple
        signed number of κ_i letters for every column i.
    """

    rank: int
    multidegree: Tuple[int, ...]

    @property
    def total_degree(self):
        return sum(self.multidegree)

    def closed(self):
        """The image in the homology of the closed torus."""
        return (self.rank, self.total_degree)


class LoopMatrix:
    """
    A cyclic integer sequence of length n·r read as a matrix with r rows and n columns.

    Entry x belongs to column x mod n and row x // n. Two matrices which differ by a
    rotation of their rows describe the same loop; equality here is entry-wise, use
    `canonical` or `same_loop` to compare loops.

    ...

    Attributes
    ----------
    n : int
        number of columns.

    r : int
        number of rows (the rank).

    entries : tuple
        the sequence, row-major.
    """

    def __init__(self, n, r, entries):
        """
        Parameters
        ----------
        n : int
            number of columns, at least 1.

        r : int
            number of rows, at least 1.

        entries : iterable of int
            exactly n·r integers.
        """

        entries = tuple(int(entry) for entry in entries)
        if n < 1 or r < 1:
            raise ValueError(f'Matrix dimensions must be positive, got n={n}, r={r}')
        if len(entries) != n * r:
            raise ValueError(f'Expected {n * r} entries for n={n}, r={r}, got {len(entries)}')

        self.n = n
        self.r = r
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index % len(self.entries)]

    def __eq__(self, other):
        return isinstance(other, LoopMatrix) and (self.n, self.r, self.entries) == (other.n, other.r, other.entries)

    def __hash__(self):
        return hash((self.n, self.r, self.entries))

    def __repr__(self):
        return f'LoopMatrix(n={self.n}, r={self.r}, entries={list(self.entries)})'

    @property
    def rows(self):
        return [list(self.entries[row * self.n:(row + 1) * self.n]) for row in range(self.r)]

    def column(self, index):
        return [self.entries[row * self.n + index] for row in range(self.r)]

    @property
    def multidegree(self):
        return tuple(sum(self.column(index)) for index in range(self.n))

    @property
    def total_degree(self):
        return sum(self.entries)

    def is_coprime(self):
        return gcd(self.r, self.total_degree) == 1

    def rotate(self, rows):
        """Shifts the sequence by a whole number of rows."""
        shift = (rows * self.n) % len(self.entries)
        return LoopMatrix(self.n, self.r, self.entries[shift:] + self.entries[:shift])

    def canonical(self):
        """Least row rotation, a representative of the loop."""
        return min((self.rotate(row) for row in range(self.r)), key=lambda matrix: matrix.entries)

    def same_loop(self, other):
        return self.n == other.n and self.r == other.r and self.canonical() == other.canonical()

    def is_primitive(self):
        """True iff the sequence has no period n·d for a proper divisor d of r."""
        for rows in range(1, self.r):
            if self.r % rows == 0 and self.rotate(rows).entries == self.entries:
                return False
        return True


def matrix_from_walk(walk):
    """Reads the κ exponents between consecutive ε letters of a CVb walk.

    Parameters
    ----------
    walk : CyclicWalk
        a walk without inverse ε letters.

    Returns
    -------
    LoopMatrix
        the sequence, starting after an ε_0 letter.
    """

    if not is_cvb(walk):
        raise NotMonotone(f'{walk} is not a CVb walk')

    letters = list(walk.letters)
    start = next(index for index, letter in enumerate(letters) if letter.kind == EPS and letter.column == 0)
    letters = letters[start:] + letters[:start]

    entries = []
    for letter in letters:
        if letter.kind == EPS:
            entries.append(0)
        else:
            entries[-1] += letter.sign

    n = walk.n
    if len(entries) % n:
        raise NotMonotone(f'{walk} has {len(entries)} ε letters, not a multiple of {n}')
    return LoopMatrix(n, len(entries) // n, entries)


def walk_from_matrix(matrix):
    """The walk ε_0 κ_0^(m_0) ε_1 κ_1^(m_1) … of a sequence."""

    letters = []
    for index, entry in enumerate(matrix.entries):
        column = index % matrix.n
        letters.append(eps(column))
        letters.extend([kappa(column, 1 if entry > 0 else -1)] * abs(entry))
    return CyclicWalk(matrix.n, letters)


def homology_class(walk):
    """Rank and multidegree of a walk.

    Parameters
    ----------
    walk : CyclicWalk
        any reduced walk.

    Returns
    -------
    HomologyClass
        the signed ε count divided by n and the signed κ count per column.
    """

    horizontal = 0
    multidegree = [0] * walk.n
    for letter in walk:
        if letter.kind == EPS:
            horizontal += letter.sign
        elif letter.kind == KAPPA:
            multidegree[letter.column] += letter.sign

    # A closed walk returns to its starting vertex.
    assert horizontal % walk.n == 0
    return HomologyClass(horizontal // walk.n, tuple(multidegree))


def is_non_separating(walk, simple):
    """Decides whether a simple loop is non-separating.

    A separating simple loop bounds a genus zero subsurface and so vanishes in the
    homology of the closed torus.

    Parameters
    ----------
    walk : CyclicWalk
        the loop.

    simple : bool
        whether the loop is known to be simple.
    """

    if not simple:
        raise NotSimple(f'{walk} is not known to be simple')
    return homology_class(walk).closed() != (0, 0)


def contract(matrix, column):
    """Merges column q with column q + 1, forgetting the puncture between them.

    Parameters
    ----------
    matrix : LoopMatrix
        a sequence with at least two columns.

    column : int
        index q of the column receiving the sum.

    Returns
    -------
    LoopMatrix
        a sequence with n - 1 columns and the same rank.
    """

    n = matrix.n
    if n < 2:
        raise ValueError('Contraction needs at least two columns')
    if not 0 <= column < n:
        raise ValueError(f'Column {column} outside [0, {n})')

    entries = list(matrix.entries)
    if column == n - 1:
        # Column n - 1 is followed by column 0 of the next row.
        entries = entries[1:] + entries[:1]
        column = n - 2

    contracted = []
    for row in range(matrix.r):
        values = entries[row * n:(row + 1) * n]
        merged = values[:column] + [values[column] + values[column + 1]] + values[column + 2:]
        contracted.extend(merged)

    logger.debug('Contracted column %d of %r', column, matrix)
    return LoopMatrix(n - 1, matrix.r, contracted)
