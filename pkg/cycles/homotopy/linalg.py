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

"""Exact linear algebra over the prime field F_p on dense numpy integer arrays."""
import logging

import numpy as np

logger = logging.getLogger(__name__)


def inv_mod_prime(value, prime):
    value = int(value) % prime
    if value == 0:
        raise ZeroDivisionError('0 has no inverse')
    return pow(value, prime - 2, prime)


def row_reduce(matrix, prime):
    """Reduced row echelon form modulo a prime.

    Parameters
    ----------
    matrix : array_like
        an integer matrix.

    prime : int
        the field characteristic, below 2**31 so that products fit in int64.

    Returns
    -------
    tuple
        the reduced matrix and the list of pivot columns.
    """

    reduced = np.array(matrix, dtype=np.int64) % prime
    if reduced.ndim != 2:
        raise ValueError('Expected a two dimensional matrix')

    rows, columns = reduced.shape
    pivots = []
    row = 0
    for column in range(columns):
        if row == rows:
            break
        candidates = np.nonzero(reduced[row:, column])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            reduced[[row, pivot]] = reduced[[pivot, row]]

        reduced[row] = (reduced[row] * inv_mod_prime(reduced[row, column], prime)) % prime

        # Clear the pivot column everywhere else.
        others = np.nonzero(reduced[:, column])[0]
        others = others[others != row]
        if others.size:
            factors = reduced[others, column].reshape(-1, 1)
            reduced[others] = (reduced[others] - factors * reduced[row]) % prime

        pivots.append(column)
        row += 1

    return reduced, pivots


def rank_mod_prime(matrix, prime):
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    return len(row_reduce(matrix, prime)[1])


def nullspace_mod_prime(matrix, prime):
    """Basis of the kernel of a matrix modulo a prime, one vector per free column."""

    matrix = np.asarray(matrix, dtype=np.int64)
    columns = matrix.shape[1]
    if matrix.shape[0] == 0:
        return [vector for vector in np.eye(columns, dtype=np.int64)]

    reduced, pivots = row_reduce(matrix, prime)
    free = [column for column in range(columns) if column not in set(pivots)]

    basis = []
    for column in free:
        vector = np.zeros(columns, dtype=np.int64)
        vector[column] = 1
        for row, pivot in enumerate(pivots):
            vector[pivot] = (-reduced[row, column]) % prime
        basis.append(vector)
    return basis


def extend_independent(spanning, candidates, prime):
    """Picks the candidates which are independent modulo the span of the given vectors.

    Parameters
    ----------
    spanning : list of numpy.ndarray
        vectors whose span is quotiented out.

    candidates : list of numpy.ndarray
        vectors tried in order.

    prime : int
        the field characteristic.

    Returns
    -------
    list of numpy.ndarray
        the chosen candidates.
    """

    chosen = []
    current = list(spanning)
    rank = rank_mod_prime(np.array(current), prime) if current else 0
    for vector in candidates:
        trial = rank_mod_prime(np.array(current + [vector]), prime)
        if trial > rank:
            current.append(vector)
            chosen.append(vector)
            rank = trial
    return chosen
