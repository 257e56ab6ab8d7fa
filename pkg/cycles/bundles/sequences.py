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
from itertools import permutations, product
from math import gcd
from typing import NamedTuple, Tuple

from cycles import settings
from cycles.errors import NotCoprime, SearchTooLarge
from cycles.walks.matrices import LoopMatrix

logger = logging.getLogger(__name__)

COLUMN = 'column'
ALL = 'all'
LITERAL = 'literal'

# Accepted readings of the pattern and column gap conditions.
T_RANGES = [COLUMN, ALL]
COND2_MODES = [COLUMN, LITERAL]


class PartialSums(NamedTuple):
    """
    Partial sums S_0 = 0, S_(i+1) = S_i + 𝕕(i mod n) of a degree vector over r rows.

    ...

    Attributes
    ----------
    r : int
        the rank.

    degrees : tuple
        the multidegree 𝕕.

    sums : tuple
        S_0, …, S_(nr); the last one equals r times the total degree.
    """

    r: int
    degrees: Tuple[int, ...]
    sums: Tuple[int, ...]

    @classmethod
    def of(cls, r, degrees):
        degrees = tuple(int(degree) for degree in degrees)
        sums = [0]
        for index in range(len(degrees) * r):
            sums.append(sums[-1] + degrees[index % len(degrees)])
        return cls(r, degrees, tuple(sums))

    @property
    def n(self):
        return len(self.degrees)

    @property
    def total_degree(self):
        return sum(self.degrees)


def _ensure_coprime(r, degrees):
    if r < 1:
        raise ValueError(f'Rank must be positive, got {r}')
    if not degrees:
        raise ValueError('The degree vector is empty')
    if gcd(r, sum(degrees)) != 1:
        raise NotCoprime(f'Rank {r} and total degree {sum(degrees)} are not coprime')


def canonical_sequence(r, degrees):
    """The cyclic sequence 𝕞(r, 𝕕) of the simple bundle of rank r and multidegree 𝕕.

    Entry x is the signed number of multiples of r between S_x and S_(x+1).

    Parameters
    ----------
    r : int
        the rank.

    degrees : sequence of int
        the multidegree, one entry per component.

    Returns
    -------
    LoopMatrix
        r rows and n columns; its column sums reproduce 𝕕.
    """

    degrees = tuple(degrees)
    _ensure_coprime(r, degrees)
    sums = PartialSums.of(r, degrees).sums

    # Floor division counts multiples of r in (S_x, S_(x+1)], negated for a descending step.
    entries = [sums[x + 1] // r - sums[x] // r for x in range(len(sums) - 1)]
    return LoopMatrix(len(degrees), r, entries)


class SimplicityReport:
    """
    Outcome of the three simplicity conditions on a sequence.

    ...

    Attributes
    ----------
    coprime_ok : bool
        rank and total degree are coprime.

    column_gap_ok : bool
        entries of a column differ by at most one.

    pattern_ok : bool
        no shifted difference contains a run 1, 0, …, 0, 1 or -1, 0, …, 0, -1.

    witnesses : dict
        one witness per failed condition.
    """

    def __init__(self, coprime_ok, column_gap_ok, pattern_ok, witnesses=None):
        self.coprime_ok = coprime_ok
        self.column_gap_ok = column_gap_ok
        self.pattern_ok = pattern_ok
        self.witnesses = dict(witnesses or {})

    @property
    def passed(self):
        return self.coprime_ok and self.column_gap_ok and self.pattern_ok

    def __repr__(self):
        return (f'SimplicityReport(coprime_ok={self.coprime_ok}, column_gap_ok={self.column_gap_ok}, '
                f'pattern_ok={self.pattern_ok})')

    def to_dict(self):
        return {
            'simple': self.passed,
            'coprime_ok': self.coprime_ok,
            'column_gap_ok': self.column_gap_ok,
            'pattern_ok': self.pattern_ok,
            'witnesses': self.witnesses,
        }


def _column_gap_witness(matrix, cond2):
    if cond2 == LITERAL:
        groups = [list(matrix.entries)]
    else:
        groups = [matrix.column(index) for index in range(matrix.n)]
    for index, group in enumerate(groups):
        if max(group) - min(group) > 1:
            return {'column': None if cond2 == LITERAL else index, 'max': max(group), 'min': min(group)}
    return None


def shift_range(matrix, t_range):
    """The shifts t of the sequence examined by the pattern condition."""

    length = len(matrix)
    if t_range == COLUMN:
        return range(matrix.n, length - matrix.n + 1, matrix.n)
    if t_range == ALL:
        return range(1, length)
    raise ValueError(f'Unknown shift range "{t_range}"')


def _pattern_witness(matrix, t_range):
    length = len(matrix)
    for shift in shift_range(matrix, t_range):
        difference = [matrix[x] - matrix[x + shift] for x in range(length)]
        nonzero = [x for x in range(length) if difference[x]]
        if len(nonzero) < 2:
            continue
        for position, x in enumerate(nonzero):
            following = nonzero[(position + 1) % len(nonzero)]
            if difference[x] == difference[following] and abs(difference[x]) == 1:
                return {'t': shift, 'position': x}
    return None


def bdg_check(matrix, t_range=COLUMN, cond2=COLUMN):
    """Runs the three simplicity conditions on a sequence.

    Parameters
    ----------
    matrix : LoopMatrix
        any sequence.

    t_range : str
        "column" examines shifts by whole rows in [n, nr - n], "all" every shift in [1, nr - 1].

    cond2 : str
        "column" compares entries of the same column, "literal" compares all entries.

    Returns
    -------
    SimplicityReport
    """

    if cond2 not in (COLUMN, LITERAL):
        raise ValueError(f'Unknown condition (2) mode "{cond2}"')

    witnesses = {}
    coprime_ok = matrix.is_coprime()
    if not coprime_ok:
        witnesses['coprime'] = {'r': matrix.r, 'degree': matrix.total_degree}

    gap = _column_gap_witness(matrix, cond2)
    if gap is not None:
        witnesses['column_gap'] = gap

    pattern = _pattern_witness(matrix, t_range)
    if pattern is not None:
        witnesses['pattern'] = pattern

    return SimplicityReport(coprime_ok, gap is None, pattern is None, witnesses)


def degree_multiset(r, degree):
    """The r entries of a column of total degree d in a simple sequence, in ascending order."""

    if r < 1:
        raise ValueError(f'Rank must be positive, got {r}')
    quotient = degree // r
    remainder = degree - r * quotient
    return [quotient] * (r - remainder) + [quotient + 1] * remainder


def normalize_degrees(r, degrees):
    """Splits 𝕕 into residues in [0, r) and the per-entry vertical twists that restore it.

    Returns
    -------
    tuple
        the residues and, per column, the amount added to every entry of that column.
    """

    residues = tuple(degree % r for degree in degrees)
    twists = tuple(degree // r for degree in degrees)
    return residues, twists


def _column_arrangements(r, degree):
    return sorted(set(permutations(degree_multiset(r, degree))))


def enumerate_simple_candidates(n, r, degrees, t_range=COLUMN, cond2=COLUMN):
    """All sequences with the column contents of a simple bundle which pass the simplicity conditions.

    The search runs on the residues of 𝕕 modulo r and the vertical twists are added back
    to the survivors.

    Parameters
    ----------
    n : int
        number of columns.

    r : int
        the rank.

    degrees : sequence of int
        the multidegree.

    Returns
    -------
    list of LoopMatrix
        one canonical representative per class under row rotation, sorted by entries.
    """

    degrees = tuple(degrees)
    if len(degrees) != n:
        raise ValueError(f'Expected {n} degrees, got {len(degrees)}')
    if n > settings.N_MAX or r > settings.R_MAX:
        raise SearchTooLarge(f'Search for n={n}, r={r} exceeds n <= {settings.N_MAX}, r <= {settings.R_MAX}')
    _ensure_coprime(r, degrees)

    residues, twists = normalize_degrees(r, degrees)
    arrangements = [_column_arrangements(r, degree) for degree in residues]

    classes = set()
    examined = 0
    for columns in product(*arrangements):
        examined += 1
        entries = [columns[column][row] + twists[column] for row in range(r) for column in range(n)]
        candidate = LoopMatrix(n, r, entries)
        if candidate.is_primitive() and bdg_check(candidate, t_range, cond2).passed:
            classes.add(candidate.canonical())

    logger.debug('Examined %d arrangements for r=%d, 𝕕=%s, %d classes survive', examined, r, degrees, len(classes))
    return sorted(classes, key=lambda matrix: matrix.entries)
