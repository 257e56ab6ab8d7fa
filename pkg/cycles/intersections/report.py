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

from typing import NamedTuple


class SubsequenceWitness(NamedTuple):
    """A run a, 0, …, 0, b with a, b of equal sign in the aligned difference of two sequences."""

    shift: int
    start: int
    zero_run: int
    sign: int


class TripleWitness(NamedTuple):
    """One of the |m_x - m'_y| - 1 crossings produced by two aligned entries."""

    x: int
    y: int
    q: int


class CrossingWitness(NamedTuple):
    """
    A crossing of two walks found at vertex positions i and j.

    ...

    Attributes
    ----------
    i : int
        vertex position on the first walk where the common subword starts.

    j : int
        vertex position on the second walk (in the given orientation).

    length : int
        number of letters in the common subword; 0 for a crossing at a single vertex.

    orientation : int
        +1 when the second walk is read forwards, -1 when read backwards.
    """

    i: int
    j: int
    length: int
    orientation: int


class IntersectionReport:
    """
    Geometric intersection count of two loops with one witness per crossing.

    ...

    Attributes
    ----------
    witnesses : list
        SubsequenceWitness, TripleWitness or CrossingWitness records.
    """

    def __init__(self, witnesses=None):
        self.witnesses = list(witnesses or [])

    @property
    def count(self):
        return len(self.witnesses)

    def __len__(self):
        return self.count

    def __repr__(self):
        return f'IntersectionReport(count={self.count})'

    def to_dict(self):
        serialized = []
        for witness in self.witnesses:
            record = {'type': type(witness).__name__}
            record.update(witness._asdict())
            serialized.append(record)
        return {'count': self.count, 'witnesses': serialized}
