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

from typing import NamedTuple, Optional

from cycles.walks.letters import pic_walk, vertical_walk

PIC = 'pic'
VERT = 'vert'


class Generator(NamedTuple):
    """A Dehn twist generator: the twist along γ_Pic or along the vertical loop κ_column."""

    kind: str
    column: Optional[int] = None

    def __str__(self):
        return PIC if self.kind == PIC else f'{VERT}:{self.column}'

    def curve(self, n):
        """The walk of the twisting curve on the n-punctured torus."""
        if self.kind == PIC:
            return pic_walk(n)
        return vertical_walk(n, self.column)


def parse_generator(text, n):
    """Reads "pic" or "vert:i" into a Generator with i in [0, n)."""

    text = text.strip().lower()
    if text == PIC:
        return Generator(PIC)

    kind, _, column = text.partition(':')
    if kind != VERT or not column:
        raise ValueError(f'Unknown twist generator "{text}", expected "pic" or "vert:i"')
    try:
        column = int(column)
    except ValueError:
        raise ValueError(f'Column of generator "{text}" is not an integer')
    if not 0 <= column < n:
        raise ValueError(f'Column {column} outside [0, {n})')
    return Generator(VERT, column)


class TwistWord:
    """
    An ordered product of Dehn twist generators, applied left to right.

    ...

    Attributes
    ----------
    n : int
        number of punctures of the torus.

    steps : list
        pairs (Generator, power) with nonzero powers; consecutive equal generators are merged.
    """

    def __init__(self, n, steps=None):
        self.n = n
        self.steps = []
        for generator, power in steps or []:
            self.append(generator, power)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other):
        return isinstance(other, TwistWord) and self.n == other.n and self.steps == other.steps

    def __repr__(self):
        return f'TwistWord(n={self.n}, {self.steps})'

    def append(self, generator, power):
        if generator.kind == VERT and not 0 <= generator.column < self.n:
            raise ValueError(f'Column {generator.column} outside [0, {self.n})')
        if power == 0:
            return
        if self.steps and self.steps[-1][0] == generator:
            merged = self.steps[-1][1] + power
            self.steps.pop()
            if merged:
                self.steps.append((generator, merged))
        else:
            self.steps.append((generator, power))

    def to_list(self):
        return [{'generator': str(generator), 'power': power} for generator, power in self.steps]
