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
from typing import NamedTuple

from cycles.errors import ContractibleLoop, NotComposable

logger = logging.getLogger(__name__)

EPS = 'eps'
KAPPA = 'kappa'

# Half-edge slots around every vertex of the ribbon graph, listed counter-clockwise.
# At vertex v_k: tail of eps_k, tail of kappa_(k-1), head of eps_(k-1), head of kappa_(k-1).
EAST, NORTH, WEST, SOUTH = 0, 1, 2, 3


class Letter(NamedTuple):
    """
    A single step of a walk in the ribbon graph of the n-punctured torus.

    ...

    Attributes
    ----------
    kind : str
        either "eps" (horizontal arrow) or "kappa" (vertical loop).

    column : int
        residue modulo n of the arrow index.

    sign : int
        +1 for the arrow itself and -1 for its inverse.
    """

    kind: str
    column: int
    sign: int

    def inverse(self):
        return Letter(self.kind, self.column, -self.sign)

    def sort_key(self):
        return (0 if self.kind == EPS else 1, self.column, -self.sign)

    def __str__(self):
        name = 'ε' if self.kind == EPS else 'κ'
        return f'{name}{self.column}' + ('' if self.sign > 0 else '⁻¹')


def eps(column, sign=1):
    return Letter(EPS, column, sign)


def kappa(column, sign=1):
    return Letter(KAPPA, column, sign)


def validate_letter(letter, n):
    """Ensures a letter is well formed for the given number of punctures."""

    if letter.kind not in (EPS, KAPPA):
        raise ValueError(f'Unknown letter kind "{letter.kind}"')
    if not 0 <= letter.column < n:
        raise ValueError(f'Column {letter.column} outside [0, {n})')
    if letter.sign not in (1, -1):
        raise ValueError(f'Sign {letter.sign} is neither 1 nor -1')


def source(letter, n):
    """Vertex index where the letter starts."""
    if letter.kind == KAPPA:
        return (letter.column + 1) % n
    if letter.sign > 0:
        return letter.column
    return (letter.column + 1) % n


def target(letter, n):
    """Vertex index where the letter ends."""
    return source(letter.inverse(), n)


def start_slot(letter):
    """Half-edge slot through which the letter leaves its source vertex."""
    if letter.kind == EPS:
        return EAST if letter.sign > 0 else WEST
    return NORTH if letter.sign > 0 else SOUTH


def end_slot(letter):
    """Half-edge slot through which the letter enters its target vertex."""
    return start_slot(letter.inverse())


def ensure_composable(letters, n, cyclic=True):
    """Raises NotComposable unless consecutive letters share vertices."""

    count = len(letters)
    pairs = count if cyclic else count - 1
    for index in range(pairs):
        first, second = letters[index], letters[(index + 1) % count]
        if target(first, n) != source(second, n):
            raise NotComposable(f'Letter {first} at position {index} ends at v{target(first, n)} '
                                f'but {second} starts at v{source(second, n)}')


def least_rotation(letters):
    """Rotation of a cyclic word which is lexicographically least under Letter.sort_key."""

    keys = [letter.sort_key() for letter in letters]
    best = 0
    for shift in range(1, len(keys)):
        if keys[shift:] + keys[:shift] < keys[best:] + keys[:best]:
            best = shift
    return tuple(letters[best:]) + tuple(letters[:best])


class CyclicWalk:
    """
    A reduced cyclic word in the letters ε_j, κ_j and their inverses.

    Instances are immutable and stored in their least rotation, so two walks which
    differ by a rotation compare equal.

    ...

    Attributes
    ----------
    n : int
        number of punctures of the torus.

    letters : tuple
        the letters of the walk, starting at the least rotation.
    """

    def __init__(self, n, letters):
        """
        Parameters
        ----------
        n : int
            number of punctures, at least 1.

        letters : iterable of Letter
            a composable, cyclically reduced word.
        """

        if n < 1:
            raise ValueError(f'Number of punctures must be positive, got {n}')

        letters = tuple(Letter(*letter) for letter in letters)
        if not letters:
            raise ContractibleLoop('The walk is empty')
        for letter in letters:
            validate_letter(letter, n)
        ensure_composable(letters, n)

        # Ensure no cancellation is left, including across the seam.
        for index, letter in enumerate(letters):
            if letters[index - 1] == letter.inverse():
                raise ValueError(f'Walk is not reduced at position {index}')

        self.n = n
        self.letters = least_rotation(letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index % len(self.letters)]

    def __eq__(self, other):
        return isinstance(other, CyclicWalk) and self.n == other.n and self.letters == other.letters

    def __hash__(self):
        return hash((self.n, self.letters))

    def __repr__(self):
        return f'CyclicWalk(n={self.n}, {" ".join(str(letter) for letter in self.letters)})'

    def inverse(self):
        """The same loop traversed backwards."""
        return CyclicWalk(self.n, [letter.inverse() for letter in reversed(self.letters)])

    def vertex(self, position):
        """Vertex visited between letters position - 1 and position."""
        return source(self[position], self.n)


def reduce_walk(raw, n):
    """Freely and cyclically reduces a composable word.

    Parameters
    ----------
    raw : list of Letter
        a cyclically composable word, possibly with cancellations.

    n : int
        number of punctures.

    Returns
    -------
    CyclicWalk
        the reduced walk of the same free homotopy class.
    """

    raw = [Letter(*letter) for letter in raw]
    if not raw:
        raise ContractibleLoop('The walk is empty')
    for letter in raw:
        validate_letter(letter, n)
    ensure_composable(raw, n)

    stack = []
    for letter in raw:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)

    # Cancel across the seam.
    start, stop = 0, len(stack)
    while stop - start >= 2 and stack[start] == stack[stop - 1].inverse():
        start += 1
        stop -= 1
    reduced = stack[start:stop]

    if not reduced:
        raise ContractibleLoop('The walk reduces to the empty word')

    logger.debug('Reduced a walk of %d letters to %d letters', len(raw), len(reduced))
    return CyclicWalk(n, reduced)


def walks_equivalent(first, second):
    """True iff the walks agree up to rotation and inversion."""

    if first.n != second.n:
        raise ValueError('Walks live on tori with different numbers of punctures')
    return first == second or first == second.inverse()


def is_primitive(walk):
    """True iff the cyclic word is not a proper power."""

    length = len(walk)
    for period in range(1, length):
        if length % period == 0 and walk.letters[period:] + walk.letters[:period] == walk.letters:
            return False
    return True


def is_cvb(walk):
    """True iff the walk has an ε letter and no inverse ε letter."""

    has_eps = False
    for letter in walk:
        if letter.kind == EPS:
            if letter.sign < 0:
                return False
            has_eps = True
    return has_eps


def pic_walk(n):
    """The walk ε_0 ε_1 … ε_(n-1) of the degree zero line bundles."""
    return CyclicWalk(n, [eps(column) for column in range(n)])


def vertical_walk(n, column):
    """The walk κ_column of the skyscraper sheaves on one component."""
    return CyclicWalk(n, [kappa(column)])


def puncture_walk(n, column):
    """A small loop around the puncture sitting below vertex v_column."""

    left = (column - 1) % n
    return CyclicWalk(n, [eps(left, -1), kappa((column - 2) % n, -1), eps(left), kappa(left)])
