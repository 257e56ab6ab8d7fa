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
from typing import NamedTuple, Tuple

logger = logging.getLogger(__name__)

BOTTOM = 'bottom'
MIDDLE = 'middle'
TOP = 'top'


class Vertex(NamedTuple):
    """A vertex of the quiver Q(n): one of bottom_i, middle_i, top_i."""

    level: str
    index: int

    def __str__(self):
        return f'{self.level}{self.index}'


class Arrow(NamedTuple):
    name: str
    index: int
    source: Vertex
    target: Vertex

    def __str__(self):
        return f'{self.name}{self.index}'


class Path(NamedTuple):
    """
    A nonzero path of the gentle algebra, read in the order its arrows are travelled.

    ...

    Attributes
    ----------
    source : Vertex
        where the path starts.

    target : Vertex
        where the path ends.

    arrows : tuple
        the arrows in travel order; empty for the idempotent of source.
    """

    source: Vertex
    target: Vertex
    arrows: Tuple[Arrow, ...]

    def is_idempotent(self):
        return not self.arrows

    @property
    def label(self):
        """Name in composition order, e.g. "d0a0" for a_0 followed by d_0."""
        if not self.arrows:
            return f'e({self.source})'
        return ''.join(str(arrow) for arrow in reversed(self.arrows))


class GentleAlgebra:
    """
    The algebra Λ_n: the path algebra of Q(n) modulo the relations b_i a_i = 0 = d_i c_i.

    Arrows a_i, c_i run from bottom_i to middle_i, d_i from middle_i to top_i and
    b_i from middle_i to top_(i-1). The composites d_i a_i and b_i c_i survive.

    ...

    Attributes
    ----------
    n : int
        number of components of the cycle.

    vertices : list
        the 3n vertices.

    arrows : dict
        arrows referenced by their label, e.g. "a0".

    basis : list
        every nonzero path, idempotents included.
    """

    # Consecutive arrows (first, then second) whose composite vanishes.
    zero_relations = {('a', 'b'), ('c', 'd')}

    def __init__(self, n):
        """
        Parameters
        ----------
        n : int
            number of components, at least 1.
        """

        if n < 1:
            raise ValueError(f'The cycle needs at least one component, got {n}')

        self.n = n
        self.vertices = [Vertex(level, index) for index in range(n) for level in (BOTTOM, MIDDLE, TOP)]
        self.arrows = {}
        for index in range(n):
            bottom, middle = Vertex(BOTTOM, index), Vertex(MIDDLE, index)
            self.__add_arrow('a', index, bottom, middle)
            self.__add_arrow('c', index, bottom, middle)
            self.__add_arrow('d', index, middle, Vertex(TOP, index))
            self.__add_arrow('b', index, middle, Vertex(TOP, (index - 1) % n))

        self.basis = self.__enumerate_paths()
        self.__paths_between = {}
        for path in self.basis:
            self.__paths_between.setdefault((path.source, path.target), []).append(path)

    def __add_arrow(self, name, index, source, target):
        self.arrows[f'{name}{index}'] = Arrow(name, index, source, target)

    def __vanishes(self, arrows):
        for first, second in zip(arrows, arrows[1:]):
            if first.index == second.index and (first.name, second.name) in self.zero_relations:
                return True
        return False

    def __enumerate_paths(self):
        """Depth-first enumeration of all nonzero paths, starting from every vertex."""

        found = []
        stack = [Path(vertex, vertex, ()) for vertex in self.vertices]
        while stack:
            path = stack.pop()
            found.append(path)
            for arrow in self.arrows.values():
                if arrow.source != path.target:
                    continue
                arrows = path.arrows + (arrow,)
                if not self.__vanishes(arrows):
                    stack.append(Path(path.source, arrow.target, arrows))

        found.sort(key=lambda path: (len(path.arrows), path.label))
        logger.debug('Λ_%d has %d basis paths', self.n, len(found))
        return found

    def vertex(self, level, index):
        return Vertex(level, index % self.n)

    def idempotent(self, vertex):
        return Path(vertex, vertex, ())

    def path(self, *labels):
        """The path travelling the named arrows in order, e.g. path("a0", "d0")."""

        arrows = tuple(self.arrows[label] for label in labels)
        for first, second in zip(arrows, arrows[1:]):
            if first.target != second.source:
                raise ValueError(f'Arrows {first} and {second} are not composable')
        if self.__vanishes(arrows):
            raise ValueError(f'The path {" then ".join(labels)} vanishes in Λ_{self.n}')
        return Path(arrows[0].source, arrows[-1].target, arrows)

    def paths_between(self, source, target):
        return self.__paths_between.get((source, target), [])

    def compose(self, first, second):
        """The path first followed by second, or None when it vanishes."""

        if first.target != second.source:
            return None
        arrows = first.arrows + second.arrows
        if self.__vanishes(arrows):
            return None
        return Path(first.source, second.target, arrows)


def dim_algebra(n):
    """Dimension of Λ_n, counted by enumerating its nonzero paths."""
    return len(GentleAlgebra(n).basis)
