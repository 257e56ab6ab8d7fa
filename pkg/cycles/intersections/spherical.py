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

from enum import Enum

from cycles.walks.letters import is_cvb, is_primitive
from cycles.walks.matrices import is_non_separating, matrix_from_walk
from .ribbon import self_intersections_general
from .sequences import self_intersections


class Classification(Enum):
    SPHERICAL = 'Spherical'
    NOT_PRIMITIVE = 'NotPrimitive'
    NOT_SIMPLE = 'NotSimple'
    SEPARATING = 'Separating'


def self_intersection_count(walk):
    """Self-intersections of a primitive walk, read off its sequence when it is in CVb form."""

    if is_cvb(walk):
        return self_intersections(matrix_from_walk(walk)).count
    return self_intersections_general(walk).count


def classify_spherical(walk):
    """Decides whether a loop is simple, non-separating and primitive.

    Parameters
    ----------
    walk : CyclicWalk
        a reduced walk.

    Returns
    -------
    Classification
        SPHERICAL, or the first condition which fails.
    """

    if not is_primitive(walk):
        return Classification.NOT_PRIMITIVE
    if self_intersection_count(walk):
        return Classification.NOT_SIMPLE
    if not is_non_separating(walk, simple=True):
        return Classification.SEPARATING
    return Classification.SPHERICAL
