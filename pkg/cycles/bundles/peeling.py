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

from cycles.errors import NotPeelable
from cycles.homotopy.bands import is_iso
from cycles.homotopy.complexes import build_band_complex, build_bundle_complex
from cycles.homotopy.morphisms import cone, hom_basis, random_combination
from cycles.walks.matrices import LoopMatrix

logger = logging.getLogger(__name__)


def extension_peel(matrix):
    """Splits a line bundle off a sequence of rank at least two.

    With ℓ_0 = max(m_0, m_n) + 1 and ℓ_j = m_j otherwise, the remaining sequence is
    m_0 - ℓ_0 + m_n, m_(n+1), …, m_(nr-1).

    Parameters
    ----------
    matrix : LoopMatrix
        a sequence of rank r >= 2.

    Returns
    -------
    tuple
        the degree vector ℓ of the line bundle and the sequence of rank r - 1.
    """

    if matrix.r < 2:
        raise NotPeelable(f'{matrix} has rank {matrix.r}, nothing to peel')

    n = matrix.n
    line = [max(matrix[0], matrix[n]) + 1] + [matrix[j] for j in range(1, n)]
    remaining = [matrix[0] - line[0] + matrix[n]] + list(matrix.entries[n + 1:])

    logger.debug('Peeled %s off %r', line, matrix)
    return tuple(line), LoopMatrix(n, matrix.r - 1, remaining)


def peel_all(matrix):
    """Iterates extension_peel down to rank one.

    Returns
    -------
    list of tuple
        r degree vectors whose sum is the multidegree of the input.
    """

    lines = []
    while matrix.r > 1:
        line, matrix = extension_peel(matrix)
        lines.append(line)
    lines.append(matrix.multidegree)
    return lines


class ExtensionCone(NamedTuple):
    """The extension morphism P(ℓ) -> P(𝕞), its minimized cone and the band scalar of the cone."""

    morphism: object
    cone: object
    lam: int


def extension_cone(algebra, matrix, prime, lam=1):
    """Finds the extension morphism of the peeled line bundle into a band and checks its cone.

    The morphism is the degree 0 map P(ℓ) -> P(𝕞), looked for with both complexes in the
    grading of their bundles and then in the grading of build_band_complex. A generic
    combination of the Hom basis is tried first, then every basis element. The cone must be
    isomorphic to the band of the remaining sequence with scalar λ or -λ, once both are moved
    to a common lowest degree; the sign depends on how the cone was minimized.

    Parameters
    ----------
    algebra : GentleAlgebra
        Λ_n for the sequence.

    matrix : LoopMatrix
        a primitive sequence of rank r >= 2.

    prime : int
        characteristic of the ground field.

    lam : int
        band scalar of the sequence.

    Returns
    -------
    ExtensionCone or None
        None when no degree 0 morphism has the expected cone.
    """

    line, remaining = extension_peel(matrix)
    expected = [(scalar % prime, build_bundle_complex(algebra, remaining, scalar, prime)) for scalar in (lam, -lam)]

    for build in (build_bundle_complex, build_band_complex):
        line_complex = build(algebra, LoopMatrix(matrix.n, 1, line), 1, prime)
        basis = hom_basis(line_complex, build(algebra, matrix, lam, prime), 0)
        if not basis:
            logger.debug('No degree 0 morphism from %s into %r under %s', line, matrix, build.__name__)
            continue

        for morphism in [random_combination(basis, prime)] + basis:
            result = cone(morphism)
            if not result.summands:
                continue
            for scalar, candidate in expected:
                candidate = candidate.regrade(min(result.degrees()) - min(candidate.degrees()))
                if is_iso(result, candidate):
                    return ExtensionCone(morphism, result, scalar)

    logger.debug('No extension morphism of %r has the expected cone', matrix)
    return None
