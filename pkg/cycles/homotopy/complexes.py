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
from collections import Counter

from cycles.errors import UnsupportedLoop
from cycles.walks.letters import KAPPA, is_cvb
from cycles.walks.matrices import LoopMatrix, matrix_from_walk
from .algebra import BOTTOM, MIDDLE, TOP
from .linalg import inv_mod_prime

logger = logging.getLogger(__name__)


def add_combination(target, combination, factor, prime):
    """Adds factor times a path combination into target, dropping vanishing coefficients."""

    for path, coefficient in combination.items():
        value = (target.get(path, 0) + factor * coefficient) % prime
        if value:
            target[path] = value
        else:
            target.pop(path, None)
    return target


def compose_combinations(algebra, first, second, prime):
    """The combination first followed by second, expanded bilinearly over the path basis."""

    composite = {}
    for left, left_coefficient in first.items():
        for right, right_coefficient in second.items():
            path = algebra.compose(left, right)
            if path is not None:
                add_combination(composite, {path: 1}, left_coefficient * right_coefficient, prime)
    return composite


class ProjectiveComplex:
    """
    A bounded complex of indecomposable projective Λ_n-modules.

    Summands are referenced by hashable ids. The differential entry from summand s to
    summand t raises the degree by one and is a combination of paths from vertex(s) to
    vertex(t), read as a map P(vertex(s)) -> P(vertex(t)).

    ...

    Attributes
    ----------
    algebra : GentleAlgebra
        the algebra the projectives belong to.

    prime : int
        characteristic of the ground field.

    summands : dict
        (vertex, degree) per summand id, in insertion order.

    entries : dict
        {path: coefficient} per pair (from_id, to_id); never empty.
    """

    def __init__(self, algebra, prime, summands=None, entries=None):
        self.algebra = algebra
        self.prime = prime
        self.summands = dict(summands or {})
        self.entries = {}
        for (source_id, target_id), combination in (entries or {}).items():
            self.add_entry(source_id, target_id, combination)

    def __len__(self):
        return len(self.summands)

    def __repr__(self):
        return f'ProjectiveComplex(n={self.algebra.n}, summands={len(self.summands)}, entries={len(self.entries)})'

    def add_summand(self, summand_id, vertex, degree):
        if summand_id in self.summands:
            raise ValueError(f'Summand {summand_id} already exists')
        self.summands[summand_id] = (vertex, degree)

    def add_entry(self, source_id, target_id, combination, factor=1):
        """Adds factor times a path combination to the differential entry source -> target."""

        source_vertex, source_degree = self.summands[source_id]
        target_vertex, target_degree = self.summands[target_id]
        if target_degree != source_degree + 1:
            raise ValueError(f'Entry {source_id} -> {target_id} does not raise the degree by one')
        for path in combination:
            if path.source != source_vertex or path.target != target_vertex:
                raise ValueError(f'Path {path.label} does not run from {source_vertex} to {target_vertex}')

        current = add_combination(dict(self.entries.get((source_id, target_id), {})), combination, factor, self.prime)
        if current:
            self.entries[(source_id, target_id)] = current
        else:
            self.entries.pop((source_id, target_id), None)

    def vertex(self, summand_id):
        return self.summands[summand_id][0]

    def degree(self, summand_id):
        return self.summands[summand_id][1]

    def degrees(self):
        return sorted({degree for _, degree in self.summands.values()})

    def outgoing(self, summand_id):
        return {target: combination for (source, target), combination in self.entries.items() if source == summand_id}

    def incoming(self, summand_id):
        return {source: combination for (source, target), combination in self.entries.items() if target == summand_id}

    def summand_multiset(self):
        return Counter(self.summands.values())

    def copy(self):
        return ProjectiveComplex(self.algebra, self.prime, self.summands, self.entries)

    def is_complex(self):
        """True iff the differential squares to zero."""

        for source_id in self.summands:
            reached = {}
            for middle_id, first in self.outgoing(source_id).items():
                for target_id, second in self.outgoing(middle_id).items():
                    composite = compose_combinations(self.algebra, first, second, self.prime)
                    add_combination(reached.setdefault(target_id, {}), composite, 1, self.prime)
            if any(reached.values()):
                return False
        return True

    def is_minimal(self):
        """True iff no differential entry has an idempotent component."""
        return all(not path.is_idempotent() for combination in self.entries.values() for path in combination)

    def regrade(self, offset):
        """The same complex with every degree moved by offset and the differential untouched."""

        summands = {summand_id: (vertex, degree + offset) for summand_id, (vertex, degree) in self.summands.items()}
        return ProjectiveComplex(self.algebra, self.prime, summands, self.entries)

    def shift(self, steps):
        """The shifted complex X[steps]: degrees lowered by steps, differential times (-1)^steps."""

        sign = -1 if steps % 2 else 1
        summands = {summand_id: (vertex, degree - steps) for summand_id, (vertex, degree) in self.summands.items()}
        entries = {key: {path: (sign * coefficient) % self.prime for path, coefficient in combination.items()}
                   for key, combination in self.entries.items()}
        return ProjectiveComplex(self.algebra, self.prime, summands, entries)

    def relabel(self):
        """The same complex with summand ids replaced by 0, 1, … in a deterministic order."""

        order = sorted(self.summands, key=lambda summand_id: (self.degree(summand_id), str(self.vertex(summand_id)),
                                                              str(summand_id)))
        index = {summand_id: position for position, summand_id in enumerate(order)}
        summands = {index[summand_id]: self.summands[summand_id] for summand_id in order}
        entries = {(index[source], index[target]): combination for (source, target), combination in self.entries.items()}
        return ProjectiveComplex(self.algebra, self.prime, summands, entries)

    def to_dict(self):
        """Vertices, degrees and differential triplets (row, col, path, scalar) of the relabelled complex."""

        complex_ = self.relabel()
        differential = []
        for (source, target), combination in sorted(complex_.entries.items()):
            for path, coefficient in sorted(combination.items(), key=lambda item: item[0].label):
                differential.append({'row': target, 'col': source, 'path': path.label, 'scalar': coefficient})
        return {
            'n': self.algebra.n,
            'prime': self.prime,
            'vertices': [str(vertex) for vertex, _ in complex_.summands.values()],
            'degrees': [degree for _, degree in complex_.summands.values()],
            'differential': differential,
        }


def _unit_entry(complex_):
    for (source_id, target_id), combination in complex_.entries.items():
        for path, coefficient in combination.items():
            if path.is_idempotent():
                return source_id, target_id, coefficient
    return None


def minimize(complex_):
    """Strips contractible summands by Gaussian elimination at idempotent entries.

    Parameters
    ----------
    complex_ : ProjectiveComplex
        a complex with d² = 0.

    Returns
    -------
    ProjectiveComplex
        a homotopy equivalent complex without idempotent components in its differential.
    """

    reduced = complex_.copy()
    prime = reduced.prime
    eliminated = 0

    while True:
        unit = _unit_entry(reduced)
        if unit is None:
            break
        source_id, target_id, coefficient = unit

        # Endomorphisms of P(v) are scalars since Q(n) has no oriented cycles.
        assert len(reduced.entries[(source_id, target_id)]) == 1

        factor = -inv_mod_prime(coefficient, prime)
        into_target = {u: alpha for u, alpha in reduced.incoming(target_id).items() if u != source_id}
        out_of_source = {w: beta for w, beta in reduced.outgoing(source_id).items() if w != target_id}
        for u, alpha in into_target.items():
            for w, beta in out_of_source.items():
                composite = compose_combinations(reduced.algebra, alpha, beta, prime)
                if composite:
                    reduced.add_entry(u, w, composite, factor)

        for key in [key for key in reduced.entries if source_id in key or target_id in key]:
            del reduced.entries[key]
        del reduced.summands[source_id]
        del reduced.summands[target_id]
        eliminated += 1

    logger.debug('Minimization removed %d contractible pairs, %d summands remain', eliminated, len(reduced))
    return reduced


def build_skyscraper(algebra, column, lam, prime):
    """The complex 𝕜(i, λ): P(bottom_i) -> P(middle_i) by a_i + λ c_i, in degrees -1 and 0."""

    column %= algebra.n
    complex_ = ProjectiveComplex(algebra, prime)
    complex_.add_summand('bottom', algebra.vertex(BOTTOM, column), -1)
    complex_.add_summand('middle', algebra.vertex(MIDDLE, column), 0)
    complex_.add_entry('bottom', 'middle', {algebra.path(f'a{column}'): 1, algebra.path(f'c{column}'): lam % prime})
    return complex_


def build_band_complex(algebra, matrix, lam, prime):
    """Folds the band of a CVb sequence into a complex of projectives.

    The piece of entry x joins the top summands T_x and T_(x+1) and uses |m_x| labels a_i
    and |m_x| labels c_i. A piece with m_x >= 0 alternates middle and bottom summands
    between b_i and d_i; a piece with m_x < 0 alternates bottom and middle summands between
    the composites b_i c_i and d_i a_i. The scalar λ sits on the d-labelled entry of piece 0.

    Parameters
    ----------
    algebra : GentleAlgebra
        Λ_n with n equal to the number of columns of the matrix.

    matrix : LoopMatrix
        a primitive sequence.

    lam : int
        a nonzero field scalar.

    prime : int
        characteristic of the ground field.

    Returns
    -------
    ProjectiveComplex
        the band complex, graded so that its lowest degree is -1.
    """

    if matrix.n != algebra.n:
        raise ValueError(f'A sequence with {matrix.n} columns needs Λ_{matrix.n}, got Λ_{algebra.n}')
    if not matrix.is_primitive():
        raise ValueError(f'{matrix} is not primitive')
    if lam % prime == 0:
        raise ValueError('The band scalar must be nonzero')

    size = len(matrix)
    complex_ = ProjectiveComplex(algebra, prime)
    for x in range(size):
        complex_.add_summand(('T', x), algebra.vertex(TOP, x - 1), 0)

    for x in range(size):
        column = x % algebra.n
        entry = matrix[x]
        left, right = ('T', x), ('T', (x + 1) % size)
        scalar = lam % prime if x == 0 else 1
        a, b, c, d = (algebra.path(f'{name}{column}') for name in 'abcd')
        middle, bottom = algebra.vertex(MIDDLE, column), algebra.vertex(BOTTOM, column)

        if entry >= 0:
            for k in range(entry + 1):
                complex_.add_summand(('M', x, k), middle, -1)
            for k in range(1, entry + 1):
                complex_.add_summand(('B', x, k), bottom, -2)
                complex_.add_entry(('B', x, k), ('M', x, k - 1), {a: 1})
                complex_.add_entry(('B', x, k), ('M', x, k), {c: 1})
            complex_.add_entry(('M', x, 0), left, {b: 1})
            complex_.add_entry(('M', x, entry), right, {d: scalar})
        else:
            count = -entry
            for k in range(1, count + 1):
                complex_.add_summand(('B', x, k), bottom, -1)
            for k in range(1, count):
                complex_.add_summand(('M', x, k), middle, 0)
                complex_.add_entry(('B', x, k), ('M', x, k), {a: 1})
                complex_.add_entry(('B', x, k + 1), ('M', x, k), {c: 1})
            complex_.add_entry(('B', x, 1), left, {algebra.path(f'c{column}', f'b{column}'): 1})
            complex_.add_entry(('B', x, count), right, {algebra.path(f'a{column}', f'd{column}'): scalar})

    if any(entry > 0 for entry in matrix.entries):
        complex_ = complex_.regrade(1)

    logger.debug('Band complex of %r has %d summands', matrix, len(complex_))
    return complex_


def build_bundle_complex(algebra, matrix, lam, prime):
    """The band complex of a sequence in the grading of its vector bundle.

    This undoes the shift build_band_complex applies to sequences with a positive entry,
    so that the top summands sit in degree 0 for every sequence and Hom of degree 0
    between two such complexes is Hom between the bundles.
    """

    complex_ = build_band_complex(algebra, matrix, lam, prime)
    if any(entry > 0 for entry in matrix.entries):
        complex_ = complex_.regrade(-1)
    return complex_


def build_picard(algebra, lam, prime):
    """The complex 𝒪(λ), the band of the zero sequence."""

    return build_band_complex(algebra, LoopMatrix(algebra.n, 1, [0] * algebra.n), lam, prime)


def complex_from_walk(algebra, walk, lam, prime):
    """Projective complex of a CVb walk or of a single κ letter."""

    if is_cvb(walk):
        return build_band_complex(algebra, matrix_from_walk(walk), lam, prime)
    if len(walk) == 1 and walk[0].kind == KAPPA:
        return build_skyscraper(algebra, walk[0].column, lam, prime)
    raise UnsupportedLoop(f'No projective complex is built for {walk}')
