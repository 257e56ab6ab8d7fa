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

"""Graded morphisms between complexes of projectives, computed by exact linear algebra.

Hom^s(X, Y) in the homotopy category is the degree s cohomology of the Hom complex,
whose differential sends φ to d_Y φ - (-1)^s φ d_X.
"""
import logging
import random

import numpy as np

from cycles.errors import NotChainMap
from .complexes import ProjectiveComplex, add_combination, compose_combinations, minimize
from .linalg import extend_independent, nullspace_mod_prime, rank_mod_prime

logger = logging.getLogger(__name__)


class ChainMap:
    """
    A morphism X -> Y[shift] given by its components.

    ...

    Attributes
    ----------
    source, target : ProjectiveComplex
        the complexes X and Y.

    shift : int
        the component from x to y raises the degree by shift.

    components : dict
        {path: coefficient} per pair (x_id, y_id).
    """

    def __init__(self, source, target, shift, components=None):
        self.source = source
        self.target = target
        self.shift = shift
        self.components = {}
        prime = source.prime
        for key, combination in (components or {}).items():
            current = add_combination({}, combination, 1, prime)
            if current:
                self.components[key] = current

    def __repr__(self):
        return f'ChainMap(shift={self.shift}, components={len(self.components)})'

    def is_zero(self):
        return not self.components

    def scaled(self, factor):
        prime = self.source.prime
        return ChainMap(self.source, self.target, self.shift,
                        {key: {path: factor * value % prime for path, value in combination.items()}
                         for key, combination in self.components.items()})

    def __add__(self, other):
        if other.shift != self.shift:
            raise ValueError('Cannot add chain maps of different shifts')
        components = {key: dict(combination) for key, combination in self.components.items()}
        for key, combination in other.components.items():
            add_combination(components.setdefault(key, {}), combination, 1, self.source.prime)
        return ChainMap(self.source, self.target, self.shift, components)

    def boundary(self):
        """The combination d_Y φ - (-1)^s φ d_X, keyed like the components."""

        source, target = self.source, self.target
        algebra, prime = source.algebra, source.prime
        sign = -1 if self.shift % 2 else 1

        result = {}
        for (x_id, y_id), combination in self.components.items():
            # Apply φ, then the differential of Y.
            for next_id, differential in target.outgoing(y_id).items():
                composite = compose_combinations(algebra, combination, differential, prime)
                add_combination(result.setdefault((x_id, next_id), {}), composite, 1, prime)
            # Apply the differential of X, then φ.
            for previous_id, differential in source.incoming(x_id).items():
                composite = compose_combinations(algebra, differential, combination, prime)
                add_combination(result.setdefault((previous_id, y_id), {}), composite, -sign, prime)

        return {key: combination for key, combination in result.items() if combination}

    def validate(self):
        """Raises NotChainMap unless the components commute with the differentials."""

        for (x_id, y_id), combination in self.components.items():
            if self.target.degree(y_id) != self.source.degree(x_id) + self.shift:
                raise NotChainMap(f'Component {x_id} -> {y_id} does not have degree {self.shift}')
            for path in combination:
                if path.source != self.source.vertex(x_id) or path.target != self.target.vertex(y_id):
                    raise NotChainMap(f'Component {x_id} -> {y_id} uses the path {path.label} between wrong vertices')
        if self.boundary():
            raise NotChainMap(f'{self} does not commute with the differentials')
        return self


def _hom_basis_elements(source, target, shift):
    """Triples (x_id, y_id, path) spanning the degree shift part of the Hom complex."""

    elements = []
    for x_id, (x_vertex, x_degree) in source.summands.items():
        for y_id, (y_vertex, y_degree) in target.summands.items():
            if y_degree != x_degree + shift:
                continue
            for path in source.algebra.paths_between(x_vertex, y_vertex):
                elements.append((x_id, y_id, path))
    return elements


def hom_differential(source, target, shift):
    """Matrix of the Hom complex differential from degree shift to degree shift + 1.

    Returns
    -------
    tuple
        the integer matrix (rows indexed by the degree shift + 1 basis) and the two bases.
    """

    domain = _hom_basis_elements(source, target, shift)
    codomain = _hom_basis_elements(source, target, shift + 1)
    index = {element: position for position, element in enumerate(codomain)}

    matrix = np.zeros((len(codomain), len(domain)), dtype=np.int64)
    for column, (x_id, y_id, path) in enumerate(domain):
        image = ChainMap(source, target, shift, {(x_id, y_id): {path: 1}}).boundary()
        for (image_x, image_y), combination in image.items():
            for image_path, coefficient in combination.items():
                matrix[index[(image_x, image_y, image_path)], column] = coefficient

    logger.debug('Hom differential in degree %d is %d x %d', shift, len(codomain), len(domain))
    return matrix, domain, codomain


def _check_compatible(source, target):
    if source.algebra.n != target.algebra.n:
        raise ValueError('Complexes live over different algebras')
    if source.prime != target.prime:
        raise ValueError('Complexes live over different fields')


def hom_dim(source, target, shift):
    """Dimension of Hom(X, Y[shift]) in the homotopy category.

    Parameters
    ----------
    source, target : ProjectiveComplex
        complexes over the same algebra and field.

    shift : int
        the degree s.

    Returns
    -------
    int
        dim Hom^s - rank D_s - rank D_(s-1).
    """

    _check_compatible(source, target)
    prime = source.prime
    outgoing, domain, _ = hom_differential(source, target, shift)
    incoming, _, _ = hom_differential(source, target, shift - 1)
    return len(domain) - rank_mod_prime(outgoing, prime) - rank_mod_prime(incoming, prime)


def support_window(source, target):
    """The shifts outside of which no nonzero component exists."""

    if not source.summands or not target.summands:
        return range(0)
    source_degrees, target_degrees = source.degrees(), target.degrees()
    return range(target_degrees[0] - source_degrees[-1], target_degrees[-1] - source_degrees[0] + 1)


def hom_total(source, target):
    """Total dimension of the graded Hom space."""
    return sum(hom_dim(source, target, shift) for shift in support_window(source, target))


def hom_dims(source, target):
    """Nonzero graded dimensions keyed by shift."""

    dims = {}
    for shift in support_window(source, target):
        dimension = hom_dim(source, target, shift)
        if dimension:
            dims[shift] = dimension
    return dims


def hom_basis(source, target, shift):
    """Cocycles representing a basis of Hom(X, Y[shift]).

    Returns
    -------
    list of ChainMap
        chain maps whose classes form a basis, chosen deterministically.
    """

    _check_compatible(source, target)
    prime = source.prime
    outgoing, domain, _ = hom_differential(source, target, shift)
    incoming, _, _ = hom_differential(source, target, shift - 1)

    if not domain:
        return []

    if outgoing.shape[0]:
        cocycles = nullspace_mod_prime(outgoing, prime)
    else:
        cocycles = [vector for vector in np.eye(len(domain), dtype=np.int64)]
    boundaries = [incoming[:, column] for column in range(incoming.shape[1])]
    chosen = extend_independent(boundaries, cocycles, prime)

    basis = []
    for vector in chosen:
        components = {}
        for position, coefficient in enumerate(vector):
            if coefficient % prime:
                x_id, y_id, path = domain[position]
                components.setdefault((x_id, y_id), {})[path] = int(coefficient) % prime
        basis.append(ChainMap(source, target, shift, components))
    return basis


def cone(morphism):
    """Mapping cone of a chain map X -> Y[s], minimized.

    The cone is X[1] ⊕ Y[s] with differential [[-d_X, 0], [f, (-1)^s d_Y]].

    Parameters
    ----------
    morphism : ChainMap
        a valid chain map.

    Returns
    -------
    ProjectiveComplex
        the minimized cone.
    """

    morphism.validate()
    source, target, shift = morphism.source, morphism.target, morphism.shift
    prime = source.prime
    sign = -1 if shift % 2 else 1

    result = ProjectiveComplex(source.algebra, prime)
    for x_id, (vertex, degree) in source.summands.items():
        result.add_summand(('X', x_id), vertex, degree - 1)
    for y_id, (vertex, degree) in target.summands.items():
        result.add_summand(('Y', y_id), vertex, degree - shift)

    for (x_id, next_id), combination in source.entries.items():
        result.add_entry(('X', x_id), ('X', next_id), combination, -1)
    for (y_id, next_id), combination in target.entries.items():
        result.add_entry(('Y', y_id), ('Y', next_id), combination, sign)
    for (x_id, y_id), combination in morphism.components.items():
        result.add_entry(('X', x_id), ('Y', y_id), combination)

    assert result.is_complex()
    return minimize(result)


def random_combination(basis, prime, seed=0):
    """A seeded random linear combination of chain maps of the same shift."""

    generator = random.Random(seed)
    total = None
    for morphism in basis:
        term = morphism.scaled(generator.randrange(1, prime))
        total = term if total is None else total + term
    return total
