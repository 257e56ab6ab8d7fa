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

import unittest

import numpy as np

from cycles.errors import NotChainMap, NotMinimal, UnsupportedLoop
from cycles.homotopy.algebra import BOTTOM, MIDDLE, TOP, GentleAlgebra, dim_algebra
from cycles.homotopy.bands import band_form, is_band_shaped, is_iso, same_band_word
from cycles.homotopy.complexes import (ProjectiveComplex, build_band_complex, build_bundle_complex, build_picard,
                                       build_skyscraper, complex_from_walk, minimize)
from cycles.homotopy.linalg import inv_mod_prime, nullspace_mod_prime, rank_mod_prime
from cycles.homotopy.morphisms import ChainMap, cone, hom_basis, hom_dims, hom_total
from cycles.walks.letters import CyclicWalk, kappa, puncture_walk
from cycles.walks.matrices import LoopMatrix

PRIME = 32003


class TestLinearAlgebra(unittest.TestCase):

    def test_inverse(self):
        """ Test if modular inverses multiply to one.
        """
        self.assertEqual(inv_mod_prime(3, 7) * 3 % 7, 1)
        with self.assertRaises(ZeroDivisionError):
            inv_mod_prime(7, 7)

    def test_rank(self):
        """ Test if rank depends on the characteristic.
        """
        matrix = np.array([[1, 1], [1, 4]], dtype=np.int64)
        self.assertEqual(rank_mod_prime(matrix, 3), 1)
        self.assertEqual(rank_mod_prime(matrix, 5), 2)

    def test_nullspace(self):
        """ Test if nullspace vectors are annihilated by the matrix.
        """
        matrix = np.array([[1, 2, 3], [2, 4, 6]], dtype=np.int64)
        kernel = nullspace_mod_prime(matrix, 11)
        self.assertEqual(len(kernel), 2)
        for vector in kernel:
            self.assertFalse(np.any(matrix.dot(vector) % 11))


class TestGentleAlgebra(unittest.TestCase):

    def test_dimension(self):
        """ Test if Λ_n has 9n basis paths.
        """
        for n in range(1, 5):
            self.assertEqual(dim_algebra(n), 9 * n)

    def test_zero_relations(self):
        """ Test if a then b and c then d vanish while a then d survives.
        """
        algebra = GentleAlgebra(2)
        self.assertIsNone(algebra.compose(algebra.path('a0'), algebra.path('b0')))
        self.assertIsNone(algebra.compose(algebra.path('c1'), algebra.path('d1')))
        self.assertEqual(algebra.compose(algebra.path('a0'), algebra.path('d0')).label, 'd0a0')
        with self.assertRaises(ValueError):
            algebra.path('c0', 'd0')

    def test_arrow_targets(self):
        """ Test if b_i ends at top_(i-1) and d_i at top_i.
        """
        algebra = GentleAlgebra(3)
        self.assertEqual(algebra.path('b0').target, algebra.vertex(TOP, 2))
        self.assertEqual(algebra.path('d0').target, algebra.vertex(TOP, 0))
        self.assertEqual(algebra.path('a1').source, algebra.vertex(BOTTOM, 1))


class TestComplexes(unittest.TestCase):

    def setUp(self):
        self.algebra = GentleAlgebra(1)

    def test_degree_check(self):
        """ Test if entries must raise the degree by one.
        """
        complex_ = ProjectiveComplex(self.algebra, PRIME)
        complex_.add_summand('x', self.algebra.vertex(BOTTOM, 0), 0)
        complex_.add_summand('y', self.algebra.vertex(MIDDLE, 0), 0)
        with self.assertRaises(ValueError):
            complex_.add_entry('x', 'y', {self.algebra.path('a0'): 1})

    def test_skyscraper(self):
        """ Test if 𝕜(0, λ) is a two term minimal complex.
        """
        complex_ = build_skyscraper(self.algebra, 0, 2, PRIME)
        self.assertTrue(complex_.is_complex())
        self.assertTrue(complex_.is_minimal())
        self.assertEqual(complex_.degrees(), [-1, 0])

    def test_band_complexes_square_to_zero(self):
        """ Test if band complexes of several sequences are minimal complexes.
        """
        for n, r, entries in [(1, 1, [0]), (1, 1, [2]), (1, 1, [-1]), (1, 1, [-3]), (2, 2, [1, -1, 1, 0]),
                              (3, 1, [0, 2, -2])]:
            algebra = GentleAlgebra(n)
            complex_ = build_band_complex(algebra, LoopMatrix(n, r, entries), 3, PRIME)
            self.assertTrue(complex_.is_complex())
            self.assertTrue(complex_.is_minimal())
            self.assertTrue(is_band_shaped(complex_))
            self.assertEqual(complex_.degrees()[0], -1)

    def test_negative_piece(self):
        """ Test if the piece of -1 joins a bottom summand to the top by b c and d a.
        """
        complex_ = build_band_complex(self.algebra, LoopMatrix(1, 1, [-1]), 1, PRIME)
        labels = {record['path'] for record in complex_.to_dict()['differential']}
        self.assertEqual(labels, {'b0c0', 'd0a0'})

    def test_summand_count(self):
        """ Test if a positive entry m contributes 2m + 1 summands besides the top.
        """
        complex_ = build_band_complex(self.algebra, LoopMatrix(1, 1, [2]), 1, PRIME)
        self.assertEqual(len(complex_), 6)

    def test_not_primitive(self):
        """ Test if periodic sequences are refused.
        """
        with self.assertRaises(ValueError):
            build_band_complex(self.algebra, LoopMatrix(1, 2, [1, 1]), 1, PRIME)

    def test_unsupported_walk(self):
        """ Test if only CVb walks and single κ letters have complexes.
        """
        self.assertEqual(len(complex_from_walk(self.algebra, CyclicWalk(1, [kappa(0)]), 1, PRIME)), 2)
        with self.assertRaises(UnsupportedLoop):
            complex_from_walk(self.algebra, puncture_walk(1, 0), 1, PRIME)

    def test_shift(self):
        """ Test if an odd shift lowers degrees and negates the differential.
        """
        complex_ = build_skyscraper(self.algebra, 0, 1, PRIME).shift(1)
        self.assertEqual(complex_.degrees(), [-2, -1])
        self.assertEqual(set(complex_.entries[('bottom', 'middle')].values()), {PRIME - 1})


class TestHom(unittest.TestCase):

    def setUp(self):
        self.algebra = GentleAlgebra(1)
        self.picard = build_picard(self.algebra, 1, PRIME)
        self.skyscraper = build_skyscraper(self.algebra, 0, 2, PRIME)

    def test_picard_to_skyscraper(self):
        """ Test if 𝒪 has a single morphism to a skyscraper.
        """
        self.assertEqual(hom_total(self.picard, self.skyscraper), 1)

    def test_picard_to_line_bundle(self):
        """ Test if 𝒪 maps to the band of (1) in one degree only.
        """
        band = build_band_complex(self.algebra, LoopMatrix(1, 1, [1]), 1, PRIME)
        self.assertEqual(hom_total(self.picard, band), 1)

    def test_different_scalars(self):
        """ Test if bands with different scalars are orthogonal.
        """
        self.assertEqual(hom_total(build_picard(self.algebra, 2, PRIME), build_picard(self.algebra, 3, PRIME)), 0)
        self.assertEqual(hom_total(build_skyscraper(self.algebra, 0, 2, PRIME),
                                   build_skyscraper(self.algebra, 0, 5, PRIME)), 0)

    def test_endomorphisms(self):
        """ Test if 𝒪 and the band of (-1) have two dimensional graded endomorphisms.
        """
        self.assertEqual(hom_total(self.picard, self.picard), 2)
        band = build_band_complex(self.algebra, LoopMatrix(1, 1, [-1]), 1, PRIME)
        self.assertEqual(hom_total(band, band), 2)

    def test_rank_two_endomorphisms(self):
        """ Test if a simple rank two band has two dimensional graded endomorphisms.
        """
        algebra = GentleAlgebra(2)
        band = build_band_complex(algebra, LoopMatrix(2, 2, [1, -1, 1, 0]), 1, PRIME)
        self.assertEqual(hom_total(band, band), 2)

    def test_skyscraper_to_band(self):
        """ Test if a skyscraper maps to the band of (-1) once.
        """
        band = build_band_complex(self.algebra, LoopMatrix(1, 1, [-1]), 1, PRIME)
        self.assertEqual(hom_total(self.skyscraper, band), 1)

    def test_basis_matches_dimension(self):
        """ Test if hom_basis returns one valid chain map per dimension.
        """
        for shift, dimension in hom_dims(self.picard, self.picard).items():
            basis = hom_basis(self.picard, self.picard, shift)
            self.assertEqual(len(basis), dimension)
            for morphism in basis:
                morphism.validate()

    def test_not_chain_map(self):
        """ Test if a map touching only the bottom summand is rejected.
        """
        bottom = self.algebra.vertex(BOTTOM, 0)
        morphism = ChainMap(self.skyscraper, self.skyscraper, 0,
                            {('bottom', 'bottom'): {self.algebra.idempotent(bottom): 1}})
        with self.assertRaises(NotChainMap):
            morphism.validate()


class TestCones(unittest.TestCase):

    def setUp(self):
        self.algebra = GentleAlgebra(1)
        self.picard = build_picard(self.algebra, 1, PRIME)
        self.skyscraper = build_skyscraper(self.algebra, 0, 2, PRIME)

    def test_identity(self):
        """ Test if the cone of the identity is contractible.
        """
        identity = ChainMap(self.picard, self.picard, 0, {
            (summand_id, summand_id): {self.algebra.idempotent(self.picard.vertex(summand_id)): 1}
            for summand_id in self.picard.summands})
        self.assertEqual(len(cone(identity)), 0)

    def test_zero(self):
        """ Test if the cone of the zero map is the sum of both complexes.
        """
        self.assertEqual(len(cone(ChainMap(self.picard, self.skyscraper, 1))), 4)

    def test_crossing_cone(self):
        """ Test if the cone of 𝒪 -> 𝕜 is the band of (-1).
        """
        (shift, _), = hom_dims(self.picard, self.skyscraper).items()
        morphism, = hom_basis(self.picard, self.skyscraper, shift)
        result = cone(morphism)
        band = build_band_complex(self.algebra, LoopMatrix(1, 1, [-1]), 1, PRIME)
        self.assertEqual(len(result), 2)
        self.assertTrue(same_band_word(result, band))

    def test_minimize_removes_identity_entry(self):
        """ Test if a unit entry between two summands is stripped.
        """
        complex_ = ProjectiveComplex(self.algebra, PRIME)
        middle = self.algebra.vertex(MIDDLE, 0)
        complex_.add_summand('x', middle, 0)
        complex_.add_summand('y', middle, 1)
        complex_.add_entry('x', 'y', {self.algebra.idempotent(middle): 5})
        self.assertEqual(len(minimize(complex_)), 0)


class TestBundleGrading(unittest.TestCase):

    def setUp(self):
        self.algebra = GentleAlgebra(1)

    def test_positive_entry(self):
        """ Test if a sequence with a positive entry has its top summands moved back to degree 0.
        """
        matrix = LoopMatrix(1, 1, [1])
        self.assertEqual(build_band_complex(self.algebra, matrix, 1, PRIME).degrees(), [-1, 0, 1])
        self.assertEqual(build_bundle_complex(self.algebra, matrix, 1, PRIME).degrees(), [-2, -1, 0])

    def test_non_positive_entries(self):
        """ Test if a sequence without positive entries keeps the band grading.
        """
        matrix = LoopMatrix(1, 1, [-1])
        band = build_band_complex(self.algebra, matrix, 1, PRIME)
        bundle = build_bundle_complex(self.algebra, matrix, 1, PRIME)
        self.assertEqual(bundle.summands, band.summands)
        self.assertEqual(bundle.degrees(), [-1, 0])


class TestIsomorphism(unittest.TestCase):

    def setUp(self):
        self.algebra = GentleAlgebra(2)

    def test_same_band(self):
        """ Test if equal bands are isomorphic and differ from other scalars.
        """
        matrix = LoopMatrix(2, 2, [1, -1, 1, 0])
        first = build_band_complex(self.algebra, matrix, 2, PRIME)
        self.assertTrue(is_iso(first, build_band_complex(self.algebra, matrix, 2, PRIME)))
        self.assertFalse(is_iso(first, build_band_complex(self.algebra, matrix, 3, PRIME)))

    def test_rotated_band(self):
        """ Test if a row rotation of a sequence gives the same band word.
        """
        first = build_band_complex(self.algebra, LoopMatrix(2, 2, [1, -1, 1, 0]), 1, PRIME)
        second = build_band_complex(self.algebra, LoopMatrix(2, 2, [1, 0, 1, -1]), 1, PRIME)
        self.assertTrue(same_band_word(first, second))
        self.assertEqual(band_form(first)[2], band_form(second)[2])
        self.assertTrue(is_iso(first, second))

    def test_different_summands(self):
        """ Test if complexes with different summands are not isomorphic.
        """
        first = build_picard(self.algebra, 1, PRIME)
        second = build_skyscraper(self.algebra, 0, 1, PRIME)
        self.assertFalse(is_iso(first, second))

    def test_not_minimal(self):
        """ Test if non-minimal complexes are refused.
        """
        complex_ = ProjectiveComplex(self.algebra, PRIME)
        middle = self.algebra.vertex(MIDDLE, 0)
        complex_.add_summand('x', middle, 0)
        complex_.add_summand('y', middle, 1)
        complex_.add_entry('x', 'y', {self.algebra.idempotent(middle): 1})
        with self.assertRaises(NotMinimal):
            is_iso(complex_, complex_)


if __name__ == '__main__':
    unittest.main()
