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

from cycles.errors import ContractibleLoop, NotComposable, NotMonotone, NotSimple
from cycles.walks.letters import (CyclicWalk, eps, is_cvb, is_primitive, kappa, pic_walk, puncture_walk, reduce_walk,
                                  source, target, walks_equivalent)
from cycles.walks.matrices import (LoopMatrix, contract, homology_class, is_non_separating, matrix_from_walk,
                                   walk_from_matrix)


class TestLetters(unittest.TestCase):

    def test_inverse(self):
        """ Test if inverting a letter flips its sign only.
        """
        self.assertEqual(eps(1).inverse(), eps(1, -1))
        self.assertEqual(kappa(0, -1).inverse(), kappa(0))

    def test_incidence(self):
        """ Test if ε_j runs from v_j to v_(j+1) and κ_j is a loop at v_(j+1).
        """
        self.assertEqual((source(eps(1), 3), target(eps(1), 3)), (1, 2))
        self.assertEqual((source(eps(1, -1), 3), target(eps(1, -1), 3)), (2, 1))
        self.assertEqual((source(kappa(2), 3), target(kappa(2), 3)), (0, 0))


class TestCyclicWalk(unittest.TestCase):

    def test_rotation_invariance(self):
        """ Test if walks differing by a rotation compare equal.
        """
        self.assertEqual(CyclicWalk(1, [kappa(0), eps(0)]), CyclicWalk(1, [eps(0), kappa(0)]))

    def test_not_composable(self):
        """ Test if consecutive letters must share a vertex.
        """
        with self.assertRaises(NotComposable):
            CyclicWalk(2, [eps(0), eps(0)])

    def test_empty(self):
        """ Test if the empty walk is rejected as contractible.
        """
        with self.assertRaises(ContractibleLoop):
            CyclicWalk(1, [])

    def test_unreduced(self):
        """ Test if a walk with a cancelling pair is rejected.
        """
        with self.assertRaises(ValueError):
            CyclicWalk(1, [kappa(0), kappa(0, -1)])

    def test_invalid_column(self):
        """ Test if columns outside [0, n) are rejected.
        """
        with self.assertRaises(ValueError):
            CyclicWalk(2, [eps(2)])

    def test_inverse(self):
        """ Test if inverting twice gives back the walk.
        """
        walk = CyclicWalk(2, [eps(0), kappa(0), eps(1)])
        self.assertEqual(walk.inverse().inverse(), walk)
        self.assertTrue(walks_equivalent(walk, walk.inverse()))


class TestReduceWalk(unittest.TestCase):

    def test_free_reduction(self):
        """ Test if adjacent inverse letters cancel.
        """
        self.assertEqual(reduce_walk([eps(0), kappa(0), kappa(0, -1)], 1), CyclicWalk(1, [eps(0)]))

    def test_cyclic_reduction(self):
        """ Test if cancellation across the seam is performed.
        """
        self.assertEqual(reduce_walk([kappa(0), eps(0), kappa(0, -1)], 1), CyclicWalk(1, [eps(0)]))

    def test_contractible(self):
        """ Test if a walk reducing to nothing raises ContractibleLoop.
        """
        with self.assertRaises(ContractibleLoop):
            reduce_walk([kappa(0), kappa(0, -1)], 1)


class TestWalkPredicates(unittest.TestCase):

    def test_primitive(self):
        """ Test if proper powers are detected.
        """
        self.assertFalse(is_primitive(CyclicWalk(1, [eps(0), eps(0)])))
        self.assertTrue(is_primitive(CyclicWalk(1, [eps(0), kappa(0)])))

    def test_cvb(self):
        """ Test if CVb walks need an ε letter and no inverse ε letter.
        """
        self.assertTrue(is_cvb(pic_walk(3)))
        self.assertFalse(is_cvb(CyclicWalk(1, [kappa(0)])))
        self.assertFalse(is_cvb(puncture_walk(1, 0)))

    def test_puncture_walk_composable(self):
        """ Test if puncture loops are valid walks for several numbers of punctures.
        """
        for n in range(1, 4):
            for column in range(n):
                self.assertEqual(len(puncture_walk(n, column)), 4)


class TestLoopMatrix(unittest.TestCase):

    def setUp(self):
        self.matrix = LoopMatrix(2, 2, [1, -1, 1, 0])

    def test_wrong_entry_count(self):
        """ Test if the number of entries must be n times r.
        """
        with self.assertRaises(ValueError):
            LoopMatrix(2, 2, [1, 2, 3])

    def test_rows_and_columns(self):
        """ Test if rows, columns and multidegree are read row-major.
        """
        self.assertEqual(self.matrix.rows, [[1, -1], [1, 0]])
        self.assertEqual(self.matrix.column(1), [-1, 0])
        self.assertEqual(self.matrix.multidegree, (2, -1))
        self.assertEqual(self.matrix.total_degree, 1)
        self.assertTrue(self.matrix.is_coprime())

    def test_canonical(self):
        """ Test if the canonical form is the least row rotation.
        """
        self.assertEqual(LoopMatrix(1, 3, [1, 0, 0]).canonical().entries, (0, 0, 1))
        self.assertTrue(self.matrix.same_loop(LoopMatrix(2, 2, [1, 0, 1, -1])))

    def test_primitive(self):
        """ Test if periodic sequences are not primitive.
        """
        self.assertFalse(LoopMatrix(1, 2, [1, 1]).is_primitive())
        self.assertTrue(self.matrix.is_primitive())

    def test_walk_conversion(self):
        """ Test if converting to a walk and back describes the same loop.
        """
        walk = walk_from_matrix(self.matrix)
        self.assertEqual(len(walk), 7)
        self.assertTrue(matrix_from_walk(walk).same_loop(self.matrix))

    def test_not_monotone(self):
        """ Test if walks with inverse ε letters have no sequence.
        """
        with self.assertRaises(NotMonotone):
            matrix_from_walk(puncture_walk(1, 0))


class TestHomology(unittest.TestCase):

    def test_homology_class(self):
        """ Test if rank and multidegree are read from the letters.
        """
        walk = walk_from_matrix(LoopMatrix(2, 2, [1, -1, 1, 0]))
        self.assertEqual(homology_class(walk), (2, (2, -1)))
        self.assertEqual(homology_class(CyclicWalk(3, [kappa(1)])), (0, (0, 1, 0)))

    def test_separating(self):
        """ Test if a loop around a puncture is separating and γ_Pic is not.
        """
        self.assertFalse(is_non_separating(puncture_walk(1, 0), simple=True))
        self.assertTrue(is_non_separating(pic_walk(2), simple=True))

    def test_requires_simple(self):
        """ Test if the separation test refuses loops not known to be simple.
        """
        with self.assertRaises(NotSimple):
            is_non_separating(pic_walk(2), simple=False)


class TestContract(unittest.TestCase):

    def test_contract_inner_column(self):
        """ Test if contracting column 0 adds columns 0 and 1 row by row.
        """
        self.assertEqual(contract(LoopMatrix(2, 2, [1, -1, 1, 0]), 0), LoopMatrix(1, 2, [0, 1]))

    def test_contract_last_column(self):
        """ Test if the last column merges with column 0 of the next row.
        """
        contracted = contract(LoopMatrix(2, 2, [1, -1, 1, 0]), 1)
        self.assertEqual(contracted.n, 1)
        self.assertTrue(contracted.same_loop(LoopMatrix(1, 2, [0, 1])))

    def test_contract_single_column(self):
        """ Test if a single column cannot be contracted.
        """
        with self.assertRaises(ValueError):
            contract(LoopMatrix(1, 1, [3]), 0)


if __name__ == '__main__':
    unittest.main()
