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
from unittest import mock

from cycles.bundles.sequences import canonical_sequence
from cycles.errors import NotSimpleTwistCurve, NotSpherical
from cycles.intersections.ribbon import Crossing
from cycles.twists import twists
from cycles.twists.normalize import normalize_to_pic, vertical_crossings
from cycles.twists.twists import apply_word, twist_general, twist_power, twist_vertical
from cycles.twists.words import PIC, VERT, Generator, TwistWord, parse_generator
from cycles.walks.letters import CyclicWalk, eps, kappa, pic_walk, puncture_walk, vertical_walk, walks_equivalent
from cycles.walks.matrices import LoopMatrix, homology_class, walk_from_matrix


class TestGenerators(unittest.TestCase):

    def test_parse(self):
        """ Test if generators are read from "pic" and "vert:i".
        """
        self.assertEqual(parse_generator('pic', 2), Generator(PIC))
        self.assertEqual(parse_generator('vert:1', 2), Generator(VERT, 1))
        self.assertEqual(str(Generator(VERT, 1)), 'vert:1')

    def test_parse_invalid(self):
        """ Test if unknown names and columns out of range are refused.
        """
        for text in ['twist', 'vert:', 'vert:x', 'vert:2']:
            with self.assertRaises(ValueError):
                parse_generator(text, 2)

    def test_curves(self):
        """ Test if generators twist along γ_Pic and κ_i.
        """
        self.assertEqual(Generator(PIC).curve(3), pic_walk(3))
        self.assertEqual(Generator(VERT, 2).curve(3), vertical_walk(3, 2))


class TestTwistWord(unittest.TestCase):

    def test_merge(self):
        """ Test if consecutive powers of one generator merge and cancel.
        """
        word = TwistWord(2)
        word.append(Generator(PIC), 2)
        word.append(Generator(PIC), -1)
        word.append(Generator(VERT, 1), 1)
        word.append(Generator(VERT, 1), -1)
        self.assertEqual(word.to_list(), [{'generator': 'pic', 'power': 1}])

    def test_column_range(self):
        """ Test if vertical generators must name a column of the torus.
        """
        with self.assertRaises(ValueError):
            TwistWord(2).append(Generator(VERT, 2), 1)


class TestVerticalTwist(unittest.TestCase):

    def test_column_entries(self):
        """ Test if every entry of the column grows by the power.
        """
        self.assertEqual(twist_vertical(LoopMatrix(2, 2, [1, -1, 1, 0]), 1, 1), LoopMatrix(2, 2, [1, 0, 1, 1]))

    def test_simple_bundles(self):
        """ Test if vertical twists send 𝕞(r, 𝕕) to 𝕞(r, 𝕕 + r e_i).
        """
        twisted = twist_vertical(canonical_sequence(2, (2, -1)), 1, 1)
        self.assertTrue(twisted.same_loop(canonical_sequence(2, (2, 1))))

    def test_column_range(self):
        """ Test if columns outside [0, n) are refused.
        """
        with self.assertRaises(ValueError):
            twist_vertical(LoopMatrix(1, 1, [0]), 1, 1)


class TestGeneralTwist(unittest.TestCase):

    def setUp(self):
        self.walk = CyclicWalk(1, [eps(0), kappa(0)])
        self.kappa = vertical_walk(1, 0)

    def test_vertical(self):
        """ Test if twisting ε κ along κ adds a κ and its inverse removes it.
        """
        self.assertTrue(walks_equivalent(twist_general(self.walk, self.kappa, 1),
                                         CyclicWalk(1, [eps(0), kappa(0), kappa(0)])))
        self.assertTrue(walks_equivalent(twist_general(self.walk, self.kappa, -1), CyclicWalk(1, [eps(0)])))

    def test_pic(self):
        """ Test if twisting κ along γ_Pic inversely gives ε κ.
        """
        self.assertTrue(walks_equivalent(twist_general(self.kappa, pic_walk(1), -1), self.walk))

    def test_homology_action(self):
        """ Test if the class of the twisted walk moves by the intersection pairing.
        """
        twisted = twist_general(self.kappa, pic_walk(1), -1)
        self.assertEqual(homology_class(twisted), (1, (1,)))

    def test_disjoint_curve(self):
        """ Test if a curve missing the walk leaves it unchanged.
        """
        walk = CyclicWalk(2, [kappa(0)])
        self.assertEqual(twist_general(walk, vertical_walk(2, 1), 1), walk)

    def test_twist_along_itself(self):
        """ Test if a curve is fixed by its own twist.
        """
        self.assertEqual(twist_general(pic_walk(2), pic_walk(2), 1), pic_walk(2))

    def test_power(self):
        """ Test if only unit powers are accepted by a single twist.
        """
        with self.assertRaises(ValueError):
            twist_general(self.walk, self.kappa, 2)

    def test_power_iterates(self):
        """ Test if twist_power applies the twist repeatedly.
        """
        walk = twist_power(self.walk, self.kappa, 3)
        self.assertEqual(homology_class(walk), (1, (4,)))
        self.assertEqual(twist_power(self.walk, self.kappa, 0), self.walk)

    def test_not_simple_curve(self):
        """ Test if twisting along a self-intersecting curve raises NotSimpleTwistCurve.
        """
        crossing = Crossing(0, 0, 0, 1, True)
        with mock.patch.object(twists, 'self_crossings', return_value=[crossing]):
            with self.assertRaises(NotSimpleTwistCurve):
                twist_general(self.walk, self.kappa, 1)


class TestNormalization(unittest.TestCase):

    def test_pic(self):
        """ Test if γ_Pic needs no twist.
        """
        self.assertEqual(len(normalize_to_pic(pic_walk(2))), 0)

    def test_vertical_loop(self):
        """ Test if κ_0 is normalized by the inverse twists along γ_Pic and κ_0.
        """
        word = normalize_to_pic(vertical_walk(1, 0))
        self.assertEqual(word.to_list(), [{'generator': 'pic', 'power': -1}, {'generator': 'vert:0', 'power': -1}])
        self.assertTrue(walks_equivalent(apply_word(vertical_walk(1, 0), word), pic_walk(1)))

    def test_line_bundle(self):
        """ Test if a degree one line bundle is carried to γ_Pic.
        """
        walk = CyclicWalk(1, [eps(0), kappa(0)])
        word = normalize_to_pic(walk)
        self.assertEqual(word.to_list(), [{'generator': 'vert:0', 'power': -1}])
        self.assertTrue(walks_equivalent(apply_word(walk, word), pic_walk(1)))

    def test_separating(self):
        """ Test if the puncture loop is refused.
        """
        with self.assertRaises(NotSpherical):
            normalize_to_pic(puncture_walk(1, 0))

    def test_not_primitive(self):
        """ Test if a proper power is refused.
        """
        with self.assertRaises(NotSpherical):
            normalize_to_pic(CyclicWalk(1, [eps(0), eps(0)]))

    def test_vertical_crossings(self):
        """ Test if γ_Pic crosses each vertical loop once.
        """
        self.assertEqual(vertical_crossings(pic_walk(3)), 3)
        self.assertEqual(vertical_crossings(vertical_walk(3, 1)), 0)

    def test_rank_two(self):
        """ Test if the loop of 𝕞(2, (2, -1)) is carried to γ_Pic.
        """
        walk = walk_from_matrix(canonical_sequence(2, (2, -1)))
        self.assertTrue(walks_equivalent(apply_word(walk, normalize_to_pic(walk)), pic_walk(2)))

    def test_three_punctures(self):
        """ Test if the loop of 𝕞(3, (0, -1, -1)) is carried to γ_Pic and not just to its class.
        """
        walk = walk_from_matrix(canonical_sequence(3, (0, -1, -1)))
        self.assertTrue(walks_equivalent(apply_word(walk, normalize_to_pic(walk)), pic_walk(3)))

    def test_twisted_pic(self):
        """ Test if a twisted image of γ_Pic on three punctures is carried back to γ_Pic.
        """
        word = TwistWord(3, [(Generator(VERT, 0), 1), (Generator(PIC), -1), (Generator(VERT, 2), 1),
                             (Generator(PIC), 1)])
        walk = apply_word(pic_walk(3), word)
        self.assertTrue(walks_equivalent(apply_word(walk, normalize_to_pic(walk)), pic_walk(3)))


if __name__ == '__main__':
    unittest.main()
