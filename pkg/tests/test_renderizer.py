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

import os
import tempfile
import unittest

from cycles.bundles.representative import geometric_representative
from cycles.renderizer.renderizer import Renderizer


class TestRenderizer(unittest.TestCase):

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()
        self.representative = geometric_representative(2, (2, -1))

    def tearDown(self):
        self.folder.cleanup()

    def test_render_file(self):
        """ Test if an SVG file is written, creating missing folders.
        """
        path = os.path.join(self.folder.name, 'drawings', 'loop.svg')
        Renderizer(path, self.representative)
        self.assertTrue(os.path.isfile(path))
        with open(path) as svg_file:
            text = svg_file.read()
        self.assertIn('<svg', text)
        self.assertIn('multidegree (2, -1)', text)

    def test_polylines(self):
        """ Test if every piece of every segment becomes a polyline.
        """
        path = os.path.join(self.folder.name, 'loop.svg')
        text = Renderizer(path, self.representative).render_text()
        pieces = sum(len(segment.pieces()) for segment in self.representative.segments)
        self.assertEqual(text.count('<polyline'), pieces)

    def test_canvas_size(self):
        """ Test if the canvas spans n units plus the margins.
        """
        path = os.path.join(self.folder.name, 'loop.svg')
        text = Renderizer(path, self.representative, scale=100, margin=10).render_text()
        self.assertIn('width="220"', text)
        self.assertIn('height="120"', text)


if __name__ == '__main__':
    unittest.main()
