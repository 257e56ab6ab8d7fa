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
import os

from jinja2 import Template
from pkg_resources import resource_string

logger = logging.getLogger(__name__)


class Renderizer:
    """
    A class to render the planar representative of a simple loop as an SVG 1.1 file.

    The fundamental rectangle [0, n] x [0, 1] is drawn with its punctures as open circles
    at the integer points of the bottom edge.

    Attributes
    ----------
    output_file_path : str
        the path in which to place the SVG file.

    representative : PlanarRepresentative
        the loop being drawn.

    scale : int
        pixels per unit length.

    margin : int
        blank border around the rectangle, in pixels.
    """

    def __init__(self, output_file_path, representative, scale=160, margin=20):
        """
        Parameters
        ----------
        output_file_path : str
            the path in which to place the SVG file.

        representative : PlanarRepresentative
            the loop being drawn.

        scale : int
            pixels per unit length (default=160).

        margin : int
            blank border around the rectangle in pixels (default=20).
        """

        self.output_file_path = output_file_path
        self.representative = representative
        self.scale = scale
        self.margin = margin

        # Render output file
        self.__render()

    def __to_canvas(self, x, y):
        # SVG grows downwards.
        return self.margin + x * self.scale, self.margin + (1 - y) * self.scale

    def _create_folder(self, path):
        """Create the folder of the output file in case it does not exist already.

        Parameters
        ----------
        path : str
            Path where folder is to be created.
        """

        if path and not os.path.exists(path):
            os.makedirs(path)

    def render_text(self):
        """Returns the SVG document as a string."""

        representative = self.representative
        polylines = []
        for segment in representative.segments:
            for piece in segment.pieces():
                polylines.append([self.__to_canvas(x, y) for x, y in piece])

        template = Template(resource_string(__name__, 'templates/representative.svg.j2').decode('utf-8'))
        return template.render(
            width=representative.n * self.scale + 2 * self.margin,
            height=self.scale + 2 * self.margin,
            margin=self.margin,
            scale=self.scale,
            n=representative.n,
            r=representative.r,
            degrees=representative.degrees,
            polylines=polylines,
            marked_points=[self.__to_canvas(column, height) for column, height in representative.marked_points()],
            punctures=[self.__to_canvas(column, 0) for column in range(representative.n + 1)],
        )

    def __render(self):
        """Renders the SVG file."""

        self._create_folder(os.path.dirname(self.output_file_path))
        with open(self.output_file_path, 'w+') as output_file:
            output_file.write(self.render_text())
        logger.debug('Rendered %d segments to %s', len(self.representative), self.output_file_path)
