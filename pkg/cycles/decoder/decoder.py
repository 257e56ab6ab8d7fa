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

import json
import logging
import os
import sys

from cycles.errors import InputError
from cycles.walks.letters import EPS, KAPPA, CyclicWalk, Letter
from cycles.walks.matrices import LoopMatrix

logger = logging.getLogger(__name__)


def encode_walk(walk):
    return {
        'n': walk.n,
        'letters': [{'kind': letter.kind, 'col': letter.column, 'sign': letter.sign} for letter in walk],
        'word': ' '.join(str(letter) for letter in walk),
    }


def encode_matrix(matrix):
    return {'n': matrix.n, 'r': matrix.r, 'entries': list(matrix.entries)}


class Decoder:
    """
    A class to decode loops given on the command line.

    A loop argument is either a path to a JSON file, "-" for the standard input, or the
    JSON text itself. Walks carry a "letters" list and sequences an "entries" list.
    ...

    Attributes
    ----------
    stdin : file
        stream read for the "-" argument.
    """

    # Fields required by each kind of loop document.
    __walk_fields = ['n', 'letters']
    __matrix_fields = ['n', 'entries']

    def __init__(self, stdin=None):
        self.stdin = stdin if stdin is not None else sys.stdin

    def read(self, argument):
        """Returns the parsed JSON document behind a loop argument.

        Parameters
        ----------
        argument : str
            a file path, "-" or inline JSON.

        Returns
        -------
        dict
        """

        if argument == '-':
            text = self.stdin.read()
        elif os.path.isfile(argument):
            try:
                with open(argument, 'r') as source:
                    text = source.read()
            except OSError as error:
                raise InputError(f'Input file "{argument}" could not be read: {error}')
        else:
            text = argument

        try:
            document = json.loads(text)
        except json.JSONDecodeError as error:
            raise InputError(f'Input "{argument}" is neither a readable file nor valid JSON: {error}')

        if not isinstance(document, dict):
            raise InputError(f'Input "{argument}" must be a JSON object')
        return document

    def __require(self, document, fields):
        for field in fields:
            if field not in document:
                raise InputError(f'Loop document lacks required field "{field}"')

    def __decode_letter(self, record):
        try:
            kind, column, sign = record['kind'], int(record['col']), int(record['sign'])
        except (KeyError, TypeError, ValueError):
            raise InputError(f'Letter {record} needs integer "col" and "sign" and a "kind"')
        if kind not in (EPS, KAPPA):
            raise InputError(f'Letter kind "{kind}" is neither "{EPS}" nor "{KAPPA}"')
        return Letter(kind, column, sign)

    def decode_walk(self, document):
        self.__require(document, self.__walk_fields)
        letters = [self.__decode_letter(record) for record in document['letters']]
        return CyclicWalk(int(document['n']), letters)

    def decode_matrix(self, document):
        self.__require(document, self.__matrix_fields)
        entries = document['entries']
        n = int(document['n'])
        r = int(document['r']) if 'r' in document else len(entries) // max(n, 1)
        return LoopMatrix(n, r, entries)

    def decode(self, argument):
        """Decodes a loop argument into a CyclicWalk or a LoopMatrix."""

        document = self.read(argument)
        if 'letters' in document:
            loop = self.decode_walk(document)
        elif 'entries' in document:
            loop = self.decode_matrix(document)
        else:
            raise InputError(f'Input "{argument}" has neither "letters" nor "entries"')

        logger.debug('Decoded %r', loop)
        return loop
