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

import io
import os
import tempfile
import unittest
from unittest import mock

from cycles import settings
from cycles.bundles.sequences import ALL, LITERAL
from cycles.loader.suite_config import VerificationSuiteConfig


class TestVerificationSuiteConfig(unittest.TestCase):

    __yaml_text = 'n_max: 1\nr_max: 4\nsample_count: 3\nt_range: all\ncond2: literal\n'

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def __write(self, name, text):
        path = os.path.join(self.folder.name, name)
        with open(path, 'w') as configuration_file:
            configuration_file.write(text)
        return path

    @mock.patch.dict(os.environ, {}, clear=True)
    def test_defaults(self):
        """ Test if the defaults are used without a file or overrides.
        """
        config = VerificationSuiteConfig()
        self.assertEqual(config.to_dict(), {'n_max': 2, 'r_max': 3, 'entry_bound': 2, 'sample_count': 50,
                                            'field_prime': settings.DEFAULT_FIELD_PRIME, 'seed': 0,
                                            't_range': 'column', 'cond2': 'column'})

    def test_yaml_file(self):
        """ Test if fields are read from a YAML file.
        """
        config = VerificationSuiteConfig(self.__write('suite.yaml', self.__yaml_text))
        self.assertEqual((config.n_max, config.r_max, config.sample_count), (1, 4, 3))
        self.assertEqual((config.t_range, config.cond2), (ALL, LITERAL))

    def test_overrides(self):
        """ Test if explicit overrides win over the file and None is ignored.
        """
        config = VerificationSuiteConfig(self.__write('suite.yml', self.__yaml_text), r_max=2, seed=None)
        self.assertEqual(config.r_max, 2)
        self.assertEqual(config.seed, 0)

    def test_field_prime(self):
        """ Test if the field prime is validated.
        """
        self.assertEqual(VerificationSuiteConfig(field_prime='101').field_prime, 101)
        with self.assertRaises(SystemExit):
            VerificationSuiteConfig(field_prime=100)

    @mock.patch('sys.stderr', new_callable=io.StringIO)
    @mock.patch('sys.stdout', new_callable=io.StringIO)
    def test_missing_file(self, stdout, stderr):
        """ Test if a missing file exits with code 1 and reports on stderr only.
        """
        with self.assertRaises(SystemExit) as context:
            VerificationSuiteConfig(os.path.join(self.folder.name, 'missing.yaml'))
        self.assertEqual(context.exception.code, 1)
        self.assertIn('does not exist', stderr.getvalue())
        self.assertEqual(stdout.getvalue(), '')

    def test_extension(self):
        """ Test if files without a YAML extension are refused.
        """
        with self.assertRaises(SystemExit):
            VerificationSuiteConfig(self.__write('suite.json', self.__yaml_text))

    def test_empty_file(self):
        """ Test if an empty file is refused.
        """
        with self.assertRaises(SystemExit):
            VerificationSuiteConfig(self.__write('suite.yaml', ''))

    def test_invalid_values(self):
        """ Test if bad bounds, choices and unknown fields are refused.
        """
        for text in ['n_max: 0\n', 'sample_count: -1\n', 'r_max: three\n', 't_range: rows\n', 'colour: red\n']:
            with self.assertRaises(SystemExit):
                VerificationSuiteConfig(self.__write('suite.yaml', text))

    @mock.patch.object(VerificationSuiteConfig, '_VerificationSuiteConfig__apply')
    def test_overrides_applied(self, mock):
        """ Test if overrides are handed to the validation without None values.
        """
        VerificationSuiteConfig(n_max=3, seed=None)
        mock.assert_called_once_with({'n_max': 3})


if __name__ == '__main__':
    unittest.main()
