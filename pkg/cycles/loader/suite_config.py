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
import sys

import yaml

from cycles import settings
from cycles.bundles.sequences import COLUMN, COND2_MODES, T_RANGES

logger = logging.getLogger(__name__)


class VerificationSuiteConfig:
    """
    A class used to hold the bounds and switches of a verification sweep.

    Values come from the defaults, then from an optional YAML file, then from explicit
    overrides such as command line flags.

    ...

    Attributes
    ----------
    n_max : int
        largest number of components examined.

    r_max : int
        largest rank examined.

    entry_bound : int
        random sequence entries are drawn from [-entry_bound, entry_bound].

    sample_count : int
        number of random samples per sampled check; 0 skips them.

    field_prime : int
        characteristic of the field used by the homotopy oracle.

    seed : int
        seed of every random draw in the sweep.

    t_range : str
        shift range of the pattern condition, "column" or "all".

    cond2 : str
        reading of the column gap condition, "column" or "literal".
    """

    positive_fields = ['n_max', 'r_max', 'entry_bound']
    non_negative_fields = ['sample_count', 'seed']
    choice_fields = {'t_range': T_RANGES, 'cond2': COND2_MODES}

    def __init__(self, configuration_file_path=None, **overrides):
        """
        Parameters
        ----------
        configuration_file_path : str, optional
            The path for a YAML configuration file.

        overrides : dict
            Field values taking precedence over the file; None values are ignored.
        """

        self.n_max = 2
        self.r_max = 3
        self.entry_bound = 2
        self.sample_count = 50
        self.field_prime = settings.field_prime()
        self.seed = 0
        self.t_range = COLUMN
        self.cond2 = COLUMN

        if configuration_file_path:
            self.__apply(self._load_data(configuration_file_path))
        self.__apply({field: value for field, value in overrides.items() if value is not None})

    def _load_data(self, configuration_file_path):
        """Loads the contents of a YAML configuration file.

        Parameters
        ----------
        configuration_file_path : str
            Path for the YAML configuration file to load.
        """

        if not os.path.isfile(configuration_file_path):
            print(f'Configuration file "{configuration_file_path}" does not exist.', file=sys.stderr)
            sys.exit(1)

        # Ensure proper extension file.
        _, extension = os.path.splitext(configuration_file_path)
        if extension not in ['.yaml', '.yml']:
            print(f'Unsupported type "{extension}" for configuration file', file=sys.stderr)
            sys.exit(1)

        with open(configuration_file_path, 'r') as configuration_file:
            yaml_data = yaml.safe_load(configuration_file)

        if not yaml_data:
            print('The configuration file is empty', file=sys.stderr)
            sys.exit(1)
        if not isinstance(yaml_data, dict):
            print('The configuration file must hold a mapping of fields', file=sys.stderr)
            sys.exit(1)
        return yaml_data

    def __apply(self, yaml_data):
        """Validates and stores configuration fields.

        Parameters
        ----------
        yaml_data : dict
            Field values, from a file or from overrides.
        """

        for field, value in yaml_data.items():

            if field in self.positive_fields or field in self.non_negative_fields:
                try:
                    value = int(value)
                except (TypeError, ValueError):
                    print(f'Field "{field}" must be an integer, got "{value}"', file=sys.stderr)
                    sys.exit(1)
                lowest = 1 if field in self.positive_fields else 0
                if value < lowest:
                    print(f'Field "{field}" must be at least {lowest}, got {value}', file=sys.stderr)
                    sys.exit(1)

            elif field in self.choice_fields:
                if value not in self.choice_fields[field]:
                    print(f'Field "{field}" must be one of {self.choice_fields[field]}, got "{value}"', file=sys.stderr)
                    sys.exit(1)

            elif field == 'field_prime':
                try:
                    value = settings.field_prime(value)
                except ValueError as error:
                    print(error, file=sys.stderr)
                    sys.exit(1)

            else:
                print(f'Unknown configuration field "{field}"', file=sys.stderr)
                sys.exit(1)

            setattr(self, field, value)

    def to_dict(self):
        return {field: getattr(self, field) for field in
                ['n_max', 'r_max', 'entry_bound', 'sample_count', 'field_prime', 'seed', 't_range', 'cond2']}
