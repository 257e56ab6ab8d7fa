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

logger = logging.getLogger(__name__)

# Characteristic of the prime field used by the homotopy oracle.
DEFAULT_FIELD_PRIME = 32003
FIELD_PRIME_VARIABLE = 'CCC_FIELD_PRIME'

# Products of two residues must fit in a signed 64 bit integer.
MAX_FIELD_PRIME = 2 ** 31

# Bounds of the exhaustive search for simple sequences.
N_MAX = 3
R_MAX = 6


def is_prime(value):
    """Trial division primality test, enough for field characteristics."""
    if value < 2:
        return False
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1
    return True


def field_prime(override=None):
    """Returns the characteristic of the prime field in use.

    Precedence: explicit override, then the environment variable, then the default.

    Parameters
    ----------
    override : int or str, optional
        A value passed on the command line.

    Returns
    -------
    int
        an odd prime.
    """

    value = override if override is not None else os.environ.get(FIELD_PRIME_VARIABLE)
    if value is None:
        return DEFAULT_FIELD_PRIME

    try:
        prime = int(value)
    except (TypeError, ValueError):
        raise ValueError(f'Field prime "{value}" is not an integer')

    if prime >= MAX_FIELD_PRIME:
        raise ValueError(f'Field prime "{value}" is not below {MAX_FIELD_PRIME}')
    # Ensure the characteristic avoids 2, where signs vanish.
    if prime < 3 or not is_prime(prime):
        raise ValueError(f'Field prime "{value}" is not an odd prime')

    logger.debug('Using field prime %d', prime)
    return prime
