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

"""Cross-checks between the combinatorial model and the homotopy oracle.

Every check records how many cases passed and a replayable witness for each failure.
"""
import logging
import random
from itertools import product
from math import gcd

from cycles import settings
from cycles.bundles.peeling import extension_cone, peel_all
from cycles.bundles.representative import geometric_representative
from cycles.bundles.sequences import LITERAL, bdg_check, canonical_sequence, degree_multiset, enumerate_simple_candidates
from cycles.decoder.decoder import encode_matrix, encode_walk
from cycles.errors import NormalizationStuck
from cycles.homotopy.algebra import GentleAlgebra, dim_algebra
from cycles.homotopy.complexes import build_band_complex
from cycles.homotopy.morphisms import hom_total
from cycles.intersections.ribbon import intersections_general
from cycles.intersections.sequences import intersections_cvb, self_intersections
from cycles.twists.normalize import normalize_to_pic
from cycles.twists.twists import apply_word, twist_general, twist_vertical
from cycles.twists.words import PIC, VERT, Generator, TwistWord
from cycles.walks.letters import pic_walk, vertical_walk, walks_equivalent
from cycles.walks.matrices import LoopMatrix, homology_class, walk_from_matrix

logger = logging.getLogger(__name__)

# Largest n for the brute-force count of the path basis.
ALGEBRA_N_MAX = 5

# Normalization is checked on at least this many punctures.
NORMALIZATION_N_MAX = 3

# Longest random twist word applied to γ_Pic.
TWIST_WORD_MAX = 4

# Oracle pairs drawn per sample.
ORACLE_PAIRS_PER_SAMPLE = 4


class CheckResult:
    """
    Pass and failure counts of one check.

    ...

    Attributes
    ----------
    name : str
        identifier of the check.

    passed : int
        number of cases which agreed.

    failures : list
        one witness dict per failed case.

    deviations : list
        expected disagreements, reported but not counted as failures.
    """

    def __init__(self, name):
        self.name = name
        self.passed = 0
        self.failures = []
        self.deviations = []

    def record(self, ok, witness):
        if ok:
            self.passed += 1
        else:
            self.failures.append(witness)
        return ok

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {'passed': self.passed, 'failed': len(self.failures), 'failures': self.failures,
                'deviations': self.deviations}


class VerificationReport:
    """Results of every check of a sweep, keyed by check name."""

    def __init__(self, config):
        self.config = config
        self.checks = {}

    def check(self, name):
        if name not in self.checks:
            self.checks[name] = CheckResult(name)
        return self.checks[name]

    @property
    def ok(self):
        return all(check.ok for check in self.checks.values())

    @property
    def mismatches(self):
        return sum(len(check.failures) for check in self.checks.values())

    def to_dict(self):
        return {
            'config': self.config.to_dict(),
            'ok': self.ok,
            'mismatches': self.mismatches,
            'checks': {name: check.to_dict() for name, check in sorted(self.checks.items())},
        }


def coprime_classes(n, r, bound):
    """Degree vectors in [-bound, bound]^n whose total is coprime to r."""
    return [degrees for degrees in product(range(-bound, bound + 1), repeat=n) if gcd(r, sum(degrees)) == 1]


def random_matrix(generator, config, n=None, r=None):
    """A uniformly drawn primitive sequence, resampled until primitive."""

    n = n or generator.randint(1, config.n_max)
    r = r or generator.randint(1, config.r_max)
    while True:
        entries = [generator.randint(-config.entry_bound, config.entry_bound) for _ in range(n * r)]
        matrix = LoopMatrix(n, r, entries)
        if matrix.is_primitive():
            return matrix


def random_coprime(generator, config, r_min=1, n_max=None):
    """A random coprime pair (r, 𝕕) within the configured bounds."""

    while True:
        n = generator.randint(1, n_max or config.n_max)
        r = generator.randint(r_min, max(r_min, config.r_max))
        degrees = tuple(generator.randint(-config.entry_bound, config.entry_bound) for _ in range(n))
        if gcd(r, sum(degrees)) == 1:
            return r, degrees


class VerificationSuite:
    """
    Runs every cross-check for a VerificationSuiteConfig.

    ...

    Attributes
    ----------
    config : VerificationSuiteConfig
        bounds, seed and switches of the sweep.

    report : VerificationReport
        results gathered so far.
    """

    checks = ['check_algebra', 'check_canonical_sequences', 'check_uniqueness', 'check_oracle',
              'check_spherical', 'check_peeling', 'check_twists', 'check_normalization']

    def __init__(self, config):
        self.config = config
        self.report = VerificationReport(config)
        self.__algebras = {}

    def __algebra(self, n):
        if n not in self.__algebras:
            self.__algebras[n] = GentleAlgebra(n)
        return self.__algebras[n]

    def __generator(self, name):
        # One stream per check keeps checks independent of each other.
        return random.Random(f'{self.config.seed}:{name}')

    def band(self, matrix, lam=1):
        """Band complex of a sequence, with its d² = 0 check recorded."""

        complex_ = build_band_complex(self.__algebra(matrix.n), matrix, lam, self.config.field_prime)
        self.report.check('structure').record(complex_.is_complex(),
                                              {'check': 'd_squared', 'matrix': encode_matrix(matrix), 'lam': lam})
        return complex_

    def check_algebra(self):
        result = self.report.check('structure')
        for n in range(1, ALGEBRA_N_MAX + 1):
            dimension = dim_algebra(n)
            result.record(dimension == 9 * n, {'check': 'dim_algebra', 'n': n, 'dimension': dimension})

    def check_canonical_sequences(self):
        """Simplicity conditions, column contents, self-intersections and planar crossings of canonical sequences."""

        config = self.config
        simple = self.report.check('canonical_sequences')
        for n in range(1, config.n_max + 1):
            for r in range(1, config.r_max + 1):
                for degrees in coprime_classes(n, r, config.entry_bound):
                    matrix = canonical_sequence(r, degrees)
                    witness = {'r': r, 'degrees': list(degrees), 'matrix': encode_matrix(matrix)}

                    report = bdg_check(matrix, config.t_range, config.cond2)
                    if not report.passed and config.cond2 == LITERAL and report.coprime_ok and report.pattern_ok:
                        simple.deviations.append(dict(witness, reason='literal column gap'))
                    else:
                        simple.record(report.passed, dict(witness, check='bdg', witnesses=report.witnesses))

                    simple.record(matrix.multidegree == tuple(degrees), dict(witness, check='multidegree'))
                    columns_ok = all(sorted(matrix.column(column)) == degree_multiset(r, degrees[column])
                                     for column in range(n))
                    simple.record(columns_ok, dict(witness, check='degree_multiset'))
                    simple.record(self_intersections(matrix).count == 0, dict(witness, check='self_intersections'))
                    crossings = geometric_representative(r, degrees).crossing_count()
                    simple.record(crossings == 0, dict(witness, check='representative', crossings=crossings))

    def check_uniqueness(self):
        """Exhaustive search finds exactly the canonical class."""

        config = self.config
        result = self.report.check('uniqueness')
        for n in range(1, min(config.n_max, settings.N_MAX) + 1):
            for r in range(1, min(config.r_max, settings.R_MAX) + 1):
                for degrees in product(range(r), repeat=n):
                    if gcd(r, sum(degrees)) != 1:
                        continue
                    classes = enumerate_simple_candidates(n, r, degrees, config.t_range, config.cond2)
                    expected = canonical_sequence(r, degrees).canonical()
                    result.record(classes == [expected], {'n': n, 'r': r, 'degrees': list(degrees),
                                                          'classes': [list(matrix.entries) for matrix in classes]})

    def check_oracle(self):
        """Intersection counts of sequences agree with the total Hom dimension of their bands."""

        config = self.config
        generator = self.__generator('oracle')
        result = self.report.check('oracle_equivalence')
        for _ in range(ORACLE_PAIRS_PER_SAMPLE * config.sample_count):
            first = random_matrix(generator, config)
            second = random_matrix(generator, config, n=first.n)
            if first.same_loop(second):
                continue
            count = intersections_cvb(first, second).count
            total = hom_total(self.band(first), self.band(second, 2))
            result.record(count == total, {'first': encode_matrix(first), 'second': encode_matrix(second),
                                           'intersections': count, 'hom_total': total})

    def check_spherical(self):
        """Bands of simple bundles have a two dimensional graded endomorphism ring."""

        generator = self.__generator('spherical')
        result = self.report.check('spherical_endomorphisms')
        for _ in range(self.config.sample_count):
            r, degrees = random_coprime(generator, self.config)
            matrix = canonical_sequence(r, degrees)
            band = self.band(matrix)
            total = hom_total(band, band)
            result.record(total == 2, {'r': r, 'degrees': list(degrees), 'hom_total': total})

    def check_peeling(self):
        """Peeled line bundles telescope to 𝕕 and the extension cone is the remaining band."""

        generator = self.__generator('peeling')
        result = self.report.check('extension_peeling')
        for _ in range(self.config.sample_count):
            r, degrees = random_coprime(generator, self.config, r_min=2)
            matrix = canonical_sequence(r, degrees)
            witness = {'r': r, 'degrees': list(degrees), 'matrix': encode_matrix(matrix)}

            lines = peel_all(matrix)
            telescoped = tuple(sum(line[column] for line in lines) for column in range(matrix.n))
            result.record(len(lines) == r and telescoped == tuple(degrees), dict(witness, check='telescoping'))

            try:
                found = extension_cone(self.__algebra(matrix.n), matrix, self.config.field_prime)
            except ValueError as error:
                result.record(False, dict(witness, check='extension_cone', error=str(error)))
                continue
            result.record(found is not None, dict(witness, check='extension_cone'))

    def check_twists(self):
        """Walk twists agree with sequence twists, act on homology and preserve intersections."""

        config = self.config
        generator = self.__generator('twists')
        consistency = self.report.check('twist_consistency')
        invariance = self.report.check('twist_invariance')

        for _ in range(config.sample_count):
            matrix = random_matrix(generator, config)
            column = generator.randrange(matrix.n)
            power = generator.choice([1, -1])
            walk = walk_from_matrix(matrix)
            witness = {'matrix': encode_matrix(matrix), 'column': column, 'power': power}

            twisted = twist_general(walk, vertical_walk(matrix.n, column), power)
            expected = walk_from_matrix(twist_vertical(matrix, column, power))
            consistency.record(walks_equivalent(twisted, expected), dict(witness, check='vertical'))

            for curve in (pic_walk(matrix.n), vertical_walk(matrix.n, column)):
                consistency.record(self.__homology_action_holds(walk, curve, power),
                                   dict(witness, check='homology', curve=encode_walk(curve)))

            other = walk_from_matrix(random_matrix(generator, config, n=matrix.n))
            if walks_equivalent(walk, other):
                continue
            curve = pic_walk(matrix.n) if generator.random() < 0.5 else vertical_walk(matrix.n, column)
            before = intersections_general(walk, other).count
            after = intersections_general(twist_general(walk, curve, power), twist_general(other, curve, power)).count
            invariance.record(before == after, dict(witness, other=encode_walk(other), curve=encode_walk(curve),
                                                    before=before, after=after))

    def __homology_action_holds(self, walk, curve, power):
        rank, degrees = homology_class(walk)
        curve_rank, curve_degrees = homology_class(curve)
        pairing = rank * sum(curve_degrees) - sum(degrees) * curve_rank
        expected = (rank + power * pairing * curve_rank,
                    tuple(degree + power * pairing * curve_degree for degree, curve_degree in zip(degrees, curve_degrees)))
        twisted = homology_class(twist_general(walk, curve, power))
        return (twisted.rank, twisted.multidegree) == expected

    def check_normalization(self):
        """Spherical loops are carried to γ_Pic by the twists normalize_to_pic finds.

        Inputs are canonical bundle walks and images of γ_Pic under random twist words.
        """

        generator = self.__generator('normalization')
        result = self.report.check('normalization')
        n_max = max(self.config.n_max, NORMALIZATION_N_MAX)
        for _ in range(self.config.sample_count):
            r, degrees = random_coprime(generator, self.config, n_max=n_max)
            self.__normalize(result, walk_from_matrix(canonical_sequence(r, degrees)))

            n = generator.randint(1, n_max)
            word = TwistWord(n)
            for _ in range(generator.randint(1, TWIST_WORD_MAX)):
                column = generator.randrange(n)
                word.append(Generator(PIC) if generator.random() < 0.5 else Generator(VERT, column),
                            generator.choice([1, -1]))
            self.__normalize(result, apply_word(pic_walk(n), word))

    def __normalize(self, result, walk):
        witness = {'walk': encode_walk(walk)}
        try:
            word = normalize_to_pic(walk)
        except NormalizationStuck as error:
            result.record(False, dict(witness, error=str(error)))
            return
        final = apply_word(walk, word)
        result.record(walks_equivalent(final, pic_walk(walk.n)),
                      dict(witness, word=word.to_list(), final=encode_walk(final)))

    def run(self):
        """Runs every check and returns the report."""

        if self.config.sample_count == 0:
            logger.debug('Sample count is zero, nothing to verify')
            return self.report

        for name in self.checks:
            getattr(self, name)()
            logger.debug('%s done', name)

        logger.debug('Verification found %d mismatches', self.report.mismatches)
        return self.report


def verify_suite(config):
    """Runs every cross-check of a sweep.

    Parameters
    ----------
    config : VerificationSuiteConfig
        bounds, seed and switches.

    Returns
    -------
    VerificationReport
    """

    return VerificationSuite(config).run()
