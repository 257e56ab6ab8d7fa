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

"""Curves on punctured tori and complexes over cycles of projective lines.

Loops are given as a JSON file, "-" for the standard input, or inline JSON: either a
walk {"n": .., "letters": [{"kind": "eps"|"kappa", "col": .., "sign": 1|-1}, ..]} or a
sequence {"n": .., "r": .., "entries": [..]}. Degree vectors are comma separated.

Usage:
  kodaira seq [options] [--] <r> <degrees>
  kodaira check-simple [options] <loop>
  kodaira intersect [options] <loop> <other>
  kodaira self-intersect [options] <loop>
  kodaira hom [options] <loop> <other>
  kodaira cone [options] <loop> <other>
  kodaira build [options] <loop>
  kodaira twist [options] --gen=<generator> <loop>
  kodaira normalize [options] <loop>
  kodaira peel [options] <loop>
  kodaira render [options] --svg=<path> [--] <r> <degrees>
  kodaira verify [options]
  kodaira dim-lambda [options] <n>
  kodaira (-h | --help)

Options:
  -h --help               Show this screen.
  --json                  Print compact single-line JSON.
  --verbose               Log debug messages on stderr.
  --n=<n>                 Largest number of components in a verification sweep.
  --r=<r>                 Largest rank in a verification sweep.
  --config=<path>         YAML file with verification settings.
  --seed=<seed>           Random seed.
  --samples=<count>       Random samples per sampled verification check.
  --field-prime=<p>       Characteristic of the ground field.
  --t-range=<range>       Shifts examined by the pattern condition: column or all.
  --cond2=<mode>          Reading of the column gap condition: column or literal.
  --gen=<generator>       Twist generator: pic or vert:i.
  --pow=<power>           Twist exponent [default: 1].
  --shift=<s>             Degree of the morphism whose cone is taken [default: 0].
  --lam=<lam>             Band scalar of the first loop [default: 1].
  --mu=<mu>               Band scalar of the second loop [default: 1].
  --svg=<path>            Where to write the SVG drawing.
"""
import json
import logging
import sys

from docopt import DocoptExit, docopt

from cycles import settings
from cycles.bundles.peeling import extension_peel
from cycles.bundles.representative import geometric_representative
from cycles.bundles.sequences import COLUMN, COND2_MODES, T_RANGES, bdg_check, canonical_sequence
from cycles.decoder.decoder import Decoder, encode_matrix, encode_walk
from cycles.errors import InputError, KodairaError
from cycles.homotopy.algebra import GentleAlgebra, dim_algebra
from cycles.homotopy.bands import band_form, is_band_shaped
from cycles.homotopy.complexes import build_band_complex, complex_from_walk
from cycles.homotopy.morphisms import ChainMap, cone, hom_basis, hom_dims, random_combination
from cycles.intersections.ribbon import intersections_general, self_intersections_general
from cycles.intersections.sequences import intersections_cvb, self_intersections
from cycles.intersections.spherical import classify_spherical
from cycles.loader.suite_config import VerificationSuiteConfig
from cycles.renderizer.renderizer import Renderizer
from cycles.twists.normalize import normalize_to_pic
from cycles.twists.twists import twist_power, twist_vertical
from cycles.twists.words import VERT, parse_generator
from cycles.verification.suite import verify_suite
from cycles.walks.letters import is_cvb
from cycles.walks.matrices import LoopMatrix, matrix_from_walk, walk_from_matrix

logger = logging.getLogger('kodaira')


def _integer(arguments, name):
    value = arguments[name]
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        raise InputError(f'{name} expects an integer, got "{value}"')


def _choice(arguments, name, choices):
    value = arguments[name]
    if value is not None and value not in choices:
        raise InputError(f'{name} expects one of {", ".join(choices)}, got "{value}"')
    return value


def _degrees(text):
    try:
        return tuple(int(part) for part in text.split(','))
    except ValueError:
        raise InputError(f'Degree vector "{text}" is not a comma separated list of integers')


def _as_walk(loop):
    return walk_from_matrix(loop) if isinstance(loop, LoopMatrix) else loop


def _as_matrix(loop):
    return loop if isinstance(loop, LoopMatrix) else matrix_from_walk(loop)


def _is_sequence(loop):
    return isinstance(loop, LoopMatrix) or is_cvb(loop)


def _complex(loop, lam, prime):
    algebra = GentleAlgebra(loop.n)
    if isinstance(loop, LoopMatrix):
        return build_band_complex(algebra, loop, lam, prime)
    return complex_from_walk(algebra, loop, lam, prime)


def _complex_summary(complex_):
    summary = complex_.to_dict()
    summary['d_squared_zero'] = complex_.is_complex()
    summary['minimal'] = complex_.is_minimal()
    if is_band_shaped(complex_):
        tokens, scalar, lowest = band_form(complex_)
        summary['band'] = {'word': [token[0] for token in tokens], 'scalar': scalar, 'lowest_degree': lowest}
    return summary


def command_seq(arguments, decoder, prime):
    r = _integer(arguments, '<r>')
    degrees = _degrees(arguments['<degrees>'])
    matrix = canonical_sequence(r, degrees)
    return dict(encode_matrix(matrix), degrees=list(degrees), rows=matrix.rows)


def command_check_simple(arguments, decoder, prime):
    matrix = _as_matrix(decoder.decode(arguments['<loop>']))
    report = bdg_check(matrix, _choice(arguments, '--t-range', T_RANGES) or COLUMN,
                       _choice(arguments, '--cond2', COND2_MODES) or COLUMN)
    return dict(report.to_dict(), matrix=encode_matrix(matrix))


def command_intersect(arguments, decoder, prime):
    first, second = decoder.decode(arguments['<loop>']), decoder.decode(arguments['<other>'])
    if _is_sequence(first) and _is_sequence(second):
        return dict(intersections_cvb(_as_matrix(first), _as_matrix(second)).to_dict(), method='sequence')
    return dict(intersections_general(_as_walk(first), _as_walk(second)).to_dict(), method='walk')


def command_self_intersect(arguments, decoder, prime):
    loop = decoder.decode(arguments['<loop>'])
    walk = _as_walk(loop)
    if _is_sequence(loop):
        report, method = self_intersections(_as_matrix(loop)), 'sequence'
    else:
        report, method = self_intersections_general(walk), 'walk'
    return dict(report.to_dict(), method=method, classification=classify_spherical(walk).value)


def command_hom(arguments, decoder, prime):
    first = _complex(decoder.decode(arguments['<loop>']), _integer(arguments, '--lam'), prime)
    second = _complex(decoder.decode(arguments['<other>']), _integer(arguments, '--mu'), prime)
    dims = hom_dims(first, second)
    return {'dims': {str(shift): dimension for shift, dimension in sorted(dims.items())},
            'total': sum(dims.values()), 'prime': prime}


def command_cone(arguments, decoder, prime):
    first = _complex(decoder.decode(arguments['<loop>']), _integer(arguments, '--lam'), prime)
    second = _complex(decoder.decode(arguments['<other>']), _integer(arguments, '--mu'), prime)
    shift = _integer(arguments, '--shift')

    basis = hom_basis(first, second, shift)
    morphism = random_combination(basis, prime, _integer(arguments, '--seed') or 0)
    if morphism is None:
        morphism = ChainMap(first, second, shift)
    return dict(_complex_summary(cone(morphism)), shift=shift, hom_dim=len(basis))


def command_build(arguments, decoder, prime):
    return _complex_summary(_complex(decoder.decode(arguments['<loop>']), _integer(arguments, '--lam'), prime))


def command_twist(arguments, decoder, prime):
    loop = decoder.decode(arguments['<loop>'])
    power = _integer(arguments, '--pow')
    try:
        generator = parse_generator(arguments['--gen'], loop.n)
    except ValueError as error:
        raise InputError(str(error))

    twisted = twist_power(_as_walk(loop), generator.curve(loop.n), power)
    result = {'generator': str(generator), 'power': power, 'walk': encode_walk(twisted)}
    if isinstance(loop, LoopMatrix) and generator.kind == VERT:
        result['matrix'] = encode_matrix(twist_vertical(loop, generator.column, power))
    elif is_cvb(twisted):
        result['matrix'] = encode_matrix(matrix_from_walk(twisted))
    return result


def command_normalize(arguments, decoder, prime):
    walk = _as_walk(decoder.decode(arguments['<loop>']))
    return {'walk': encode_walk(walk), 'word': normalize_to_pic(walk).to_list()}


def command_peel(arguments, decoder, prime):
    matrix = _as_matrix(decoder.decode(arguments['<loop>']))
    steps = []
    current = matrix
    while current.r > 1:
        line, current = extension_peel(current)
        steps.append({'line': list(line), 'remaining': encode_matrix(current)})
    lines = [step['line'] for step in steps] + [list(current.multidegree)]
    return {'matrix': encode_matrix(matrix), 'steps': steps, 'lines': lines}


def command_render(arguments, decoder, prime):
    representative = geometric_representative(_integer(arguments, '<r>'), _degrees(arguments['<degrees>']))
    Renderizer(arguments['--svg'], representative)
    return dict(representative.to_dict(), svg=arguments['--svg'])


def command_verify(arguments, decoder, prime):
    config = VerificationSuiteConfig(
        arguments['--config'],
        n_max=_integer(arguments, '--n'),
        r_max=_integer(arguments, '--r'),
        seed=_integer(arguments, '--seed'),
        sample_count=_integer(arguments, '--samples'),
        field_prime=_integer(arguments, '--field-prime'),
        t_range=_choice(arguments, '--t-range', T_RANGES),
        cond2=_choice(arguments, '--cond2', COND2_MODES),
    )
    return verify_suite(config).to_dict()


def command_dim_lambda(arguments, decoder, prime):
    n = _integer(arguments, '<n>')
    return {'n': n, 'dimension': dim_algebra(n)}


COMMANDS = {
    'seq': command_seq,
    'check-simple': command_check_simple,
    'intersect': command_intersect,
    'self-intersect': command_self_intersect,
    'hom': command_hom,
    'cone': command_cone,
    'build': command_build,
    'twist': command_twist,
    'normalize': command_normalize,
    'peel': command_peel,
    'render': command_render,
    'verify': command_verify,
    'dim-lambda': command_dim_lambda,
}


def run_command(argv, stdin=None, stdout=None):
    """Runs one subcommand and returns its exit code.

    Parameters
    ----------
    argv : list of str
        the command line without the program name.

    stdin, stdout : file, optional
        streams used for "-" inputs and for the JSON output.

    Returns
    -------
    int
        0 on success, 1 on a domain error or a failed verification, 2 on a usage error.
    """

    stdout = stdout if stdout is not None else sys.stdout
    try:
        arguments = docopt(__doc__, argv=argv)
    except DocoptExit as error:
        print(error, file=sys.stderr)
        return 2
    except SystemExit as error:
        # --help
        return error.code or 0

    logging.basicConfig(level=logging.DEBUG if arguments['--verbose'] else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

    name = next(command for command in COMMANDS if arguments[command])
    try:
        prime = settings.field_prime(_integer(arguments, '--field-prime'))
        result = COMMANDS[name](arguments, Decoder(stdin), prime)
    except InputError as error:
        print(f'{error}\n{__doc__.split("Usage:")[1].split("Options:")[0].rstrip()}', file=sys.stderr)
        return 2
    except (KodairaError, ValueError) as error:
        print(f'{type(error).__name__}: {error}', file=sys.stderr)
        return 1
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 1

    if arguments['--json']:
        stdout.write(json.dumps(result, separators=(',', ':'), sort_keys=True) + '\n')
    else:
        stdout.write(json.dumps(result, indent=2, sort_keys=True) + '\n')

    if name == 'verify' and not result['ok']:
        return 1
    return 0


# Application entry point
def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == '__main__':
    main()
