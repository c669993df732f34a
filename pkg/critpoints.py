# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import json
import logging
import multiprocessing
import os
import sys

from fractions import Fraction
from optparse import OptionParser

from manifestparser import TestManifest

import report
import utils

from bihom import (BezoutHypothesisError, BoundInputs, NotBihomogeneousError,
                   WindowTooSmallError, betti_bound, bezout_bound, bidegree_by_slicing,
                   biseries_canonical_form, critical_bound, minors_bound,
                   thom_milnor_bound)
from fiberstatus import ExitCode
from groebner import GenericityError
from lagrange import (HypothesisViolation, InputSystem, build_fiber_system,
                      build_lagrange, build_projection_system, lagrange_bezout_bound)
from options import load_options
from polycore import (LinearChange, PolynomialSyntaxError, bidegree_of, bihomogenize,
                      parse_polynomial)
from sampler import DEFAULT_SEED, SampleRunner
from systemfile import SystemFileError, read_system

COMMANDS = ('sample', 'bound', 'bidegree', 'biseries', 'lagrange')

LOGGER = None


def _split_items(values):
    items = []
    for value in values or []:
        items.extend(item for item in value.replace(',', ' ').split() if item)
    return items


def _parse_ints(values):
    return [int(item) for item in _split_items(values)]


def _parse_fractions(values):
    return [Fraction(item) for item in _split_items(values)]


def _parse_bidegrees(values):
    bidegrees = []
    for value in values or []:
        for pair in value.split():
            alpha, beta = pair.split(',')
            bidegrees.append((int(alpha), int(beta)))
    return bidegrees


def _input_system(path, options):
    system = read_system(path)
    if system.l_vars:
        raise SystemFileError('%s: multiplier block not allowed here' % path)
    return InputSystem(system.polys, assume_regular_sequence=options.regular)


def _bihomogeneous_system(path):
    system = read_system(path)
    if not system.l_vars:
        raise SystemFileError('%s: bi-homogeneous commands need "vars: X.. | L.."' % path)
    split = system.split
    if all(bidegree_of(f, split)[1] for f in system.polys):
        return system.polys, split
    LOGGER.info('%s is not bi-homogeneous; homogenizing both blocks', path)
    return [bihomogenize(f, split) for f in system.polys], split.homogenized()


def _write(options, text):
    if options.out:
        with open(options.out, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _dump(data):
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


def _runner(input, options):
    return SampleRunner(input, seed=options.seed, width=Fraction(options.width),
                        p=_parse_fractions(options.p) or None,
                        parallel=options.parallel, cross_check=options.cross_check,
                        retries_a=options.retries_a, retries_p=options.retries_p,
                        matrix_bound=options.matrix_bound,
                        separating_bound=options.separating_bound,
                        certification_width=Fraction(options.certification_width))


def run_sample(options):
    path = options.input_path
    if not path.endswith('.ini'):
        result = _runner(_input_system(path, options), options).run()
        return report.dump_report(result)
    manifest = TestManifest()
    manifest.read(path)
    reports = {}
    for entry in manifest.get():
        LOGGER.info('sampling %s', entry['name'])
        input = _input_system(entry['path'], options)
        if entry.get('regular', '').lower() == 'true':
            input.assume_regular_sequence = True
        reports[entry['name']] = report.report_to_dict(_runner(input, options).run())
    return _dump({'reports': reports})


def run_bound(options):
    degrees = _parse_ints(options.degrees)
    if not degrees and options.input_path:
        degrees = _input_system(options.input_path, options).degrees
    if not degrees:
        raise ValueError('bound needs --degrees or an input file')
    n = options.n
    s = options.s or len(degrees)
    if len(degrees) == 1 and s > 1:
        degrees = degrees * s
    if len(degrees) != s:
        raise ValueError('%d degrees given for s = %d' % (len(degrees), s))
    d = options.d if options.d >= 0 else n - s
    D = max(degrees)
    result = {
        'critical': critical_bound(degrees, n, options.regular),
        'betti': betti_bound(degrees, n, d, options.regular),
        'thom_milnor': thom_milnor_bound(D, n),
        'minors': minors_bound(D, n, d),
    }
    bidegrees = _parse_bidegrees(options.bidegrees)
    if bidegrees:
        result['bezout'] = bezout_bound(BoundInputs(n, options.k, bidegrees))
    if options.json:
        return _dump(result)
    return '%d\n' % result['bezout' if bidegrees else 'critical']


def run_bidegree(options):
    gens, split = _bihomogeneous_system(options.input_path)
    table, form = biseries_canonical_form(gens, split, window=options.window or None)
    entries = []
    for (d, e), value in sorted(form.C.items()):
        rng = utils.spawn_rng(options.seed, 'bidegree', d, e)
        entries.append({'d': d, 'e': e, 'canonical': value,
                        'slicing': bidegree_by_slicing(gens, split, d, e, rng)})
    return _dump({'D': form.D, 'n': form.n, 'k': form.k, 'bidegrees': entries})


def run_biseries(options):
    gens, split = _bihomogeneous_system(options.input_path)
    table, form = biseries_canonical_form(gens, split, window=options.window or None)

    def indexed(mapping, key):
        return [{'d': d, 'e': e, key: value} for (d, e), value in sorted(mapping.items())]
    return _dump({
        'n': form.n,
        'k': form.k,
        'D': form.D,
        'table': table.dims,
        'C': indexed(form.C, 'value'),
        'lower_terms': indexed(form.lower_terms, 'value'),
        'Q': [{'i': i, 'j': j, 'value': value} for (i, j), value in sorted(form.Q.items())],
    })


def run_lagrange(options):
    input = _input_system(options.input_path, options)
    if options.objective:
        system = build_lagrange(input, parse_polynomial(options.objective, input.varnames))
    elif options.depth >= 0:
        system = build_fiber_system(input, LinearChange.identity(input.n),
                                    _parse_fractions(options.p) or [0] * input.n,
                                    options.depth).base
    else:
        system = build_projection_system(input, LinearChange.identity(input.n))
    return '# bezout bound %d\n%s\n' % (lagrange_bezout_bound(system), system.text())


def setup_logging(options):
    global LOGGER

    loglevel = getattr(logging, options.loglevel, None)
    if not isinstance(loglevel, int) or logging.getLevelName(loglevel) != options.loglevel:
        sys.stderr.write('Invalid log level %s\n' % options.loglevel)
        return False

    logging.captureWarnings(True)
    formatstring = utils.getLoggerFormatString(loglevel)
    root_logger = logging.getLogger()
    root_logger.setLevel(loglevel)
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)
    streamhandler = logging.StreamHandler(stream=sys.stderr)
    streamhandler.setFormatter(logging.Formatter(formatstring))
    root_logger.addHandler(streamhandler)
    if options.logfile:
        filehandler = logging.FileHandler(options.logfile)
        filehandler.setFormatter(logging.Formatter(formatstring))
        root_logger.addHandler(filehandler)
    LOGGER = utils.getLogger()
    return True


def run(options):
    """Run one job and return its exit code."""
    global LOGGER
    if LOGGER is None:
        LOGGER = utils.getLogger()
    handlers = {
        'sample': run_sample,
        'bound': run_bound,
        'bidegree': run_bidegree,
        'biseries': run_biseries,
        'lagrange': run_lagrange,
    }
    if options.command not in handlers:
        sys.stderr.write('Unknown command %r; expected one of %s\n' %
                         (options.command, ', '.join(COMMANDS)))
        return ExitCode.USAGE
    if options.command != 'bound' and not options.input_path:
        sys.stderr.write('%s needs an input file\n' % options.command)
        return ExitCode.USAGE
    LOGGER.debug('options: %s', options)
    try:
        _write(options, handlers[options.command](options))
    except (HypothesisViolation, GenericityError) as e:
        sys.stderr.write('Hypothesis violation: %s\n' % e)
        return ExitCode.HYPOTHESIS
    except (IOError, OSError) as e:
        sys.stderr.write('%s\n' % e)
        return ExitCode.USAGE
    except (SystemFileError, PolynomialSyntaxError, BezoutHypothesisError,
            NotBihomogeneousError, WindowTooSmallError, ValueError) as e:
        sys.stderr.write('Error: %s\n' % e)
        return ExitCode.USAGE
    return ExitCode.OK


def main(argv=None):
    multiprocessing.current_process().name = 'critpoints'

    parser = OptionParser(usage='%prog [options] {sample,bound,bidegree,biseries,lagrange} '
                          '[input.sys|manifest.ini]')
    parser.add_option('--config', action='store', type='string', dest='config',
                      default=None,
                      help='ini file whose [settings] section supplies defaults for '
                      'options not given on the command line.')
    parser.add_option('--seed', action='store', type='int', dest='seed', default=None,
                      help='Master seed of every random choice. Defaults to %d.' %
                      DEFAULT_SEED)
    parser.add_option('--width', action='store', type='string', dest='width',
                      default=None,
                      help='Maximum width p/q of the reported boxes. '
                      'Defaults to 1/1048576.')
    parser.add_option('--regular', action='store_true', dest='regular', default=None,
                      help='Assume the equations form a regular sequence.')
    parser.add_option('--degrees', action='append', type='string', dest='degrees',
                      default=None,
                      help='Degrees D_1..D_s for the bound command, comma separated '
                      'or repeated.')
    parser.add_option('--bidegree', action='append', type='string', dest='bidegrees',
                      default=None,
                      help='Bi-degree alpha,beta of one equation; repeat for each '
                      'equation to get the bezout bound.')
    parser.add_option('--n', action='store', type='int', dest='n', default=None,
                      help='Number of variables for the bound command.')
    parser.add_option('--k', action='store', type='int', dest='k', default=None,
                      help='Size of the second block for the bezout bound.')
    parser.add_option('--s', action='store', type='int', dest='s', default=None,
                      help='Number of equations; defaults to the number of degrees.')
    parser.add_option('--d', action='store', type='int', dest='d', default=None,
                      help='Dimension of the variety; defaults to n - s.')
    parser.add_option('--p', action='append', type='string', dest='p', default=None,
                      help='Pinned values p_1..p_d, comma separated. Defaults to 0.')
    parser.add_option('--objective', action='store', type='string', dest='objective',
                      default=None,
                      help='Objective polynomial for the lagrange command.')
    parser.add_option('--depth', action='store', type='int', dest='depth', default=None,
                      help='Emit the fiber system of this depth in the lagrange '
                      'command.')
    parser.add_option('--json', action='store_true', dest='json', default=None,
                      help='Print every bound of the bound command as a JSON object '
                      'instead of the critical (or bezout) bound alone.')
    parser.add_option('--out', action='store', type='string', dest='out', default=None,
                      help='Write the output to this file instead of stdout.')
    parser.add_option('--parallel', action='store_true', dest='parallel', default=None,
                      help='Solve the fiber depths in a process pool.')
    parser.add_option('--cross-check', action='store_true', dest='cross_check',
                      default=None,
                      help='Also solve each depth through generic slicing of the '
                      'full multiplier ideal and compare.')
    parser.add_option('--window', action='store', type='int', dest='window',
                      default=None,
                      help='Fixed bi-series window; 0 selects the adaptive window.')
    parser.add_option('--loglevel', action='store', type='string', dest='loglevel',
                      default=None,
                      help='Log level - ERROR, WARNING, DEBUG, or INFO, '
                      'defaults to WARNING')
    parser.add_option('--logfile', action='store', type='string', dest='logfile',
                      default=None,
                      help='Also log to this file.')

    (cmd_options, args) = parser.parse_args(argv)
    if not args or len(args) > 2:
        parser.print_usage(sys.stderr)
        return ExitCode.USAGE
    cmd_options.command = args[0]
    cmd_options.input_path = args[1] if len(args) > 1 else None
    try:
        options = load_options(cmd_options)
    except (IOError, OSError, ValueError) as e:
        sys.stderr.write('%s\n' % e)
        return ExitCode.USAGE
    if options.input_path and not os.path.exists(options.input_path):
        sys.stderr.write('No such file: %s\n' % options.input_path)
        return ExitCode.USAGE
    if not setup_logging(options):
        return ExitCode.USAGE
    return run(options)


if __name__ == '__main__':
    sys.exit(main())
