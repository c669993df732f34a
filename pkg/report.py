# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

"""JSON form of a SampleReport.

Exact values are written as 'p/q' strings; every interval endpoint also
carries a decimal approximation meant for humans only. Keys are sorted and
nothing time dependent is written, so equal runs give equal bytes.
"""

import json

from fractions import Fraction

import utils

from interval import Interval
from lagrange import InputSystem
from parameterization import IsolatingBox, RationalParameterization
from polycore import LinearChange, Polynomial, PolynomialSyntaxError, parse_polynomial
from sampler import CrossCheck, DepthResult, SampleReport, SampleRunner, verify_on_variety


class ReportFormatError(ValueError):
    pass


def _fractions(values):
    return [utils.format_fraction(v) for v in values]


def _interval(interval):
    return {
        'lo': utils.format_fraction(interval.lo),
        'hi': utils.format_fraction(interval.hi),
        'lo_approx': utils.format_decimal(interval.lo),
        'hi_approx': utils.format_decimal(interval.hi),
    }


def _univariate(poly):
    return _fractions(poly.univariate_coefficients())


def _parameterization(param):
    if param is None:
        return None
    return {
        'T': param.T,
        'degree': param.degree,
        'separating_form': param.separating_form,
        'f': _univariate(param.f),
        'q0': _univariate(param.q0),
        'numerators': [{'name': name, 'coefficients': _univariate(q)}
                       for name, q in zip(param.coordinate_names, param.numerators)],
    }


def report_to_dict(report):
    depths = []
    for result in report.depths:
        depths.append({
            'depth': result.depth,
            'status': result.status,
            'retried': result.depth in report.retried,
            'degree': result.degree,
            'bezout': result.bezout,
            'points': sum(1 for box in report.points if box.fiber_depth == result.depth),
            'generators': [str(g) for g in result.generators],
            'parameterization': _parameterization(result.parameterization),
            'message': result.message,
        })
    points = []
    for index, box in enumerate(report.points):
        points.append({
            'depth': box.fiber_depth,
            'witness_seed': box.witness_seed,
            'coordinates': [dict(_interval(c), name=name) for name, c in
                            zip(box.coordinate_names, box.coordinates)],
            'root_interval': _interval(box.root_interval),
            'verified': report.verified[index] if index < len(report.verified) else None,
            'lagrange': (report.lagrange_checked[index]
                         if index < len(report.lagrange_checked) else None),
        })
    return {
        'input': {
            'vars': list(report.input.varnames),
            'polys': [str(f) for f in report.input.polys],
            'regular': report.input.assume_regular_sequence,
        },
        'seed': report.seed,
        'width': utils.format_fraction(report.width),
        'dimension': report.dimension,
        'A': [_fractions(row) for row in report.A.matrix] if report.A else None,
        'p': _fractions(report.p),
        'attempts': report.attempts,
        'retried': report.retried,
        'bounds': report.bounds,
        'depths': depths,
        'points': points,
        'cross_check': [{'depth': c.depth, 'dimension': c.dimension,
                         'points': c.points, 'consistent': c.consistent}
                        for c in report.cross_checks],
    }


def dump_report(report):
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + '\n'


def _load_interval(data):
    return Interval(Fraction(data['lo']), Fraction(data['hi']))


def _load_univariate(name, coefficients):
    return Polynomial.from_univariate_coefficients(name, [Fraction(c) for c in coefficients])


def _load_parameterization(data):
    if data is None:
        return None
    T = data['T']
    names = [entry['name'] for entry in data['numerators']]
    numerators = [_load_univariate(T, entry['coefficients']) for entry in data['numerators']]
    return RationalParameterization(_load_univariate(T, data['f']),
                                    _load_univariate(T, data['q0']),
                                    numerators, names, data['separating_form'],
                                    data['degree'])


def load_report(text):
    """Rebuild a SampleReport from dump_report output."""
    try:
        data = json.loads(text)
        inp = data['input']
        varnames = inp['vars']
        input = InputSystem([parse_polynomial(f, varnames) for f in inp['polys']],
                            assume_regular_sequence=inp['regular'])
        depths = []
        params = {}
        for entry in data['depths']:
            param = _load_parameterization(entry['parameterization'])
            params[entry['depth']] = param
            depths.append(DepthResult(entry['depth'], entry['status'], entry['degree'],
                                      entry['bezout'],
                                      [parse_polynomial(g, varnames)
                                       for g in entry['generators']],
                                      param, message=entry['message']))
        points = []
        for entry in data['points']:
            names = [c['name'] for c in entry['coordinates']]
            points.append(IsolatingBox([_load_interval(c) for c in entry['coordinates']],
                                       _load_interval(entry['root_interval']),
                                       entry['depth'], entry['witness_seed'], names,
                                       params.get(entry['depth'])))
        for result in depths:
            result.boxes = [box for box in points if box.fiber_depth == result.depth]
        A = LinearChange([[Fraction(x) for x in row] for row in data['A']]) \
            if data['A'] else None
        cross_checks = [CrossCheck(c['depth'], c['dimension'], c['points'], c['consistent'])
                        for c in data['cross_check']]
        return SampleReport(input, data['seed'], Fraction(data['width']),
                            data['dimension'], A, [Fraction(x) for x in data['p']],
                            points, depths, data['bounds'], data['attempts'],
                            data['retried'], cross_checks,
                            [entry['verified'] for entry in data['points']],
                            [entry['lagrange'] for entry in data['points']])
    except PolynomialSyntaxError as e:
        raise ReportFormatError('bad polynomial in report: %s' % e)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ReportFormatError('malformed report: %s' % e)


def reverify(report, input=None, width=SampleRunner.CERTIFICATION_WIDTH):
    """verify_on_variety for every box of a (possibly reloaded) report."""
    if input is None:
        input = report.input
    return [verify_on_variety(box, input, width) for box in report.points]
