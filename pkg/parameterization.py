# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

"""Rational parameterizations of zero-dimensional ideals and isolating
boxes of their real points.

A parameterization encodes the points as

    f(T) = 0,  v_m = q_m(T) / q_0(T)

where T = sum c_m v_m is a separating linear form and f is squarefree.
"""

from fractions import Fraction

import sympy

import utils

from groebner import (GroebnerBasis, MonomialOrder, NotZeroDimensionalError,
                      dimension, groebner_basis, normal_form, quotient_basis)
from interval import Interval, box_width, horner
from polycore import Polynomial
from realroots import from_sympy_poly, refine_root, to_sympy_poly

SEPARATING_COEFFICIENT_BOUND = 20
SEPARATING_RETRIES = 10
REFINEMENT_LIMIT = 400
PARAMETER_NAME = 'T'


class ParameterizationError(Exception):
    pass


class RationalParameterization(object):
    def __init__(self, f, q0, numerators, coordinate_names, separating_form,
                 degree):
        self.f = f
        self.q0 = q0
        self.numerators = list(numerators)
        self.coordinate_names = tuple(coordinate_names)
        self.separating_form = list(separating_form)
        self.degree = degree
        if len(self.numerators) != len(self.coordinate_names):
            raise ValueError('%d numerators for %d coordinates' %
                             (len(self.numerators), len(self.coordinate_names)))

    @property
    def T(self):
        return self.f.varnames[0]

    def transformed(self, A):
        """The same points seen through x = A.v."""
        return RationalParameterization(self.f, self.q0, A.apply(self.numerators),
                                        self.coordinate_names, self.separating_form,
                                        self.degree)

    def restricted(self, names):
        """Keep only the named coordinates."""
        indices = [self.coordinate_names.index(name) for name in names]
        return RationalParameterization(self.f, self.q0,
                                        [self.numerators[i] for i in indices],
                                        names, self.separating_form, self.degree)

    def residues(self, polys):
        """q0^deg(p) * p(q_1/q_0, ..) mod f for each p; all zero exactly when
        every encoded point lies on V(polys)."""
        f = to_sympy_poly(self.f)
        q0 = to_sympy_poly(self.q0)
        numerators = [to_sympy_poly(q) for q in self.numerators]
        results = []
        for p in polys:
            p = p.to_ring(self.coordinate_names)
            degree = max(p.total_degree(), 0)
            total = sympy.Poly(0, f.gen, domain='QQ')
            for exps, coef in p.terms.items():
                term = sympy.Poly(utils.to_rational(coef), f.gen, domain='QQ')
                for q, e in zip(numerators, exps):
                    if e:
                        term = (term * q ** e).rem(f)
                term = (term * q0 ** (degree - sum(exps))).rem(f)
                total = total + term
            results.append(from_sympy_poly(total.rem(f), self.T))
        return results

    def __repr__(self):
        return 'RationalParameterization(f=%s, q0=%s, %s)' % (
            self.f, self.q0, ', '.join('%s=%s' % (name, q) for name, q in
                                      zip(self.coordinate_names, self.numerators)))


class IsolatingBox(object):
    """Rational intervals enclosing one real point, with the root interval
    of T that produced them."""

    def __init__(self, coordinates, root_interval, fiber_depth, witness_seed,
                 coordinate_names, parameterization=None):
        self.coordinates = list(coordinates)
        self.root_interval = root_interval
        self.fiber_depth = fiber_depth
        self.witness_seed = witness_seed
        self.coordinate_names = tuple(coordinate_names)
        self.parameterization = parameterization

    @property
    def width(self):
        return box_width(self.coordinates)

    def overlaps(self, other):
        return all(a.overlaps(b) for a, b in zip(self.coordinates, other.coordinates))

    def refined(self, width):
        if self.parameterization is None or self.width < width:
            return self
        return evaluate_parameterization(self.parameterization, self.root_interval,
                                         width, self.fiber_depth, self.witness_seed)

    def __repr__(self):
        return 'IsolatingBox(depth=%d, %s)' % (
            self.fiber_depth, ', '.join('%s in [%s, %s]' % (name, c.lo, c.hi) for name, c in
                                        zip(self.coordinate_names, self.coordinates)))


def solve_zero_dim(gens, rng=0, bound=SEPARATING_COEFFICIENT_BOUND,
                   retries=SEPARATING_RETRIES):
    """Rational parameterization of a zero-dimensional ideal.

    gens is a GroebnerBasis or a list of Polynomials. A random linear form
    T is accepted once 1, T, .., T^(deg-1) are independent in the quotient,
    i.e. once its minimal polynomial has the degree of the ideal.
    """
    logger = utils.getLogger()
    if isinstance(gens, GroebnerBasis):
        G = gens
    else:
        G = groebner_basis(gens, MonomialOrder.degrevlex(gens[0].varnames))
    if dimension(G) != 0:
        raise NotZeroDimensionalError('cannot parameterize a non zero-dimensional ideal')
    names = G.varnames
    basis = quotient_basis(G)
    degree = basis.degree
    rng = utils.make_rng(rng)
    for attempt in range(retries):
        form = [utils.random_int(rng, bound) for _ in names]
        if not any(form):
            continue
        T = Polynomial.linear_form(names, dict(zip(names, form)))
        columns = []
        power = Polynomial.constant(names, 1)
        for _ in range(degree + 1):
            power = normal_form(power, G)
            columns.append([utils.to_rational(c) for c in basis.coordinates(power)])
            power = power * T
        M = sympy.Matrix(degree, degree, lambda r, c: columns[c][r])
        if M.rank() < degree:
            logger.debug('solve_zero_dim: form %r is not separating', form)
            continue
        targets = [columns[degree]]
        for name in names:
            v = normal_form(Polynomial.variable(names, name), G)
            targets.append([utils.to_rational(c) for c in basis.coordinates(v)])
        R = sympy.Matrix(degree, len(targets), lambda r, c: targets[c][r])
        S = M.LUsolve(R)
        symbol = sympy.Symbol(PARAMETER_NAME)
        minimal = [-S[i, 0] for i in range(degree)] + [sympy.Integer(1)]
        f = sympy.Poly(list(reversed(minimal)), symbol, domain='QQ')
        g = f.sqf_part()
        q0 = g.diff(symbol)
        numerators = []
        for index in range(len(names)):
            shape = sympy.Poly(list(reversed([S[i, index + 1] for i in range(degree)])),
                               symbol, domain='QQ')
            numerators.append(from_sympy_poly((shape * q0).rem(g), PARAMETER_NAME))
        return RationalParameterization(from_sympy_poly(g, PARAMETER_NAME),
                                        from_sympy_poly(q0, PARAMETER_NAME),
                                        numerators, names, form, degree)
    raise ParameterizationError('no separating form found in %d attempts' % retries)


def evaluate_parameterization(param, root_interval, width, depth=0, seed=0):
    """Box of the point at the root of f isolated by root_interval, each
    coordinate narrower than width."""
    width = Fraction(width)
    f = param.f.univariate_coefficients()
    q0 = param.q0.univariate_coefficients()
    numerators = [q.univariate_coefficients() for q in param.numerators]
    interval = root_interval
    for _ in range(REFINEMENT_LIMIT):
        if interval.is_exact():
            t = interval.lo
            denominator = horner(q0, t)
            if denominator == 0:
                raise ParameterizationError('q0 vanishes at the root %s' % t)
            coordinates = [Interval(horner(q, t) / denominator) for q in numerators]
            return IsolatingBox(coordinates, interval, depth, seed,
                                param.coordinate_names, param)
        denominator = horner(q0, interval)
        if not denominator.contains_zero():
            coordinates = [horner(q, interval) / denominator for q in numerators]
            if all(c.width < width for c in coordinates):
                return IsolatingBox(coordinates, interval, depth, seed,
                                    param.coordinate_names, param)
        interval = refine_root(f, interval)
    raise ParameterizationError('q0 not separated from zero after %d refinements' %
                                REFINEMENT_LIMIT)
