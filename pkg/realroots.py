# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

"""Real root isolation for univariate rational polynomials.

Sturm sequences and squarefree parts come from sympy; counting and
bisection are done here with exact Fractions so every interval endpoint is
rational.
"""

from fractions import Fraction

import sympy

import utils

from interval import Interval, horner
from polycore import Polynomial


def to_sympy_poly(f):
    """Convert a univariate Polynomial to a sympy Poly over QQ."""
    coefficients = f.univariate_coefficients()
    symbol = sympy.Symbol(f.varnames[0])
    return sympy.Poly([utils.to_rational(c) for c in reversed(coefficients)],
                      symbol, domain='QQ')


def from_sympy_poly(poly, name):
    coefficients = [utils.to_fraction(c) for c in reversed(poly.all_coeffs())]
    return Polynomial.from_univariate_coefficients(name, coefficients)


def coefficients_of(poly):
    """Fraction coefficients of a sympy Poly, lowest degree first."""
    return [utils.to_fraction(c) for c in reversed(poly.all_coeffs())]


def squarefree_part(f):
    return from_sympy_poly(to_sympy_poly(f).sqf_part(), f.varnames[0])


def cauchy_bound(coefficients):
    """1 + max |a_i / a_n|; every root has absolute value below it."""
    leading = coefficients[-1]
    return 1 + max([abs(c / leading) for c in coefficients[:-1]] or [Fraction(0)])


def _sign(value):
    return (value > 0) - (value < 0)


class SturmSequence(object):
    def __init__(self, poly):
        self.sequence = [coefficients_of(p) for p in sympy.sturm(poly)]

    def variations(self, x):
        signs = [_sign(horner(coefficients, x)) for coefficients in self.sequence]
        signs = [s for s in signs if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a, b):
        """Number of distinct roots in (a, b]; a and b must not be roots."""
        return self.variations(a) - self.variations(b)


def isolate_real_roots(f, width):
    """Disjoint isolating intervals, ascending, one per distinct real root
    of f and each narrower than width. Rational roots met during bisection
    come back as exact point intervals."""
    if not f:
        raise ValueError('cannot isolate the roots of the zero polynomial')
    width = Fraction(width)
    reduced = squarefree_part(f)
    if reduced.total_degree() < 1:
        return []
    poly = to_sympy_poly(reduced)
    g = coefficients_of(poly)
    sturm = SturmSequence(poly)
    bound = cauchy_bound(g)
    roots = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        count = sturm.count(a, b)
        if count == 0:
            continue
        if count == 1 and b - a < width:
            roots.append(Interval(a, b))
            continue
        m = (a + b) / 2
        if horner(g, m):
            stack.append((a, m))
            stack.append((m, b))
            continue
        roots.append(Interval(m))
        h = (b - a) / 4
        while True:
            left, right = m - h, m + h
            if horner(g, left) and horner(g, right) and sturm.count(left, right) == 1:
                break
            h /= 2
        stack.append((a, left))
        stack.append((right, b))
    roots.sort(key=lambda interval: interval.lo)
    return roots


def refine_root(coefficients, interval):
    """Halve an isolating interval of a simple root of the squarefree
    polynomial with the given coefficients."""
    if interval.is_exact():
        return interval
    a, b = interval.lo, interval.hi
    m = (a + b) / 2
    value = horner(coefficients, m)
    if value == 0:
        return Interval(m)
    if _sign(horner(coefficients, a)) * _sign(value) < 0:
        return Interval(a, m)
    return Interval(m, b)
