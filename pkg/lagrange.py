# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

"""Builders for Lagrange systems, projection systems and the fiber systems
I_i^{A,p} that the sampler solves depth by depth."""

import itertools

from fractions import Fraction

import sympy

import utils

from bihom import BoundInputs, bezout_bound
from fiberstatus import ObjectiveKind
from groebner import MonomialOrder, dimension, groebner_basis
from interval import Interval, as_interval
from polycore import (BlockSplit, LinearChange, Polynomial, SingularMatrixError,
                      apply_linear_change, bidegree_of, bihomogenize)

MATRIX_ENTRY_BOUND = 99
MULTIPLIER_PREFIX = 'L'
REDUCED_MULTIPLIER_PREFIX = 'M'


class HypothesisViolation(Exception):
    """An assumption on the input (smoothness, radicality, regularity) looks
    violated, or genericity retries ran out."""
    pass


class PointNotOnVarietyError(ValueError):
    pass


class InputSystem(object):
    """Equations f_1..f_s in Q[X_1..X_n] with s <= n - 1."""

    def __init__(self, polys, assume_regular_sequence=False,
                 assume_radical_smooth=True, degrees=None):
        self.polys = list(polys)
        if not self.polys:
            raise ValueError('an input system needs at least one equation')
        self.varnames = self.polys[0].varnames
        for f in self.polys:
            if f.varnames != self.varnames:
                raise ValueError('all equations must share one ring')
            if not f:
                raise ValueError('the zero polynomial is not a valid equation')
        self.n = len(self.varnames)
        self.s = len(self.polys)
        computed = [f.total_degree() for f in self.polys]
        if degrees is not None and list(degrees) != computed:
            raise ValueError('declared degrees %r do not match %r' %
                             (list(degrees), computed))
        self.degrees = computed
        if self.s > self.n - 1:
            raise ValueError('need s <= n - 1, got s=%d, n=%d' % (self.s, self.n))
        self.assume_regular_sequence = bool(assume_regular_sequence)
        self.assume_radical_smooth = bool(assume_radical_smooth)

    def dimension(self):
        return dimension(groebner_basis(self.polys,
                                        MonomialOrder.degrevlex(self.varnames)))

    def transformed(self, A):
        return [apply_linear_change(f, A, self.varnames) for f in self.polys]

    def __repr__(self):
        return 'InputSystem([%s], vars=%r)' % (', '.join(str(f) for f in self.polys),
                                               self.varnames)


class LagrangeSystem(object):
    def __init__(self, polys, objective_kind, split, input):
        self.polys = list(polys)
        self.objective_kind = objective_kind
        self.split = split
        self.input = input

    @property
    def varnames(self):
        return self.split.varnames

    @property
    def x_vars(self):
        return self.split.x_vars

    @property
    def l_vars(self):
        return self.split.l_vars

    def __len__(self):
        return len(self.polys)

    def text(self):
        header = 'vars: %s' % ' '.join(self.x_vars)
        if self.l_vars:
            header += ' | %s' % ' '.join(self.l_vars)
        lines = [header]
        lines.extend(str(f) for f in self.polys)
        return '\n'.join(lines)


class FiberSystem(object):
    """The system of I_i^{A,p}: f^A, pins X_1 - p_1..X_i - p_i and, below the
    top depth, the Lagrange equations for the projection onto X_{i+1}."""

    def __init__(self, base, depth, A, p, d):
        self.base = base
        self.depth = depth
        self.A = A
        self.p = list(p)
        self.d = d

    @property
    def polys(self):
        return self.base.polys

    @property
    def split(self):
        return self.base.split

    @property
    def varnames(self):
        return self.base.varnames

    @property
    def x_vars(self):
        return self.base.x_vars

    @property
    def l_vars(self):
        return self.base.l_vars


def multiplier_names(varnames, count, prefix=MULTIPLIER_PREFIX):
    taken = set(varnames)
    while True:
        names = ['%s%d' % (prefix, j + 1) for j in range(count)]
        if not taken.intersection(names):
            return names
        prefix = '_' + prefix


def _multiplier_equations(fs, ring, multipliers, names, rhs):
    """sum_j L_j df_j/dx - rhs[x] for each x in names."""
    ls = [Polynomial.variable(ring, name) for name in multipliers]
    equations = []
    for x in names:
        equation = Polynomial.zero(ring)
        for l, f in zip(ls, fs):
            equation = equation + l * f.diff(x)
        equations.append(equation - rhs.get(x, 0))
    return equations


def build_lagrange(input, objective):
    """f_1..f_s and sum_j L_j df_j/dX_m - d objective/dX_m for m = 1..n."""
    multipliers = multiplier_names(input.varnames, input.s)
    ring = input.varnames + tuple(multipliers)
    if not isinstance(objective, Polynomial):
        objective = Polynomial.constant(input.varnames, objective)
    objective = objective.to_ring(ring)
    fs = [f.to_ring(ring) for f in input.polys]
    rhs = dict((x, objective.diff(x)) for x in input.varnames)
    polys = fs + _multiplier_equations(fs, ring, multipliers, input.varnames, rhs)
    return LagrangeSystem(polys, ObjectiveKind.GENERAL,
                          BlockSplit(input.varnames, multipliers), input)


def build_projection_system(input, A):
    """f^A plus the Lagrange equations for the projection onto X_1."""
    multipliers = multiplier_names(input.varnames, input.s)
    ring = input.varnames + tuple(multipliers)
    fs = [f.to_ring(ring) for f in input.transformed(A)]
    rhs = {input.varnames[0]: 1}
    polys = fs + _multiplier_equations(fs, ring, multipliers, input.varnames, rhs)
    return LagrangeSystem(polys, ObjectiveKind.PROJECTION,
                          BlockSplit(input.varnames, multipliers), input)


def build_reduced_projection_system(input, A, rng, bound=MATRIX_ENTRY_BOUND):
    """The n + s - 1 equations in n + s - 1 unknowns available when the
    input is a regular sequence: f_s is first replaced by a random
    combination f_s + sum a_j f_j, then only X_2..X_n get multiplier
    equations, with the last multiplier normalized to 1."""
    if not input.assume_regular_sequence:
        raise ValueError('the reduced projection system needs a regular sequence')
    rng = utils.make_rng(rng)
    polys = list(input.polys)
    last = polys[-1]
    for f in polys[:-1]:
        last = last + f * utils.random_int(rng, bound)
    polys[-1] = last
    transformed = [apply_linear_change(f, A, input.varnames) for f in polys]
    multipliers = multiplier_names(input.varnames, input.s - 1,
                                   REDUCED_MULTIPLIER_PREFIX)
    ring = input.varnames + tuple(multipliers)
    fs = [f.to_ring(ring) for f in transformed]
    rhs = dict((x, -fs[-1].diff(x)) for x in input.varnames[1:])
    equations = _multiplier_equations(fs[:-1], ring, multipliers,
                                      input.varnames[1:], rhs)
    return LagrangeSystem(fs + equations, ObjectiveKind.REDUCED_PROJECTION,
                          BlockSplit(input.varnames, multipliers), input)


def build_fiber_system(input, A, p, i, d=None):
    """System of I_i^{A,p} for depth 0 <= i <= d."""
    if d is None:
        d = input.dimension()
    if i < 0 or i > d:
        raise ValueError('fiber depth %d outside 0..%d' % (i, d))
    p = [Fraction(value) for value in p]
    if len(p) < i:
        raise ValueError('fiber depth %d needs %d pinned values, got %d' % (i, i, len(p)))
    xs = input.varnames
    transformed = input.transformed(A)
    if i == d:
        ring = xs
        multipliers = []
    else:
        multipliers = multiplier_names(xs, input.s)
        ring = xs + tuple(multipliers)
    fs = [f.to_ring(ring) for f in transformed]
    pins = [Polynomial.variable(ring, xs[m]) - p[m] for m in range(i)]
    polys = fs + pins
    if i < d:
        rhs = {xs[i]: 1}
        polys += _multiplier_equations(fs, ring, multipliers, xs[i:], rhs)
    base = LagrangeSystem(polys, ObjectiveKind.FIBER, BlockSplit(xs, multipliers), input)
    return FiberSystem(base, i, A, p[:d], d)


def fiber_constraints(input, A, p, i, d):
    """Pins and objective of depth i expressed in the original coordinates.

    With x = A.y, the pinned coordinates y_m and the projection y_{i+1} are
    the rows of A^-1 applied to x. Returns (pins, objective).
    """
    inverse = A.inverse()
    xs = input.varnames

    def row_form(m):
        return Polynomial.linear_form(xs, dict((name, c) for name, c in
                                               zip(xs, inverse.row(m)) if c))
    pins = [row_form(m) - Fraction(p[m]) for m in range(i)]
    if i < d:
        objective = row_form(i)
    else:
        objective = Polynomial.zero(xs)
    return pins, objective


def _interval_determinant(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = Interval(0)
    for column, entry in enumerate(rows[0]):
        minor = [row[:column] + row[column + 1:] for row in rows[1:]]
        term = entry * _interval_determinant(minor)
        total = total - term if column % 2 else total + term
    return total


def lagrange_membership_check(point, input, objective, extra=()):
    """True iff the gradients of the constraints and of objective are
    linearly dependent at point.

    extra adds constraints (e.g. the pins of a fiber depth) to input's
    equations. For rational points the rank is exact; for boxes every
    maximal minor must contain zero.
    """
    constraints = list(input.polys) + list(extra)
    xs = input.varnames
    if not isinstance(objective, Polynomial):
        objective = Polynomial.constant(xs, objective)
    values = list(point)
    boxed = any(isinstance(value, Interval) for value in values)
    for f in constraints:
        value = f.evaluate(values)
        if boxed:
            if not as_interval(value).contains_zero():
                raise PointNotOnVarietyError('%s does not vanish on the box' % f)
        elif value != 0:
            raise PointNotOnVarietyError('%s = %s at the point' % (f, value))
    rows = [[g.evaluate(values) for g in f.gradient(xs)]
            for f in constraints + [objective]]
    size = len(rows)
    if size > len(xs):
        return True
    if not boxed:
        matrix = sympy.Matrix([[utils.to_rational(v) for v in row] for row in rows])
        return matrix.rank() <= size - 1
    rows = [[as_interval(v) for v in row] for row in rows]
    for columns in itertools.combinations(range(len(xs)), size):
        minor = [[row[c] for c in columns] for row in rows]
        if not _interval_determinant(minor).contains_zero():
            return False
    return True


def lagrange_bezout_bound(system):
    """bezout_bound of the bi-homogenization of a Lagrange or fiber system,
    with the X-block and the multiplier block as the two blocks."""
    split = system.split
    homogenized = split.homogenized()
    bidegrees = []
    for f in system.polys:
        bidegree, _ = bidegree_of(bihomogenize(f, split), homogenized)
        bidegrees.append(bidegree)
    return bezout_bound(BoundInputs(split.n, split.k, bidegrees))


def random_linear_change(n, rng, bound=MATRIX_ENTRY_BOUND):
    """Matrix with entries uniform in [-bound, bound], singular draws rejected."""
    rng = utils.make_rng(rng)
    while True:
        try:
            return LinearChange([[utils.random_int(rng, bound) for _ in range(n)]
                                 for _ in range(n)])
        except SingularMatrixError:
            continue
