# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

"""Bi-homogeneous ideals: Hilbert bi-series, their canonical form, bi-degrees
by generic slicing, and the closed-form degree bounds.

Rings are Q[X0..Xn, L0..Lk] described by a BlockSplit whose X-block holds
n+1 variables and whose l-block holds k+1 variables.
"""

import itertools

from functools import reduce

import utils

from groebner import (GenericityError, MonomialOrder, SLICE_COEFFICIENT_BOUND,
                      SLICE_RETRIES, dimension, groebner_basis, monomials_of_degree,
                      quotient_basis)
from polycore import BiDegree, Polynomial, bidegree_of

WINDOW_DOUBLINGS = 4


class WindowTooSmallError(Exception):
    pass


class BezoutHypothesisError(ValueError):
    pass


class NotBihomogeneousError(ValueError):
    pass


def _ring_sizes(split):
    return len(split.x_vars) - 1, len(split.l_vars) - 1


def _pole_coefficient(order, i):
    """Coefficient of t^i in (1-t)^(-order)."""
    if order >= 1:
        return utils.binomial(i + order - 1, order - 1)
    return (-1) ** i * utils.binomial(-order, i)


class BiSeriesTable(object):
    """dims[i][j] = dim (R/I)_(i,j) for 0 <= i <= imax, 0 <= j <= jmax."""

    def __init__(self, dims, split=None):
        self.dims = [list(row) for row in dims]
        self.split = split
        if not self.dims or len(set(len(row) for row in self.dims)) != 1:
            raise ValueError('bi-series table must be a nonempty rectangle')

    @property
    def imax(self):
        return len(self.dims) - 1

    @property
    def jmax(self):
        return len(self.dims[0]) - 1

    def __getitem__(self, index):
        i, j = index
        return self.dims[i][j]

    def __eq__(self, other):
        return isinstance(other, BiSeriesTable) and self.dims == other.dims

    def __ne__(self, other):
        return not self == other

    def times_factor(self, alpha, beta):
        """The table of (1 - t1^alpha t2^beta) * H on the same window."""
        dims = [[self.dims[i][j] -
                 (self.dims[i - alpha][j - beta] if i >= alpha and j >= beta else 0)
                 for j in range(self.jmax + 1)]
                for i in range(self.imax + 1)]
        return BiSeriesTable(dims, self.split)

    def __repr__(self):
        return 'BiSeriesTable(%r)' % (self.dims,)


def free_biseries(n, k, imax, jmax, split=None):
    """1/((1-t1)^(n+1) (1-t2)^(k+1)) expanded on the window."""
    return BiSeriesTable([[_pole_coefficient(n + 1, i) * _pole_coefficient(k + 1, j)
                           for j in range(jmax + 1)]
                          for i in range(imax + 1)], split)


def complete_intersection_biseries(bidegrees, n, k, imax, jmax, split=None):
    """Bi-series of an ideal generated by a bi-homogeneous regular sequence."""
    table = free_biseries(n, k, imax, jmax, split)
    for alpha, beta in bidegrees:
        table = table.times_factor(alpha, beta)
    return table


def _check_bihomogeneous(gens, split):
    ring = []
    for g in gens:
        g = g.to_ring(split.varnames)
        bidegree, homogeneous = bidegree_of(g, split)
        if not homogeneous:
            raise NotBihomogeneousError('%s is not bi-homogeneous' % g)
        ring.append(g)
    return ring


def _biseries_from_basis(G, split, imax, jmax):
    if G.is_unit():
        return BiSeriesTable([[0] * (jmax + 1) for _ in range(imax + 1)], split)
    nx = len(split.x_vars)
    nl = len(split.l_vars)
    lms = [(lm[:nx], lm[nx:]) for lm in G.leading_monomials()]
    l_monomials = [list(monomials_of_degree(nl, j)) for j in range(jmax + 1)]
    dims = []
    for i in range(imax + 1):
        row = [0] * (jmax + 1)
        for xm in monomials_of_degree(nx, i):
            relevant = [lp for xp, lp in lms
                        if all(a <= b for a, b in zip(xp, xm))]
            if any(not any(lp) for lp in relevant):
                continue
            for j in range(jmax + 1):
                row[j] += sum(1 for lm in l_monomials[j]
                              if not any(all(a <= b for a, b in zip(lp, lm))
                                         for lp in relevant))
        dims.append(row)
    return BiSeriesTable(dims, split)


def hilbert_biseries(gens, split, imax, jmax):
    """Staircase count of dim (R/I)_(i,j) over the window."""
    gens = _check_bihomogeneous(gens, split)
    G = groebner_basis(gens, MonomialOrder.degrevlex(split.varnames))
    return _biseries_from_basis(G, split, imax, jmax)


def specialize_to_hilbert_series(table, dmax):
    """h_d = sum over i+j=d of dims(i, j), for d = 0..dmax."""
    if dmax > min(table.imax, table.jmax):
        raise WindowTooSmallError('window %dx%d cannot specialize up to degree %d' %
                                  (table.imax, table.jmax, dmax))
    return [sum(table[i, d - i] for i in range(d + 1)) for d in range(dmax + 1)]


class CanonicalForm(object):
    """H = sum C[d,e] / ((1-t1)^(d+1) (1-t2)^(e+1))
         + sum lower_terms[i,j] / ((1-t1)^(i+1) (1-t2)^(j+1)) + Q(t1, t2).

    C is indexed by the bi-dimensions with d+e+2 = D. lower_terms holds
    every other non-polynomial contribution; an index below -1 stands for
    a power of (1-t) in the numerator. Q maps (i, j) to the coefficient of
    t1^i t2^j.
    """

    def __init__(self, n, k, D, C, lower_terms, Q):
        self.n = n
        self.k = k
        self.D = D
        self.C = dict(C)
        self.lower_terms = dict(lower_terms)
        self.Q = dict(Q)

    def series(self, imax, jmax):
        dims = [[0] * (jmax + 1) for _ in range(imax + 1)]
        terms = list(self.C.items()) + list(self.lower_terms.items())
        for (d, e), coef in terms:
            if not coef:
                continue
            for i in range(imax + 1):
                a = _pole_coefficient(d + 1, i)
                if not a:
                    continue
                for j in range(jmax + 1):
                    dims[i][j] += coef * a * _pole_coefficient(e + 1, j)
        for (i, j), coef in self.Q.items():
            if i <= imax and j <= jmax:
                dims[i][j] += coef
        return BiSeriesTable(dims)

    def __repr__(self):
        return 'CanonicalForm(D=%d, C=%r, lower=%r, Q=%r)' % (
            self.D, self.C, self.lower_terms, self.Q)


def _taylor_at_one(coefficients):
    """Coefficients of p(t) in the basis (1-t)^a, by repeated synthetic
    division by (t-1)."""
    current = list(coefficients)
    result = []
    a = 0
    while current:
        accumulator = 0
        quotient = [0] * (len(current) - 1)
        for index in range(len(current) - 1, -1, -1):
            accumulator += current[index]
            if index:
                quotient[index - 1] = accumulator
        result.append(-accumulator if a % 2 else accumulator)
        current = quotient
        a += 1
    return result


def canonical_form(table, D, guard=1, split=None):
    """Read the canonical form off a bi-series table.

    The numerator P = H (1-t1)^(n+1) (1-t2)^(k+1) is only trusted when the
    last guard rows and columns of P on the window vanish; otherwise
    WindowTooSmallError is raised so the caller can enlarge the window.
    """
    split = split or table.split
    if split is None:
        raise ValueError('canonical_form needs the block split of the table')
    n, k = _ring_sizes(split)
    imax, jmax = table.imax, table.jmax
    if guard < 1 or guard > min(imax, jmax):
        raise WindowTooSmallError('guard band %d does not fit a %dx%d window' %
                                  (guard, imax, jmax))
    u = [(-1) ** a * utils.binomial(n + 1, a) for a in range(n + 2)]
    w = [(-1) ** b * utils.binomial(k + 1, b) for b in range(k + 2)]
    rows = [[sum(table[i - a, j] * u[a] for a in range(min(i, n + 1) + 1))
             for j in range(jmax + 1)] for i in range(imax + 1)]
    P = [[sum(rows[i][j - b] * w[b] for b in range(min(j, k + 1) + 1))
          for j in range(jmax + 1)] for i in range(imax + 1)]
    for i in range(imax + 1):
        for j in range(jmax + 1):
            if P[i][j] and (i > imax - guard or j > jmax - guard):
                raise WindowTooSmallError('numerator reaches t1^%d t2^%d inside the '
                                          'guard band of a %dx%d window' %
                                          (i, j, imax, jmax))

    shifted = [_taylor_at_one(row) for row in P]
    basis = [_taylor_at_one([shifted[i][b] for i in range(imax + 1)])
             for b in range(jmax + 1)]
    C = {}
    for d in range(n + 1):
        e = D - 2 - d
        if 0 <= e <= k:
            C[(d, e)] = 0
    lower_terms = {}
    Q = {}
    for b, column in enumerate(basis):
        for a, coef in enumerate(column):
            if not coef:
                continue
            pole_x = n + 1 - a
            pole_l = k + 1 - b
            if pole_x >= 1 and pole_l >= 1:
                if pole_x + pole_l == D:
                    C[(pole_x - 1, pole_l - 1)] = coef
                elif pole_x + pole_l > D:
                    raise ValueError('bi-series has a pole of total order %d > D = %d' %
                                     (pole_x + pole_l, D))
                else:
                    lower_terms[(pole_x - 1, pole_l - 1)] = coef
            elif pole_x <= 0 and pole_l <= 0:
                for i in range(-pole_x + 1):
                    for j in range(-pole_l + 1):
                        value = coef * _pole_coefficient(pole_x, i) * _pole_coefficient(pole_l, j)
                        Q[(i, j)] = Q.get((i, j), 0) + value
            else:
                lower_terms[(pole_x - 1, pole_l - 1)] = coef
    Q = dict((key, value) for key, value in Q.items() if value)
    return CanonicalForm(n, k, D, C, lower_terms, Q)


def biseries_canonical_form(gens, split, D=None, window=None):
    """Compute the bi-series and its canonical form, doubling the window
    until the guard band of the numerator is clean.

    Returns (table, form). D defaults to the Krull dimension of the ideal.
    """
    logger = utils.getLogger()
    gens = _check_bihomogeneous(gens, split)
    G = groebner_basis(gens, MonomialOrder.degrevlex(split.varnames))
    if D is None:
        D = dimension(G)
    maxdeg = max([g.total_degree() for g in gens] or [0])
    size = window or 2 * maxdeg + 4
    for attempt in range(WINDOW_DOUBLINGS + 1):
        table = _biseries_from_basis(G, split, size, size)
        try:
            return table, canonical_form(table, D, guard=maxdeg + 1, split=split)
        except WindowTooSmallError as e:
            logger.debug('biseries_canonical_form: %s; doubling window', e)
            size *= 2
    raise WindowTooSmallError('numerator not captured after %d doublings' %
                              WINDOW_DOUBLINGS)


def _random_block_form(rng, ring, names, bound):
    return Polynomial.linear_form(ring, dict((name, utils.random_int(rng, bound))
                                             for name in names))


def bidegree_by_slicing(gens, split, d, e, rng, bound=SLICE_COEFFICIENT_BOUND,
                        retries=SLICE_RETRIES):
    """C_{d,e} as the degree of I + <u1 - 1, u2..u_{d+1}, v1 - 1, v2..v_{e+1}>
    with random X-forms u and l-forms v."""
    logger = utils.getLogger()
    n, k = _ring_sizes(split)
    if d < 0 or e < 0 or d > n or e > k:
        raise ValueError('bi-dimension (%d, %d) does not fit n=%d, k=%d' % (d, e, n, k))
    gens = _check_bihomogeneous(gens, split)
    rng = utils.make_rng(rng)
    ring = split.varnames
    order = MonomialOrder.degrevlex(ring)
    for attempt in range(retries):
        forms = []
        for count, names in ((d + 1, split.x_vars), (e + 1, split.l_vars)):
            for index in range(count):
                form = _random_block_form(rng, ring, names, bound)
                forms.append(form - 1 if index == 0 else form)
        G = groebner_basis(list(gens) + forms, order)
        if G.is_unit():
            return 0
        if dimension(G) == 0:
            return quotient_basis(G).degree
        logger.debug('bidegree_by_slicing: (%d, %d) attempt %d not zero-dimensional',
                     d, e, attempt)
    raise GenericityError('slice for bi-dimension (%d, %d) stayed positive-dimensional '
                          'after %d attempts' % (d, e, retries))


class BoundInputs(object):
    """Block sizes n, k and the bi-degrees (alpha_i, beta_i) of a system."""

    def __init__(self, n, k, bidegrees):
        self.n = n
        self.k = k
        self.bidegrees = [BiDegree(*pair) for pair in bidegrees]

    def validate(self):
        s = len(self.bidegrees)
        if s > self.n + self.k:
            raise BezoutHypothesisError('%d polynomials exceed n + k = %d' %
                                        (s, self.n + self.k))
        pure_x = sum(1 for b in self.bidegrees if b.beta == 0)
        pure_l = sum(1 for b in self.bidegrees if b.alpha == 0)
        if pure_x > self.n:
            raise BezoutHypothesisError('%d bi-degrees with beta = 0 exceed n = %d' %
                                        (pure_x, self.n))
        if pure_l > self.k:
            raise BezoutHypothesisError('%d bi-degrees with alpha = 0 exceed k = %d' %
                                        (pure_l, self.k))


def bezout_bound(inputs):
    """Sum over partitions {1..s} = I u J with |I| <= n, |J| <= k of
    prod_{i in I} alpha_i * prod_{j in J} beta_j."""
    inputs.validate()
    total = 0
    s = len(inputs.bidegrees)
    for assignment in itertools.product((0, 1), repeat=s):
        size_j = sum(assignment)
        if s - size_j > inputs.n or size_j > inputs.k:
            continue
        product = 1
        for side, bidegree in zip(assignment, inputs.bidegrees):
            product *= bidegree.beta if side else bidegree.alpha
        total += product
    return total


def _product(values):
    return reduce(lambda a, b: a * b, values, 1)


def _check_codimension(degrees, n):
    s = len(degrees)
    if s < 1 or s > n - 1:
        raise ValueError('need 1 <= s <= n - 1, got s=%d, n=%d' % (s, n))
    if any(D < 1 for D in degrees):
        raise ValueError('degrees must be positive: %r' % (degrees,))
    return s


def critical_bound(degrees, n, regular=False):
    """D1..Ds (D-1)^(n-s) C(n, n-s), or C(n-1, n-s) for a regular sequence."""
    s = _check_codimension(degrees, n)
    D = max(degrees)
    top = n - 1 if regular else n
    return _product(degrees) * (D - 1) ** (n - s) * utils.binomial(top, n - s)


def betti_bound(degrees, n, d, regular=False):
    """Bound on the number of points computed by the sampler, summed over
    the fiber depths."""
    s = _check_codimension(degrees, n)
    D = max(degrees)
    total = 0
    if regular:
        for i in range(n - s + 1):
            total += (D - 1) ** (n - s - i) * utils.binomial(n - 1 - i, n - i - s)
    else:
        for i in range(d + 1):
            if n - s - i < 0:
                break
            total += (D - 1) ** (n - s - i) * utils.binomial(n - i, n - i - s)
    return _product(degrees) * total


def thom_milnor_bound(D, n):
    if D < 1 or n < 1:
        raise ValueError('need D >= 1 and n >= 1, got D=%d, n=%d' % (D, n))
    return D * (2 * D - 1) ** (n - 1)


def minors_bound(D, n, d):
    """D^(n-d) ((n-d)(D-1))^d, the bound obtained from Jacobian minors."""
    if d < 0 or d > n:
        raise ValueError('need 0 <= d <= n, got d=%d, n=%d' % (d, n))
    return D ** (n - d) * ((n - d) * (D - 1)) ** d
