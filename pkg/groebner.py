# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

"""Buchberger's algorithm over the rationals.

The engine uses the sugar selection strategy together with Buchberger's
product and chain criteria, and always returns reduced bases. The unit
ideal is represented by the basis [1].
"""

import itertools

from collections import deque
from fractions import Fraction

import utils

from polycore import Polynomial, degrevlex_key

SLICE_COEFFICIENT_BOUND = 997
SLICE_RETRIES = 5


class NotZeroDimensionalError(ValueError):
    pass


class GenericityError(Exception):
    """Raised when randomized slicing keeps landing on a degenerate choice."""
    pass


class MonomialOrder(object):

    DEGREVLEX = 'degrevlex'
    LEX = 'lex'
    BLOCK = 'block'

    def __init__(self, kind, varnames, block=()):
        self.kind = kind
        self.varnames = tuple(varnames)
        self.block = tuple(block)
        if kind not in (self.DEGREVLEX, self.LEX, self.BLOCK):
            raise ValueError('unknown monomial order %r' % kind)
        unknown = [name for name in self.block if name not in self.varnames]
        if unknown:
            raise ValueError('block variables %r are not in the ring' % (unknown,))
        self._first = [self.varnames.index(name) for name in self.block]
        self._rest = [i for i in range(len(self.varnames)) if i not in self._first]

    @classmethod
    def degrevlex(cls, varnames):
        return cls(cls.DEGREVLEX, varnames)

    @classmethod
    def lex(cls, varnames):
        return cls(cls.LEX, varnames)

    @classmethod
    def elimination(cls, varnames, first_block):
        """Block order: degrevlex on first_block, ties broken by degrevlex on
        the remaining variables. Eliminates first_block."""
        return cls(cls.BLOCK, varnames, first_block)

    def key(self, exps):
        if self.kind == self.DEGREVLEX:
            return degrevlex_key(exps)
        if self.kind == self.LEX:
            return exps
        return (degrevlex_key([exps[i] for i in self._first]),
                degrevlex_key([exps[i] for i in self._rest]))

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and
                (self.kind, self.varnames, self.block) ==
                (other.kind, other.varnames, other.block))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        if self.kind == self.BLOCK:
            return 'MonomialOrder(block%r, %r)' % (self.block, self.varnames)
        return 'MonomialOrder(%s, %r)' % (self.kind, self.varnames)


class GroebnerBasis(object):
    def __init__(self, generators, order):
        self.generators = list(generators)
        self.order = order

    @property
    def varnames(self):
        return self.order.varnames

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_unit(self):
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def leading_monomials(self):
        return [g.leading_term(self.order.key)[0] for g in self.generators]

    def __repr__(self):
        return 'GroebnerBasis([%s], %r)' % (', '.join(str(g) for g in self.generators),
                                            self.order)


class QuotientBasis(object):
    """Monomials outside the leading ideal, ascending in the order."""
    def __init__(self, monomials, varnames):
        self.monomials = list(monomials)
        self.varnames = tuple(varnames)
        self.index = dict((m, i) for i, m in enumerate(self.monomials))

    @property
    def degree(self):
        return len(self.monomials)

    def __len__(self):
        return len(self.monomials)

    def coordinates(self, f):
        """Coordinate vector of a polynomial already in normal form."""
        vector = [Fraction(0)] * len(self.monomials)
        for exps, coef in f.terms.items():
            vector[self.index[exps]] = coef
        return vector


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _cached_key(order):
    cache = {}
    key = order.key

    def cached(exps):
        try:
            return cache[exps]
        except KeyError:
            value = cache[exps] = key(exps)
            return value
    return cached


def _reduce(terms, basis, key):
    """Full reduction of terms (a dict) by basis, a list of (lm, monic terms)."""
    p = dict(terms)
    remainder = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, gterms in basis:
            if _divides(lm, m):
                shift = tuple(x - y for x, y in zip(m, lm))
                for e, gc in gterms.items():
                    ne = tuple(x + y for x, y in zip(e, shift))
                    value = p.get(ne, 0) - c * gc
                    if value:
                        p[ne] = value
                    else:
                        p.pop(ne, None)
                break
        else:
            remainder[m] = c
            del p[m]
    return remainder


def _monic(terms, key):
    lm = max(terms, key=key)
    inverse = 1 / terms[lm]
    return lm, dict((e, c * inverse) for e, c in terms.items())


def _check_ring(gens, order):
    for g in gens:
        if g.varnames != order.varnames:
            raise ValueError('generator ring %r does not match order ring %r' %
                             (g.varnames, order.varnames))


def s_polynomial(f, g, order):
    key = order.key
    lf, cf = f.leading_term(key)
    lg, cg = g.leading_term(key)
    lcm = _lcm(lf, lg)
    return (f.mul_term(tuple(x - y for x, y in zip(lcm, lf)), 1 / cf) -
            g.mul_term(tuple(x - y for x, y in zip(lcm, lg)), 1 / cg))


def groebner_basis(gens, order):
    """Reduced Groebner basis of the ideal generated by gens."""
    logger = utils.getLogger()
    _check_ring(gens, order)
    varnames = order.varnames
    key = _cached_key(order)
    unit = GroebnerBasis([Polynomial.constant(varnames, 1)], order)

    basis = []   # (lm, terms, sugar)
    alive = []
    pairs = {}   # (i, j) -> (sugar, lcm)

    def insert(terms, sugar):
        lm, terms = _monic(terms, key)
        if not any(lm):
            return False
        index = len(basis)
        basis.append((lm, terms, sugar))
        for i in alive:
            other_lm, _, other_sugar = basis[i]
            lcm = _lcm(other_lm, lm)
            degree = sum(lcm)
            pair_sugar = max(other_sugar - sum(other_lm), sugar - sum(lm)) + degree
            pairs[(i, index)] = (pair_sugar, lcm)
        alive.append(index)
        return True

    def reducers():
        return [(basis[i][0], basis[i][1]) for i in alive]

    for g in sorted((g for g in gens if g), key=lambda g: key(g.leading_term(key)[0])):
        remainder = _reduce(g.terms, reducers(), key)
        if remainder and not insert(remainder, g.total_degree()):
            return unit

    steps = 0
    while pairs:
        pair = min(pairs, key=lambda p: (pairs[p][0], key(pairs[p][1])))
        sugar, lcm = pairs.pop(pair)
        i, j = pair
        lm_i, terms_i, _ = basis[i]
        lm_j, terms_j, _ = basis[j]
        if all(not (x and y) for x, y in zip(lm_i, lm_j)):
            continue
        chained = False
        for k in alive:
            if k == i or k == j:
                continue
            if (_divides(basis[k][0], lcm) and
                    (min(i, k), max(i, k)) not in pairs and
                    (min(j, k), max(j, k)) not in pairs):
                chained = True
                break
        if chained:
            continue
        spoly = {}
        for lm, terms, sign in ((lm_i, terms_i, 1), (lm_j, terms_j, -1)):
            shift = tuple(x - y for x, y in zip(lcm, lm))
            for e, c in terms.items():
                ne = tuple(x + y for x, y in zip(e, shift))
                value = spoly.get(ne, 0) + sign * c
                if value:
                    spoly[ne] = value
                else:
                    spoly.pop(ne, None)
        steps += 1
        remainder = _reduce(spoly, reducers(), key)
        if remainder:
            if not insert(remainder, sugar):
                logger.debug('groebner_basis: unit ideal after %d reductions', steps)
                return unit

    logger.debug('groebner_basis: %d generators, %d reductions',
                 len(alive), steps)
    return GroebnerBasis(_interreduce([basis[i] for i in alive], order, key), order)


def _interreduce(elements, order, key):
    minimal = []
    for index, (lm, terms, _) in enumerate(elements):
        dominated = False
        for other_index, (other_lm, _, _) in enumerate(elements):
            if other_index == index:
                continue
            if _divides(other_lm, lm) and (other_lm != lm or other_index < index):
                dominated = True
                break
        if not dominated:
            minimal.append((lm, terms))
    reduced = []
    for index, (lm, terms) in enumerate(minimal):
        others = [entry for other_index, entry in enumerate(minimal) if other_index != index]
        remainder = _reduce(terms, others, key)
        lm, remainder = _monic(remainder, key)
        reduced.append((lm, remainder))
    reduced.sort(key=lambda entry: key(entry[0]), reverse=True)
    return [Polynomial(order.varnames, terms) for lm, terms in reduced]


def normal_form(f, G):
    """Remainder of f under full multivariate division by G."""
    if f.varnames != G.varnames:
        raise ValueError('polynomial ring %r does not match basis ring %r' %
                         (f.varnames, G.varnames))
    key = _cached_key(G.order)
    reducers = []
    for g in G.generators:
        lm, terms = _monic(g.terms, key)
        reducers.append((lm, terms))
    return Polynomial(f.varnames, _reduce(f.terms, reducers, key))


def dimension(G):
    """Krull dimension of the ideal of G; -1 for the unit ideal."""
    if G.is_unit():
        return -1
    nvars = len(G.varnames)
    supports = [frozenset(i for i, e in enumerate(lm) if e)
                for lm in G.leading_monomials()]
    for size in range(nvars, -1, -1):
        for subset in itertools.combinations(range(nvars), size):
            subset = frozenset(subset)
            if not any(support <= subset for support in supports):
                return size
    return 0


def quotient_basis(G):
    """Standard monomials of a zero-dimensional ideal."""
    if dimension(G) != 0:
        raise NotZeroDimensionalError('ideal is not zero-dimensional')
    lms = G.leading_monomials()
    nvars = len(G.varnames)
    start = (0,) * nvars
    seen = set([start])
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for i in range(nvars):
            child = m[:i] + (m[i] + 1,) + m[i + 1:]
            if child in seen or any(_divides(lm, child) for lm in lms):
                continue
            seen.add(child)
            queue.append(child)
    return QuotientBasis(sorted(seen, key=G.order.key), G.varnames)


def monomials_of_degree(nvars, degree):
    """All exponent tuples of the given total degree."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def hilbert_function(G, dmax):
    """[dim (R/I)_d for d in 0..dmax] by total-degree staircase counting."""
    if G.is_unit():
        return [0] * (dmax + 1)
    lms = G.leading_monomials()
    nvars = len(G.varnames)
    return [sum(1 for m in monomials_of_degree(nvars, d)
                if not any(_divides(lm, m) for lm in lms))
            for d in range(dmax + 1)]


def eliminate(gens, drop_vars, varnames=None):
    """Generators of the ideal intersected with the subring without drop_vars.

    The result lives in the ring of the remaining variables.
    """
    if varnames is None:
        if not gens:
            raise ValueError('cannot infer the ring of an empty generator list')
        varnames = gens[0].varnames
    varnames = tuple(varnames)
    drop_vars = tuple(drop_vars)
    kept = [name for name in varnames if name not in drop_vars]
    order = MonomialOrder.elimination(varnames, drop_vars)
    G = groebner_basis(gens, order)
    drop_indices = [varnames.index(name) for name in drop_vars]
    result = []
    for g in G.generators:
        if all(not exps[i] for exps in g.terms for i in drop_indices):
            result.append(g.to_ring(kept))
    return result


def ideal_degree_by_slicing(gens, target_dim, rng, varnames=None,
                            bound=SLICE_COEFFICIENT_BOUND, retries=SLICE_RETRIES):
    """Degree of the ideal by cutting it with target_dim random affine
    hyperplanes and counting the standard monomials of the slice."""
    logger = utils.getLogger()
    rng = utils.make_rng(rng)
    if varnames is None:
        varnames = gens[0].varnames
    varnames = tuple(varnames)
    order = MonomialOrder.degrevlex(varnames)
    for attempt in range(retries):
        forms = []
        for _ in range(target_dim):
            coefficients = dict((name, utils.random_int(rng, bound)) for name in varnames)
            forms.append(Polynomial.linear_form(varnames, coefficients,
                                                utils.random_int(rng, bound)))
        G = groebner_basis(list(gens) + forms, order)
        dim = dimension(G)
        if dim == 0:
            return quotient_basis(G).degree
        logger.debug('ideal_degree_by_slicing: attempt %d gave dimension %d',
                     attempt, dim)
    raise GenericityError('slice did not become zero-dimensional after %d attempts; '
                          'is the dimension %d correct?' % (retries, target_dim))
