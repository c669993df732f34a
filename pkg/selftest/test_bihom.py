# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import unittest

import utils

from bihom import (BezoutHypothesisError, BoundInputs, NotBihomogeneousError,
                   WindowTooSmallError, betti_bound, bezout_bound, bidegree_by_slicing,
                   biseries_canonical_form, canonical_form,
                   complete_intersection_biseries, critical_bound, free_biseries,
                   hilbert_biseries, minors_bound, specialize_to_hilbert_series,
                   thom_milnor_bound)
from groebner import MonomialOrder, groebner_basis, hilbert_function
from polycore import BlockSplit, parse_polynomial


def split_of(n, k):
    x_vars = tuple('X%d' % i for i in range(n + 1))
    l_vars = tuple('L%d' % j for j in range(k + 1))
    return BlockSplit(x_vars, l_vars, True, True)


BILINEAR = 'X0*L0 + 2*X0*L1 + 3*X1*L0 + 5*X1*L1'
BILINEAR2 = '7*X0*L0 - X0*L1 + 2*X1*L0 + 3*X1*L1'

# (name, n, k, generators, expected C)
FIXTURES = [
    ('bilinear', 1, 1, [BILINEAR], {(1, 0): 1, (0, 1): 1}),
    ('two bilinear factors', 1, 1, ['(%s)*(%s)' % (BILINEAR, BILINEAR2)],
     {(1, 0): 2, (0, 1): 2}),
    ('bilinear times a linear form', 1, 1, ['(%s)*(X0 + 4*X1)' % BILINEAR],
     {(1, 0): 1, (0, 1): 2}),
    ('hypersurface of bidegree (2, 1)', 1, 1,
     ['2*X0^2*L0 + X0*X1*L1 - 3*X1^2*L0 + X1^2*L1'], {(1, 0): 1, (0, 1): 2}),
    ('conic and bilinear form', 2, 1,
     ['X0*L0 + 2*X1*L1 - X2*L0 + 3*X2*L1', 'X0^2 + X1^2 - 3*X2^2 + X0*X1'],
     {(1, 0): 2, (0, 1): 2}),
]


def fixture_gens(n, k, texts):
    split = split_of(n, k)
    return [parse_polynomial(text, split.varnames) for text in texts], split


class BoundTest(unittest.TestCase):

    def test_bezout(self):
        self.assertEqual(bezout_bound(BoundInputs(2, 1, [(2, 1), (1, 1)])), 5)

    def test_bezout_hypothesis(self):
        with self.assertRaises(BezoutHypothesisError):
            bezout_bound(BoundInputs(1, 1, [(1, 1)] * 3))
        with self.assertRaises(BezoutHypothesisError):
            bezout_bound(BoundInputs(1, 2, [(2, 0), (3, 0)]))

    def test_critical(self):
        self.assertEqual(critical_bound([2], 2, regular=True), 2)
        self.assertEqual(critical_bound([2], 3), 6)
        self.assertEqual(critical_bound([4], 2, regular=True), 12)
        with self.assertRaises(ValueError):
            critical_bound([2, 2], 2)

    def test_thom_milnor(self):
        self.assertEqual(thom_milnor_bound(2, 2), 6)

    def test_minors(self):
        self.assertEqual(minors_bound(2, 2, 1), 2)
        self.assertEqual(minors_bound(3, 3, 1), 3 ** 2 * 4)

    def test_betti_below_thom_milnor(self):
        for D in range(2, 9):
            for n in range(2, 9):
                for s in range(1, n):
                    for regular in (False, True):
                        self.assertLessEqual(betti_bound([D] * s, n, n - s, regular),
                                             thom_milnor_bound(D, n),
                                             'D=%d n=%d s=%d' % (D, n, s))

    def test_betti_circle(self):
        # two critical points of the projection plus two points on a line
        self.assertEqual(betti_bound([2], 2, 1, regular=True), 4)


class BiSeriesTest(unittest.TestCase):

    def test_zero_ideal_closed_form(self):
        for n, k in ((0, 0), (1, 0), (1, 1), (2, 1)):
            split = split_of(n, k)
            self.assertEqual(hilbert_biseries([], split, 9, 9),
                             free_biseries(n, k, 9, 9))

    def test_specialization(self):
        for name, n, k, texts, expected in FIXTURES:
            gens, split = fixture_gens(n, k, texts)
            table = hilbert_biseries(gens, split, 8, 8)
            G = groebner_basis(gens, MonomialOrder.degrevlex(split.varnames))
            self.assertEqual(specialize_to_hilbert_series(table, 8), hilbert_function(G, 8),
                             name)

    def test_specialization_window(self):
        table = free_biseries(1, 1, 4, 2)
        with self.assertRaises(WindowTooSmallError):
            specialize_to_hilbert_series(table, 3)

    def test_nonzerodivisor(self):
        split = split_of(2, 1)
        conic = parse_polynomial('X0^2 + X1^2 - 3*X2^2 + X0*X1', split.varnames)
        g = parse_polynomial('X0*L0 + 2*X1*L1 - X2*L0 + 3*X2*L1', split.varnames)
        before = hilbert_biseries([conic], split, 7, 7)
        after = hilbert_biseries([conic, g], split, 7, 7)
        self.assertEqual(after, before.times_factor(1, 1))
        self.assertEqual(after, complete_intersection_biseries([(2, 0), (1, 1)], 2, 1, 7, 7))

    def test_constant_tail_is_point_count(self):
        # finitely many points in the product of projective spaces
        points = [
            (1, 1, [BILINEAR, 'X0*L1 - X1*L0 + X1*L1'], 2),
            (1, 1, ['X0 - X1', 'L0 - 2*L1'], 1),
            (2, 1, ['X1 - 2*X0', 'X2^2 - X0^2', 'L0 - 3*L1'], 2),
        ]
        for n, k, texts, count in points:
            gens, split = fixture_gens(n, k, texts)
            table = hilbert_biseries(gens, split, 8, 8)
            tail = set(table[i, j] for i in range(3, 9) for j in range(3, 9))
            self.assertEqual(tail, {count}, texts)
            for seed in (1, 2, 3):
                rng = utils.spawn_rng(seed, 'bidegree', 0, 0)
                self.assertEqual(bidegree_by_slicing(gens, split, 0, 0, rng), count,
                                 '%s seed %d' % (texts, seed))

    def test_not_bihomogeneous(self):
        split = split_of(1, 1)
        f = parse_polynomial('X0*L0 + X1', split.varnames)
        with self.assertRaises(NotBihomogeneousError):
            hilbert_biseries([f], split, 3, 3)


class CanonicalFormTest(unittest.TestCase):

    def test_canonical_form(self):
        for name, n, k, texts, expected in FIXTURES:
            gens, split = fixture_gens(n, k, texts)
            table, form = biseries_canonical_form(gens, split)
            self.assertEqual(form.C, expected, name)
            self.assertEqual(form.series(table.imax, table.jmax), table, name)

    def test_free_ring(self):
        split = split_of(1, 1)
        form = canonical_form(free_biseries(1, 1, 6, 6), 4, split=split)
        self.assertEqual(form.C, {(1, 1): 1})
        self.assertEqual(form.lower_terms, {})
        self.assertEqual(form.Q, {})

    def test_guard_band(self):
        split = split_of(1, 1)
        f = parse_polynomial('X0^3*L0^3 + X1^3*L1^3', split.varnames)
        table = hilbert_biseries([f], split, 3, 3)
        with self.assertRaises(WindowTooSmallError):
            canonical_form(table, 3, guard=1, split=split)

    def test_two_routes_agree(self):
        for name, n, k, texts, expected in FIXTURES:
            gens, split = fixture_gens(n, k, texts)
            for seed in (1, 2, 3):
                for (d, e), value in expected.items():
                    rng = utils.spawn_rng(seed, 'bidegree', d, e)
                    self.assertEqual(bidegree_by_slicing(gens, split, d, e, rng), value,
                                     '%s (%d, %d) seed %d' % (name, d, e, seed))

    def test_slicing_range(self):
        gens, split = fixture_gens(1, 1, [BILINEAR])
        with self.assertRaises(ValueError):
            bidegree_by_slicing(gens, split, 2, 0, 1)


if __name__ == '__main__':
    unittest.main()
