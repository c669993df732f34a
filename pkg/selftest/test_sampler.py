# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import os
import unittest

from fractions import Fraction
from unittest import mock

from manifestparser import TestManifest

import sampler

from fiberstatus import FiberStatus
from interval import Interval, as_interval
from lagrange import HypothesisViolation, InputSystem
from parameterization import IsolatingBox
from polycore import parse_polynomial
from sampler import (DepthResult, SampleRunner, sample_real_points, verify_on_variety)
from systemfile import read_system

HERE = os.path.dirname(os.path.abspath(__file__))
SYSTEMS = os.path.join(os.path.dirname(HERE), 'systems')

XY = ('x', 'y')


def circle():
    return InputSystem([parse_polynomial('x^2 + y^2 - 1', XY)])


class FixtureTest(unittest.TestCase):
    """Sample every system listed in systems/manifest.ini with several seeds
    and check that each component's region holds a certified point."""

    SEEDS = (1, 2, 3)

    def hit_components(self, entry, seed):
        system = read_system(entry['path'])
        input = InputSystem(system.polys,
                            assume_regular_sequence=entry.get('regular') == 'true')
        report = sample_real_points(input, seed=seed)
        name = '%s seed %d' % (entry['name'], seed)
        self.assertLessEqual(len(report), report.bounds.get('betti', 0), name)
        self.assertTrue(all(report.verified), name)
        self.assertTrue(all(report.lagrange_checked), name)
        for result in report.depths:
            if result.parameterization is None:
                continue
            residues = result.parameterization.residues(result.generators)
            self.assertTrue(all(r.is_zero() for r in residues),
                            '%s depth %d' % (name, result.depth))
        regions = [text.strip() for text in entry['regions'].split(';') if text.strip()]
        self.assertEqual(len(regions), int(entry['components']), name)
        hit = set()
        for index, text in enumerate(regions):
            region = parse_polynomial(text, input.varnames)
            if any(as_interval(region.evaluate(box.coordinates)).is_positive()
                   for box in report.points):
                hit.add(index)
        return hit

    def test_fixtures(self):
        manifest = TestManifest()
        manifest.read(os.path.join(SYSTEMS, 'manifest.ini'))
        entries = manifest.get()
        self.assertTrue(entries)
        for entry in entries:
            everything = set(range(int(entry['components'])))
            for seed in self.SEEDS:
                self.assertEqual(self.hit_components(entry, seed), everything,
                                 '%s seed %d' % (entry['name'], seed))


class SamplerTest(unittest.TestCase):

    def test_circle(self):
        report = sample_real_points(circle(), seed=7)
        self.assertEqual(report.dimension, 1)
        self.assertGreaterEqual(len(report), 1)
        for box in report.points:
            self.assertLess(box.width, sampler.DEFAULT_WIDTH)
            self.assertTrue(verify_on_variety(box, circle()))
        self.assertEqual(report.depth_status(0), FiberStatus.ZERO_DIM)
        self.assertEqual(report.depth_status(1), FiberStatus.ZERO_DIM)
        self.assertEqual(report.bounds['critical_regular'], 2)

    def test_same_seed_same_points(self):
        first = sample_real_points(circle(), seed=11)
        second = sample_real_points(circle(), seed=11)
        self.assertEqual(first.A, second.A)
        self.assertEqual([box.coordinates for box in first.points],
                         [box.coordinates for box in second.points])

    def test_empty_real_set(self):
        input = InputSystem([parse_polynomial('x^2 + y^2 + 1', XY)])
        report = sample_real_points(input, seed=5)
        self.assertEqual(report.dimension, 1)
        self.assertEqual(len(report), 0)

    def test_empty_complex_set(self):
        input = InputSystem([parse_polynomial('1 + 0*x', XY)])
        report = sample_real_points(input)
        self.assertEqual(report.dimension, -1)
        self.assertEqual(len(report), 0)
        self.assertEqual(report.depths, [])

    def test_explicit_p(self):
        report = sample_real_points(circle(), seed=2, p=[Fraction(1, 3)])
        self.assertEqual(report.p, [Fraction(1, 3)])

    def test_cross_check(self):
        report = sample_real_points(circle(), seed=4, cross_check=True, matrix_bound=9)
        self.assertEqual([check.depth for check in report.cross_checks], [0])
        self.assertTrue(all(check.consistent for check in report.cross_checks))

    def test_needs_assumption(self):
        input = InputSystem([parse_polynomial('x^2 + y^2 - 1', XY)],
                            assume_radical_smooth=False)
        with self.assertRaises(ValueError):
            SampleRunner(input)
        with self.assertRaises(ValueError):
            SampleRunner(circle(), width=0)


class RetryTest(unittest.TestCase):

    def test_budget_exhausted(self):
        jobs = []

        def always_retried(job):
            jobs.append(job)
            return DepthResult(job.depth, FiberStatus.RETRIED, message='dimension 1')

        with mock.patch.object(sampler, 'solve_depth', always_retried):
            runner = SampleRunner(circle(), seed=1, retries_a=2, retries_p=2)
            with self.assertRaises(HypothesisViolation):
                runner.run()
        # two depths per attempt, 1 + 2 matrices then 2 shifts of p
        self.assertEqual(len(jobs), 2 * 5)
        matrices = [job.A for job in jobs if job.depth == 0]
        self.assertNotEqual(matrices[0], matrices[1])
        self.assertEqual(matrices[2], matrices[3])
        self.assertEqual([job.p for job in jobs if job.depth == 1][2:],
                         [[0], [1], [2]])

    def test_recovers_after_retry(self):
        calls = []
        solve = sampler.solve_depth

        def first_attempt_fails(job):
            calls.append(job)
            if len(calls) <= 2 and job.depth == 1:
                return DepthResult(job.depth, FiberStatus.RETRIED)
            return solve(job)

        with mock.patch.object(sampler, 'solve_depth', first_attempt_fails):
            report = SampleRunner(circle(), seed=1).run()
        self.assertEqual(report.attempts, 2)
        self.assertEqual(report.retried, [1])
        self.assertGreaterEqual(len(report), 1)


class VerifyTest(unittest.TestCase):

    def test_box_off_the_circle(self):
        box = IsolatingBox([Interval(2), Interval(2)], Interval(0), 0, 0, XY)
        self.assertFalse(verify_on_variety(box, circle()))

    def test_box_on_the_circle(self):
        eps = Fraction(1, 2 ** 10)
        box = IsolatingBox([Interval(1 - eps, 1 + eps), Interval(-eps, eps)],
                           Interval(0), 0, 0, XY)
        self.assertTrue(verify_on_variety(box, circle()))


if __name__ == '__main__':
    unittest.main()
