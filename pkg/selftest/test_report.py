# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import json
import unittest

from lagrange import InputSystem
from polycore import parse_polynomial
from report import ReportFormatError, dump_report, load_report, report_to_dict, reverify
from sampler import sample_real_points

XY = ('x', 'y')


class ReportTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.input = InputSystem([parse_polynomial('x^2 + y^2 - 1', XY)])
        cls.report = sample_real_points(cls.input, seed=7)
        cls.text = dump_report(cls.report)

    def test_layout(self):
        data = json.loads(self.text)
        self.assertEqual(data['input'], {'vars': ['x', 'y'], 'polys': ['x^2 + y^2 - 1'],
                                         'regular': False})
        self.assertEqual(data['seed'], 7)
        self.assertEqual(data['width'], '1/1048576')
        self.assertEqual([depth['depth'] for depth in data['depths']], [0, 1])
        self.assertEqual(len(data['points']), len(self.report))
        for point in data['points']:
            self.assertTrue(point['verified'])
            self.assertEqual([c['name'] for c in point['coordinates']], ['x', 'y'])
        self.assertTrue(self.text.endswith('}\n'))

    def test_same_seed_same_bytes(self):
        again = sample_real_points(self.input, seed=7)
        self.assertEqual(dump_report(again), self.text)

    def test_reload(self):
        loaded = load_report(self.text)
        self.assertEqual(report_to_dict(loaded), report_to_dict(self.report))
        self.assertEqual(dump_report(loaded), self.text)
        self.assertEqual(loaded.A, self.report.A)

    def test_reverify(self):
        loaded = load_report(self.text)
        self.assertTrue(all(reverify(loaded)))
        other = InputSystem([parse_polynomial('x^2 + y^2 - 4', XY)])
        self.assertFalse(any(reverify(loaded, other)))

    def test_malformed(self):
        with self.assertRaises(ReportFormatError):
            load_report('{}')
        with self.assertRaises(ReportFormatError):
            load_report('not json')
        with self.assertRaises(ReportFormatError):
            load_report(self.text.replace('x^2 + y^2 - 1', 'x^^2', 1))


if __name__ == '__main__':
    unittest.main()
