# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import os
import shutil
import tempfile
import unittest

from polycore import parse_polynomial
from systemfile import SystemFileError, parse_system, read_system


class SystemFileTest(unittest.TestCase):

    def test_blocks_and_comments(self):
        system = parse_system('# a comment\n'
                              'vars: x y | L1   # trailing comment\n'
                              '\n'
                              'x^2 + y^2 - 1\n'
                              '2*x*L1 - 1\n')
        self.assertEqual(system.x_vars, ('x', 'y'))
        self.assertEqual(system.l_vars, ('L1',))
        self.assertEqual(system.varnames, ('x', 'y', 'L1'))
        self.assertEqual(system.split.l_vars, ('L1',))
        self.assertEqual(system.polys[1], parse_polynomial('2*x*L1 - 1', system.varnames))

    def test_single_block(self):
        system = parse_system('vars: x y\nx*y - 1\n')
        self.assertEqual(system.l_vars, ())
        self.assertEqual(len(system.polys), 1)

    def test_errors(self):
        bad = [
            'x^2 - 1\n',
            'vars:\nx\n',
            'vars: x x\nx\n',
            'vars: x | y | z\nx\n',
            'vars: x y\n',
        ]
        for text in bad:
            with self.assertRaises(SystemFileError):
                parse_system(text)

    def test_error_names_line(self):
        try:
            parse_system('vars: x y\nx + 1\nx + w\n', 'bad.sys')
        except SystemFileError as e:
            self.assertTrue(str(e).startswith('bad.sys:3:'))
        else:
            self.fail('expected a SystemFileError')


class ReadSystemTest(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_read(self):
        path = os.path.join(self.tmpdir, 'line.sys')
        with open(path, 'w') as f:
            f.write('vars: x y\nx - y\n')
        system = read_system(path)
        self.assertEqual(system.path, path)
        self.assertEqual(str(system.polys[0]), 'x - y')

    def test_missing(self):
        with self.assertRaises(IOError):
            read_system(os.path.join(self.tmpdir, 'missing.sys'))


if __name__ == '__main__':
    unittest.main()
