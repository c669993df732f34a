# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import os
import shutil
import tempfile
import unittest

from optparse import Values

from options import CritpointsOptions, load_options


class LoadOptionsTest(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.config = os.path.join(self.tmpdir, 'settings.ini')
        with open(self.config, 'w') as f:
            f.write('[settings]\n'
                    'seed = 7\n'
                    'width = 1/64\n'
                    'parallel = true\n'
                    'retries_a = 5\n'
                    'p = 1/2 3\n')

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_defaults(self):
        options = load_options(Values({'command': 'bound'}))
        defaults = CritpointsOptions()
        self.assertEqual(options.command, 'bound')
        self.assertEqual(options.seed, defaults.seed)
        self.assertEqual(options.width, '1/1048576')
        self.assertFalse(options.parallel)

    def test_config_fills_unset_options(self):
        options = load_options(Values({'command': 'sample', 'config': self.config,
                                       'seed': None, 'retries_a': 1}))
        self.assertEqual(options.seed, 7)
        self.assertEqual(options.width, '1/64')
        self.assertTrue(options.parallel)
        self.assertEqual(options.p, ['1/2', '3'])
        # the command line wins
        self.assertEqual(options.retries_a, 1)

    def test_unreadable_config(self):
        with self.assertRaises(IOError):
            load_options(Values({'config': os.path.join(self.tmpdir, 'missing.ini')}))

    def test_str_lists_settings(self):
        self.assertIn("'seed': 42", str(CritpointsOptions()))


if __name__ == '__main__':
    unittest.main()
