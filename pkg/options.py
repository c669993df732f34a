# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import configparser
import inspect

import sampler
import utils

from lagrange import MATRIX_ENTRY_BOUND
from parameterization import SEPARATING_COEFFICIENT_BOUND
from sampler import SampleRunner


class CritpointsOptions(object):
    """Encapsulate the command line and ini file options used to configure
    a critpoints job. Each attribute is initialized to an 'empty' value which
    also is of the same type as the final option value so that the
    appropriate getters can be determined."""
    def __init__(self):
        # command line options
        self.command = ''
        self.input_path = ''
        self.out = ''
        self.config = ''
        self.degrees = []
        self.bidegrees = []
        self.p = []
        self.n = 0
        self.s = 0
        self.d = -1
        self.k = 0
        self.objective = ''
        self.depth = -1

        # ini options
        self.seed = sampler.DEFAULT_SEED
        self.width = utils.format_fraction(sampler.DEFAULT_WIDTH)
        self.regular = False
        self.json = False
        self.parallel = False
        self.cross_check = False
        self.retries_a = SampleRunner.A_RETRIES
        self.retries_p = SampleRunner.P_RETRIES
        self.matrix_bound = MATRIX_ENTRY_BOUND
        self.separating_bound = SEPARATING_COEFFICIENT_BOUND
        self.certification_width = utils.format_fraction(SampleRunner.CERTIFICATION_WIDTH)
        self.loglevel = 'WARNING'
        self.logfile = ''
        # 0 selects the adaptive window
        self.window = 0

    def __str__(self):
        whitelist = ('command',
                     'input_path',
                     'out',
                     'config',
                     'degrees',
                     'bidegrees',
                     'p',
                     'n',
                     's',
                     'd',
                     'k',
                     'objective',
                     'depth',
                     'seed',
                     'width',
                     'regular',
                     'json',
                     'parallel',
                     'cross_check',
                     'retries_a',
                     'retries_p',
                     'matrix_bound',
                     'separating_bound',
                     'certification_width',
                     'loglevel',
                     'logfile',
                     'window')
        d = {}
        for attr in whitelist:
            d[attr] = getattr(self, attr)
        return '%s' % d

    def __repr__(self):
        return self.__str__()


def load_options(cmd_options):
    """Merge parsed command line values with the [settings] section of the
    ini file named by cmd_options.config. An ini value is used only where
    the command line left the option unset (None)."""
    options = CritpointsOptions()
    option_tuples = [(option_name, type(option_value))
                     for option_name, option_value in inspect.getmembers(options)
                     if not option_name.startswith('_') and
                     not callable(option_value)]
    getter_map = {str: 'get', int: 'getint', bool: 'getboolean', list: 'get'}

    unset = set()
    for option_name, option_type in option_tuples:
        try:
            value = getattr(cmd_options, option_name)
        except AttributeError:
            value = None
        if value is None:
            unset.add(option_name)
            continue
        setattr(options, option_name, option_type(value))

    if options.config:
        cfg = configparser.RawConfigParser()
        if not cfg.read(options.config):
            raise IOError('unable to read config file %s' % options.config)
        for option_name, option_type in option_tuples:
            if option_name not in unset:
                continue
            try:
                getter = getattr(configparser.RawConfigParser,
                                 getter_map[option_type])
                value = getter(cfg, 'settings', option_name)
            except (configparser.NoOptionError, configparser.NoSectionError):
                continue
            if option_type == list:
                value = value.split()
            setattr(options, option_name, option_type(value))
    return options
