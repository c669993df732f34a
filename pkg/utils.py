# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

import logging
import multiprocessing
import zlib

from fractions import Fraction

import numpy
import sympy


def getLoggerFormatString(loglevel):
    if loglevel == logging.DEBUG:
        formatstring = '%(asctime)s %(process)-6d %(processName)-14s %(threadName)-12s %(name)15s %(levelname)-8s %(message)s'
    else:
        formatstring = '%(asctime)s %(name)15s %(levelname)-8s %(message)s'
    return formatstring


def getLogger(name=None):
    """Return a logger for the current process.

    :param name: Name of logger to return. If name is not specified,
        it defaults to None which will return a logger whose name is
        the name of the current process as returned by
        multiprocessing.current_process().name.
    """
    if name is None:
        name = multiprocessing.current_process().name
    return logging.getLogger(name)


def _path_key(part):
    if isinstance(part, int):
        return part
    # Labels are mapped through crc32 so the key does not depend on
    # PYTHONHASHSEED.
    return zlib.crc32(str(part).encode('utf-8'))


def spawn_rng(seed, *path):
    """Return a numpy Generator for the stream identified by seed and path.

    The same (seed, path) always yields the same stream, independently of
    which other streams have been drawn, so depths may run in any order or
    in separate processes.

    :param seed: integer master seed.
    :param path: labels (ints or strings) naming the child stream.
    """
    spawn_key = tuple(_path_key(part) for part in path)
    sequence = numpy.random.SeedSequence(entropy=int(seed), spawn_key=spawn_key)
    return numpy.random.default_rng(sequence)


def make_rng(rng):
    """Accept an int seed or a Generator and return a Generator."""
    if isinstance(rng, numpy.random.Generator):
        return rng
    if rng is None:
        rng = 0
    return spawn_rng(int(rng))


def random_int(rng, bound):
    """Uniform integer in [-bound, bound]."""
    return int(rng.integers(-bound, bound + 1))


def to_fraction(value):
    """Convert ints, strings, Fractions and sympy Rationals to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Basic):
        value = sympy.Rational(value)
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def to_rational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def format_fraction(value):
    value = Fraction(value)
    if value.denominator == 1:
        return '%d' % value.numerator
    return '%d/%d' % (value.numerator, value.denominator)


def format_decimal(value, digits=12):
    return '%.*g' % (digits, float(Fraction(value)))


def binomial(a, b):
    """C(a, b), zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    result = 1
    for i in range(1, b + 1):
        result = result * (a - b + i) // i
    return result
