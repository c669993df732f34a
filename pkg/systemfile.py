# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

"""Reader for .sys files.

    # comment
    vars: x y | L1
    x^2 + y^2 - 1
    L1*(2*x) - 1

The first non-comment line names the variables; an optional '|' separates
the X-block from the multiplier block. Every following line holds one
polynomial.
"""

from polycore import BlockSplit, PolynomialSyntaxError, parse_polynomial

VARS_PREFIX = 'vars:'


class SystemFileError(ValueError):
    pass


class SystemFile(object):
    def __init__(self, x_vars, l_vars, polys, path=None):
        self.x_vars = tuple(x_vars)
        self.l_vars = tuple(l_vars)
        self.polys = list(polys)
        self.path = path

    @property
    def varnames(self):
        return self.x_vars + self.l_vars

    @property
    def split(self):
        return BlockSplit(self.x_vars, self.l_vars)

    def __repr__(self):
        return 'SystemFile(%r, %d polynomials)' % (self.path, len(self.polys))


def parse_system(text, path='<string>'):
    x_vars = None
    l_vars = ()
    polys = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if x_vars is None:
            if not line.startswith(VARS_PREFIX):
                raise SystemFileError('%s:%d: expected a %r line' % (path, lineno, VARS_PREFIX))
            blocks = line[len(VARS_PREFIX):].split('|')
            if len(blocks) > 2:
                raise SystemFileError('%s:%d: at most one | in the vars line' % (path, lineno))
            x_vars = tuple(blocks[0].split())
            if len(blocks) == 2:
                l_vars = tuple(blocks[1].split())
            names = x_vars + l_vars
            if not x_vars:
                raise SystemFileError('%s:%d: no variables declared' % (path, lineno))
            if len(set(names)) != len(names):
                raise SystemFileError('%s:%d: duplicate variable names' % (path, lineno))
            continue
        try:
            polys.append(parse_polynomial(line, x_vars + l_vars))
        except PolynomialSyntaxError as e:
            raise SystemFileError('%s:%d: %s' % (path, lineno, e))
    if x_vars is None:
        raise SystemFileError('%s: missing %r line' % (path, VARS_PREFIX))
    if not polys:
        raise SystemFileError('%s: no polynomials' % path)
    return SystemFile(x_vars, l_vars, polys, path)


def read_system(path):
    with open(path) as f:
        return parse_system(f.read(), path)
