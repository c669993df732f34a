# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

"""Exact sparse multivariate polynomials over the rationals.

A Polynomial is a mapping from dense exponent tuples (one slot per ring
variable) to nonzero Fractions together with the ordered variable names
of its ring. Values are treated as immutable.
"""

import re

from collections import namedtuple
from fractions import Fraction

import sympy

import utils

HOMOGENIZING_X = 'X0'
HOMOGENIZING_L = 'L0'


class PolynomialSyntaxError(ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = '%s at position %d' % (message, position)
        ValueError.__init__(self, message)
        self.position = position


class UnknownVariableError(PolynomialSyntaxError):
    pass


class SingularMatrixError(ValueError):
    pass


BiDegree = namedtuple('BiDegree', ['alpha', 'beta'])


def degrevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _scalar(value):
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, sympy.Basic):
        return utils.to_fraction(value)
    return None


class Polynomial(object):

    def __init__(self, varnames, terms=None):
        self.varnames = tuple(varnames)
        nvars = len(self.varnames)
        clean = {}
        if terms:
            for exps, coef in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError('exponent vector %r does not match ring %r' %
                                     (exps, self.varnames))
                coef = Fraction(coef)
                if coef:
                    clean[exps] = coef
        self.terms = clean

    @classmethod
    def _raw(cls, varnames, terms):
        # terms already clean: tuple keys of the right width, nonzero Fractions.
        poly = cls.__new__(cls)
        poly.varnames = varnames
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, varnames):
        return cls(varnames)

    @classmethod
    def constant(cls, varnames, value):
        varnames = tuple(varnames)
        return cls(varnames, {(0,) * len(varnames): value})

    @classmethod
    def variable(cls, varnames, name):
        varnames = tuple(varnames)
        if name not in varnames:
            raise UnknownVariableError('unknown variable %r' % name)
        exps = [0] * len(varnames)
        exps[varnames.index(name)] = 1
        return cls(varnames, {tuple(exps): 1})

    @classmethod
    def linear_form(cls, varnames, coefficients, constant=0):
        """Sum of coefficient*name over the mapping coefficients, plus constant."""
        varnames = tuple(varnames)
        terms = {}
        for name, coef in coefficients.items():
            exps = [0] * len(varnames)
            exps[varnames.index(name)] = 1
            terms[tuple(exps)] = coef
        if constant:
            terms[(0,) * len(varnames)] = constant
        return cls(varnames, terms)

    # Structure

    @property
    def nvars(self):
        return len(self.varnames)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(exps) for exps in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        """Maximal total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def block_degree(self, names):
        indices = [self.varnames.index(name) for name in names]
        return max([sum(exps[i] for i in indices) for exps in self.terms] or [0])

    def variables(self):
        used = set()
        for exps in self.terms:
            for name, e in zip(self.varnames, exps):
                if e:
                    used.add(name)
        return [name for name in self.varnames if name in used]

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.varnames != self.varnames:
                raise ValueError('ring mismatch: %r vs %r' %
                                 (self.varnames, other.varnames))
            return other
        value = _scalar(other)
        if value is None:
            return None
        return Polynomial.constant(self.varnames, value)

    # Arithmetic

    def __neg__(self):
        return Polynomial._raw(self.varnames,
                               dict((e, -c) for e, c in self.terms.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            value = terms.get(exps, 0) + coef
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return Polynomial._raw(self.varnames, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        value = _scalar(other)
        if value is not None:
            if not value:
                return Polynomial.zero(self.varnames)
            return Polynomial._raw(self.varnames,
                                   dict((e, c * value) for e, c in self.terms.items()))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return Polynomial._raw(self.varnames,
                               dict((e, c) for e, c in terms.items() if c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = _scalar(other)
        if value is None:
            return NotImplemented
        return self * (1 / value)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('exponent must be a non-negative integer: %r' % (exponent,))
        result = Polynomial.constant(self.varnames, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def mul_term(self, exps, coef):
        coef = Fraction(coef)
        if not coef:
            return Polynomial.zero(self.varnames)
        return Polynomial._raw(self.varnames, dict(
            (tuple(a + b for a, b in zip(e, exps)), c * coef)
            for e, c in self.terms.items()))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.varnames == other.varnames and self.terms == other.terms
        value = _scalar(other)
        if value is None:
            return NotImplemented
        return self.is_constant() and self.constant_value() == value

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.varnames, frozenset(self.terms.items())))

    # Calculus and substitution

    def diff(self, name):
        index = self.varnames.index(name)
        terms = {}
        for exps, coef in self.terms.items():
            e = exps[index]
            if e:
                shifted = list(exps)
                shifted[index] = e - 1
                terms[tuple(shifted)] = coef * e
        return Polynomial._raw(self.varnames, terms)

    def gradient(self, names):
        return [self.diff(name) for name in names]

    def evaluate(self, values):
        """Evaluate at values, a mapping name -> value or a sequence in ring
        order. Values may be Fractions, ints or Intervals."""
        if isinstance(values, dict):
            values = [values[name] for name in self.varnames]
        values = list(values)
        if len(values) != self.nvars:
            raise ValueError('expected %d values, got %d' % (self.nvars, len(values)))
        powers = {}
        total = Fraction(0)
        for exps, coef in self.terms.items():
            term = coef
            for i, e in enumerate(exps):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = values[i] ** e
                    term = powers[key] * term
            total = term + total
        return total

    def compose(self, images, varnames):
        """Substitute images[i] (Polynomials over varnames) for variable i."""
        varnames = tuple(varnames)
        if len(images) != self.nvars:
            raise ValueError('expected %d images, got %d' % (self.nvars, len(images)))
        powers = {}
        terms = {}
        unit = Polynomial.constant(varnames, 1)
        for exps, coef in self.terms.items():
            term = unit
            for i, e in enumerate(exps):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    term = term * powers[key]
            for texps, tcoef in term.terms.items():
                terms[texps] = terms.get(texps, 0) + coef * tcoef
        return Polynomial._raw(varnames, dict((e, c) for e, c in terms.items() if c))

    def substitute(self, mapping):
        """Replace the named variables by values (numbers or Polynomials over
        this ring); the ring is unchanged."""
        images = []
        for name in self.varnames:
            if name in mapping:
                value = mapping[name]
                if not isinstance(value, Polynomial):
                    value = Polynomial.constant(self.varnames, value)
                images.append(value)
            else:
                images.append(Polynomial.variable(self.varnames, name))
        return self.compose(images, self.varnames)

    def to_ring(self, varnames):
        """Re-embed into the ring over varnames, which must contain every
        variable actually used."""
        varnames = tuple(varnames)
        if varnames == self.varnames:
            return self
        missing = [name for name in self.variables() if name not in varnames]
        if missing:
            raise ValueError('variables %r are not in the target ring %r' %
                             (missing, varnames))
        positions = [(i, varnames.index(name)) for i, name in enumerate(self.varnames)
                     if name in varnames]
        terms = {}
        for exps, coef in self.terms.items():
            new = [0] * len(varnames)
            for old, pos in positions:
                new[pos] = exps[old]
            terms[tuple(new)] = coef
        return Polynomial._raw(varnames, terms)

    # Orders

    def sorted_terms(self, key=degrevlex_key):
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_term(self, key=degrevlex_key):
        if not self.terms:
            raise ValueError('the zero polynomial has no leading term')
        exps = max(self.terms, key=key)
        return exps, self.terms[exps]

    def monic(self, key=degrevlex_key):
        if not self.terms:
            return self
        return self * (1 / self.leading_term(key)[1])

    # Univariate helpers

    def univariate_coefficients(self):
        """Coefficients from degree 0 upward; the ring must have one variable."""
        if self.nvars != 1:
            raise ValueError('not a univariate ring: %r' % (self.varnames,))
        degree = max(self.total_degree(), 0)
        coeffs = [Fraction(0)] * (degree + 1)
        for (e,), c in self.terms.items():
            coeffs[e] = c
        return coeffs

    @classmethod
    def from_univariate_coefficients(cls, name, coefficients):
        return cls((name,), dict(((e,), c) for e, c in enumerate(coefficients)))

    # Printing

    def _monomial_text(self, exps):
        factors = []
        for name, e in zip(self.varnames, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append('%s^%d' % (name, e))
        return '*'.join(factors)

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for exps, coef in self.sorted_terms():
            negative = coef < 0
            magnitude = -coef if negative else coef
            monomial = self._monomial_text(exps)
            if not monomial:
                body = utils.format_fraction(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = '%s*%s' % (utils.format_fraction(magnitude), monomial)
            if not pieces:
                pieces.append('-' + body if negative else body)
            else:
                pieces.append(('- ' if negative else '+ ') + body)
        return ' '.join(pieces)

    def __repr__(self):
        return 'Polynomial(%r, %r)' % (self.varnames, str(self))


_TOKEN_RE = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))')


class _Parser(object):
    """Recursive descent over

        poly   := ['+'|'-'] term (('+'|'-') term)*
        term   := factor ('*' factor)*
        factor := int ['/' int] | var ['^' nat] | '(' poly ')' ['^' nat]
    """

    def __init__(self, text, varnames):
        self.text = text
        self.varnames = tuple(varnames)
        self.tokens = []
        position = 0
        while position < len(text):
            match = _TOKEN_RE.match(text, position)
            if match is None:
                break
            if match.group(0).strip():
                start = match.start(match.lastindex)
                self.tokens.append((match.lastindex, match.group(match.lastindex), start))
            position = match.end()
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return (None, None, len(self.text))

    def next(self):
        token = self.peek()
        self.index += 1
        return token

    def expect_int(self):
        kind, value, position = self.next()
        if kind != 1:
            raise PolynomialSyntaxError('expected an integer, found %r' % (value,), position)
        return int(value)

    def parse(self):
        poly = self.poly()
        kind, value, position = self.peek()
        if kind is not None:
            raise PolynomialSyntaxError('unexpected %r' % value, position)
        return poly

    def poly(self):
        sign = 1
        kind, value, position = self.peek()
        if kind == 3 and value in '+-':
            self.next()
            sign = -1 if value == '-' else 1
        result = self.term() * sign
        while True:
            kind, value, position = self.peek()
            if kind == 3 and value in '+-':
                self.next()
                term = self.term()
                result = result - term if value == '-' else result + term
            else:
                return result

    def term(self):
        result = self.factor()
        while True:
            kind, value, position = self.peek()
            if kind == 3 and value == '*':
                self.next()
                result = result * self.factor()
            else:
                return result

    def power(self):
        kind, value, position = self.peek()
        if kind == 3 and value == '^':
            self.next()
            return self.expect_int()
        return 1

    def factor(self):
        kind, value, position = self.next()
        if kind == 1:
            number = Fraction(int(value))
            nkind, nvalue, nposition = self.peek()
            if nkind == 3 and nvalue == '/':
                self.next()
                denominator = self.expect_int()
                if denominator == 0:
                    raise PolynomialSyntaxError('zero denominator', nposition)
                number = number / denominator
            return Polynomial.constant(self.varnames, number)
        if kind == 2:
            if value not in self.varnames:
                raise UnknownVariableError('unknown variable %r' % value, position)
            return Polynomial.variable(self.varnames, value) ** self.power()
        if kind == 3 and value == '(':
            inner = self.poly()
            ckind, cvalue, cposition = self.next()
            if not (ckind == 3 and cvalue == ')'):
                raise PolynomialSyntaxError("expected ')'", cposition)
            return inner ** self.power()
        if kind is None:
            raise PolynomialSyntaxError('unexpected end of input', position)
        raise PolynomialSyntaxError('unexpected %r' % value, position)


def parse_polynomial(text, varnames):
    """Parse text in the polynomial grammar over the ring varnames.

    Raises PolynomialSyntaxError (with the character position) on malformed
    input and UnknownVariableError for names outside varnames.
    """
    return _Parser(text, varnames).parse()


class BlockSplit(object):
    """Partition of the ring variables into the X-block and the l-block.

    x_vars includes the homogenizing variable first when x0_present is set;
    likewise l_vars and l0_present.
    """

    def __init__(self, x_vars, l_vars, x0_present=False, l0_present=False):
        self.x_vars = tuple(x_vars)
        self.l_vars = tuple(l_vars)
        self.x0_present = bool(x0_present)
        self.l0_present = bool(l0_present)
        names = self.x_vars + self.l_vars
        if len(set(names)) != len(names):
            raise ValueError('blocks must be disjoint and without repeats: %r | %r' %
                             (self.x_vars, self.l_vars))
        if self.x0_present and not self.x_vars:
            raise ValueError('x0_present requires a nonempty X-block')
        if self.l0_present and not self.l_vars:
            raise ValueError('l0_present requires a nonempty l-block')

    @property
    def n(self):
        return len(self.x_vars) - (1 if self.x0_present else 0)

    @property
    def k(self):
        return len(self.l_vars) - (1 if self.l0_present else 0)

    @property
    def varnames(self):
        return self.x_vars + self.l_vars

    @property
    def x0(self):
        return self.x_vars[0] if self.x0_present else None

    @property
    def l0(self):
        return self.l_vars[0] if self.l0_present else None

    @property
    def affine_x_vars(self):
        return self.x_vars[1:] if self.x0_present else self.x_vars

    @property
    def affine_l_vars(self):
        return self.l_vars[1:] if self.l0_present else self.l_vars

    def homogenized(self, x0=HOMOGENIZING_X, l0=HOMOGENIZING_L):
        if self.x0_present or self.l0_present:
            raise ValueError('split is already homogenized')
        return BlockSplit((x0,) + self.x_vars, (l0,) + self.l_vars, True, True)

    def check_ring(self, poly):
        outside = [name for name in poly.varnames if name not in self.varnames]
        if outside:
            raise ValueError('variables %r belong to neither block' % (outside,))

    def __eq__(self, other):
        return (isinstance(other, BlockSplit) and
                (self.x_vars, self.l_vars, self.x0_present, self.l0_present) ==
                (other.x_vars, other.l_vars, other.x0_present, other.l0_present))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'BlockSplit(%r, %r, %r, %r)' % (self.x_vars, self.l_vars,
                                               self.x0_present, self.l0_present)


def _block_indices(poly, names):
    return [poly.varnames.index(name) for name in names if name in poly.varnames]


def bidegree_of(f, split):
    """Return (BiDegree, is_bihomogeneous) of f with respect to split."""
    split.check_ring(f)
    xs = _block_indices(f, split.x_vars)
    ls = _block_indices(f, split.l_vars)
    pairs = set((sum(exps[i] for i in xs), sum(exps[i] for i in ls))
                for exps in f.terms)
    if not pairs:
        return BiDegree(0, 0), True
    alpha = max(a for a, b in pairs)
    beta = max(b for a, b in pairs)
    return BiDegree(alpha, beta), pairs == set([(alpha, beta)])


def _homogenizing_names(split):
    x0 = split.x0 if split.x0_present else HOMOGENIZING_X
    l0 = split.l0 if split.l0_present else HOMOGENIZING_L
    return x0, l0


def bihomogenize(f, split):
    """X0^deg_X(f) L0^deg_l(f) f(X1/X0, .., l_k/L0) over f's ring with the
    homogenizing variables appended."""
    x0, l0 = _homogenizing_names(split)
    used = f.variables()
    if x0 in used or l0 in used:
        raise ValueError('%s already involves a homogenizing variable' % f)
    x_vars = split.affine_x_vars
    l_vars = split.affine_l_vars
    outside = [name for name in f.varnames
               if name not in x_vars and name not in l_vars and name not in (x0, l0)]
    if outside:
        raise ValueError('variables %r belong to neither block' % (outside,))
    varnames = f.varnames + tuple(name for name in (x0, l0) if name not in f.varnames)
    g = f.to_ring(varnames)
    xs = _block_indices(g, x_vars)
    ls = _block_indices(g, l_vars)
    ix0 = varnames.index(x0)
    il0 = varnames.index(l0)
    degx = g.block_degree(x_vars)
    degl = g.block_degree(l_vars)
    terms = {}
    for exps, coef in g.terms.items():
        new = list(exps)
        new[ix0] = degx - sum(exps[i] for i in xs)
        new[il0] = degl - sum(exps[i] for i in ls)
        terms[tuple(new)] = coef
    return Polynomial(varnames, terms)


def dehomogenize(f, split):
    """Set X0 = L0 = 1 and drop them from the ring."""
    x0, l0 = _homogenizing_names(split)
    present = [name for name in (x0, l0) if name in f.varnames]
    if not present:
        return f
    g = f.substitute(dict((name, 1) for name in present))
    return g.to_ring([name for name in f.varnames if name not in present])


class LinearChange(object):
    """An invertible square matrix over the rationals acting on a
    variable vector by X <- A.X."""

    def __init__(self, matrix):
        rows = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        dimension = len(rows)
        if any(len(row) != dimension for row in rows):
            raise ValueError('matrix must be square')
        self.matrix = rows
        self.dimension = dimension
        if dimension and self.determinant() == 0:
            raise SingularMatrixError('matrix is singular')

    @classmethod
    def identity(cls, dimension):
        return cls([[1 if i == j else 0 for j in range(dimension)]
                    for i in range(dimension)])

    def to_sympy(self):
        return sympy.Matrix([[utils.to_rational(x) for x in row] for row in self.matrix])

    def determinant(self):
        return utils.to_fraction(self.to_sympy().det())

    def inverse(self):
        inverse = self.to_sympy().inv()
        return LinearChange([[utils.to_fraction(inverse[i, j])
                              for j in range(self.dimension)]
                             for i in range(self.dimension)])

    def apply(self, vector):
        """A.vector for vectors of Fractions, Intervals or Polynomials."""
        if len(vector) != self.dimension:
            raise ValueError('vector has length %d, expected %d' %
                             (len(vector), self.dimension))
        result = []
        for row in self.matrix:
            total = None
            for coef, value in zip(row, vector):
                if not coef:
                    continue
                term = value * coef
                total = term if total is None else total + term
            result.append(total if total is not None else vector[0] * 0)
        return result

    def row(self, index):
        return self.matrix[index]

    def __eq__(self, other):
        return isinstance(other, LinearChange) and self.matrix == other.matrix

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'LinearChange(%r)' % ([[utils.format_fraction(x) for x in row]
                                      for row in self.matrix],)


def apply_linear_change(f, A, names):
    """f^A: substitute the vector of variables names by A.(names)."""
    names = tuple(names)
    if len(names) != A.dimension:
        raise ValueError('linear change of dimension %d applied to %d variables' %
                         (A.dimension, len(names)))
    for name in names:
        if name not in f.varnames:
            raise ValueError('variable %r is not in the ring %r' % (name, f.varnames))
    images = []
    for name in f.varnames:
        if name in names:
            row = A.row(names.index(name))
            images.append(Polynomial.linear_form(
                f.varnames, dict((n, c) for n, c in zip(names, row) if c)))
        else:
            images.append(Polynomial.variable(f.varnames, name))
    return f.compose(images, f.varnames)
