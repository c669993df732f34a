# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.

from fractions import Fraction


class Interval(object):
    """Closed interval [lo, hi] with exact rational endpoints.

    Operators accept Intervals, ints and Fractions on either side. No
    rounding happens anywhere, so every result encloses the exact range.
    """

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError('empty interval [%s, %s]' % (lo, hi))
        self.lo = lo
        self.hi = hi

    @staticmethod
    def _other(value):
        if isinstance(value, Interval):
            return value
        if isinstance(value, (int, Fraction)):
            return Interval(value)
        return None

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def is_exact(self):
        return self.lo == self.hi

    def contains(self, value):
        if isinstance(value, Interval):
            return self.lo <= value.lo and value.hi <= self.hi
        return self.lo <= value <= self.hi

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def is_positive(self):
        return self.lo > 0

    def overlaps(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        if other.contains_zero():
            raise ZeroDivisionError('division by an interval containing 0')
        return self * Interval(1 / other.hi, 1 / other.lo)

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('exponent must be a non-negative integer')
        if exponent == 0:
            return Interval(1)
        lo, hi = self.lo ** exponent, self.hi ** exponent
        if exponent % 2:
            return Interval(lo, hi)
        if self.lo >= 0:
            return Interval(lo, hi)
        if self.hi <= 0:
            return Interval(hi, lo)
        return Interval(0, max(lo, hi))

    def __eq__(self, other):
        return (isinstance(other, Interval) and
                self.lo == other.lo and self.hi == other.hi)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return 'Interval(%s, %s)' % (self.lo, self.hi)


def horner(coefficients, x):
    """Evaluate sum(c_i x^i) by Horner's rule; x may be a Fraction or an
    Interval (Horner keeps interval overestimation small)."""
    result = Fraction(0)
    for coef in reversed(coefficients):
        result = result * x + coef
    return result


def box_width(box):
    return max([component.width for component in box] or [Fraction(0)])


def as_interval(value):
    return value if isinstance(value, Interval) else Interval(value)
