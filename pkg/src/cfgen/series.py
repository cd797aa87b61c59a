#
# series.py
#
# Copyright (C) 2024  The cfgen authors
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
#
""" Dense polynomials and truncated power series over the rationals

A Poly is a list of coefficients in ascending degree with the trailing
zeros stripped, [1, 10, 5] is 1 + 10x + 5x^2.

A Series carries an explicit truncation order K; its coefficients are
valid for degrees 0..K and anything combining two series keeps the
smaller order.
"""
import logging
log = logging.getLogger("cfgen.series")

from collections import namedtuple
from fractions import Fraction
from itertools import zip_longest

from cfgen.errors import ParameterError, PoleError
from cfgen.numerics import format_rational


def _normalize(coeffs):
    """Strip the trailing zero coefficients"""
    n = len(coeffs)
    while n and not coeffs[n-1]:
        n -= 1
    return tuple(coeffs[:n])


def _format_term(c, k):
    """Render one nonzero term c*x^k"""
    if k == 0:
        return format_rational(c)
    power = "x" if k == 1 else "x^%d" % k
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    if c.denominator == 1:
        return "%d%s" % (c.numerator, power)
    if c < 0:
        return "-(%s)%s" % (format_rational(-c), power)
    return "(%s)%s" % (format_rational(c), power)


class Poly(object):
    """Univariate polynomial with Fraction coefficients

    Instances are immutable; all arithmetic returns a new Poly.
    """
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _normalize([Fraction(c) for c in coeffs]))

    def __setattr__(self, attr, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, c, k):
        """Return c*x^k"""
        return cls([0] * k + [c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        """Degree, -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Poly(%s)" % str(self)

    def __str__(self):
        terms = [_format_term(c, k) for k, c in enumerate(self.coeffs) if c]
        if not terms:
            return "0"
        text = terms[0]
        for t in terms[1:]:
            text += t if t.startswith("-") else "+" + t
        return text

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Poly([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        res = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                res[i+j] += a * b
        return Poly(res)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ParameterError("negative polynomial power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = Fraction(c)
        return Poly([c * a for a in self.coeffs])

    def __call__(self, x0):
        """Evaluate at a rational point with Horner's rule"""
        x0 = Fraction(x0)
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x0 + c
        return value

    def to_series(self, order):
        coeffs = list(self.coeffs[:order+1])
        return Series(coeffs + [0] * (order + 1 - len(coeffs)), order)

    def to_json(self):
        """Coefficients as canonical rational strings, ascending degree"""
        return [format_rational(c) for c in self.coeffs] or ["0"]


def poly_arith(p, q, op):
    """Combine two polynomials, or a polynomial and a scalar for op="scale"

    :param p: Left operand
    :type p: Poly
    :param q: Right operand, a Fraction for "scale"
    :param op: One of add, sub, mul, scale
    :type op: str
    :rtype: Poly
    """
    if op == "add":
        return p + q
    elif op == "sub":
        return p - q
    elif op == "mul":
        return p * q
    elif op == "scale":
        return p.scale(q)
    raise ParameterError("unknown polynomial operation: %s" % op)


class SeriesOrder(namedtuple("SeriesOrder", ["value", "exact"])):
    """Order of vanishing of a truncated series

    When every stored coefficient is zero the order is only known to be
    at least value (order+1) and exact is False.
    """
    __slots__ = ()

    def meets(self, n):
        return self.value >= n

    def __str__(self):
        if self.exact:
            return str(self.value)
        return ">=%d" % self.value


class Series(object):
    """Truncated formal power series

    :param coeffs: Coefficients, ascending degree
    :param order: Truncation order K. Defaults to len(coeffs)-1, shorter
                  coefficient lists are padded with zeros.
    """
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ParameterError("series order must be >= 0")
        coeffs = coeffs[:order+1] + [Fraction(0)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, attr, value):
        raise AttributeError("Series is immutable")

    def __reduce__(self):
        return (Series, (self.coeffs, self.order))

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        return "Series(%s + O(x^%d))" % (Poly(self.coeffs), self.order + 1)

    def is_zero(self):
        return not any(self.coeffs)

    def truncate(self, order):
        return Series(self.coeffs, min(order, self.order))

    def to_poly(self):
        return Poly(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, Poly):
            return other.to_series(self.order)
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs], self.order)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return series_div(self, other)

    def shift_up(self, k=1):
        """Multiply by x^k, the order is unchanged"""
        return Series([0] * k + list(self.coeffs[:self.order+1-k]), self.order)

    def shift_down(self, k=1):
        """Divide by x^k, losing k orders of validity

        :raises: ParameterError if one of the first k coefficients is nonzero
        """
        if any(self.coeffs[:k]):
            raise ParameterError("series is not divisible by x^%d" % k)
        if k > self.order:
            raise ParameterError("cannot divide a series of order %d by x^%d" % (self.order, k))
        return Series(self.coeffs[k:], self.order - k)

    def to_json(self):
        return {"coeffs": [format_rational(c) for c in self.coeffs], "order": self.order}


def series_mul(f, g):
    """Cauchy product truncated at min(order_f, order_g)"""
    order = min(f.order, g.order)
    res = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        a = f.coeffs[i]
        if not a:
            continue
        for j in range(order + 1 - i):
            res[i+j] += a * g.coeffs[j]
    return Series(res, order)


def series_reciprocal(f):
    """Return g with f*g = 1 mod x^(order+1)

    :raises: PoleError when f(0) is 0
    """
    if f.coeffs[0] == 0:
        raise PoleError("series has a zero constant term")
    inv0 = 1 / f.coeffs[0]
    g = [inv0]
    for n in range(1, f.order + 1):
        acc = sum((f.coeffs[k] * g[n-k] for k in range(1, n + 1) if f.coeffs[k]), Fraction(0))
        g.append(-acc * inv0)
    return Series(g, f.order)


def series_div(f, g):
    """f/g truncated at min(order_f, order_g)

    :raises: PoleError when g(0) is 0
    """
    if g.coeffs[0] == 0:
        raise PoleError("divisor series has a zero constant term")
    order = min(f.order, g.order)
    return series_mul(f.truncate(order), series_reciprocal(g.truncate(order)))


def series_order(f):
    """Smallest degree with a nonzero coefficient

    :rtype: SeriesOrder
    """
    for k, c in enumerate(f.coeffs):
        if c:
            return SeriesOrder(k, True)
    return SeriesOrder(f.order + 1, False)


# Stock series, each generated by its coefficient recurrence
def _exp(order):
    c = [Fraction(1)]
    for n in range(1, order + 1):
        c.append(c[-1] / n)
    return c

def _expm1_over_x(order):
    # (e^x - 1)/x: c_n = 1/(n+1)!
    c = [Fraction(1)]
    for n in range(1, order + 1):
        c.append(c[-1] / (n + 1))
    return c

def _log1p(order):
    return [Fraction(0)] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)]

def _log1p_over_x(order):
    return [Fraction((-1) ** n, n + 1) for n in range(order + 1)]

def _even(order, first, step):
    """Even series c_0 = first, c_{n} = c_{n-2} * step(n), odd slots zero"""
    c = [Fraction(0)] * (order + 1)
    c[0] = Fraction(first)
    for n in range(2, order + 1, 2):
        c[n] = c[n-2] * step(n)
    return c

def _cosh(order):
    return _even(order, 1, lambda n: Fraction(1, n * (n - 1)))

def _sinh_over_x(order):
    return _even(order, 1, lambda n: Fraction(1, n * (n + 1)))

def _arctan_over_x(order):
    return _even(order, 1, lambda n: Fraction(-(n - 1), n + 1))

def _geom(order):
    return [Fraction(1)] * (order + 1)

def _half_angle(order, parity):
    """cosh(x/2) (parity 0) or sinh(x/2) (parity 1)"""
    c = [Fraction(0)] * (order + 1)
    term = Fraction(1)
    for n in range(order + 1):
        if n:
            term = term / (2 * n)
        if n % 2 == parity:
            c[n] = term
    return c

def _tanh_half(order):
    sinh_half = Series(_half_angle(order, 1), order)
    cosh_half = Series(_half_angle(order, 0), order)
    return series_div(sinh_half, cosh_half).coeffs

STOCK_SERIES = {
    "exp":            _exp,
    "expm1_over_x":   _expm1_over_x,
    "log1p":          _log1p,
    "log1p_over_x":   _log1p_over_x,
    "cosh":           _cosh,
    "sinh_over_x":    _sinh_over_x,
    "arctan_over_x":  _arctan_over_x,
    "geom":           _geom,
    "tanh_half":      _tanh_half,
}


def stock_series(name, order):
    """Return the named stock series truncated at order

    :param name: One of the STOCK_SERIES names
    :type name: str
    :param order: Truncation order, >= 0
    :type order: int
    :rtype: Series
    :raises: ParameterError for an unknown name or a negative order
    """
    if name not in STOCK_SERIES:
        raise ParameterError("unknown stock series '%s' (known: %s)" % (name, ", ".join(sorted(STOCK_SERIES))))
    if order < 0:
        raise ParameterError("series order must be >= 0")
    return Series(STOCK_SERIES[name](order), order)
