#
# numerics.py
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
""" Exact integers and rationals

Integers are python ints and rationals are :class:`fractions.Fraction`,
which already keeps lowest terms with a positive denominator. This module
adds the textual format used everywhere else and truncated decimal
rendering by long division.
"""
import logging
log = logging.getLogger("cfgen.numerics")

from collections import namedtuple
from fractions import Fraction
import operator
import re

from cfgen.errors import ParameterError

Integer = int
Rational = Fraction

RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")

DecimalExpansion = namedtuple("DecimalExpansion", ["text", "exact", "remainder"])

_OPS = {"add": operator.add,
        "sub": operator.sub,
        "mul": operator.mul,
        "div": operator.truediv}


def rat_normalize(num, den=1):
    """Return num/den in lowest terms with a positive denominator

    :param num: Numerator
    :type num: int
    :param den: Denominator
    :type den: int
    :returns: The normalized rational
    :rtype: Fraction
    :raises: ZeroDivisionError if den is 0
    """
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def rat_arith(x, y, op):
    """Apply one of add, sub, mul, div or pow to two rationals

    For pow the exponent y must be an integer.
    """
    x = Fraction(x)
    if op == "pow":
        if Fraction(y).denominator != 1:
            raise ParameterError("pow exponent must be an integer, got %s" % y)
        e = int(y)
        if x == 0 and e < 0:
            raise ZeroDivisionError("division by zero")
        return x ** e
    if op not in _OPS:
        raise ParameterError("unknown rational operation: %s" % op)
    y = Fraction(y)
    if op == "div" and y == 0:
        raise ZeroDivisionError("division by zero")
    return _OPS[op](x, y)


def parse_rational(text):
    """Parse the canonical rational format, eg. "1", "-1/2", "33953/90"

    :param text: The string to parse
    :type text: str
    :returns: The parsed value
    :rtype: Fraction
    :raises: ParameterError on malformed input or a zero denominator

    Floating point notation is rejected so that no value ever passes
    through a float.
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = RATIONAL_RE.match(str(text))
    if not m:
        raise ParameterError("not a rational number: '%s' (expected p or p/q)" % text)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParameterError("zero denominator in '%s'" % text)
    return Fraction(num, den)


def format_rational(x):
    """Return the canonical text for x, the denominator is omitted when it is 1"""
    return str(Fraction(x))


def rat_to_decimal(x, digits):
    """Render x with `digits` fractional digits, truncated toward zero

    :param x: Value to render
    :type x: Fraction
    :param digits: Number of digits after the decimal point
    :type digits: int
    :returns: (text, exact, remainder) where exact is True when the
              expansion terminated and remainder is x minus the rendered value
    :rtype: DecimalExpansion
    """
    if digits < 1:
        raise ParameterError("digits must be >= 1, got %s" % digits)
    x = Fraction(x)
    scale = 10 ** digits
    whole, rem = divmod(abs(x.numerator), x.denominator)
    frac, rest = divmod(rem * scale, x.denominator)
    sign = "-" if x < 0 and (whole or frac) else ""
    text = "%s%d.%s" % (sign, whole, str(frac).zfill(digits))
    shown = Fraction(text)
    return DecimalExpansion(text, rest == 0, x - shown)


def certified_decimal(low, high, digits):
    """Return the truncated decimal shared by every value in [low, high]

    :raises: ParameterError when the bracket is too wide for `digits`
    """
    lo = rat_to_decimal(low, digits).text
    hi = rat_to_decimal(high, digits).text
    if lo != hi:
        raise ParameterError("bracket [%s, %s] does not fix %d digits" % (lo, hi, digits))
    return lo
