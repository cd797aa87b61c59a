#
# series2cf.py
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
""" Power series to continued fraction

expand_cfraction() writes a series as

    c_0 + a_1 x/(b_1 + a_2 x/(b_2 + ...))

At each step the residual r - b is divided by x and inverted. a_k is the
numerator of the lowest-terms leading coefficient of the residual, which
makes b_k its (positive) denominator.
"""
import logging
log = logging.getLogger("cfgen.series2cf")

from collections import namedtuple
from fractions import Fraction
import json

from cfgen.errors import ParameterError, PoleError, ShapeError, TruncationError
from cfgen.numerics import parse_rational
from cfgen.series import Series, series_div, series_reciprocal

StepPair = namedtuple("StepPair", ["a", "b"])

# Published expansion of sum c_n x^n, the Cauchy numbers
REFERENCE_OGF_CAUCHY_STEPS = tuple(StepPair(a, Fraction(b)) for a, b in
                                   zip((1, 2, 7, 93, 2391, 172542, 443242433, 19157845135465),
                                       (2, 3, 2, 35, 31, 2391, 57514, 100087001)))


def expand_cfraction(f, depth):
    """Expand f into at most depth steps

    :param f: The series to expand
    :type f: Series
    :param depth: Number of (a, b) steps, the head c_0 is not counted
    :type depth: int
    :returns: (c0, steps), fewer than depth steps when the expansion ends
    :rtype: tuple of (Fraction, list of StepPair)
    :raises: TruncationError if f is truncated below depth,
             ShapeError if a residual has no linear term
    """
    if depth < 0:
        raise ParameterError("depth must be >= 0, got %d" % depth)
    if f.order < depth:
        raise TruncationError("a series of order %d cannot give %d steps" % (f.order, depth))
    c0 = f[0]
    steps = []
    r, b = f, c0
    for k in range(1, depth + 1):
        d = r - b
        if d.is_zero():
            log.debug("expansion ends after %d steps", k - 1)
            break
        if d[1] == 0:
            raise ShapeError("residual at step %d has no linear term" % k, step=k)
        a = d[1].numerator
        r = series_reciprocal(d.shift_down(1)) * a
        b = r[0]
        steps.append(StepPair(a, b))
    return c0, steps


def reconstruct(c0, steps, order):
    """Taylor series of the finite fraction c0 + a_1 x/(b_1 + ...)

    :raises: PoleError if a level evaluates to a series with zero constant term
    """
    value = Series.constant(c0, order)
    if not steps:
        return value
    x = Series([0, 1], order)
    inner = Series.constant(steps[-1].b, order)
    for k in range(len(steps) - 1, 0, -1):
        if inner[0] == 0:
            raise PoleError("level %d of the fraction vanishes at x = 0" % (k + 1))
        inner = steps[k-1].b + series_div(x * steps[k].a, inner)
    if inner[0] == 0:
        raise PoleError("level 1 of the fraction vanishes at x = 0")
    return value + series_div(x * steps[0].a, inner)


def normalized_coefficients(steps):
    """alpha_k = a_k/(b_(k-1) b_k) with b_0 = 1

    These are the coefficients of the equivalent fraction
    1 + alpha_1 x/(1 + alpha_2 x/(1 + ...)), so two step lists describe the
    same fraction exactly when their alphas agree.
    """
    alphas = []
    b_prev = Fraction(1)
    for step in steps:
        alphas.append(Fraction(step.a) / (b_prev * step.b))
        b_prev = Fraction(step.b)
    return alphas


def load_series(path):
    """Read a series from a JSON file {"coeffs": ["1", "-1/2", ...], "order": K}

    :rtype: Series
    :raises: ParameterError for a malformed file
    """
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise ParameterError("cannot read series from %s: %s" % (path, e))
    if not isinstance(data, dict) or not isinstance(data.get("coeffs"), list) or not data["coeffs"]:
        raise ParameterError("%s: expected an object with a non-empty coeffs list" % path)
    coeffs = [parse_rational(c) for c in data["coeffs"]]
    order = data.get("order", len(coeffs) - 1)
    if not isinstance(order, int) or order < 0:
        raise ParameterError("%s: order must be a non-negative integer" % path)
    if order > len(coeffs) - 1:
        raise ParameterError("%s: order %d needs %d coefficients, got %d"
                             % (path, order, order + 1, len(coeffs)))
    return Series(coeffs, order)
