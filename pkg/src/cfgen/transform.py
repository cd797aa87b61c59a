#
# transform.py
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
""" Linear fractional transformations of continued fractions

If f = 1 - h_1 X/(g_1 + h_1 X - g_1 h_2 X/(g_2 + h_2 X - ...)) then
(a f + b)/(c f + d) has the fraction

    (a+b)/(c+d) - ((ad-bc)/(c+d)) h_1 X/((c+d) g_1 + d h_1 X
                 - (c+d) g_1 h_2 X/(g_2 + h_2 X - g_2 h_3 X/(...)))

Only the head and the first two levels change.
"""
import logging
log = logging.getLogger("cfgen.transform")

from collections import namedtuple
from fractions import Fraction

from cfgen.contfrac import CFExpansion, PartialTerm, convergents
from cfgen.errors import ParameterError, PoleError, ShapeError
from cfgen.numerics import format_rational, parse_rational
from cfgen.series import Poly, Series, series_div


class LFTCoeffs(namedtuple("LFTCoeffs", ["a", "b", "c", "d"])):
    """The map v -> (a v + b)/(c v + d)

    :raises: ParameterError when ad - bc = 0 or c + d = 0
    """
    __slots__ = ()

    def __new__(cls, a, b, c, d):
        self = super(LFTCoeffs, cls).__new__(cls, Fraction(a), Fraction(b), Fraction(c), Fraction(d))
        if self.det == 0:
            raise ParameterError("degenerate transformation %s: ad - bc = 0" % self)
        if self.c + self.d == 0:
            raise ParameterError("transformation %s has c + d = 0, the new head is undefined" % self)
        return self

    def __str__(self):
        return ",".join(format_rational(v) for v in self)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def parse(cls, text):
        """Parse "A,B,C,D" with rational entries"""
        parts = [p.strip() for p in str(text).split(",")]
        if len(parts) != 4:
            raise ParameterError("expected four comma separated rationals A,B,C,D, got '%s'" % text)
        return cls(*[parse_rational(p) for p in parts])

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self):
        """The map undoing this one, (d, -b, -c, a)"""
        return LFTCoeffs(self.d, -self.b, -self.c, self.a)

    def compose(self, other):
        """self after other, the matrix product self * other"""
        return LFTCoeffs(self.a * other.a + self.b * other.c,
                         self.a * other.b + self.b * other.d,
                         self.c * other.a + self.d * other.c,
                         self.c * other.b + self.d * other.d)

    def display(self, var="f"):
        """The map as text with the signs folded in, eg. (f - 1)/(f + 1)"""
        return "(%s)/(%s)" % (_linear_text(self.a, self.b, var), _linear_text(self.c, self.d, var))

    def to_json(self):
        return [format_rational(v) for v in self]


def _linear_text(p, q, var):
    """p var + q, eg. "2f - 3", "-f", "(1/2)f + 1" """
    if p == 1:
        text = var
    elif p == -1:
        text = "-" + var
    elif p.denominator == 1:
        text = "%s%s" % (p, var)
    elif p:
        text = "%s(%s)%s" % ("-" if p < 0 else "", format_rational(abs(p)), var)
    else:
        return format_rational(q)
    if q:
        text += " %s %s" % ("-" if q < 0 else "+", format_rational(abs(q)))
    return text


def lft_apply_value(t, v):
    """(a v + b)/(c v + d) for a rational or a series

    :raises: PoleError when c v + d vanishes (at x = 0 for a series)
    """
    if isinstance(v, Series):
        den = v * t.c + t.d
        if den[0] == 0:
            raise PoleError("c v + d has a zero constant term")
        return series_div(v * t.a + t.b, den)
    v = Fraction(v)
    den = t.c * v + t.d
    if den == 0:
        raise PoleError("%s has a pole at %s" % (t, format_rational(v)))
    return (t.a * v + t.b) / den


def _base_of(cf):
    """The pure (g,h) data and the accumulated outer map of cf"""
    lft = cf.meta.get("lft")
    if lft is not None:
        return lft["base"], lft["outer"]
    if cf.pure is None:
        raise ShapeError("%s fractions do not have the pure (g,h) shape" % cf.family)
    return cf.pure, LFTCoeffs.identity()


def lft_transform(cf, t):
    """Apply t to the function cf expands

    Transforming an already transformed fraction composes the maps and
    rebuilds from the original g and h.

    :param cf: A pure (g,h) fraction or the result of an earlier transform
    :type cf: CFExpansion
    :param t: The transformation
    :type t: LFTCoeffs
    :rtype: CFExpansion
    :raises: ShapeError for fractions without the pure shape
    """
    base, outer = _base_of(cf)
    m = t.compose(outer)
    g, h = base.g, base.h
    X = Poly.monomial(1, base.degree)
    s = m.c + m.d
    terms = []
    for k in range(1, len(g) + 1):
        if k == 1:
            num = X.scale(-(m.det / s) * h[0])
            den = Poly([s * g[0]]) + X.scale(m.d * h[0])
        elif k == 2:
            num = X.scale(-s * g[0] * h[1])
            den = g[1] + X.scale(h[1])
        else:
            num = X.scale(-g[k-2] * h[k-1])
            den = g[k-1] + X.scale(h[k-1])
        terms.append(PartialTerm(num, den))
    meta = cf.meta.copy()
    meta.pop("initial", None)
    meta.lft = {"base": base, "outer": m}
    log.debug("transformed %s by %s", cf.family, m)
    return CFExpansion(Poly([(m.a + m.b) / s]), terms, meta, terminated=cf.terminated)


class MatrixStep(namedtuple("MatrixStep", ["m11", "m12", "m21", "m22"])):
    """A 2x2 matrix of polynomials"""
    __slots__ = ()

    @classmethod
    def of_level(cls, term):
        """(den 1; num 0), whose determinant is -num"""
        return cls(term.den, Poly([1]), term.num, Poly())

    @classmethod
    def of_head(cls, head):
        return cls(head, Poly([1]), Poly([1]), Poly())

    @classmethod
    def of_lft(cls, t):
        return cls(Poly([t.a]), Poly([t.b]), Poly([t.c]), Poly([t.d]))

    def __mul__(self, other):
        return MatrixStep(self.m11 * other.m11 + self.m12 * other.m21,
                          self.m11 * other.m12 + self.m12 * other.m22,
                          self.m21 * other.m11 + self.m22 * other.m21,
                          self.m21 * other.m12 + self.m22 * other.m22)

    @property
    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21


def step_products(cf, depth):
    """Products head * level_1 * ... * level_n for n = 0..depth

    Product n is (P_n P_(n-1); Q_n Q_(n-1)).
    """
    cf.check_depth(depth)
    product = MatrixStep.of_head(cf.head)
    products = [product]
    for term in cf.terms[:depth]:
        product = product * MatrixStep.of_level(term)
        products.append(product)
    return products


def matrix_product_check(cf, t, depth):
    """Compare t times the step products of cf with those of the transformed fraction

    From n = 2 on the products agree entry by entry. Product 1 agrees in
    the convergent column only (the previous column of the transformed
    fraction is scaled by c + d) and product 0 agrees as a rational value.

    :returns: True when every prefix up to depth agrees
    :rtype: bool
    """
    if depth < 1:
        raise ParameterError("depth must be >= 1, got %d" % depth)
    transformed = lft_transform(cf, t)
    T = MatrixStep.of_lft(t)
    lhs = [T * p for p in step_products(cf, depth)]
    rhs = step_products(transformed, depth)
    for n, (left, right) in enumerate(zip(lhs, rhs)):
        if n >= 2:
            ok = left == right
        elif n == 1:
            ok = (left.m11, left.m21) == (right.m11, right.m21)
        else:
            ok = left.m11 * right.m21 == left.m21 * right.m11
        if not ok:
            log.debug("matrix products differ at prefix %d", n)
            return False
    return True


def convergent_relation_check(cf, transformed, t, depth):
    """P~_n (c P_n + d Q_n) = Q~_n (a P_n + b Q_n) for n = 0..depth"""
    base = convergents(cf, depth)
    new = convergents(transformed, depth)
    for p, q in zip(base, new):
        if q.P * (p.P.scale(t.c) + p.Q.scale(t.d)) != q.Q * (p.P.scale(t.a) + p.Q.scale(t.b)):
            return False
    return True
