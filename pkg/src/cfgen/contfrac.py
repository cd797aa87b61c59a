#
# contfrac.py
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
""" Continued fractions with polynomial terms

A fraction is a head polynomial a_0 followed by levels (num_k, den_k):

    a_0 + num_1/(den_1 + num_2/(den_2 + ...))

num_k is stored with its sign, so the convergents always follow

    P_n = den_n P_(n-1) + num_n P_(n-2)
    Q_n = den_n Q_(n-1) + num_n Q_(n-2)

and fractions printed with "-" between levels simply carry negative
numerators.
"""
import logging
log = logging.getLogger("cfgen.contfrac")

from collections import namedtuple
from fractions import Fraction

from cfgen.base import DataHolder
from cfgen.errors import ParameterError, PoleError, TerminatedError, TruncationError
from cfgen.series import Poly, Series, series_div, series_order

PartialTerm = namedtuple("PartialTerm", ["num", "den"])
ConvergentPair = namedtuple("ConvergentPair", ["index", "P", "Q"])

# Guaranteed order of the approximation defect of convergent n
DEFECT_LAWS = {
    "n+1":  lambda n: n + 1,
    "2n+2": lambda n: 2 * n + 2,
    "n":    lambda n: n,
}

CONTRACTS = ("ratio", "reciprocal")


class CFExpansion(object):
    """A continued fraction and the metadata describing what it expands

    :param head: a_0(x)
    :type head: Poly
    :param terms: The levels, in order
    :type terms: list of PartialTerm
    :param meta: family, params, initial, contract, display_sign, law, law_from
    :type meta: DataHolder
    :param pure: {"g", "h", "degree"} when the fraction has the pure (g,h) shape
    :param terminated: True when a zero numerator ended the fraction early
    """
    def __init__(self, head, terms, meta, pure=None, terminated=False):
        self.head = head if isinstance(head, Poly) else Poly([head])
        self.terms = tuple(PartialTerm(t.num, t.den) for t in terms)
        self.meta = meta
        self.pure = pure
        self.terminated = terminated

        meta.setdefault("initial", (Poly([1]), Poly(), self.head, Poly([1])))
        meta.setdefault("contract", "ratio")
        meta.setdefault("display_sign", "minus")
        meta.setdefault("law", "n+1")
        meta.setdefault("law_from", 0)
        meta.setdefault("lft", None)
        if meta.contract not in CONTRACTS:
            raise ParameterError("unknown contract '%s'" % meta.contract)
        if meta.law not in DEFECT_LAWS:
            raise ParameterError("unknown defect law '%s'" % meta.law)
        for k, t in enumerate(self.terms, 1):
            if t.num.is_zero():
                raise ParameterError("level %d has a zero numerator, end the fraction instead" % k)
            if t.den.degree > 2:
                raise ParameterError("level %d denominator has degree %d > 2" % (k, t.den.degree))

    @property
    def family(self):
        return self.meta.family

    def __len__(self):
        return len(self.terms)

    def expected_defect(self, n):
        """The order the defect of convergent n must reach, None when the law does not apply"""
        if n < self.meta.law_from:
            return None
        return DEFECT_LAWS[self.meta.law](n)

    def check_depth(self, depth):
        """Raise unless the fraction has at least depth levels"""
        if depth < 0:
            raise ParameterError("depth must be >= 0, got %d" % depth)
        if depth > len(self.terms):
            if self.terminated:
                raise TerminatedError("%s terminates after %d levels, depth %d requested"
                                      % (self.family, len(self.terms), depth))
            raise ParameterError("%s was built with %d levels, depth %d requested"
                                 % (self.family, len(self.terms), depth))

    def displayed_numerators(self):
        """Numerators in the sign convention named by meta.display_sign"""
        if self.meta.display_sign == "minus":
            return [-t.num for t in self.terms]
        return [t.num for t in self.terms]

    def display(self, depth=None):
        """Render the fraction as nested text, eg. 1 - x/(2+x - 2x/(3+x ...))"""
        if depth is None:
            depth = len(self.terms)
        self.check_depth(depth)
        if depth == 0:
            return str(self.head)

        text = str(self.terms[depth-1].den)
        if depth < len(self.terms):
            sign, _ = _num_text(self.terms[depth].num)
            text += " %s ..." % sign
        for k in range(depth - 1, 0, -1):
            sign, num = _num_text(self.terms[k].num)
            text = "%s %s %s/(%s)" % (self.terms[k-1].den, sign, num, text)

        sign, num = _num_text(self.terms[0].num)
        if self.head.is_zero():
            return "%s%s/(%s)" % ("-" if sign == "-" else "", num, text)
        return "%s %s %s/(%s)" % (self.head, sign, num, text)

    def to_json(self, depth=None):
        if depth is None:
            depth = len(self.terms)
        return {"family":       self.meta.family,
                "params":       self.meta.params.to_json(),
                "display_sign": self.meta.display_sign,
                "head":         self.head.to_json(),
                "terms":        [{"num": t.num.to_json(), "den": t.den.to_json()}
                                 for t in self.terms[:depth]],
                "terminated":   self.terminated and depth == len(self.terms)}


def _num_text(num):
    """Split a numerator into its printed sign and magnitude"""
    lead = next(c for c in num.coeffs if c)
    shown = -num if lead < 0 else num
    text = str(shown)
    if sum(1 for c in shown.coeffs if c) > 1:
        text = "(%s)" % text
    return ("-" if lead < 0 else "+"), text


def convergents(cf, depth):
    """Return the convergents 0..depth from the three-term recurrence

    :param cf: The continued fraction
    :type cf: CFExpansion
    :param depth: Index of the last convergent
    :type depth: int
    :returns: depth+1 pairs, index 0 first
    :rtype: list of ConvergentPair
    :raises: TerminatedError when depth is beyond a terminated fraction
    """
    cf.check_depth(depth)
    P_prev, Q_prev, P, Q = cf.meta.initial
    pairs = [ConvergentPair(0, P, Q)]
    for n, t in enumerate(cf.terms[:depth], 1):
        P, P_prev = t.den * P + t.num * P_prev, P
        Q, Q_prev = t.den * Q + t.num * Q_prev, Q
        pairs.append(ConvergentPair(n, P, Q))
    log.debug("%s: %d convergents", cf.family, len(pairs))
    return pairs


def closed_form_convergents(g, h, depth, degree=1):
    """Convergents of a pure (g,h) fraction from their product formula

    P_n = g_1...g_n and Q_n = P_n sum_(j<=n) (h_1...h_j)/(g_1...g_j) X^j,
    X = x^degree. The empty products are 1.

    :param g: g_1, g_2, ... (at least depth values)
    :param h: h_1, h_2, ... (at least depth values)
    :rtype: list of ConvergentPair
    """
    if len(g) < depth or len(h) < depth:
        raise ParameterError("closed form needs %d values of g and h" % depth)
    pairs = []
    gprod = hprod = Fraction(1)
    ratios = [Fraction(1)]
    for n in range(depth + 1):
        if n:
            gprod *= g[n-1]
            hprod *= h[n-1]
            ratios.append(hprod / gprod)
        coeffs = [0] * (degree * n + 1)
        for j, r in enumerate(ratios):
            coeffs[degree * j] = r * gprod
        pairs.append(ConvergentPair(n, Poly([gprod]), Poly(coeffs)))
    return pairs


def approx_defect(cf, f, n):
    """Order of vanishing of the defect of convergent n against f

    The defect is Q_n f - P_n for the "ratio" contract and Q_n - P_n f for
    the "reciprocal" contract.

    :param cf: The continued fraction
    :type cf: CFExpansion
    :param f: The expanded function, truncated
    :type f: Series
    :param n: Convergent index
    :type n: int
    :rtype: SeriesOrder
    :raises: TruncationError if f is too short to certify the defect law
    """
    expected = cf.expected_defect(n)
    if expected is not None and f.order < expected - 1:
        raise TruncationError("series of order %d cannot certify a defect of order %d"
                              % (f.order, expected))
    return series_order(defect_series(cf, convergents(cf, n)[-1], f))


def defect_series(cf, pair, f):
    """Q f - P or Q - P f for one convergent, following cf's contract"""
    P = pair.P.to_series(f.order)
    Q = pair.Q.to_series(f.order)
    if cf.meta.contract == "ratio":
        return Q * f - P
    return Q - P * f


def determinant_mismatch(pairs, cf):
    """Return the first index where the determinant identity fails, or None

    P_n Q_(n-1) - P_(n-1) Q_n = (P_0 Q_-1 - P_-1 Q_0) prod_(k<=n) (-num_k)
    """
    P_prev, Q_prev, _, _ = cf.meta.initial
    rhs = pairs[0].P * Q_prev - P_prev * pairs[0].Q
    prev = (P_prev, Q_prev)
    for pair in pairs:
        if pair.index:
            rhs = rhs * (-cf.terms[pair.index-1].num)
        lhs = pair.P * prev[1] - prev[0] * pair.Q
        if lhs != rhs:
            return pair.index
        prev = (pair.P, pair.Q)
    return None


def determinant_check(pairs, cf):
    """True when the determinant identity holds for every pair"""
    return determinant_mismatch(pairs, cf) is None


def eval_convergent(pair, x0):
    """Evaluate P(x0)/Q(x0) exactly

    :raises: PoleError when Q(x0) is 0
    """
    den = pair.Q(x0)
    if den == 0:
        raise PoleError("convergent %d has a pole at x = %s" % (pair.index, x0))
    return pair.P(x0) / den


def convergent_taylor(pair, order):
    """Taylor series of P/Q truncated at order

    :raises: PoleError when Q(0) is 0
    """
    if pair.Q[0] == 0:
        raise PoleError("convergent %d has Q(0) = 0" % pair.index)
    return series_div(pair.P.to_series(order), pair.Q.to_series(order))


def new_meta(family, params, **kwargs):
    """Metadata for a CFExpansion"""
    return DataHolder(family=family, params=params, **kwargs)
