#
# families.py
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
""" Number families and their continued fractions

Each family has a builder returning a CFExpansion, a target series the
fraction expands, and where possible a closed form for its convergents
and a table of classical numbers to check against.

Families of the pure (g,h) shape

    1 - h_1 X/(g_1 + h_1 X - g_1 h_2 X/(g_2 + h_2 X - g_2 h_3 X/(...)))

with X = x or x^2 are built by one routine from their g and h sequences.
"""
import logging
log = logging.getLogger("cfgen.families")

from fractions import Fraction
from math import factorial

from cfgen.base import DataHolder
from cfgen.contfrac import CFExpansion, ConvergentPair, PartialTerm, closed_form_convergents, new_meta
from cfgen.errors import ParameterError
from cfgen.numerics import format_rational
from cfgen.sequences import FactorialLike, hyp1f2_coeffs, hyp2f1_coeffs, named_numbers
from cfgen.series import Poly, Series, series_reciprocal, stock_series
from cfgen.series2cf import expand_cfraction

# Family ids and their default parameters
FAMILIES = {
    "arctan":             {},
    "bernoulli":          {"N": 1, "lam": 0},
    "cauchy":             {"N": 1, "lam": 0},
    "cauchy_interleaved": {"N": 1},
    "euler":              {"N": 0},
    "euler2":             {"N": 0},
    "harmonic":           {"m": 1, "a": 1, "b": 1},
    "zeta":               {"s": 2},
    "ogf_bernoulli":      {},
    "ogf_cauchy":         {},
}

PURE_FAMILIES = ("arctan", "bernoulli", "cauchy", "euler", "euler2")

# Coefficient n of the target is a number divided by n! for these
EGF_FAMILIES = ("bernoulli", "cauchy", "cauchy_interleaved", "euler", "euler2")

# Smallest series order used when a fraction is extracted from a series
OGF_CAUCHY_MIN_ORDER = 40


def _is_integer(v):
    return Fraction(v).denominator == 1


class FamilySpec(DataHolder):
    """A family id and its parameters

    Parameters that the family does not use are dropped, missing ones
    get the family defaults. Values are exact: N, m, s become ints and
    lam, a, b Fractions.

    :param family: One of FAMILIES
    :type family: str
    :raises: ParameterError when a parameter violates the family invariants
    """
    def __init__(self, family, **params):
        if family not in FAMILIES:
            raise ParameterError("unknown family '%s', expected one of: %s"
                                 % (family, ", ".join(sorted(FAMILIES))))
        DataHolder.__init__(self, family=family)
        for name, default in FAMILIES[family].items():
            value = params.pop(name, None)
            self[name] = default if value is None else value
        unused = [k for k, v in params.items() if v is not None]
        if unused:
            log.debug("%s ignores parameters %s", family, ", ".join(sorted(unused)))
        self.validate()

    def copy(self):
        return FamilySpec(self.family, **self.params)

    @property
    def params(self):
        return DataHolder(**dict((k, v) for k, v in self.items() if k != "family"))

    def validate(self):
        """Check and normalize the parameters"""
        if "N" in self:
            if not _is_integer(self.N):
                raise ParameterError("N must be an integer, got %s" % self.N)
            self.N = int(self.N)
            low = 0 if self.family in ("bernoulli", "euler", "euler2") else 1
            if self.N < low:
                raise ParameterError("%s needs N >= %d, got %d" % (self.family, low, self.N))
        if "lam" in self:
            self.lam = Fraction(self.lam)
        if "m" in self:
            if not _is_integer(self.m) or self.m < 1:
                raise ParameterError("m must be an integer >= 1, got %s" % self.m)
            self.m = int(self.m)
        for name in ("a", "b"):
            if name in self:
                self[name] = Fraction(self[name])
                if self[name] <= 0:
                    raise ParameterError("%s must be positive, got %s" % (name, self[name]))
        if "s" in self:
            if not _is_integer(self.s) or self.s < 2:
                raise ParameterError("s must be an integer >= 2, got %s" % self.s)
            self.s = int(self.s)

    def label(self):
        """Short text like bernoulli(N=1, lam=1/2)"""
        params = ", ".join("%s=%s" % (k, format_rational(v)) for k, v in sorted(self.params.items()))
        return "%s(%s)" % (self.family, params)


def _pure_sequences(spec):
    """Return (g, h, degree) for a pure family, g and h as functions of n >= 1"""
    if spec.family == "bernoulli":
        N, lam = spec.N, spec.lam
        return (lambda n: Fraction(N + n),
                lambda n: 1 - (N + n - 1) * lam,
                1)
    elif spec.family == "cauchy":
        N, lam = spec.N, spec.lam
        return (lambda n: Fraction(N + n),
                lambda n: lam - N - n + 1,
                1)
    elif spec.family == "euler":
        N = spec.N
        return (lambda n: Fraction((2*N + 2*n - 1) * (2*N + 2*n)),
                lambda n: Fraction(1),
                2)
    elif spec.family == "euler2":
        N = spec.N
        return (lambda n: Fraction((2*N + 2*n) * (2*N + 2*n + 1)),
                lambda n: Fraction(1),
                2)
    elif spec.family == "arctan":
        return (lambda n: Fraction(2*n + 1),
                lambda n: Fraction(-(2*n - 1)),
                1)
    raise ParameterError("%s is not a pure (g,h) family" % spec.family)


def build_pure(spec, depth, display_sign="minus"):
    """Build a pure (g,h) family fraction

    Level k has denominator g_k + h_k X and numerator -g_(k-1) h_k X with
    g_0 = 1. A zero numerator ends the fraction.
    """
    g, h, degree = _pure_sequences(spec)
    X = Poly.monomial(1, degree)
    terms = []
    gs, hs = [], []
    terminated = False
    g_prev = Fraction(1)
    for k in range(1, depth + 1):
        gk, hk = g(k), h(k)
        num = X.scale(-g_prev * hk)
        if num.is_zero():
            log.debug("%s terminates at level %d", spec.label(), k)
            terminated = True
            break
        terms.append(PartialTerm(num, gk + X.scale(hk)))
        gs.append(gk)
        hs.append(hk)
        g_prev = gk
    law = "2n+2" if degree == 2 else "n+1"
    meta = new_meta(spec.family, spec.params, contract="ratio",
                    display_sign=display_sign, law=law)
    pure = DataHolder(g=tuple(gs), h=tuple(hs), degree=degree)
    return CFExpansion(Poly([1]), terms, meta, pure=pure, terminated=terminated)


def build_bernoulli(N, lam, depth):
    """Hypergeometric degenerate Bernoulli fraction, head 1"""
    return build_pure(FamilySpec("bernoulli", N=N, lam=lam), depth)


def build_cauchy(N, lam, depth):
    """Hypergeometric degenerate Cauchy fraction, head 1"""
    return build_pure(FamilySpec("cauchy", N=N, lam=lam), depth)


def build_euler(kind, N, depth):
    """Hypergeometric Euler fractions in x^2

    :param kind: "first" (1/cosh x at N=0) or "second" (x/sinh x at N=0)
    """
    if kind not in ("first", "second"):
        raise ParameterError("euler kind must be first or second, got '%s'" % kind)
    family = "euler" if kind == "first" else "euler2"
    return build_pure(FamilySpec(family, N=N), depth)


def build_arctan(depth):
    """z/arctan(z) in the variable x = z^2"""
    return build_pure(FamilySpec("arctan"), depth, display_sign="plus")


def build_harmonic(m, a, b, depth):
    """Generating function of the generalized harmonic numbers h_n^(m)(a,b)

    x/(b^m(1-x) - b^2m x(1-x)/((a+b)^m + b^m x - (a+b)^2m x/(...)))
    """
    spec = FamilySpec("harmonic", m=m, a=a, b=b)
    m, a, b = spec.m, spec.a, spec.b
    x = Poly.x()
    terms = []
    for n in range(1, depth + 1):
        if n == 1:
            terms.append(PartialTerm(x, (1 - x).scale(b ** m)))
        elif n == 2:
            terms.append(PartialTerm((x * (1 - x)).scale(-b ** (2*m)),
                                     Poly([(a + b) ** m, b ** m])))
        else:
            prev = (n - 2) * a + b
            terms.append(PartialTerm(x.scale(-prev ** (2*m)),
                                     Poly([((n - 1) * a + b) ** m, prev ** m])))
    meta = new_meta("harmonic", spec.params, contract="ratio",
                    display_sign="minus", law="n+1")
    return CFExpansion(Poly(), terms, meta)


def build_zeta(s, depth):
    """1/(x + x^2/(2^s - 2^2s x/(3^s + 2^s x - 3^2s x/(...))))

    Its convergents satisfy Q_m - P_m f = O(x^(m+1)) with f = sum x^k/k^s,
    so at x = 1 they give 1/(1 + 2^-s + ... + m^-s).
    """
    spec = FamilySpec("zeta", s=s)
    s = spec.s
    x = Poly.x()
    terms = []
    for n in range(1, depth + 1):
        if n == 1:
            terms.append(PartialTerm(Poly([1]), x))
        elif n == 2:
            terms.append(PartialTerm(Poly.monomial(1, 2), Poly([2 ** s])))
        else:
            terms.append(PartialTerm(x.scale(-(n - 1) ** (2*s)),
                                     Poly([n ** s, (n - 1) ** s])))
    meta = new_meta("zeta", spec.params, contract="reciprocal",
                    display_sign="plus", law="n+1", law_from=1)
    return CFExpansion(Poly(), terms, meta)


def build_cauchy_interleaved(N, depth):
    """1 + N x/(N+1 + 1^2 x/(N+2 + (N+1)^2 x/(N+3 + 2^2 x/(...))))

    Expands the same series as the Cauchy family with lam = 0, one level
    per coefficient.
    """
    spec = FamilySpec("cauchy_interleaved", N=N)
    N = spec.N
    terms = []
    for k in range(1, depth + 1):
        if k == 1:
            c = N
        elif k % 2 == 0:
            c = (k // 2) ** 2
        else:
            c = (N + k // 2) ** 2
        terms.append(PartialTerm(Poly.monomial(c, 1), Poly([N + k])))
    meta = new_meta("cauchy_interleaved", spec.params, contract="ratio",
                    display_sign="plus", law="n+1")
    return CFExpansion(Poly([1]), terms, meta)


def build_ogf_bernoulli(depth):
    """1/(1 + x/(2/1 - x/(3 + 2x/(2/2 - 2x/(5 + 3x/(2/3 - ...))))))

    The leading 1/1 counts as the first level, so convergent k matches
    sum B_n x^n through x^(k-1).
    """
    spec = FamilySpec("ogf_bernoulli")
    terms = []
    for k in range(1, depth + 1):
        if k == 1:
            terms.append(PartialTerm(Poly([1]), Poly([1])))
        elif k % 2 == 0:
            j = k // 2
            terms.append(PartialTerm(Poly.monomial(j, 1), Poly([Fraction(2, j)])))
        else:
            j = k // 2
            terms.append(PartialTerm(Poly.monomial(-j, 1), Poly([2*j + 1])))
    meta = new_meta("ogf_bernoulli", spec.params, contract="ratio",
                    display_sign="plus", law="n")
    return CFExpansion(Poly(), terms, meta)


def build_ogf_cauchy(depth, order=None):
    """Fraction of sum c_n x^n extracted from the series

    :param order: Truncation of the series to expand, at least depth
    """
    spec = FamilySpec("ogf_cauchy")
    order = max(order or OGF_CAUCHY_MIN_ORDER, depth)
    c0, steps = expand_cfraction(target_series(spec, order), depth)
    terms = [PartialTerm(Poly.monomial(st.a, 1), Poly([st.b])) for st in steps]
    meta = new_meta("ogf_cauchy", spec.params, contract="ratio",
                    display_sign="plus", law="n+1")
    return CFExpansion(Poly([c0]), terms, meta, terminated=len(steps) < depth)


def build_family(spec, depth):
    """Build the fraction of any family

    :param spec: The family
    :type spec: FamilySpec
    :param depth: Number of levels
    :type depth: int
    :rtype: CFExpansion
    """
    if depth < 0:
        raise ParameterError("depth must be >= 0, got %d" % depth)
    log.debug("building %s to depth %d", spec.label(), depth)
    if spec.family == "bernoulli":
        return build_bernoulli(spec.N, spec.lam, depth)
    elif spec.family == "cauchy":
        return build_cauchy(spec.N, spec.lam, depth)
    elif spec.family == "euler":
        return build_euler("first", spec.N, depth)
    elif spec.family == "euler2":
        return build_euler("second", spec.N, depth)
    elif spec.family == "arctan":
        return build_arctan(depth)
    elif spec.family == "harmonic":
        return build_harmonic(spec.m, spec.a, spec.b, depth)
    elif spec.family == "zeta":
        return build_zeta(spec.s, depth)
    elif spec.family == "cauchy_interleaved":
        return build_cauchy_interleaved(spec.N, depth)
    elif spec.family == "ogf_bernoulli":
        return build_ogf_bernoulli(depth)
    return build_ogf_cauchy(depth)


def _egf_to_ogf(f):
    return Series([c * factorial(n) for n, c in enumerate(f.coeffs)], f.order)


def target_series(spec, order):
    """The series expanded by the family fraction, truncated at order

    For the zeta family this is f = sum x^k/k^s, the fraction itself
    expands 1/f only in the sense Q_m - P_m f = O(x^(m+1)).

    :rtype: Series
    """
    if order < 0:
        raise ParameterError("order must be >= 0, got %d" % order)
    family = spec.family
    if family in ("bernoulli", "cauchy"):
        return series_reciprocal(hyp2f1_coeffs(family, spec.N, spec.lam, order))
    elif family == "cauchy_interleaved":
        return series_reciprocal(hyp2f1_coeffs("cauchy", spec.N, 0, order))
    elif family in ("euler", "euler2"):
        return series_reciprocal(hyp1f2_coeffs(family, spec.N, order))
    elif family == "arctan":
        return series_reciprocal(Series([Fraction((-1) ** i, 2*i + 1) for i in range(order + 1)], order))
    elif family == "harmonic":
        m, a, b = spec.m, spec.a, spec.b
        sums = Series([0] + [1 / ((k - 1) * a + b) ** m for k in range(1, order + 1)], order)
        return sums / Series([1, -1], order)
    elif family == "zeta":
        return Series([0] + [Fraction(1, k ** spec.s) for k in range(1, order + 1)], order)
    elif family == "ogf_bernoulli":
        return _egf_to_ogf(series_reciprocal(stock_series("expm1_over_x", order)))
    # ogf_cauchy
    return _egf_to_ogf(series_reciprocal(stock_series("log1p_over_x", order)))


def family_closed_form(spec, n):
    """Convergent n from its closed form, None when the family has none

    :rtype: ConvergentPair or None
    """
    if spec.family in PURE_FAMILIES:
        g, h, degree = _pure_sequences(spec)
        gs = [g(k) for k in range(1, n + 1)]
        hs = [h(k) for k in range(1, n + 1)]
        return closed_form_convergents(gs, hs, n, degree)[-1]
    elif spec.family == "harmonic" and n >= 1:
        m, a, b = spec.m, spec.a, spec.b
        c = FactorialLike("rising", b, a)(n) ** m
        P = Poly([0] + [c / ((k - 1) * a + b) ** m for k in range(1, n + 1)])
        return ConvergentPair(n, P, Poly([c, -c]))
    elif spec.family == "zeta" and n >= 1:
        c = Fraction(factorial(n) ** spec.s)
        Q = Poly([0] + [c / k ** spec.s for k in range(1, n + 1)])
        return ConvergentPair(n, Poly([c]), Q)
    return None


def classical_numbers(spec, count):
    """The classical numbers the target encodes, None when there are none

    Computed by the named-number recurrences, independent of the series
    reciprocal.
    """
    family = spec.family
    if family in ("bernoulli", "cauchy") and spec.N == 1 and spec.lam == 0:
        return named_numbers(family, count)
    elif family in ("euler", "euler2") and spec.N == 0:
        return named_numbers(family, count)
    elif family == "cauchy_interleaved" and spec.N == 1:
        return named_numbers("cauchy", count)
    elif family == "harmonic":
        return named_numbers("harmonic", count, m=spec.m, a=spec.a, b=spec.b)
    elif family == "ogf_bernoulli":
        return named_numbers("bernoulli", count)
    elif family == "ogf_cauchy":
        return named_numbers("cauchy", count)
    return None


def number_table(spec, count):
    """Rows (n, value, oracle) of the numbers generated by the target

    value is n! times coefficient n for exponential generating functions
    and the coefficient itself otherwise; oracle is None without a
    classical counterpart.
    """
    if count < 0:
        raise ParameterError("count must be >= 0, got %d" % count)
    f = target_series(spec, count)
    if spec.family in EGF_FAMILIES:
        f = _egf_to_ogf(f)
    oracle = classical_numbers(spec, count)
    return [(n, f[n], oracle[n] if oracle is not None else None) for n in range(count + 1)]
