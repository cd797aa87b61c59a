#
# sequences.py
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
""" Coefficient streams and named number families

The hypergeometric streams feed the family builders. named_numbers()
computes the classical numbers by binomial recurrences and Stirling
numbers, never through the series reciprocal, so it can serve as an
independent oracle.
"""
import logging
log = logging.getLogger("cfgen.sequences")

from fractions import Fraction
from math import comb, factorial

from cfgen.errors import ParameterError
from cfgen.series import Series

FACTORIAL_KINDS = ("factorial", "double_factorial", "rising", "falling")
MAX_ZETA_TERMS = 2 ** 20


class FactorialLike(object):
    """Cached factorial style products

    kind is one of factorial (n!), double_factorial (n!!), rising
    ((x|r)^(n) = x(x+r)...(x+(n-1)r)) or falling ((x|r)_n = x(x-r)...).
    The cache only ever grows by appending the next product, so repeated
    calls return the same values as a fresh instance would.
    """
    def __init__(self, kind, x=None, r=1):
        if kind not in FACTORIAL_KINDS:
            raise ParameterError("unknown factorial kind '%s'" % kind)
        if kind in ("rising", "falling") and x is None:
            raise ParameterError("%s factorial needs a base x" % kind)
        self.kind = kind
        self.x = Fraction(x) if x is not None else None
        self.r = Fraction(r)
        self._values = [Fraction(1)]

    def _factor(self, n):
        """The factor taking value(n-1) to value(n)"""
        if self.kind == "factorial":
            return n
        elif self.kind == "double_factorial":
            return None
        elif self.kind == "rising":
            return self.x + (n - 1) * self.r
        return self.x - (n - 1) * self.r

    def __call__(self, n):
        if n < 0:
            raise ParameterError("factorial index must be >= 0, got %d" % n)
        if self.kind == "double_factorial":
            # n!! = n (n-2)!!, with 0!! = 1!! = 1
            while len(self._values) <= n:
                k = len(self._values)
                self._values.append(self._values[k-2] * k if k >= 2 else Fraction(1))
            return self._values[n]
        while len(self._values) <= n:
            k = len(self._values)
            self._values.append(self._values[-1] * self._factor(k))
        return self._values[n]


def gen_falling(x, r, n):
    """Generalized falling factorial (x|r)_n = x(x-r)...(x-(n-1)r)"""
    return FactorialLike("falling", x, r)(n)


def gen_rising(x, r, n):
    """Generalized rising factorial (x|r)^(n) = x(x+r)...(x+(n-1)r)"""
    return FactorialLike("rising", x, r)(n)


def hyp2f1_coeffs(kind, N, lam, order):
    """Coefficients of the Gauss hypergeometric streams

    :param kind: "bernoulli" or "cauchy"
    :type kind: str
    :param N: Family index, >= 0 for bernoulli and >= 1 for cauchy
    :type N: int
    :param lam: The degeneracy parameter lambda
    :type lam: Fraction
    :param order: Truncation order
    :type order: int
    :rtype: Series

    bernoulli: (1-N*lam|lam)_n / (N+n)_n, cauchy: (lam-N)_n N!/(N+n)!.
    lam = 0 is handled by the closed forms directly.
    """
    lam = Fraction(lam)
    if kind == "bernoulli":
        if N < 0:
            raise ParameterError("bernoulli needs N >= 0, got %d" % N)
        top = FactorialLike("falling", 1 - N * lam, lam)
    elif kind == "cauchy":
        if N < 1:
            raise ParameterError("cauchy needs N >= 1, got %d" % N)
        top = FactorialLike("falling", lam - N, 1)
    else:
        raise ParameterError("unknown 2F1 stream '%s'" % kind)
    # (N+n)_n = (N+n)!/N!
    bottom = FactorialLike("rising", N + 1, 1)
    return Series([top(n) / bottom(n) for n in range(order + 1)], order)


def hyp1f2_coeffs(kind, N, order):
    """Even streams of the Euler families

    euler: sum (2N)! x^(2n)/(2N+2n)!, euler2: sum (2N+1)! x^(2n)/(2N+2n+1)!
    """
    if N < 0:
        raise ParameterError("%s needs N >= 0, got %d" % (kind, N))
    if kind == "euler":
        base = 2 * N
    elif kind == "euler2":
        base = 2 * N + 1
    else:
        raise ParameterError("unknown 1F2 stream '%s'" % kind)
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(0, order + 1, 2):
        coeffs[k] = Fraction(factorial(base), factorial(base + k))
    return Series(coeffs, order)


def stirling_first(n_max):
    """Signed Stirling numbers of the first kind, rows 0..n_max

    Row n holds the coefficients of x(x-1)...(x-n+1) in ascending degree.
    """
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1] + [0]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = prev[k-1] - (n - 1) * prev[k]
        rows.append(row)
    return rows


def _bernoulli(count):
    # sum_{k<=n} C(n+1,k) B_k = 0
    B = [Fraction(1)]
    for n in range(1, count + 1):
        s = sum((comb(n + 1, k) * B[k] for k in range(n)), Fraction(0))
        B.append(-s / (n + 1))
    return B

def _cauchy(count):
    # c_n = integral_0^1 x(x-1)...(x-n+1) dx
    return [sum((Fraction(s, k + 1) for k, s in enumerate(row)), Fraction(0))
            for row in stirling_first(count)]

def _euler(count):
    # sum_{k even} C(n,k) E_k = 0 for even n > 0, odd E_n = 0
    E = [Fraction(1)]
    for n in range(1, count + 1):
        if n % 2:
            E.append(Fraction(0))
        else:
            E.append(-sum((comb(n, k) * E[k] for k in range(0, n, 2)), Fraction(0)))
    return E

def _euler2(count):
    # x/sinh x: sum_{k} C(n,k) E_k / (n-k+1) over even n-k vanishes
    E = [Fraction(1)]
    for n in range(1, count + 1):
        if n % 2:
            E.append(Fraction(0))
        else:
            E.append(-sum((Fraction(comb(n, k), n - k + 1) * E[k] for k in range(0, n, 2)), Fraction(0)))
    return E

def _harmonic(count, m=1, a=1, b=1):
    a, b = Fraction(a), Fraction(b)
    h = [Fraction(0)]
    for k in range(1, count + 1):
        h.append(h[-1] + 1 / ((k - 1) * a + b) ** m)
    return h

NAMED_NUMBERS = {
    "bernoulli": _bernoulli,
    "cauchy":    _cauchy,
    "euler":     _euler,
    "euler2":    _euler2,
    "harmonic":  _harmonic,
}


def named_numbers(family, count, **params):
    """Return the classical numbers with index 0..count

    :param family: bernoulli, cauchy, euler, euler2 or harmonic
    :type family: str
    :param count: Largest index
    :type count: int
    :param params: m, a, b for the harmonic numbers
    :rtype: list of Fraction
    """
    if family not in NAMED_NUMBERS:
        raise ParameterError("no named numbers for '%s'" % family)
    if count < 0:
        raise ParameterError("count must be >= 0")
    if family == "harmonic":
        return _harmonic(count, **params)
    return NAMED_NUMBERS[family](count)


class MoebiusTable(object):
    """mu(1..n_max) from a linear sieve"""
    def __init__(self, values):
        self._values = values

    @property
    def n_max(self):
        return len(self._values) - 1

    def __getitem__(self, n):
        if not 1 <= n <= self.n_max:
            raise IndexError("mu(%d) is outside 1..%d" % (n, self.n_max))
        return self._values[n]

    def divisor_sum(self, n):
        """sum of mu(d) over the divisors d of n"""
        total = 0
        d = 1
        while d * d <= n:
            if n % d == 0:
                total += self._values[d]
                if d * d != n:
                    total += self._values[n // d]
            d += 1
        return total


def moebius_sieve(n_max):
    """Build the Moebius table for 1..n_max

    :rtype: MoebiusTable
    """
    if n_max < 1:
        raise ParameterError("n_max must be >= 1")
    mu = [0] * (n_max + 1)
    mu[1] = 1
    composite = [False] * (n_max + 1)
    primes = []
    for i in range(2, n_max + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > n_max:
                break
            composite[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return MoebiusTable(mu)


def zeta_reciprocal_bounds(s, digits):
    """Bracket 1/zeta(s) tightly enough to fix `digits` decimals

    The partial sum over k <= K is computed in integers scaled by 10^D
    (each term rounded down for the low bound and up for the high bound);
    the tail lies between 1/((s-1)(K+1)^(s-1)) and 1/((s-1)K^(s-1)).

    :returns: (low, high) with low <= 1/zeta(s) <= high
    :rtype: tuple of Fraction
    """
    if s < 2:
        raise ParameterError("zeta(s) needs s >= 2, got %d" % s)
    D = digits + 8
    scale = 10 ** D
    # tail width ~ 1/K^s, keep it below 10^-(digits+4)
    K = 1
    while K ** s < 10 ** (digits + 4):
        K *= 2
        if K > MAX_ZETA_TERMS:
            raise ParameterError("zeta(%d) needs more than %d terms for %d digits"
                                 % (s, MAX_ZETA_TERMS, digits))
    lo_sum = hi_sum = 0
    for k in range(1, K + 1):
        q, r = divmod(scale, k ** s)
        lo_sum += q
        hi_sum += q + (1 if r else 0)
    zeta_lo = Fraction(lo_sum, scale) + Fraction(1, (s - 1) * (K + 1) ** (s - 1))
    zeta_hi = Fraction(hi_sum, scale) + Fraction(1, (s - 1) * K ** (s - 1))
    log.debug("zeta(%d) bracketed with K=%d", s, K)
    return (1 / zeta_hi, 1 / zeta_lo)
