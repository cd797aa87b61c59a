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
from fractions import Fraction as F
import unittest

from cfgen.base import DataHolder
from cfgen.contfrac import CFExpansion, ConvergentPair, PartialTerm, approx_defect, closed_form_convergents
from cfgen.contfrac import convergent_taylor, convergents, determinant_check, determinant_mismatch
from cfgen.contfrac import eval_convergent, new_meta
from cfgen.errors import ParameterError, PoleError, TerminatedError, TruncationError
from cfgen.families import build_arctan, build_bernoulli, build_cauchy, build_euler, build_zeta
from cfgen.numerics import rat_to_decimal
from cfgen.series import Poly, Series, series_reciprocal, stock_series

# Taylor series of P_n/Q_n of x/(e^x-1) through x^8
BERNOULLI_TAYLOR = {
    4: [1, F(-1, 2), F(1, 12), 0, F(-1, 720), F(1, 720), F(-1, 864), F(7, 17280), F(-29, 518400)],
    5: [1, F(-1, 2), F(1, 12), 0, F(-1, 720), 0, F(1, 4320), F(-1, 5760), F(31, 518400)],
    6: [1, F(-1, 2), F(1, 12), 0, F(-1, 720), 0, F(1, 30240), F(1, 40320), F(-83, 3628800)],
}

def bernoulli_target(order):
    return series_reciprocal(stock_series("expm1_over_x", order))

class CFExpansionTestCase(unittest.TestCase):
    def test_defaults(self):
        """Test the metadata defaults"""
        cf = CFExpansion(Poly([1]), [PartialTerm(Poly([0, -1]), Poly([2, 1]))], new_meta("test", DataHolder()))
        self.assertEqual(cf.meta.contract, "ratio")
        self.assertEqual(cf.meta.law, "n+1")
        self.assertEqual(cf.meta.initial, (Poly([1]), Poly(), Poly([1]), Poly([1])))
        self.assertEqual(len(cf), 1)
        self.assertEqual(cf.family, "test")

    def test_validation(self):
        """Test rejecting zero numerators, cubic denominators and unknown metadata"""
        meta = lambda **kw: new_meta("test", DataHolder(), **kw)
        with self.assertRaises(ParameterError):
            CFExpansion(Poly([1]), [PartialTerm(Poly(), Poly([1]))], meta())
        with self.assertRaises(ParameterError):
            CFExpansion(Poly([1]), [PartialTerm(Poly([1]), Poly([0, 0, 0, 1]))], meta())
        with self.assertRaises(ParameterError):
            CFExpansion(Poly([1]), [], meta(contract="inverse"))
        with self.assertRaises(ParameterError):
            CFExpansion(Poly([1]), [], meta(law="n+2"))

    def test_display(self):
        """Test the nested text of a fraction"""
        cf = build_bernoulli(1, 0, 3)
        self.assertEqual(cf.display(), "1 - x/(2+x - 2x/(3+x - 3x/(4+x)))")
        self.assertEqual(cf.display(2), "1 - x/(2+x - 2x/(3+x - ...))")
        self.assertEqual(cf.display(0), "1")
        arctan = build_arctan(3)
        self.assertEqual(arctan.display(2), "1 + x/(3-x + 9x/(5-3x + ...))")

    def test_display_zero_head(self):
        """Test that a zero head is left out"""
        self.assertEqual(build_zeta(2, 2).display(), "1/(x + x^2/(4))")

    def test_displayed_numerators(self):
        """Test the sign convention of displayed numerators"""
        self.assertEqual(build_bernoulli(1, 0, 4).displayed_numerators(),
                         [Poly([0, 1]), Poly([0, 2]), Poly([0, 3]), Poly([0, 4])])
        self.assertEqual(build_cauchy(1, 0, 3).displayed_numerators(),
                         [Poly([0, -1]), Poly([0, -4]), Poly([0, -9])])

    def test_check_depth(self):
        """Test depths beyond the built and the terminated fractions"""
        cf = build_bernoulli(1, 0, 3)
        with self.assertRaises(ParameterError):
            cf.check_depth(4)
        with self.assertRaises(ParameterError):
            cf.check_depth(-1)
        terminated = build_bernoulli(2, F(1, 2), 5)
        self.assertTrue(terminated.terminated)
        self.assertEqual(len(terminated), 0)
        with self.assertRaises(TerminatedError):
            terminated.check_depth(1)

    def test_expected_defect(self):
        """Test the defect laws"""
        self.assertEqual(build_bernoulli(1, 0, 3).expected_defect(3), 4)
        self.assertEqual(build_euler("first", 0, 3).expected_defect(3), 8)
        zeta = build_zeta(3, 3)
        self.assertIsNone(zeta.expected_defect(0))
        self.assertEqual(zeta.expected_defect(2), 3)

    def test_json(self):
        """Test the JSON form of a fraction"""
        data = build_bernoulli(1, 0, 2).to_json(1)
        self.assertEqual(data["family"], "bernoulli")
        self.assertEqual(data["display_sign"], "minus")
        self.assertEqual(data["head"], ["1"])
        self.assertEqual(data["terms"], [{"num": ["0", "-1"], "den": ["2", "1"]}])
        self.assertFalse(data["terminated"])

class ConvergentsTestCase(unittest.TestCase):
    def test_arctan(self):
        """Test P_2 and Q_2 of z/arctan(z)"""
        pair = convergents(build_arctan(2), 2)[2]
        self.assertEqual(pair.P, Poly([15]))
        self.assertEqual(pair.Q, Poly([15, -5, 3]))
        self.assertEqual(eval_convergent(pair, 1), F(15, 13))

    def test_bernoulli_first(self):
        """Test P_1 and Q_1 of the Bernoulli fraction"""
        for N, lam in ((1, 0), (2, F(1, 3)), (0, F(-1, 2))):
            pair = convergents(build_bernoulli(N, lam, 1), 1)[1]
            self.assertEqual(pair.P, Poly([N + 1]))
            self.assertEqual(pair.Q, Poly([N + 1, 1 - N * lam]))

    def test_zeta(self):
        """Test the first zeta convergents"""
        pairs = convergents(build_zeta(2, 3), 3)
        self.assertEqual((pairs[1].P, pairs[1].Q), (Poly([1]), Poly([0, 1])))
        self.assertEqual((pairs[2].P, pairs[2].Q), (Poly([4]), Poly([0, 4, 1])))
        self.assertEqual((pairs[3].P, pairs[3].Q), (Poly([36]), Poly([0, 36, 9, 4])))

    def test_terminated(self):
        """Test that a terminated fraction only has its finite convergents"""
        cf = build_bernoulli(2, F(1, 2), 5)
        pairs = convergents(cf, 0)
        self.assertEqual(pairs, [ConvergentPair(0, Poly([1]), Poly([1]))])
        with self.assertRaises(TerminatedError):
            convergents(cf, 1)

    def test_closed_form(self):
        """Test the product formula of the convergents"""
        pairs = closed_form_convergents([2, 3, 4], [1, 1, 1], 3)
        self.assertEqual(pairs[0], ConvergentPair(0, Poly([1]), Poly([1])))
        self.assertEqual(pairs[3].P, Poly([24]))
        self.assertEqual(pairs[3].Q, Poly([24, 12, 4, 1]))
        arctan = closed_form_convergents([3, 5], [-1, -3], 2)
        self.assertEqual(arctan[2].Q, Poly([15, -5, 3]))
        euler = closed_form_convergents([2, 12], [1, 1], 2, degree=2)
        self.assertEqual(euler[2].Q, Poly([24, 0, 12, 0, 1]))
        with self.assertRaises(ParameterError):
            closed_form_convergents([2], [1], 2)

    def test_recurrence_closed_form(self):
        """Test that the recurrence and the closed form agree through n = 20"""
        for cf in (build_bernoulli(2, F(-1, 3), 20), build_cauchy(3, F(-1, 2), 20),
                   build_euler("first", 1, 20), build_euler("second", 0, 20), build_arctan(20)):
            expected = closed_form_convergents(cf.pure.g, cf.pure.h, 20, cf.pure.degree)
            self.assertEqual(convergents(cf, 20), expected, cf.family)

class DefectTestCase(unittest.TestCase):
    def test_bernoulli_defect(self):
        """Test the exact defect order of the Bernoulli convergents"""
        cf = build_bernoulli(1, 0, 6)
        f = bernoulli_target(8)
        self.assertEqual(approx_defect(cf, f, 4), (5, True))
        self.assertEqual(approx_defect(cf, f, 6), (7, True))

    def test_euler_defect(self):
        """Test the 2n+2 defect of the Euler fraction"""
        cf = build_euler("first", 0, 3)
        f = series_reciprocal(stock_series("cosh", 10))
        self.assertEqual(approx_defect(cf, f, 1), (4, True))
        self.assertTrue(approx_defect(cf, f, 3).meets(8))

    def test_truncation(self):
        """Test that a short series cannot certify the defect"""
        cf = build_bernoulli(1, 0, 6)
        with self.assertRaises(TruncationError):
            approx_defect(cf, bernoulli_target(3), 4)

    def test_unbounded_defect(self):
        """Test a defect that vanishes through the whole truncation"""
        cf = build_bernoulli(2, F(1, 2), 4)
        f = series_reciprocal(Series([1], 6))
        order = approx_defect(cf, f, 0)
        self.assertEqual(order, (7, False))

class TaylorTestCase(unittest.TestCase):
    def test_bernoulli_goldens(self):
        """Test the Taylor series of P_4/Q_4, P_5/Q_5 and P_6/Q_6"""
        pairs = convergents(build_bernoulli(1, 0, 6), 6)
        for n, coeffs in BERNOULLI_TAYLOR.items():
            self.assertEqual(list(convergent_taylor(pairs[n], 8)), coeffs, "n=%d" % n)

    def test_head_pair(self):
        """Test the constant convergent"""
        self.assertEqual(convergent_taylor(ConvergentPair(0, Poly([1]), Poly([1])), 4), Series([1], 4))

    def test_pole(self):
        """Test convergents without a Taylor series"""
        pair = convergents(build_zeta(2, 1), 1)[1]
        with self.assertRaises(PoleError):
            convergent_taylor(pair, 4)
        with self.assertRaises(PoleError):
            eval_convergent(pair, 0)

class DeterminantTestCase(unittest.TestCase):
    def test_bernoulli(self):
        """Test P_1 Q_0 - P_0 Q_1 = -x"""
        pairs = convergents(build_bernoulli(1, 0, 1), 1)
        self.assertEqual(pairs[1].P * pairs[0].Q - pairs[0].P * pairs[1].Q, Poly([0, -1]))
        self.assertTrue(determinant_check(pairs, build_bernoulli(1, 0, 1)))

    def test_families(self):
        """Test the determinant identity through n = 12"""
        for cf in (build_zeta(2, 12), build_cauchy(2, 0, 12), build_euler("second", 1, 12)):
            self.assertTrue(determinant_check(convergents(cf, 12), cf), cf.family)

    def test_mismatch(self):
        """Test locating a broken convergent"""
        cf = build_bernoulli(1, 0, 4)
        pairs = convergents(cf, 4)
        pairs[3] = ConvergentPair(3, pairs[3].P + 1, pairs[3].Q)
        self.assertEqual(determinant_mismatch(pairs, cf), 3)
        self.assertFalse(determinant_check(pairs, cf))

class EvalTestCase(unittest.TestCase):
    def test_zeta7(self):
        """Test 1/(1 + 2^-7 + ... + 5^-7) at x = 1"""
        pair = convergents(build_zeta(7, 5), 5)[5]
        value = eval_convergent(pair, 1)
        self.assertEqual(value, 1 / sum(F(1, k ** 7) for k in range(1, 6)))
        self.assertEqual(rat_to_decimal(value, 28).text, "0.9917254568069276497590711416")

    def test_head(self):
        """Test the head value at x = 0"""
        pair = convergents(build_bernoulli(1, 0, 1), 1)[1]
        self.assertEqual(eval_convergent(pair, 0), 1)
        self.assertEqual(eval_convergent(pair, F(2, 3)), pair.P(F(2, 3)) / pair.Q(F(2, 3)))
