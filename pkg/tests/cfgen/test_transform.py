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

from cfgen.contfrac import convergent_taylor, convergents
from cfgen.errors import ParameterError, PoleError, ShapeError
from cfgen.families import build_arctan, build_bernoulli, build_cauchy, build_harmonic, build_zeta
from cfgen.series import Poly, Series, series_div, series_reciprocal, stock_series
from cfgen.transform import LFTCoeffs, MatrixStep, convergent_relation_check, lft_apply_value
from cfgen.transform import lft_transform, matrix_product_check, step_products

ORDER = 12

def expm1_ratio(order):
    """(e^x-x-1)/(e^x+x-1), both sides divided by x"""
    e1 = stock_series("expm1_over_x", order)
    return series_div(e1 - 1, e1 + 1)

def log_ratio(order):
    """(x-log(1+x))/(x+log(1+x)), both sides divided by x"""
    l1 = stock_series("log1p_over_x", order)
    return series_div(1 - l1, 1 + l1)

class LFTCoeffsTestCase(unittest.TestCase):
    def test_invariants(self):
        """Test rejecting degenerate maps and c + d = 0"""
        with self.assertRaises(ParameterError):
            LFTCoeffs(1, 1, 1, 1)
        with self.assertRaises(ParameterError):
            LFTCoeffs(1, 0, 1, -1)

    def test_parse(self):
        """Test parsing A,B,C,D"""
        t = LFTCoeffs.parse("-1, 1, 1, 1")
        self.assertEqual(t, (-1, 1, 1, 1))
        self.assertEqual(str(LFTCoeffs.parse("1/2,0,0,1")), "1/2,0,0,1")
        self.assertEqual(t.to_json(), ["-1", "1", "1", "1"])
        for text in ("1,2,3", "1,2,3,x", "1.5,0,0,1"):
            with self.assertRaises(ParameterError):
                LFTCoeffs.parse(text)

    def test_algebra(self):
        """Test the determinant, composition and inverse"""
        t = LFTCoeffs(2, 3, 5, 7)
        self.assertEqual(t.det, -1)
        self.assertEqual(t.compose(LFTCoeffs.identity()), t)
        self.assertEqual(t.inverse().compose(t), (-1, 0, 0, -1))
        self.assertEqual(t.compose(LFTCoeffs(1, 1, 0, 1)), (2, 5, 5, 12))

    def test_display(self):
        """Test printing the map with minus signs instead of + -"""
        self.assertEqual(LFTCoeffs(1, -1, 1, 1).display(), "(f - 1)/(f + 1)")
        self.assertEqual(LFTCoeffs(-1, 1, 1, 1).display(), "(-f + 1)/(f + 1)")
        self.assertEqual(LFTCoeffs(2, 3, -5, 7).display(), "(2f + 3)/(-5f + 7)")
        self.assertEqual(LFTCoeffs(F(1, 2), 0, 0, 1).display(), "((1/2)f)/(1)")
        self.assertEqual(LFTCoeffs(F(-1, 2), F(-3, 4), 1, 1).display(), "(-(1/2)f - 3/4)/(f + 1)")
        self.assertEqual(LFTCoeffs(0, 1, -1, 2).display("y"), "(1)/(-y + 2)")

class ApplyValueTestCase(unittest.TestCase):
    def test_identity(self):
        """Test that the identity map changes nothing"""
        f = stock_series("exp", 6)
        self.assertEqual(lft_apply_value(LFTCoeffs.identity(), f), f)
        self.assertEqual(lft_apply_value(LFTCoeffs.identity(), F(3, 7)), F(3, 7))

    def test_tanh(self):
        """Test that (1-v)/(1+v) takes e^-x to tanh(x/2)"""
        t = LFTCoeffs(-1, 1, 1, 1)
        v = series_reciprocal(stock_series("exp", 9))
        self.assertEqual(lft_apply_value(t, v), stock_series("tanh_half", 9))
        self.assertEqual(lft_apply_value(t, 1), 0)

    def test_poles(self):
        """Test a vanishing denominator"""
        t = LFTCoeffs(1, 0, 1, 1)
        with self.assertRaises(PoleError):
            lft_apply_value(t, -1)
        with self.assertRaises(PoleError):
            lft_apply_value(LFTCoeffs(1, 0, 1, -2), Series([2, 1], 3))

class TransformTestCase(unittest.TestCase):
    def test_bernoulli(self):
        """Test the fraction of (e^x-x-1)/(e^x+x-1)"""
        cf = lft_transform(build_bernoulli(1, 0, ORDER), LFTCoeffs(-1, 1, 1, 1))
        self.assertEqual(cf.head, Poly())
        self.assertEqual(cf.display(3), "x/(4+x - 4x/(3+x - 3x/(4+x - ...)))")
        pair = convergents(cf, ORDER)[ORDER]
        self.assertEqual(convergent_taylor(pair, ORDER), expm1_ratio(ORDER))

    def test_exp_minus_x(self):
        """Test the fraction of tanh(x/2)"""
        cf = lft_transform(build_bernoulli(0, 0, ORDER), LFTCoeffs(-1, 1, 1, 1))
        self.assertEqual(cf.display(3), "x/(2+x - 2x/(2+x - 2x/(3+x - ...)))")
        pair = convergents(cf, ORDER)[ORDER]
        self.assertEqual(convergent_taylor(pair, ORDER), stock_series("tanh_half", ORDER))

    def test_cauchy(self):
        """Test the fraction of (x-log(1+x))/(x+log(1+x))"""
        cf = lft_transform(build_cauchy(1, 0, ORDER), LFTCoeffs(1, -1, 1, 1))
        self.assertEqual([t.den for t in cf.terms[:4]],
                         [Poly([4, -1]), Poly([3, -2]), Poly([4, -3]), Poly([5, -4])])
        self.assertEqual(cf.display(2), "x/(4-x + 8x/(3-2x + ...))")
        pair = convergents(cf, ORDER)[ORDER]
        self.assertEqual(convergent_taylor(pair, ORDER), log_ratio(ORDER))

    def test_identity(self):
        """Test that the identity map rebuilds the same fraction"""
        cf = build_arctan(5)
        same = lft_transform(cf, LFTCoeffs.identity())
        self.assertEqual(same.head, cf.head)
        self.assertEqual(same.terms, cf.terms)

    def test_inverse(self):
        """Test that the inverse map gives back the convergents"""
        t = LFTCoeffs(2, 3, 5, 7)
        cf = build_bernoulli(2, F(-1, 3), 6)
        back = lft_transform(lft_transform(cf, t), t.inverse())
        for p, q in zip(convergents(cf, 6), convergents(back, 6)):
            self.assertEqual(p.P * q.Q, q.P * p.Q, "n=%d" % p.index)

    def test_shape(self):
        """Test that fractions without the pure shape are refused"""
        for cf in (build_harmonic(1, 1, 1, 3), build_zeta(2, 3)):
            with self.assertRaises(ShapeError):
                lft_transform(cf, LFTCoeffs(-1, 1, 1, 1))

    def test_convergent_relation(self):
        """Test that each transformed convergent is t of the original one"""
        t = LFTCoeffs(F(1, 2), 3, -2, 5)
        cf = build_cauchy(2, F(1, 3), 8)
        self.assertTrue(convergent_relation_check(cf, lft_transform(cf, t), t, 8))

class MatrixTestCase(unittest.TestCase):
    def test_level_det(self):
        """Test det of a level matrix is minus its numerator"""
        cf = build_bernoulli(1, 0, 2)
        step = MatrixStep.of_level(cf.terms[1])
        self.assertEqual(step.det, -cf.terms[1].num)

    def test_products(self):
        """Test that the step products hold the convergents"""
        cf = build_bernoulli(1, 0, 4)
        pairs = convergents(cf, 4)
        products = step_products(cf, 4)
        for n in range(1, 5):
            p = products[n]
            self.assertEqual((p.m11, p.m21, p.m12, p.m22),
                             (pairs[n].P, pairs[n].Q, pairs[n-1].P, pairs[n-1].Q))

    def test_matrix_product(self):
        """Test the matrix identity for a generic, the identity and the tanh map"""
        self.assertTrue(matrix_product_check(build_bernoulli(1, 0, 2), LFTCoeffs(2, 3, 5, 7), 2))
        self.assertTrue(matrix_product_check(build_arctan(5), LFTCoeffs.identity(), 5))
        self.assertTrue(matrix_product_check(build_bernoulli(0, 0, 8), LFTCoeffs(-1, 1, 1, 1), 8))
        with self.assertRaises(ParameterError):
            matrix_product_check(build_arctan(2), LFTCoeffs.identity(), 0)
