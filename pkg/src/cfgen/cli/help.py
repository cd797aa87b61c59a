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

# Documentation for the commands
expand_help = """
expand --family FAMILY [PARAMETERS] [--depth N]
    Print the continued fraction of the family and its convergents P_n, Q_n
    for n = 0..N.
"""

verify_help = """
verify --family FAMILY [PARAMETERS] [--depth N]
verify --all [--depth N] [--jobs J]
    Check recurrence against closed form, the approximation order, the
    determinant identity and the classical numbers. --all runs every family
    over the built-in parameter grid. Exits 1 if any check fails.
"""

eval_help = """
eval --family FAMILY [PARAMETERS] --depth N --x X [--digits D]
    Evaluate convergent N at the rational point X, exactly and as a
    decimal truncated to D digits.
"""

transform_help = """
transform --family FAMILY [PARAMETERS] --lft A,B,C,D [--depth N] [--order K]
    Continued fraction of (A f + B)/(C f + D) where f is the family's
    function. Only bernoulli, cauchy, euler, euler2 and arctan qualify.
"""

series2cf_help = """
series2cf --source SOURCE [--depth N] [--order K]
    Expand a power series into c0 + a_1 x/(b_1 + a_2 x/(b_2 + ...)).
    SOURCE is ogf-cauchy, ogf-bernoulli, a stock series name (exp, geom,
    log1p, cosh, ...) or file:PATH with a JSON {"coeffs": [...], "order": K}.
"""

table_help = """
table --family FAMILY [PARAMETERS] [--count N]
    List the numbers generated by the family for n = 0..N, next to the
    classical values when they are known.
"""

families_help = """
Families and their parameters:
    bernoulli --N N --lambda L       N >= 0
    cauchy --N N --lambda L          N >= 1
    cauchy_interleaved --N N         N >= 1
    euler --N N, euler2 --N N        N >= 0
    harmonic --m M --a A --b B       M >= 1, A, B > 0
    zeta --s S                       S >= 2
    arctan, ogf_bernoulli, ogf_cauchy
Rational values are written p or p/q. Negative values need the = form,
eg. --lambda=-1/3 or --lft=-1,1,1,1.
"""

epilog = expand_help + verify_help + eval_help + transform_help \
         + series2cf_help + table_help + families_help
