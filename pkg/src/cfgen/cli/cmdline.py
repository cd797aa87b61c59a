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
import os
import sys
import argparse

from cfgen import vernum, DEFAULT_CONF
from cfgen.cli.help import epilog
from cfgen.numerics import parse_rational
from cfgen.transform import LFTCoeffs

VERSION = "{0}-{1}".format(os.path.basename(sys.argv[0]), vernum)

def cfgen_parser():
    """ Return the ArgumentParser for cfgen"""

    parser = argparse.ArgumentParser(description="Continued fractions of generating functions",
                                     epilog=epilog,
                                     formatter_class=argparse.RawDescriptionHelpFormatter,
                                     fromfile_prefix_chars="@")

    parser.add_argument("command", nargs="?", metavar="COMMAND",
                        help="expand, verify, eval, transform, series2cf or table")

    family = parser.add_argument_group("family")
    family.add_argument("--family", default=None, metavar="FAMILY",
                        help="Number family, see the list below")
    family.add_argument("--N", dest="N", type=int, default=None,
                        help="Family index N")
    family.add_argument("--lambda", dest="lam", type=parse_rational, default=None, metavar="LAMBDA",
                        help="Degeneracy parameter, p or p/q")
    family.add_argument("--m", dest="m", type=int, default=None,
                        help="Order of the harmonic numbers")
    family.add_argument("--a", dest="a", type=parse_rational, default=None,
                        help="Step of the harmonic numbers")
    family.add_argument("--b", dest="b", type=parse_rational, default=None,
                        help="Start of the harmonic numbers")
    family.add_argument("--s", dest="s", type=int, default=None,
                        help="Exponent of the zeta family")

    parser.add_argument("--depth", type=int, default=None,
                        help="Number of levels (default from the config, 10)")
    parser.add_argument("--x", dest="x", type=parse_rational, default=None,
                        help="Evaluation point for eval, p or p/q")
    parser.add_argument("--digits", type=int, default=None,
                        help="Decimal digits (default from the config, 28)")
    parser.add_argument("--format", choices=["text", "json"], default="text",
                        help="Output format")
    parser.add_argument("--source", default=None,
                        help="Series for series2cf")
    parser.add_argument("--all", action="store_true", default=False,
                        help="verify every family over the parameter grid")
    parser.add_argument("--lft", type=LFTCoeffs.parse, default=None, metavar="A,B,C,D",
                        help="Transformation (A f + B)/(C f + D)")
    parser.add_argument("--order", type=int, default=40,
                        help="Series truncation order for transform and series2cf")
    parser.add_argument("--count", type=int, default=10,
                        help="Number of table rows after row 0")
    parser.add_argument("-j", "--jobs", type=int, default=None,
                        help="Worker processes for verify --all (default from the config, 1)")
    parser.add_argument("--config", default=DEFAULT_CONF, metavar="CONFIG",
                        help="Path to the configuration file")
    parser.add_argument("--log", dest="logfile", default=None, metavar="LOG",
                        help="Path to a logfile")
    parser.add_argument("--debug", action="store_true", default=False,
                        help="Log debug messages")
    parser.add_argument("--timing", action="store_true", default=False,
                        help="Add the run time to the output")
    parser.add_argument("-V", action="store_true", dest="showver",
                        help="show program's version number and exit")

    return parser
