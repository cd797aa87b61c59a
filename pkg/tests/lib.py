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
import json
import os
import sys
from contextlib import contextmanager
from fractions import Fraction
from io import StringIO

from cfgen.cli import main
from cfgen.cli.cmdline import cfgen_parser
from cfgen.series import Series

@contextmanager
def captured_output():
    new_out, new_err = StringIO(), StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    try:
        sys.stdout, sys.stderr = new_out, new_err
        yield sys.stdout, sys.stderr
    finally:
        sys.stdout, sys.stderr = old_out, old_err

def run_cli(args):
    """Run cfgen with args, ignoring any system configuration

    :returns: (exit code, stdout text, stderr text)
    :rtype: tuple
    """
    if "--config" not in args:
        args = list(args) + ["--config", os.devnull]
    opts = cfgen_parser().parse_args(args)
    with captured_output() as (out, err):
        rc = main(opts)
    return rc, out.getvalue(), err.getvalue()

def write_series(path, coeffs, order=None):
    """Write a series file in the {"coeffs": [...], "order": K} format"""
    data = {"coeffs": [str(Fraction(c)) for c in coeffs]}
    if order is not None:
        data["order"] = order
    with open(path, "w") as f:
        json.dump(data, f)

def make_series(ns, ds, order=8):
    """Series with nonzero coefficients n/(|d|+1), cycling through ns and ds

    Turns the int lists drawn by a property into a series of the given order.
    """
    ns = [n or 1 for n in ns] or [1]
    ds = [abs(d) + 1 for d in ds] or [1]
    return Series([Fraction(ns[k % len(ns)], ds[k % len(ds)]) for k in range(order + 1)], order)
