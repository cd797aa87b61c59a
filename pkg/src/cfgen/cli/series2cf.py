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
import logging
log = logging.getLogger("cfgen-cli")

import time

from cfgen.cli.utilities import check_depth, emit
from cfgen.errors import ParameterError
from cfgen.families import FamilySpec, target_series
from cfgen.numerics import format_rational
from cfgen.series import STOCK_SERIES, series_order, stock_series
from cfgen.series2cf import REFERENCE_OGF_CAUCHY_STEPS, expand_cfraction, load_series
from cfgen.series2cf import normalized_coefficients, reconstruct

def source_series(source, order):
    """Return the series named by --source

    :param source: ogf-cauchy, ogf-bernoulli, a stock series name or file:PATH
    :type source: str
    :param order: Truncation order for the computed sources
    :type order: int
    :rtype: Series
    """
    if not source:
        raise ParameterError("series2cf needs --source")
    if source.startswith("file:"):
        return load_series(source[5:])
    name = source.replace("-", "_")
    if name in ("ogf_cauchy", "ogf_bernoulli"):
        return target_series(FamilySpec(name), order)
    if name in STOCK_SERIES:
        return stock_series(name, order)
    raise ParameterError("unknown series source '%s', expected ogf-cauchy, ogf-bernoulli, "
                         "file:PATH or one of: %s" % (source, ", ".join(sorted(STOCK_SERIES))))


def series2cf_cmd(opts):
    """Expand a power series into a continued fraction

    :param opts: Cmdline arguments
    :type opts: argparse.Namespace
    :returns: 0 when the fraction reproduces the series, 1 otherwise
    :rtype: int
    """
    started = time.time()
    depth = check_depth(opts)
    f = source_series(opts.source, max(opts.order, depth))
    c0, steps = expand_cfraction(f, depth)
    rebuilt = reconstruct(c0, steps, f.order)
    order = series_order(rebuilt - f)
    ok = order.meets(len(steps) + 1)

    reference = None
    if opts.source.replace("-", "_") == "ogf_cauchy":
        n = min(len(steps), len(REFERENCE_OGF_CAUCHY_STEPS))
        same = normalized_coefficients(steps[:n]) == normalized_coefficients(REFERENCE_OGF_CAUCHY_STEPS[:n])
        reference = {"steps":      [{"a": str(s.a), "b": format_rational(s.b)}
                                    for s in REFERENCE_OGF_CAUCHY_STEPS[:n]],
                     "equivalent": same}
        ok = ok and same

    payload = {"command":   "series2cf",
               "source":    opts.source,
               "depth":     depth,
               "c0":        format_rational(c0),
               "steps":     [{"a": str(s.a), "b": format_rational(s.b)} for s in steps],
               "terminated": len(steps) < depth,
               "roundtrip": str(order),
               "reference": reference,
               "status":    "pass" if ok else "fail"}
    emit(opts, "series2cf.tmpl", payload, started)
    return 0 if ok else 1
