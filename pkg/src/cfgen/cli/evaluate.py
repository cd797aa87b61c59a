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

from cfgen.cli.utilities import check_depth, emit, spec_from_opts
from cfgen.contfrac import convergents, eval_convergent
from cfgen.errors import ParameterError
from cfgen.families import build_family
from cfgen.numerics import format_rational, rat_to_decimal

def eval_cmd(opts):
    """Evaluate a convergent at a rational point

    :param opts: Cmdline arguments
    :type opts: argparse.Namespace
    :returns: Value to return from sys.exit()
    :rtype: int
    """
    started = time.time()
    if opts.x is None:
        raise ParameterError("eval needs --x")
    spec = spec_from_opts(opts)
    depth = check_depth(opts)
    cf = build_family(spec, depth)
    levels = min(depth, len(cf))
    if levels < depth:
        log.info("%s terminates after %d levels", spec.label(), levels)
    pair = convergents(cf, levels)[-1]
    value = eval_convergent(pair, opts.x)
    decimal = rat_to_decimal(value, opts.digits)

    payload = {"command": "eval",
               "family":  spec.family,
               "params":  spec.params.to_json(),
               "depth":   depth,
               "levels":  levels,
               "x":       format_rational(opts.x),
               "value":   format_rational(value),
               "decimal": decimal.text,
               "digits":  opts.digits,
               "exact":   decimal.exact}
    emit(opts, "eval.tmpl", payload, started, label=spec.label())
    return 0
