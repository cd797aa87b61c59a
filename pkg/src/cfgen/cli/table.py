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

from cfgen.cli.utilities import emit, spec_from_opts
from cfgen.errors import ParameterError
from cfgen.families import number_table
from cfgen.numerics import format_rational

def table_cmd(opts):
    """List the numbers generated by a family

    :param opts: Cmdline arguments
    :type opts: argparse.Namespace
    :returns: 1 if a value disagrees with its classical counterpart, else 0
    :rtype: int
    """
    started = time.time()
    if opts.count < 0:
        raise ParameterError("count must be >= 0, got %d" % opts.count)
    spec = spec_from_opts(opts)
    rows = []
    mismatches = 0
    for n, value, oracle in number_table(spec, opts.count):
        row = {"n": n, "value": format_rational(value)}
        if oracle is not None:
            row["oracle"] = format_rational(oracle)
            row["match"] = value == oracle
            mismatches += 0 if row["match"] else 1
        rows.append(row)

    payload = {"command": "table",
               "family":  spec.family,
               "params":  spec.params.to_json(),
               "count":   opts.count,
               "rows":    rows,
               "status":  "fail" if mismatches else "pass"}
    emit(opts, "table.tmpl", payload, started, label=spec.label())
    return 1 if mismatches else 0
