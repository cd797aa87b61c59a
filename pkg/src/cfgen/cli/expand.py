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

from cfgen.cli.utilities import check_depth, emit, pair_json, spec_from_opts
from cfgen.contfrac import convergents
from cfgen.families import build_family

def expand_cmd(opts):
    """Print a family's continued fraction and convergents

    :param opts: Cmdline arguments
    :type opts: argparse.Namespace
    :returns: Value to return from sys.exit()
    :rtype: int
    """
    started = time.time()
    spec = spec_from_opts(opts)
    depth = check_depth(opts)
    cf = build_family(spec, depth)
    levels = min(depth, len(cf))
    if levels < depth:
        log.info("%s terminates after %d levels", spec.label(), levels)
    pairs = convergents(cf, levels)

    payload = {"command":     "expand",
               "family":      spec.family,
               "params":      spec.params.to_json(),
               "depth":       depth,
               "levels":      levels,
               "cf":          cf.to_json(levels),
               "convergents": [pair_json(p) for p in pairs]}
    emit(opts, "expand.tmpl", payload, started,
         label=spec.label(), cf=cf, levels=levels, pairs=pairs,
         display=cf.display(levels))
    return 0
