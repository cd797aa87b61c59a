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

from cfgen.cli.utilities import check_depth, emit, make_check, overall_status, spec_from_opts
from cfgen.contfrac import approx_defect
from cfgen.errors import ParameterError, ShapeError
from cfgen.families import build_family, target_series
from cfgen.transform import convergent_relation_check, lft_apply_value, lft_transform
from cfgen.transform import matrix_product_check

def transform_cmd(opts):
    """Print the continued fraction of (a f + b)/(c f + d)

    :param opts: Cmdline arguments
    :type opts: argparse.Namespace
    :returns: 0 when the cross-checks pass, 1 otherwise
    :rtype: int
    """
    started = time.time()
    if opts.lft is None:
        raise ParameterError("transform needs --lft A,B,C,D")
    t = opts.lft
    spec = spec_from_opts(opts)
    depth = check_depth(opts)
    cf = build_family(spec, depth)
    levels = min(depth, len(cf))
    try:
        transformed = lft_transform(cf, t)
    except ShapeError as e:
        raise ParameterError(str(e))

    expected = transformed.expected_defect(levels)
    order = max(opts.order, expected + 1)
    target = lft_apply_value(t, target_series(spec, order))
    defect = approx_defect(transformed, target, levels)

    checks = [make_check("defect-law", "pass" if defect.meets(expected) else "fail",
                         "convergent %d: order %s, expected >= %d" % (levels, defect, expected)),
              make_check("convergents", "pass" if convergent_relation_check(cf, transformed, t, levels)
                         else "fail")]
    if levels >= 1:
        checks.append(make_check("matrix-product",
                                 "pass" if matrix_product_check(cf, t, levels) else "fail"))
    status = overall_status(checks)

    payload = {"command": "transform",
               "family":  spec.family,
               "params":  spec.params.to_json(),
               "lft":     t.to_json(),
               "depth":   depth,
               "levels":  levels,
               "cf":      transformed.to_json(levels),
               "defect":  str(defect),
               "checks":  checks,
               "status":  status}
    emit(opts, "transform.tmpl", payload, started,
         label=spec.label(), t=t, cf=transformed, levels=levels,
         display=transformed.display(levels))
    return 1 if status == "fail" else 0
