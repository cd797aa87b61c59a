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

import json
import time

from cfgen import configure
from cfgen.errors import ParameterError
from cfgen.families import FamilySpec
from cfgen.numerics import format_rational
from cfgen.output import CFGenOutput, status_markup
from cfgen.render import CFTemplate

PARAM_NAMES = ("N", "lam", "m", "a", "b", "s")


def apply_config(opts):
    """Fill the options left unset on the command line from the configuration

    Command line values win over the config file, which wins over the
    built-in defaults.

    :param opts: Cmdline arguments
    :type opts: argparse.Namespace
    """
    conf = configure(opts.config)
    for option in ("depth", "digits", "jobs"):
        if getattr(opts, option, None) is None:
            setattr(opts, option, conf.getint("cfgen", option))
    opts.depth_limit = conf.getint("cfgen", "depth_limit")
    opts.templatedir = conf.get("output", "templatedir")
    CFGenOutput().basic_config(colors=conf.getboolean("output", "colors"),
                               encoding=conf.get("output", "encoding"))
    if opts.digits < 1:
        raise ParameterError("digits must be >= 1, got %d" % opts.digits)
    if opts.jobs < 1:
        raise ParameterError("jobs must be >= 1, got %d" % opts.jobs)
    return conf


def check_depth(opts, depth=None):
    """Return the requested depth after checking it against the limit

    :raises: ParameterError for a negative depth or one above depth_limit
    """
    depth = opts.depth if depth is None else depth
    if depth < 0:
        raise ParameterError("depth must be >= 0, got %d" % depth)
    if depth > opts.depth_limit:
        raise ParameterError("depth %d is above the limit %d (set CFGEN_DEPTH_LIMIT to raise it)"
                             % (depth, opts.depth_limit))
    return depth


def spec_from_opts(opts):
    """Build the FamilySpec named by --family and the parameter flags

    :rtype: FamilySpec
    """
    if not opts.family:
        raise ParameterError("%s needs --family" % opts.command)
    params = dict((name, getattr(opts, name, None)) for name in PARAM_NAMES)
    return FamilySpec(opts.family, **params)


def pair_json(pair):
    return {"n": pair.index, "P": pair.P.to_json(), "Q": pair.Q.to_json()}


def make_check(name, status, witness=None):
    """One verification result, witness is the exact evidence for a failure"""
    return {"name": name, "status": status, "witness": witness}


def overall_status(checks):
    statuses = [c["status"] for c in checks]
    if "fail" in statuses:
        return "fail"
    if statuses and all(s == "skipped" for s in statuses):
        return "skipped"
    return "pass"


def emit(opts, template, payload, started=None, **variables):
    """Print payload as JSON or render the text template

    :param opts: Cmdline arguments
    :type opts: argparse.Namespace
    :param template: Template used for text output
    :type template: str
    :param payload: The JSON document
    :type payload: dict
    :param started: time.time() at the start of the command, used with --timing
    :param variables: Extra template variables, payload is always passed
    """
    elapsed = None
    if getattr(opts, "timing", False) and started is not None:
        elapsed = round(time.time() - started, 3)
    out = CFGenOutput()
    if opts.format == "json":
        if elapsed is not None:
            payload = dict(payload, timing={"seconds": elapsed})
        out.writeline(json.dumps(payload, indent=4, sort_keys=True))
        return
    renderer = CFTemplate([getattr(opts, "templatedir", None)])
    text = renderer.render(template, payload=payload, markup=status_markup, **variables)
    if elapsed is not None:
        text += "time: %.3fs\n" % elapsed
    out.write(text)

