#
# __init__.py
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

# set up logging
import logging
logger = logging.getLogger("cfgen")
logger.addHandler(logging.NullHandler())

import os
import configparser

from cfgen.errors import ParameterError

# get cfgen version
try:
    import cfgen.version
except ImportError:
    vernum = "devel"
else:
    vernum = cfgen.version.num

DEFAULT_CONF = "/etc/cfgen/cfgen.conf"
DEPTH_LIMIT_ENV = "CFGEN_DEPTH_LIMIT"


def configure(conf_file=DEFAULT_CONF):
    """Return the configuration, built-in defaults overridden by conf_file

    :param conf_file: Path to an ini style configuration file, skipped if missing
    :type conf_file: str
    :rtype: configparser.ConfigParser
    :raises: ParameterError when CFGEN_DEPTH_LIMIT or a numeric option is not an integer
    """
    conf = configparser.ConfigParser()

    # set defaults
    conf.add_section("cfgen")
    conf.set("cfgen", "depth", "10")
    conf.set("cfgen", "digits", "28")
    conf.set("cfgen", "depth_limit", "64")
    conf.set("cfgen", "jobs", "1")

    conf.add_section("output")
    conf.set("output", "colors", "1")
    conf.set("output", "encoding", "utf-8")
    conf.set("output", "templatedir", "")

    # read the config file
    if conf_file and os.path.isfile(conf_file):
        logger.debug("reading configuration from %s", conf_file)
        conf.read(conf_file)

    if DEPTH_LIMIT_ENV in os.environ:
        conf.set("cfgen", "depth_limit", os.environ[DEPTH_LIMIT_ENV])

    for option in ("depth", "digits", "depth_limit", "jobs"):
        try:
            conf.getint("cfgen", option)
        except ValueError:
            raise ParameterError("%s must be an integer, got '%s'"
                                 % (option, conf.get("cfgen", option)))
    return conf


def setup_logging(logfile, theLogger, debug=False):
    """
    Setup the various logs

    :param logfile: filename to write the log to, or None for the console only
    :type logfile: string
    :param theLogger: top-level logger of the program
    :type theLogger: logging.Logger
    :param debug: log DEBUG messages on the console too
    :type debug: bool
    """
    logger.setLevel(logging.DEBUG)
    theLogger.setLevel(logging.DEBUG)

    sh = logging.StreamHandler()
    sh.setLevel(logging.DEBUG if debug else logging.INFO)
    fmt = logging.Formatter("%(asctime)s: %(message)s")
    sh.setFormatter(fmt)
    logger.addHandler(sh)
    theLogger.addHandler(sh)

    if not logfile:
        return

    logdir = os.path.abspath(os.path.dirname(logfile))
    if not os.path.isdir(logdir):
        os.makedirs(logdir)

    fh = logging.FileHandler(filename=logfile, mode="w")
    fh.setLevel(logging.DEBUG)
    fmt = logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
    fh.setFormatter(fmt)
    logger.addHandler(fh)
    theLogger.addHandler(fh)
