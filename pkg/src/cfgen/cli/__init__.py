#
# cfgen
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

from cfgen.errors import CFGenError, ParameterError
from cfgen.cli.evaluate import eval_cmd
from cfgen.cli.expand import expand_cmd
from cfgen.cli.series2cf import series2cf_cmd
from cfgen.cli.table import table_cmd
from cfgen.cli.transform import transform_cmd
from cfgen.cli.utilities import apply_config
from cfgen.cli.verify import verify_cmd

command_map = {
    "expand":    expand_cmd,
    "verify":    verify_cmd,
    "eval":      eval_cmd,
    "transform": transform_cmd,
    "series2cf": series2cf_cmd,
    "table":     table_cmd
    }


def main(opts):
    """ Main program execution

    :param opts: Cmdline arguments
    :type opts: argparse.Namespace
    :returns: 0 when every check passed, 1 on failures, 2 on usage errors
    :rtype: int
    """
    if opts.command not in command_map:
        log.error("Unknown command %s, expected one of: %s",
                  opts.command, ", ".join(sorted(command_map)))
        return 2
    try:
        apply_config(opts)
        return command_map[opts.command](opts)
    except ParameterError as e:
        log.error(str(e))
        return 2
    except CFGenError as e:
        log.error(str(e))
        return 1
    except Exception as e:
        log.error(str(e))
        log.debug("Unexpected error", exc_info=True)
        return 1
