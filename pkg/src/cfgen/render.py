#
# render.py
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
logger = logging.getLogger("cfgen.render")

import os

from mako.lookup import TemplateLookup
from mako.exceptions import text_error_template

from cfgen.numerics import format_rational

TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "templates")


class CFTemplate(object):
    """Render the text reports from Mako templates

    :param directories: Directories searched before the packaged templates
    :type directories: list of str
    """
    def __init__(self, directories=None):
        self.directories = [d for d in (directories or []) if d] + [TEMPLATE_DIR]
        self.lookup = TemplateLookup(directories=self.directories,
                                     input_encoding="utf-8")

    def render(self, template_file, **variables):
        """Render template_file with variables, fmt is always available

        :returns: The rendered text, trailing whitespace removed from every line
        :rtype: str
        """
        template = self.lookup.get_template(template_file)
        variables.setdefault("fmt", format_rational)

        try:
            textbuf = template.render(**variables)
        except Exception:
            logger.error("Problem rendering %s (%s):", template_file, sorted(variables))
            logger.error(text_error_template().render())
            raise

        lines = [line.rstrip() for line in textbuf.splitlines()]
        while lines and not lines[-1]:
            lines.pop()
        return "\n".join(lines) + "\n"
