#
# output.py
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
""" Terminal output with colour tags

Rendered templates mark pass/fail/skipped with <green>, <red> and <blue>
tags. They become ANSI colour codes on a terminal and are stripped
everywhere else, so redirected output is plain text.
"""
import sys
import re

import cfgen.decorators as decorators


# color codes
C_RESET = "\x1b[0m"
C_RED = "\x1b[0;31m"
C_GREEN = "\x1b[0;32m"
C_BLUE = "\x1b[0;34m"
C_BOLD = "\x1b[1m"

# format tags
TAGS = [(re.compile(r"<b>"), C_BOLD),
        (re.compile(r"<red>"), C_RED),
        (re.compile(r"<green>"), C_GREEN),
        (re.compile(r"<blue>"), C_BLUE),
        (re.compile(r"</(b|red|green|blue)>"), C_RESET)]

STATUS_TAGS = {"pass":    "green",
               "fail":    "red",
               "skipped": "blue"}


def status_markup(status):
    """Wrap a check status in its colour tag"""
    tag = STATUS_TAGS.get(status, "b")
    return "<{0}>{1}</{0}>".format(tag, status)


@decorators.singleton
class CFGenOutput(object):

    def __init__(self):
        self._colors = True
        self._encoding = "utf-8"

    def basic_config(self, colors=None, encoding=None):
        if colors is not None:
            self._colors = colors
        self._encoding = encoding or self._encoding

    @property
    def encoding(self):
        return self._encoding

    def write(self, s, fout=None):
        fout = fout or sys.stdout
        if self._colors and fout.isatty():
            s = self.__format(s)
        else:
            s = self.__raw(s)

        fout.write(s)
        fout.flush()

    def writeline(self, s, fout=None):
        self.write("{0}\n".format(s), fout=fout)

    def __format(self, s):
        for tag, ccode in TAGS:
            s = tag.sub(ccode, s)
        return s

    def __raw(self, s):
        for tag, _ in TAGS:
            s = tag.sub("", s)
        return s
