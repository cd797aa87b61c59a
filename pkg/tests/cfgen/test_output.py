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
from fractions import Fraction as F
from io import StringIO
import os
import tempfile
import unittest
from unittest import mock

from cfgen import configure
from cfgen.errors import ParameterError
from cfgen.output import CFGenOutput, status_markup
from cfgen.render import CFTemplate

class ConfigureTestCase(unittest.TestCase):
    def test_defaults(self):
        """Test the built-in defaults"""
        with mock.patch.dict(os.environ, clear=False) as env:
            env.pop("CFGEN_DEPTH_LIMIT", None)
            conf = configure(os.devnull)
        self.assertEqual(conf.getint("cfgen", "depth"), 10)
        self.assertEqual(conf.getint("cfgen", "digits"), 28)
        self.assertEqual(conf.getint("cfgen", "depth_limit"), 64)
        self.assertEqual(conf.getint("cfgen", "jobs"), 1)
        self.assertTrue(conf.getboolean("output", "colors"))

    def test_file_and_env(self):
        """Test that the environment wins over the config file"""
        with tempfile.TemporaryDirectory(prefix="cfgen.test.") as tmpdir:
            path = os.path.join(tmpdir, "cfgen.conf")
            with open(path, "w") as f:
                f.write("[cfgen]\ndepth_limit = 20\ndigits = 12\n")
            with mock.patch.dict(os.environ, {"CFGEN_DEPTH_LIMIT": "100"}):
                conf = configure(path)
            self.assertEqual(conf.getint("cfgen", "depth_limit"), 100)
            self.assertEqual(conf.getint("cfgen", "digits"), 12)

    def test_bad_values(self):
        """Test non-integer options"""
        with mock.patch.dict(os.environ, {"CFGEN_DEPTH_LIMIT": "sixty"}):
            with self.assertRaises(ParameterError):
                configure(os.devnull)

class OutputTestCase(unittest.TestCase):
    def test_singleton(self):
        """Test that CFGenOutput is shared"""
        self.assertIs(CFGenOutput(), CFGenOutput())

    def test_status_markup(self):
        """Test the colour tags of the statuses"""
        self.assertEqual(status_markup("pass"), "<green>pass</green>")
        self.assertEqual(status_markup("fail"), "<red>fail</red>")
        self.assertEqual(status_markup("skipped"), "<blue>skipped</blue>")

    def test_strip_tags(self):
        """Test that tags are removed when not writing to a terminal"""
        buf = StringIO()
        CFGenOutput().writeline("<b>zeta</b>: <red>fail</red>", fout=buf)
        self.assertEqual(buf.getvalue(), "zeta: fail\n")

class RenderTestCase(unittest.TestCase):
    def test_fmt(self):
        """Test rendering with the rational formatter"""
        with tempfile.TemporaryDirectory(prefix="cfgen.test.") as tmpdir:
            with open(os.path.join(tmpdir, "value.tmpl"), "w") as f:
                f.write("value: ${fmt(v)}   \n\n\n")
            text = CFTemplate([tmpdir]).render("value.tmpl", v=F(-6, 4))
        self.assertEqual(text, "value: -3/2\n")

    def test_override(self):
        """Test that a template directory is searched before the packaged templates"""
        with tempfile.TemporaryDirectory(prefix="cfgen.test.") as tmpdir:
            with open(os.path.join(tmpdir, "eval.tmpl"), "w") as f:
                f.write("${payload['value']}\n")
            text = CFTemplate([tmpdir, None]).render("eval.tmpl", payload={"value": "15/13"})
        self.assertEqual(text, "15/13\n")
