#
# base.py
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
from fractions import Fraction

from cfgen.numerics import format_rational


class DataHolder(dict):
    """dict with attribute access, used for parameters and metadata"""

    def __init__(self, **kwargs):
        dict.__init__(self)

        for attr, value in kwargs.items():
            self[attr] = value

    def __getattr__(self, attr):
        if attr in self:
            return self[attr]
        else:
            raise AttributeError(attr)

    def __setattr__(self, attr, value):
        self[attr] = value

    def copy(self):
        return self.__class__(**dict.copy(self))

    def to_json(self):
        """Return a JSON-ready dict, rationals become canonical strings"""
        return dict((k, _json_value(v)) for k, v in self.items())


def _json_value(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, dict):
        return dict((k, _json_value(x)) for k, x in v.items())
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if hasattr(v, "to_json"):
        return v.to_json()
    return v
