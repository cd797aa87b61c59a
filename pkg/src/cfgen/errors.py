#
# errors.py
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

class CFGenError(Exception):
    pass

class ParameterError(CFGenError, ValueError):
    """A parameter violates one of the documented invariants"""
    pass

class TruncationError(CFGenError):
    """The input series is truncated too low for the requested result"""
    pass

class ShapeError(CFGenError):
    """The fraction or series does not have the shape the operation needs

    :param msg: Error message
    :param step: Optional index of the level where the shape broke
    """
    def __init__(self, msg, step=None):
        super(ShapeError, self).__init__(msg)
        self.step = step

class TerminatedError(CFGenError):
    pass

class PoleError(CFGenError, ZeroDivisionError):
    pass
