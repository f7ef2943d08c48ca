# This file is part of yang-baxter-ops.
#
# Copyright (C) 2026 yang-baxter-ops contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.


class YangBaxterError(Exception):
    pass


class FieldMismatch(YangBaxterError):
    pass


class WrongFieldKind(YangBaxterError):
    pass


class ParseError(YangBaxterError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BadDimension(YangBaxterError):
    pass


class DimMismatch(YangBaxterError):
    pass


class Singular(YangBaxterError):
    def __init__(self, message: str, certificate: list):
        super().__init__(message)
        self.certificate = certificate


class UnknownName(YangBaxterError):
    pass


class DimTooSmall(YangBaxterError):
    pass


class InvalidCase(YangBaxterError):
    pass


class BadParameter(YangBaxterError):
    pass


class NotInvertibleParams(YangBaxterError):
    pass


class HypothesisViolated(YangBaxterError):
    pass


class NotEvenCentral(YangBaxterError):
    pass


class NotCentral(YangBaxterError):
    pass


class InhomogeneousZ(YangBaxterError):
    pass


class UnknownColor(YangBaxterError):
    pass


class UnsupportedField(YangBaxterError):
    pass


class RecipeError(YangBaxterError):
    pass
