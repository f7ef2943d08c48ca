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

import json
import os
from pprint import pformat
from typing import Optional

import numpy as np

from yang_baxter_ops.catalog import catalog, CATALOG
from yang_baxter_ops.errors import RecipeError
from yang_baxter_ops.model import AssociativeAlgebra, LieSuperalgebra, GThetaLieAlgebra, Structure
from yang_baxter_ops.numeric import ScalarField, RATIONALS, field_from_json
from yang_baxter_ops.operators import build_dn, dn_inverse, build_dim2_canonical, build_colored, colored_inverse, \
    build_one_param, one_param_inverse, build_wxz_algebra, wxz_from_colored, build_split, build_super_phi, \
    super_phi_inverse, build_super_phi_ab, super_phi_ab_inverse, build_super_colored, build_gtheta, gtheta_inverse, \
    build_classical_r, colored_family, super_colored_family, one_param_family, ParamTable, ColoredFamily
from yang_baxter_ops.structures import compute_center, load_structure, validate

FAMILIES = {
    'dn': AssociativeAlgebra,
    'dim2-canonical': None,
    'colored': AssociativeAlgebra,
    'one-param': AssociativeAlgebra,
    'wxz-algebra': AssociativeAlgebra,
    'wxz-colored': Structure,
    'split': None,
    'super-phi': LieSuperalgebra,
    'super-phi-ab': LieSuperalgebra,
    'super-colored': LieSuperalgebra,
    'gtheta': GThetaLieAlgebra,
    'classical-r': (LieSuperalgebra, GThetaLieAlgebra)
}

COLORED_FAMILIES = ('colored', 'super-colored', 'one-param')


def resolve_structure(reference: str, base_dir: Optional[str] = None) -> Structure:
    """A catalog name or a path to a structure file (relative paths resolve against `base_dir` first)."""
    if reference in CATALOG:
        return catalog(reference)

    candidates = [reference]
    if base_dir is not None:
        candidates.insert(0, os.path.join(base_dir, reference))

    for candidate in candidates:
        if os.path.isfile(candidate):
            structure = load_structure(candidate)
            report = validate(structure)
            if not report:
                raise RecipeError(f"Structure '{reference}' is invalid: {report.check} {report.witness}")
            return structure

    raise RecipeError(f"'{reference}' is neither a catalog name nor a structure file")


class OperatorRecipe:
    """A named operator family with its structure and parameter bindings (scalar strings)."""

    def __init__(self, family: str, structure: Optional[str], params: dict, base_dir: Optional[str] = None):
        assert(isinstance(family, str))
        assert(isinstance(params, dict))
        if family not in FAMILIES:
            raise RecipeError(f"Unknown family '{family}' (known: {', '.join(FAMILIES)})")

        self.family = family
        self.structure_ref = structure
        self.params = dict(params)
        self.base_dir = base_dir
        self._structure = None

    @staticmethod
    def from_json(data: dict, base_dir: Optional[str] = None) -> 'OperatorRecipe':
        if not isinstance(data, dict) or 'family' not in data:
            raise RecipeError("A recipe needs a 'family'")

        return OperatorRecipe(data['family'], data.get('structure'), data.get('params', {}), base_dir)

    @staticmethod
    def load(path: str) -> 'OperatorRecipe':
        with open(path, 'r') as file:
            return OperatorRecipe.from_json(json.load(file), os.path.dirname(os.path.abspath(path)))

    def to_json(self) -> dict:
        return {'family': self.family, 'structure': self.structure_ref, 'params': self.params}

    def with_params(self, params: dict) -> 'OperatorRecipe':
        return OperatorRecipe(self.family, self.structure_ref, {**self.params, **params}, self.base_dir)

    def with_structure(self, structure: Structure) -> 'OperatorRecipe':
        """The same recipe over an already resolved structure, e.g. a perturbed copy."""
        assert(isinstance(structure, Structure))

        result = OperatorRecipe(self.family, self.structure_ref, self.params, self.base_dir)
        result._structure = structure
        return result

    @property
    def structure(self) -> Optional[Structure]:
        if self._structure is None and self.structure_ref is not None:
            self._structure = resolve_structure(self.structure_ref, self.base_dir)
            expected = FAMILIES[self.family]
            if expected is not None and not isinstance(self._structure, expected):
                raise RecipeError(f"Family '{self.family}' cannot use the {self._structure.kind} structure "
                                  f"'{self.structure_ref}'")

        return self._structure

    @property
    def field(self) -> ScalarField:
        if self.structure is not None:
            return self.structure.field
        if 'field' in self.params:
            return field_from_json(self.params['field'])

        return RATIONALS

    @property
    def base_dim(self) -> int:
        if self.structure is not None:
            return self.structure.dim

        return 2 if self.family == 'dim2-canonical' else int(self.require('dim'))

    @property
    def basis_names(self) -> Optional[list]:
        structure = self.structure
        if structure is None:
            return None
        if self.family == 'classical-r' and isinstance(structure, LieSuperalgebra):
            return [name for name, grade in zip(structure.basis_names, structure.grades) if grade == 0]

        return list(structure.basis_names)

    def require(self, name: str):
        if name not in self.params:
            raise RecipeError(f"Family '{self.family}' needs the parameter '{name}'")

        return self.params[name]

    def scalar(self, name: str, default: Optional[str] = None):
        if name not in self.params and default is not None:
            return self.field.parse(default)

        value = self.require(name)
        return self.field.parse(str(value))

    def colors(self) -> list:
        return [self.field.parse(str(color)) for color in self.require('colors')]

    def z(self) -> list:
        value = self.require('z')
        if value == 'auto-center':
            structure = self.structure
            even_only = isinstance(structure, LieSuperalgebra) and not structure.is_purely_even()
            center = compute_center(structure, even_only=even_only)
            if len(center) != 1:
                raise RecipeError(f"auto-center needs a one-dimensional center, {structure.name} has dimension {len(center)}")
            return center[0]

        if isinstance(value, str) and value in self.structure.basis_names:
            return self.structure.basis_vector(value)

        return [self.field.parse(str(coordinate)) for coordinate in value]

    def _table_function(self, name: str):
        table = self.require(name)
        parse = lambda text: self.field.parse(str(text))
        if not isinstance(table, dict) or len(table) != 1:
            raise RecipeError(f"'{name}' must be an object with one of the keys constant, first, second, pairs")

        form, values = next(iter(table.items()))
        if form == 'constant':
            return ParamTable.constant(parse(values))
        if form == 'first':
            return ParamTable.first({parse(color): parse(value) for color, value in values.items()})
        if form == 'second':
            return ParamTable.second({parse(color): parse(value) for color, value in values.items()})
        if form == 'pairs':
            return ParamTable.pairs({tuple(parse(part) for part in key.split(',')): parse(value)
                                     for key, value in values.items()})

        raise RecipeError(f"Unknown table form '{form}' in '{name}'")

    def table(self) -> ParamTable:
        return ParamTable(self.field, self.colors(), self._table_function('alpha_table'), self._table_function('beta_table'))

    def spectral(self) -> tuple:
        """(s1, s2, s3), defaulting to (s^2, s, 1)."""
        if all(name in self.params for name in ('s1', 's2', 's3')):
            return self.scalar('s1'), self.scalar('s2'), self.scalar('s3')

        s = self.scalar('s')
        return s * s, s, self.field.one()

    def _tensor(self, name: str, n: int) -> list:
        field = self.field
        tensor = np.full((n, n, n), field.zero(), dtype=object)
        for entry in self.params.get(name, []):
            for k, value in enumerate(entry['coords']):
                tensor[int(entry['i']), int(entry['j']), k] = field.parse(str(value))

        return tensor.tolist()

    def colored_family(self) -> ColoredFamily:
        family = self.family if self.family != 'wxz-colored' else self.params.get('source', 'colored')
        if family == 'colored':
            return colored_family(self.structure, self.scalar('p'), self.scalar('q'), self.colors())
        if family == 'super-colored':
            return super_colored_family(self.structure, self.z(), self.table())
        if family == 'one-param':
            return one_param_family(self.structure, self.scalar('q'), list(self.spectral()))

        raise RecipeError(f"Family '{family}' is not a colored family")

    def build(self) -> dict:
        """Named operators of the recipe: R (and R_inverse where a closed form exists) or W, X, Z."""
        family = self.family
        structure = self.structure

        if family == 'dn':
            args = (self.scalar('alpha'), self.scalar('beta'), self.scalar('gamma'))
            return {'R': build_dn(structure, *args), 'R_inverse': lambda: dn_inverse(structure, *args)}
        if family == 'dim2-canonical':
            return {'R': build_dim2_canonical(self.scalar('q'), self.scalar('eta'), self.field)}
        if family == 'colored':
            args = (self.scalar('p'), self.scalar('q'), self.scalar('u'), self.scalar('v'))
            return {'R': build_colored(structure, *args), 'R_inverse': lambda: colored_inverse(structure, *args)}
        if family == 'one-param':
            args = (self.scalar('q'), self.scalar('s'))
            return {'R': build_one_param(structure, *args), 'R_inverse': lambda: one_param_inverse(structure, *args)}
        if family == 'wxz-algebra':
            w, x, z = build_wxz_algebra(structure, self.scalar('lambda'), self.scalar('mu'))
            return {'W': w, 'X': x, 'Z': z}
        if family == 'wxz-colored':
            w, x, z = wxz_from_colored(self.colored_family(), self.scalar('s'), self.scalar('t'))
            return {'W': w, 'X': x, 'Z': z}
        if family == 'split':
            n = self.base_dim
            return {'R': build_split(n, int(self.require('c')), self._tensor('f', n), self._tensor('g', n), self.field)}
        if family == 'super-phi':
            args = (self.z(), self.scalar('alpha'))
            return {'R': build_super_phi(structure, *args), 'R_inverse': lambda: super_phi_inverse(structure, *args)}
        if family == 'super-phi-ab':
            args = (self.z(), self.scalar('alpha'), self.scalar('beta'))
            return {'R': build_super_phi_ab(structure, *args), 'R_inverse': lambda: super_phi_ab_inverse(structure, *args)}
        if family == 'super-colored':
            return {'R': build_super_colored(structure, self.z(), self.table(), self.scalar('u'), self.scalar('v'))}
        if family == 'gtheta':
            args = (self.z(), self.scalar('alpha'))
            return {'R': build_gtheta(structure, *args), 'R_inverse': lambda: gtheta_inverse(structure, *args)}
        if family == 'classical-r':
            return {'R': build_classical_r(structure, self.z())}

        raise RecipeError(f"Unknown family '{family}'")

    def operators(self) -> dict:
        """Like build(), with closed-form inverses evaluated."""
        return {name: value() if callable(value) else value for name, value in self.build().items()}

    def __repr__(self):
        return pformat(self.to_json())
