# -*- coding: utf-8 -*-

"""
GNU General Public License v3.0 (GPL v3)
Copyright (c) 2020-2021 WardPearce
Permission is hereby granted, free of charge, to any person obtaining a
copy of this software and associated documentation files (the "Software"),
to deal in the Software without restriction, including without limitation
the rights to use, copy, modify, merge, publish, distribute, sublicense,
and/or sell copies of the Software, and to permit persons to whom the
Software is furnished to do so, subject to the following conditions:
The above copyright notice and this permission notice shall be included in
all copies or substantial portions of the Software.
THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
DEALINGS IN THE SOFTWARE.
"""


from marshmallow import (
    Schema, ValidationError, fields, validate, validates, validates_schema
)

from .constants import GENERATOR_KINDS
from .exceptions import InvalidConfig


class SourceSchema(Schema):
    kind = fields.Str(
        required=True,
        validate=validate.OneOf(("file",) + GENERATOR_KINDS)
    )
    path = fields.Str()
    parameters = fields.Dict(keys=fields.Str(), load_default=dict)

    @validates_schema
    def validate_path(self, data: dict, **kwargs) -> None:
        if data["kind"] == "file" and not data.get("path"):
            raise ValidationError("File sources need a path", "path")


class StopSchema(Schema):
    delta = fields.Float(required=True,
                         validate=validate.Range(0, 1, min_inclusive=False,
                                                 max_inclusive=False))
    epsilon = fields.Float(required=True,
                           validate=validate.Range(0, 1, min_inclusive=False,
                                                   max_inclusive=False))
    alpha = fields.Float(required=True,
                         validate=validate.Range(0, 1, min_inclusive=False,
                                                 max_inclusive=False))
    theta = fields.Float(required=True,
                         validate=validate.Range(0, 1, min_inclusive=False,
                                                 max_inclusive=False))
    t_grid_size = fields.Int(load_default=48, validate=validate.Range(2))
    t_max = fields.Float(load_default=12.0,
                         validate=validate.Range(0, min_inclusive=False))
    t_min = fields.Float(load_default=None, allow_none=True)
    # 1 + theta^2 or 1 + theta as the modified density ceiling.
    density_threshold = fields.Str(
        load_default="theta2", validate=validate.OneOf(("theta2", "theta"))
    )


class GridsSchema(Schema):
    knot_step = fields.Float(load_default=1.0 / 128,
                             validate=validate.Range(0, min_inclusive=False))
    knot_extent = fields.Float(load_default=4.0)
    whitney_levels = fields.Int(load_default=40, validate=validate.Range(1))
    # B0 as [x, y, r] in input coordinates.
    base = fields.List(fields.Float(), load_default=lambda: [0.0, 0.0, 1.0],
                       validate=validate.Length(equal=3))
    domain = fields.List(fields.Float(), load_default=lambda: [-10.0, 10.0],
                         validate=validate.Length(equal=2))
    window = fields.Float(load_default=8.0,
                          validate=validate.Range(0, min_inclusive=False))

    @validates("base")
    def validate_base(self, value: list, **kwargs) -> None:
        if value[2] <= 0:
            raise ValidationError("Base radius must be positive")

    @validates("domain")
    def validate_domain(self, value: list, **kwargs) -> None:
        if value[0] >= value[1]:
            raise ValidationError("Domain must be an increasing pair")


class OutputSchema(Schema):
    directory = fields.Str(load_default="output")
    emit_svg = fields.Bool(load_default=True)


class ExperimentConfigSchema(Schema):
    source = fields.Nested(SourceSchema, required=True)
    k = fields.Int(load_default=3, validate=validate.Range(1))
    stop = fields.Nested(StopSchema, required=True)
    grids = fields.Nested(GridsSchema, load_default=dict)
    output = fields.Nested(OutputSchema, load_default=dict)
    seed = fields.Int(load_default=0, validate=validate.Range(0))

    @validates("k")
    def validate_k(self, value: int, **kwargs) -> None:
        if value % 2 == 0:
            raise ValidationError("Kernel order must be odd")


def load_config(data: dict) -> dict:
    """Validates an experiment config.

    Parameters
    ----------
    data : dict

    Returns
    -------
    dict
        With defaults filled in.

    Raises
    ------
    InvalidConfig
        Carries the per field messages.
    """

    try:
        loaded = ExperimentConfigSchema().load(data)
    except ValidationError as error:
        raise InvalidConfig(messages=error.normalized_messages())

    # Nested load_default=dict skips the nested schema's own defaults.
    for name, schema in (("grids", GridsSchema), ("output", OutputSchema)):
        if not loaded[name]:
            loaded[name] = schema().load({})

    return loaded
