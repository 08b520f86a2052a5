"""
Esquemas de serialización para autoaplicaciones y permutaciones.
"""
from marshmallow import Schema, fields, post_load, validate, validates_schema, ValidationError

from coxlip.models.permutation import Permutation
from coxlip.schemas.coxeter_schema import CoxeterMatrixInputSchema


class SelfMapInputSchema(Schema):
    """
    Esquema para ``{"matrix": {...}, "table": [ids]}`` o la forma legible
    ``{"matrix": {...}, "map": {"1 2": "2", ...}}``.
    """

    matrix = fields.Nested(CoxeterMatrixInputSchema, required=True)
    table = fields.List(fields.Int(strict=True, validate=validate.Range(min=0)), load_default=None)
    map = fields.Dict(keys=fields.Str(), values=fields.Str(), load_default=None)

    @validates_schema
    def validate_form(self, data, **kwargs):
        """Exige exactamente una de las dos formas."""
        if (data.get('table') is None) == (data.get('map') is None):
            raise ValidationError("Se requiere exactamente uno de 'table' o 'map'")


class SelfMapOutputSchema(Schema):
    """Esquema para salida de autoaplicaciones."""

    matrix = fields.Dict()
    table = fields.List(fields.Int())
    map = fields.Dict(keys=fields.Str(), values=fields.Str())


class PermutationSchema(Schema):
    """Esquema para ``{"n": 3, "images": [2, 1, 3]}``."""

    n = fields.Int(required=True, strict=True, validate=validate.Range(min=1))
    images = fields.List(fields.Int(strict=True), required=True)

    @validates_schema
    def validate_length(self, data, **kwargs):
        if 'n' in data and len(data.get('images', [])) != data['n']:
            raise ValidationError("images debe tener n entradas", field_name='images')

    @post_load
    def make_permutation(self, data, **kwargs) -> Permutation:
        return Permutation(tuple(data['images']))


# Instancias de esquemas para reutilizar
self_map_input_schema = SelfMapInputSchema()
self_map_output_schema = SelfMapOutputSchema()
permutation_schema = PermutationSchema()
