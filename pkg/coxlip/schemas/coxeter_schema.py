"""
Esquemas de serialización para sistemas de Coxeter.
Este módulo define la validación de matrices de Coxeter y palabras usando Marshmallow.
"""
from marshmallow import Schema, fields, post_load, validate, validates_schema, ValidationError

from coxlip.models.coxeter import CoxeterMatrix


class CoxeterMatrixInputSchema(Schema):
    """Esquema para validar una matriz de Coxeter ``{"rank": n, "m": [[...]]}``."""

    rank = fields.Int(required=True, strict=True, validate=validate.Range(min=1))
    m = fields.List(fields.List(fields.Int(strict=True)), required=True)

    @validates_schema
    def validate_shape(self, data, **kwargs):
        """Comprueba que m sea rank×rank; el resto lo valida el servicio."""
        rank, rows = data.get('rank'), data.get('m', [])
        if rank is None:
            return
        if len(rows) != rank or any(len(row) != rank for row in rows):
            raise ValidationError(f"m debe ser una tabla de {rank}x{rank}", field_name='m')

    @post_load
    def make_matrix(self, data, **kwargs) -> CoxeterMatrix:
        return CoxeterMatrix.from_rows(data['m'], rank=data['rank'])


class ElementInputSchema(Schema):
    """Esquema para una palabra ``{"word": [1, 2, 1]}`` con generadores desde 1."""

    word = fields.List(fields.Int(strict=True, validate=validate.Range(min=1)), required=True)

    @post_load
    def make_word(self, data, **kwargs):
        # índices internos desde 0
        return [letter - 1 for letter in data['word']]


class SystemInfoSchema(Schema):
    """Esquema para el resumen de un sistema."""

    matrix = fields.Dict()
    order = fields.Int()
    root_count = fields.Int()
    reflection_count = fields.Int()
    components = fields.List(fields.List(fields.Int()))
    longest_element = fields.Str()


# Instancias de esquemas para reutilizar
coxeter_matrix_schema = CoxeterMatrixInputSchema()
element_schema = ElementInputSchema()
system_info_schema = SystemInfoSchema()
