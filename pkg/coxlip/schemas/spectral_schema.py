"""
Esquemas de serialización para espectros, matrices complejas y tablas de muestras.
Los números complejos viajan como pares ``[re, im]``.
"""
import math

from marshmallow import Schema, fields, post_load, validate, validates_schema, ValidationError

from coxlip.models.spectral import TorusMapSampleTable, UnitSpectrum
from coxlip.schemas.map_schema import PermutationSchema


class ComplexField(fields.Field):
    """Campo para un complejo en forma ``[re, im]``."""

    default_error_messages = {'invalid': "Se esperaba un par [re, im] de números finitos"}

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        value = complex(value)
        return [value.real, value.imag]

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise self.make_error('invalid')
        try:
            real, imag = float(value[0]), float(value[1])
        except (TypeError, ValueError):
            raise self.make_error('invalid')
        if not (math.isfinite(real) and math.isfinite(imag)):
            raise self.make_error('invalid')
        return complex(real, imag)


class SpectrumInputSchema(Schema):
    """Esquema para ``{"n": 3, "values": [[re, im], ...]}``."""

    n = fields.Int(required=True, strict=True, validate=validate.Range(min=1))
    values = fields.List(ComplexField(), required=True)

    @validates_schema
    def validate_length(self, data, **kwargs):
        if 'n' in data and len(data.get('values', [])) != data['n']:
            raise ValidationError("values debe tener n entradas", field_name='values')

    @post_load
    def make_spectrum(self, data, **kwargs) -> UnitSpectrum:
        return UnitSpectrum(tuple(data['values']))


class MatrixDocumentSchema(Schema):
    """Esquema para ``{"matrix": [[[re, im], ...], ...]}`` (filas)."""

    matrix = fields.List(fields.List(ComplexField()), required=True)

    @validates_schema
    def validate_square(self, data, **kwargs):
        rows = data.get('matrix', [])
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValidationError("La matriz debe ser cuadrada y no vacía", field_name='matrix')

    @post_load
    def make_rows(self, data, **kwargs):
        return data['matrix']


class SampleRowSchema(Schema):
    label = fields.Nested(PermutationSchema, required=True)
    tau = fields.Nested(PermutationSchema, required=True)


class SampleTableInputSchema(Schema):
    """Esquema para ``{"n": 3, "rows": [{"label": perm, "tau": perm}]}``."""

    n = fields.Int(required=True, strict=True, validate=validate.Range(min=1))
    rows = fields.List(fields.Nested(SampleRowSchema), required=True, validate=validate.Length(min=1))

    @post_load
    def make_table(self, data, **kwargs) -> TorusMapSampleTable:
        return TorusMapSampleTable(
            n=data['n'],
            rows=tuple((row['label'], row['tau']) for row in data['rows']),
        )


class FundamentalOutputSchema(Schema):
    """Esquema para la salida de la selección fundamental."""

    x = fields.List(fields.Float())


# Instancias de esquemas para reutilizar
spectrum_schema = SpectrumInputSchema()
matrix_document_schema = MatrixDocumentSchema()
sample_table_schema = SampleTableInputSchema()
fundamental_output_schema = FundamentalOutputSchema()
