"""
Esquemas de serialización para cabeceras de ejecución y errores.
"""
from marshmallow import Schema, fields


class RunConfigSchema(Schema):
    """Esquema para la cabecera de configuración de cada ejecución."""

    subcommand = fields.Str()
    inputs = fields.Dict(keys=fields.Str(), values=fields.Raw())
    seed = fields.Int()
    search_bound = fields.Int()
    tol_spec = fields.Float()
    tol_proj = fields.Float()
    out = fields.Str(allow_none=True)


class ErrorDetailSchema(Schema):
    """Esquema para detalles de error."""

    code = fields.Str()
    message = fields.Str()
    details = fields.Raw(allow_none=True)


class ErrorResponseSchema(Schema):
    """Esquema para respuestas de error."""

    status = fields.Str(dump_default='error')
    error = fields.Nested(ErrorDetailSchema)


# Instancias de esquemas para reutilizar
run_config_schema = RunConfigSchema()
error_response_schema = ErrorResponseSchema()
