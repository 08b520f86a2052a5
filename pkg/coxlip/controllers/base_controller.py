"""
Base común de los controladores de la línea de comandos.
Este módulo centraliza la cabecera de ejecución, la emisión del JSON de resultado
y la respuesta de error.
"""
from typing import Any, Dict, Optional
import logging

import click
from marshmallow import Schema, ValidationError as MarshmallowValidationError

from coxlip.repositories.document_repository import DocumentRepository
from coxlip.schemas.report_schema import error_response_schema, run_config_schema
from coxlip.utils.exceptions import InternalError, VerificationError

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class BaseController:
    """Utilidades compartidas por los controladores."""

    def _start(self, ctx: click.Context, **inputs) -> None:
        """Escribe la cabecera RunConfig en la salida de error."""
        services = ctx.obj
        header = run_config_schema.dump({
            'subcommand': ctx.command_path.split(' ', 1)[-1],
            'inputs': {name: value for name, value in inputs.items() if value is not None},
            'seed': services.seed,
            'search_bound': services.search_bound,
            'tol_spec': services.tolerances.spectral,
            'tol_proj': services.tolerances.projection,
            'out': services.out,
        })
        click.echo('RunConfig ' + DocumentRepository.dumps(header), err=True)

    def _load(self, ctx: click.Context, path: str, schema: Schema) -> Any:
        """Lee un documento y lo valida con su esquema."""
        document = ctx.obj.repository.load(path)
        return schema.load(document)

    def _emit(self, ctx: click.Context, payload: Dict, passed: bool = True) -> None:
        """Escribe el resultado en la salida estándar (y en --out) y termina."""
        services = ctx.obj
        click.echo(DocumentRepository.dumps(payload))
        if services.out:
            services.repository.save(services.out, payload)
        ctx.exit(EXIT_PASS if passed else EXIT_VIOLATION)

    def _error_response(self, ctx: click.Context, code: str, message: str,
                        details: Optional[Any] = None, exit_code: int = EXIT_USAGE) -> None:
        """Escribe el sobre de error en la salida de error y termina."""
        error = {'code': code, 'message': message}
        if details is not None:
            error['details'] = details
        click.echo(DocumentRepository.dumps(error_response_schema.dump({'error': error})), err=True)
        ctx.exit(exit_code)

    def _handle(self, ctx: click.Context, action) -> None:
        """Ejecuta la acción de un comando traduciendo los errores conocidos."""
        try:
            action()
        except MarshmallowValidationError as e:
            self._error_response(ctx, "SCHEMA_VALIDATION_ERROR", "Errores de validación de esquema", e.messages)
        except VerificationError as e:
            logger.debug("Error de verificación %s: %s", e.code, e.message)
            self._error_response(ctx, e.code, e.message, e.details, e.exit_code)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except Exception as e:
            logger.exception("Error inesperado en %s", ctx.command_path)
            error = InternalError(details={"type": type(e).__name__, "reason": str(e)})
            self._error_response(ctx, error.code, error.message, error.details, error.exit_code)
