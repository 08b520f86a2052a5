"""
Paquete coxlip: verificación de aplicaciones Lipschitz en grupos de Coxeter y de
aplicaciones sobre espectros de SU(n).

Expone la fábrica de la línea de comandos ``create_cli`` y el punto de entrada ``run``.
"""
from dataclasses import dataclass
from typing import Optional, Sequence
import logging
import os
import sys

import click
import numpy as np

from coxlip.config import Tolerances, config
from coxlip.repositories.document_repository import DocumentRepository
from coxlip.services.coxeter_service import CoxeterService
from coxlip.services.lipschitz_service import LipschitzService
from coxlip.services.preserver_service import PreserverService
from coxlip.services.spectral_service import SpectralService
from coxlip.services.subspace_service import SubspaceService
from coxlip.services.symmetric_service import SymmetricService
from coxlip.services.torus_service import TorusService
from coxlip.schemas.report_schema import error_response_schema
from coxlip.utils.exceptions import InternalError

logger = logging.getLogger(__name__)


@dataclass
class Services:
    """Servicios cableados para una ejecución."""

    seed: int
    search_bound: int
    tolerances: Tolerances
    out: Optional[str]
    rng: np.random.Generator
    repository: DocumentRepository
    coxeter: CoxeterService
    lipschitz: LipschitzService
    symmetric: SymmetricService
    spectral: SpectralService
    torus: TorusService
    subspace: SubspaceService
    preserver: PreserverService
    scaling_samples: int
    cs_samples: int


def build_services(config_class, seed=None, tol_spec=None, tol_proj=None,
                   search_bound=None, out=None) -> Services:
    """
    Construye los servicios a partir de una clase de configuración y los
    valores dados en la línea de comandos.
    """
    seed = config_class.SEED if seed is None else seed
    search_bound = config_class.SEARCH_BOUND if search_bound is None else search_bound
    tolerances = Tolerances.from_config(config_class).with_overrides(spectral=tol_spec, projection=tol_proj)

    coxeter_service = CoxeterService(config_class.MAX_ORDER, tolerances.root)
    lipschitz_service = LipschitzService(coxeter_service, search_bound)
    spectral_service = SpectralService(tolerances)
    return Services(
        seed=seed,
        search_bound=search_bound,
        tolerances=tolerances,
        out=out,
        rng=np.random.default_rng(seed),
        repository=DocumentRepository(),
        coxeter=coxeter_service,
        lipschitz=lipschitz_service,
        symmetric=SymmetricService(coxeter_service, lipschitz_service),
        spectral=spectral_service,
        torus=TorusService(spectral_service, tolerances),
        subspace=SubspaceService(tolerances),
        preserver=PreserverService(spectral_service, tolerances),
        scaling_samples=config_class.SCALING_SAMPLES,
        cs_samples=config_class.CS_SAMPLES,
    )


def create_cli(config_name=None) -> click.Group:
    """
    Factory function para crear la línea de comandos.
    """
    config_name = config_name or os.getenv('COXLIP_ENV', 'default')
    config_class = config[config_name]

    logging.basicConfig(
        level=getattr(logging, str(config_class.LOG_LEVEL).upper(), logging.WARNING),
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )

    @click.group(name='coxlip')
    @click.option('--seed', type=int, default=None, help=f"Semilla (por defecto {config_class.SEED})")
    @click.option('--tol-spec', type=float, default=None, help="Tolerancia espectral")
    @click.option('--tol-proj', type=float, default=None, help="Tolerancia de proyecciones")
    @click.option('--search-bound', type=int, default=None, help="Orden máximo para las búsquedas")
    @click.option('--out', type=click.Path(dir_okay=False), default=None, help="Copia del JSON de salida")
    @click.pass_context
    def cli(ctx, seed, tol_spec, tol_proj, search_bound, out):
        """Verificaciones reproducibles con salida JSON."""
        ctx.obj = build_services(config_class, seed, tol_spec, tol_proj, search_bound, out)

    from coxlip.controllers.gallery_controller import GalleryController
    from coxlip.controllers.verification_controller import VerificationController

    VerificationController(cli)
    GalleryController(cli)
    return cli


def run(argv: Sequence[str] = None, config_name=None) -> int:
    """
    Ejecuta la línea de comandos y devuelve el código de salida.

    0 si todo se verifica, 1 si se viola una propiedad, 2 en errores de uso, de entrada o internos.
    """
    cli = create_cli(config_name)
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name='coxlip', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 2
    except Exception as e:
        logger.exception("Error inesperado fuera de los comandos")
        error = InternalError(details={"type": type(e).__name__, "reason": str(e)})
        envelope = error_response_schema.dump({'error': {
            'code': error.code, 'message': error.message, 'details': error.details,
        }})
        click.echo(DocumentRepository.dumps(envelope), err=True)
        return error.exit_code
    return rv or 0
