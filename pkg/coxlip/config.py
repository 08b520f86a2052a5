"""
Configuración de la aplicación.
Este módulo contiene las tolerancias, cotas y semillas para los distintos entornos.
"""
import os
from dataclasses import dataclass, replace
from dotenv import load_dotenv

# Cargar variables de entorno desde archivo .env
load_dotenv()


class Config:
    """Configuración base para todos los entornos."""

    # Semilla fija para que dos ejecuciones idénticas den la misma salida
    SEED = int(os.environ.get('COXLIP_SEED', 42))

    # Cotas de materialización y de búsqueda
    MAX_ORDER = int(os.environ.get('COXLIP_MAX_ORDER', 5040))
    SEARCH_BOUND = int(os.environ.get('COXLIP_SEARCH_BOUND', 48))

    # Tolerancias numéricas
    ROOT_TOLERANCE = 1e-9
    UNIT_MODULUS_TOLERANCE = 1e-9
    DETERMINANT_TOLERANCE = 1e-8
    UNITARY_TOLERANCE = 1e-8
    SELF_ADJOINT_TOLERANCE = 1e-8
    SPECTRAL_TOLERANCE = float(os.environ.get('COXLIP_TOL_SPEC', 1e-8))
    PROJECTION_TOLERANCE = float(os.environ.get('COXLIP_TOL_PROJ', 1e-10))
    CLUSTER_GAP = 1e-6
    DISTINCT_TOLERANCE = 1e-6
    COORDINATE_TOLERANCE = 1e-12
    RECONSTRUCTION_TOLERANCE = 1e-9

    # Tamaños de muestra de las comprobaciones aleatorias
    SCALING_SAMPLES = 100
    CS_SAMPLES = 1000

    LOG_LEVEL = os.environ.get('COXLIP_LOG_LEVEL', 'WARNING')


class DevelopmentConfig(Config):
    """Configuración para desarrollo."""
    DEBUG = True
    TESTING = False
    LOG_LEVEL = os.environ.get('COXLIP_LOG_LEVEL', 'DEBUG')


class TestingConfig(Config):
    """Configuración para pruebas."""
    DEBUG = False
    TESTING = True
    SEED = 42
    LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    """Configuración para producción."""
    DEBUG = False
    TESTING = False


# Diccionario de configuraciones
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': ProductionConfig
}


@dataclass(frozen=True)
class Tolerances:
    """Tolerancias numéricas inyectadas en los servicios."""

    root: float = 1e-9
    unit_modulus: float = 1e-9
    determinant: float = 1e-8
    unitary: float = 1e-8
    self_adjoint: float = 1e-8
    spectral: float = 1e-8
    projection: float = 1e-10
    cluster_gap: float = 1e-6
    distinct: float = 1e-6
    coordinate: float = 1e-12
    reconstruction: float = 1e-9

    @classmethod
    def from_config(cls, config_class) -> 'Tolerances':
        """
        Construye las tolerancias a partir de una clase de configuración.

        Args:
            config_class: Clase de configuración (p. ej. ``TestingConfig``)

        Returns:
            Tolerances: Valores leídos de la configuración
        """
        return cls(
            root=config_class.ROOT_TOLERANCE,
            unit_modulus=config_class.UNIT_MODULUS_TOLERANCE,
            determinant=config_class.DETERMINANT_TOLERANCE,
            unitary=config_class.UNITARY_TOLERANCE,
            self_adjoint=config_class.SELF_ADJOINT_TOLERANCE,
            spectral=config_class.SPECTRAL_TOLERANCE,
            projection=config_class.PROJECTION_TOLERANCE,
            cluster_gap=config_class.CLUSTER_GAP,
            distinct=config_class.DISTINCT_TOLERANCE,
            coordinate=config_class.COORDINATE_TOLERANCE,
            reconstruction=config_class.RECONSTRUCTION_TOLERANCE,
        )

    def with_overrides(self, spectral=None, projection=None) -> 'Tolerances':
        """Devuelve una copia con las tolerancias indicadas en la línea de comandos."""
        changes = {}
        if spectral is not None:
            changes['spectral'] = spectral
        if projection is not None:
            changes['projection'] = projection
        return replace(self, **changes)
