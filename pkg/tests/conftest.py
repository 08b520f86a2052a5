"""
Configuración de pytest y fixtures compartidos.
Este módulo define fixtures reutilizables para todas las pruebas.
"""
import json

import numpy as np
import pytest
from click.testing import CliRunner

from coxlip import build_services, create_cli
from coxlip.config import config
from coxlip.models.coxeter import CoxeterMatrix


@pytest.fixture(scope='session')
def services():
    """Servicios cableados con la configuración de pruebas."""
    return build_services(config['testing'])


@pytest.fixture(scope='session')
def tolerances(services):
    return services.tolerances


@pytest.fixture(scope='session')
def coxeter_service(services):
    return services.coxeter


@pytest.fixture(scope='session')
def lipschitz_service(services):
    return services.lipschitz


@pytest.fixture(scope='session')
def symmetric_service(services):
    return services.symmetric


@pytest.fixture(scope='session')
def spectral_service(services):
    return services.spectral


@pytest.fixture(scope='session')
def torus_service(services):
    return services.torus


@pytest.fixture(scope='session')
def subspace_service(services):
    return services.subspace


@pytest.fixture(scope='session')
def preserver_service(services):
    return services.preserver


@pytest.fixture
def rng():
    """Generador aleatorio con semilla fija por prueba."""
    return np.random.default_rng(42)


@pytest.fixture(scope='session')
def build(coxeter_service):
    """Construye (y memoriza) el sistema de una matriz."""
    cache = {}

    def _build(matrix: CoxeterMatrix):
        if matrix not in cache:
            cache[matrix] = coxeter_service.build_system(matrix)
        return cache[matrix]

    return _build


@pytest.fixture(scope='session')
def a1(build):
    return build(CoxeterMatrix.type_a(1))


@pytest.fixture(scope='session')
def a2(build):
    return build(CoxeterMatrix.type_a(2))


@pytest.fixture(scope='session')
def a3(build):
    return build(CoxeterMatrix.type_a(3))


@pytest.fixture(scope='session')
def a1xa1(build):
    return build(CoxeterMatrix.block_diagonal(CoxeterMatrix.type_a(1), CoxeterMatrix.type_a(1)))


@pytest.fixture(scope='session')
def a1xa2(build):
    return build(CoxeterMatrix.block_diagonal(CoxeterMatrix.type_a(1), CoxeterMatrix.type_a(2)))


@pytest.fixture(scope='session')
def a1_cubed(build):
    a = CoxeterMatrix.type_a(1)
    return build(CoxeterMatrix.block_diagonal(a, a, a))


@pytest.fixture(scope='session')
def dihedral(build):
    """Fábrica de sistemas I_2(m)."""
    return lambda m: build(CoxeterMatrix.dihedral(m))


@pytest.fixture
def cli():
    """Línea de comandos con la configuración de pruebas."""
    return create_cli('testing')


@pytest.fixture
def runner():
    """Fixture que crea un runner para comandos CLI."""
    return CliRunner(mix_stderr=False)


@pytest.fixture
def write_json(tmp_path):
    """Escribe un documento JSON temporal y devuelve su ruta."""
    counter = {'value': 0}

    def _write(payload, name=None):
        counter['value'] += 1
        path = tmp_path / (name or f"doc_{counter['value']}.json")
        path.write_text(json.dumps(payload), encoding='utf-8')
        return str(path)

    return _write
