"""
Muestreo aleatorio reproducible.
Todas las funciones reciben un ``numpy.random.Generator`` creado con la semilla de la configuración.
"""
import numpy as np
from scipy.stats import unitary_group

from coxlip.models.permutation import Permutation


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Unitaria de Haar en U(n)."""
    return unitary_group.rvs(n, random_state=rng)


def random_special_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Unitaria de Haar reescalada para tener determinante 1."""
    u = random_unitary(n, rng)
    phase = np.angle(np.linalg.det(u)) / n
    return u * np.exp(-1j * phase)


def random_unit_spectrum(n: int, rng: np.random.Generator) -> np.ndarray:
    """n valores de módulo 1 con producto 1."""
    angles = rng.uniform(0.0, 2 * np.pi, size=n)
    angles[-1] = -angles[:-1].sum()
    return np.exp(1j * angles)


def random_subspace_basis(n: int, k: int, rng: np.random.Generator) -> np.ndarray:
    """Base ortonormal (n×k) de un subespacio aleatorio de dimensión k."""
    gaussian = rng.normal(size=(n, k)) + 1j * rng.normal(size=(n, k))
    q, _ = np.linalg.qr(gaussian)
    return q[:, :k]


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return Permutation(tuple(int(v) + 1 for v in rng.permutation(n)))
