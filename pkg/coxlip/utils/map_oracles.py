"""
Aplicaciones de referencia sobre matrices para las comprobaciones por muestreo.
"""
from typing import Callable

import numpy as np

from coxlip.models.permutation import Permutation

MatrixMap = Callable[[np.ndarray], np.ndarray]


def identity_map(matrix: np.ndarray) -> np.ndarray:
    return np.asarray(matrix, dtype=complex)


def transpose_map(matrix: np.ndarray) -> np.ndarray:
    return np.asarray(matrix, dtype=complex).T


def conjugation_map(unitary: np.ndarray) -> MatrixMap:
    """X -> Q X Q^*."""
    q = np.asarray(unitary, dtype=complex)

    def apply(matrix: np.ndarray) -> np.ndarray:
        return q @ np.asarray(matrix, dtype=complex) @ q.conj().T

    return apply


def permutation_matrix(permutation: Permutation) -> np.ndarray:
    """P con P e_j = e_{rho(j)}."""
    n = permutation.n
    matrix = np.zeros((n, n), dtype=complex)
    for j in range(1, n + 1):
        matrix[permutation(j) - 1, j - 1] = 1.0
    return matrix


def permutation_conjugation_map(permutation: Permutation) -> MatrixMap:
    """Ad_P; sobre el toro diagonal mueve la entrada j a la posición rho(j)."""
    return conjugation_map(permutation_matrix(permutation))


def coordinate_rotation_map(matrix: np.ndarray) -> np.ndarray:
    """diag(z_1, ..., z_n) -> diag(z_2, ..., z_n, z_1), extendido por conjugación."""
    array = np.asarray(matrix, dtype=complex)
    return np.roll(np.roll(array, -1, axis=0), -1, axis=1)


def perturbation_map(size: float = 1e-3) -> MatrixMap:
    """X -> X + size·N con N estrictamente triangular superior de unos."""

    def apply(matrix: np.ndarray) -> np.ndarray:
        array = np.asarray(matrix, dtype=complex)
        return array + size * np.triu(np.ones(array.shape), 1)

    return apply
