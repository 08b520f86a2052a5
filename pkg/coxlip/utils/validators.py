"""
Validadores para la aplicación.
Este módulo contiene las validaciones de matrices de Coxeter, matrices complejas y espectros.
"""
from typing import Sequence

import numpy as np

from .exceptions import (
    InvalidMatrixError,
    NotFinitaryError,
    NotUnitModulusError,
    DeterminantNotOneError,
    NotUnitaryError,
    NotSpecialUnitaryError,
    NotSelfAdjointError,
    RepeatedEigenvaluesError,
    DimensionMismatchError,
)


class CoxeterMatrixValidator:
    """Validador para matrices de Coxeter."""

    INFINITY = 0

    @staticmethod
    def validate(rank: int, entries: Sequence[Sequence[int]]) -> None:
        """
        Valida las invariantes de una matriz de Coxeter finitaria.

        Args:
            rank: Número de generadores
            entries: Tabla rank×rank de enteros

        Raises:
            InvalidMatrixError: Si la forma, la simetría o la diagonal son inválidas
            NotFinitaryError: Si alguna entrada codifica infinito
        """
        if not isinstance(rank, int) or rank < 1:
            raise InvalidMatrixError("rank debe ser un entero positivo", details={"rank": rank})

        if len(entries) != rank or any(len(row) != rank for row in entries):
            raise InvalidMatrixError(
                f"La matriz debe ser de {rank}x{rank}",
                details={"rank": rank}
            )

        for i in range(rank):
            for j in range(rank):
                value = entries[i][j]
                if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                    raise InvalidMatrixError(
                        "Las entradas deben ser enteros",
                        details={"row": i, "column": j}
                    )
                if value == CoxeterMatrixValidator.INFINITY and i != j:
                    raise NotFinitaryError(details={"row": i, "column": j})
                if value != entries[j][i]:
                    raise InvalidMatrixError(
                        "La matriz debe ser simétrica",
                        details={"row": i, "column": j}
                    )

        for i in range(rank):
            if entries[i][i] != 1:
                raise InvalidMatrixError("La diagonal debe ser 1", details={"row": i})
            for j in range(rank):
                if i != j and entries[i][j] < 2:
                    raise InvalidMatrixError(
                        "Las entradas fuera de la diagonal deben ser >= 2",
                        details={"row": i, "column": j}
                    )


class MatrixValidator:
    """Validador para matrices complejas cuadradas."""

    @staticmethod
    def as_square(matrix) -> np.ndarray:
        """Convierte a ndarray complejo y comprueba que sea cuadrada."""
        array = np.asarray(matrix, dtype=complex)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise DimensionMismatchError(
                "Se esperaba una matriz cuadrada",
                details={"shape": list(array.shape)}
            )
        return array

    @staticmethod
    def validate_unitary(matrix, tolerance: float) -> np.ndarray:
        """
        Valida que la matriz sea unitaria.

        Returns:
            np.ndarray: La matriz como ndarray complejo

        Raises:
            NotUnitaryError: Si ||X*X - I|| supera la tolerancia
        """
        array = MatrixValidator.as_square(matrix)
        deviation = float(np.linalg.norm(array.conj().T @ array - np.eye(array.shape[0]), 2))
        if deviation > tolerance:
            raise NotUnitaryError(details={"deviation": deviation})
        return array

    @staticmethod
    def validate_determinant_one(matrix: np.ndarray, tolerance: float) -> None:
        """Valida que det(X) esté a distancia menor que la tolerancia de 1."""
        deviation = float(abs(np.linalg.det(matrix) - 1))
        if deviation > tolerance:
            raise DeterminantNotOneError(details={"deviation": deviation})

    @staticmethod
    def validate_special_unitary(matrix, unitary_tolerance: float, determinant_tolerance: float) -> np.ndarray:
        """
        Valida que la matriz pertenezca a SU(n).

        Raises:
            NotSpecialUnitaryError: Si no es unitaria o su determinante no es 1
        """
        try:
            array = MatrixValidator.validate_unitary(matrix, unitary_tolerance)
            MatrixValidator.validate_determinant_one(array, determinant_tolerance)
        except (NotUnitaryError, DeterminantNotOneError) as e:
            raise NotSpecialUnitaryError(details=e.details)
        return array

    @staticmethod
    def validate_self_adjoint(matrix, tolerance: float) -> np.ndarray:
        """Valida que la matriz sea autoadjunta."""
        array = MatrixValidator.as_square(matrix)
        deviation = float(np.linalg.norm(array - array.conj().T, 2))
        if deviation > tolerance:
            raise NotSelfAdjointError(details={"deviation": deviation})
        return array


class SpectrumValidator:
    """Validador para espectros unitarios."""

    @staticmethod
    def validate_unit_spectrum(values: np.ndarray, modulus_tolerance: float, determinant_tolerance: float) -> None:
        """
        Valida módulo unitario y producto 1.

        Raises:
            NotUnitModulusError: Si algún |z_j| se aleja de 1
            DeterminantNotOneError: Si el producto se aleja de 1
        """
        if values.ndim != 1 or values.size == 0:
            raise DimensionMismatchError("El espectro debe ser una secuencia no vacía")

        moduli = np.abs(values)
        bad = np.flatnonzero(np.abs(moduli - 1) > modulus_tolerance)
        if bad.size:
            raise NotUnitModulusError(details={"indices": [int(i) + 1 for i in bad]})

        deviation = float(abs(np.prod(values) - 1))
        if deviation > determinant_tolerance:
            raise DeterminantNotOneError(
                "El producto del espectro no es 1",
                details={"deviation": deviation}
            )

    @staticmethod
    def validate_distinct(values: np.ndarray, tolerance: float) -> None:
        """Valida que las entradas estén separadas por más que la tolerancia."""
        gaps = np.abs(values[:, None] - values[None, :])
        np.fill_diagonal(gaps, np.inf)
        smallest = float(gaps.min()) if values.size > 1 else np.inf
        if smallest <= tolerance:
            raise RepeatedEigenvaluesError(details={"min_gap": smallest})
