"""
Lógica de negocio para la selección espectral.
Este módulo calcula el representante fundamental de un espectro de SU(n), ordena
espectros de matrices unitarias y hermíticas, y ofrece la aplicación de reordenación
por espectro ordenado.
"""
from typing import List, Sequence, Tuple
import logging

import numpy as np
from scipy import linalg
from scipy.optimize import linear_sum_assignment

from coxlip.config import Tolerances
from coxlip.models.spectral import FundamentalCoordinates, OrderedSpectrum, UnitSpectrum
from coxlip.utils.exceptions import InternalInconsistencyError
from coxlip.utils.validators import MatrixValidator, SpectrumValidator

logger = logging.getLogger(__name__)


class SpectralService:
    """Servicio de selección y ordenación de espectros."""

    def __init__(self, tolerances: Tolerances):
        """
        Inicializa el servicio.

        Args:
            tolerances: Tolerancias numéricas de la configuración
        """
        self.tolerances = tolerances

    def fundamental_select(self, spectrum: UnitSpectrum) -> FundamentalCoordinates:
        """
        Representante x_1 <= ... <= x_n <= x_1 + 1 con suma 0 y exp(2πi x_j) = z.

        Se toman y_j = arg(z_j)/2π en [0, 1), se ordenan, m es el entero más
        cercano a la suma, y se corta en k = (-m) mod n con desplazamiento
        entero c = (m + k)/n.

        Args:
            spectrum: Espectro unitario con producto 1

        Returns:
            FundamentalCoordinates: Coordenadas y orden de las entradas

        Raises:
            NotUnitModulusError: Si algún valor no tiene módulo 1
            DeterminantNotOneError: Si el producto no es 1
        """
        values = spectrum.as_array()
        SpectrumValidator.validate_unit_spectrum(
            values, self.tolerances.unit_modulus, self.tolerances.determinant
        )
        return self._select(values)

    def _select(self, values: np.ndarray) -> FundamentalCoordinates:
        n = values.size
        y = np.mod(np.angle(values) / (2 * np.pi), 1.0)
        y[y >= 1.0] = 0.0

        order = np.argsort(y, kind='stable')
        ys = y[order]
        total = float(np.sum(ys))
        m = int(np.rint(total))
        k = (-m) % n
        shift = (m + k) // n

        x = np.concatenate([ys[k:], ys[:k] + 1.0]) - shift
        x = x - (total - m) / n + 0.0
        rotated = np.concatenate([order[k:], order[:k]])

        error = float(np.max(np.abs(np.exp(2j * np.pi * x) - values[rotated])))
        if error > self.tolerances.reconstruction:
            raise InternalInconsistencyError(
                "El representante no reproduce el espectro",
                details={"error": error}
            )
        return FundamentalCoordinates(
            x=tuple(float(v) for v in x),
            order=tuple(int(i) for i in rotated),
        )

    def cut_shifts(self, spectrum: UnitSpectrum) -> List[float]:
        """Desplazamiento (sum(y) + k)/n de cada corte cíclico k = 0..n-1."""
        values = spectrum.as_array()
        y = np.mod(np.angle(values) / (2 * np.pi), 1.0)
        y[y >= 1.0] = 0.0
        total = float(np.sum(np.sort(y)))
        return [(total + k) / values.size for k in range(values.size)]

    def integer_cuts(self, spectrum: UnitSpectrum, tolerance: float = 1e-9) -> List[int]:
        """Cortes cuyo desplazamiento es entero; hay exactamente uno si el producto es 1."""
        return [
            k for k, value in enumerate(self.cut_shifts(spectrum))
            if abs(value - round(value)) < tolerance
        ]

    def matrix_spectrum_ordered(self, matrix) -> OrderedSpectrum:
        """
        Coordenadas fundamentales de X en SU(n) y marco de autovectores en ese orden.

        Raises:
            NotUnitaryError: Si X no es unitaria
            DeterminantNotOneError: Si det X no es 1
        """
        array = MatrixValidator.validate_unitary(matrix, self.tolerances.unitary)
        MatrixValidator.validate_determinant_one(array, self.tolerances.determinant)

        triangular, vectors = linalg.schur(array, output='complex')
        eigenvalues = np.diag(triangular)
        eigenvalues = eigenvalues / np.abs(eigenvalues)
        frame, _ = np.linalg.qr(vectors)

        coordinates = self._select(eigenvalues)
        return OrderedSpectrum(coordinates=coordinates, frame=frame[:, list(coordinates.order)])

    def hermitian_sorted(self, value) -> Tuple[float, ...]:
        """
        Espectro real en orden no decreciente eta_1 <= ... <= eta_n.

        Args:
            value: Entradas de una diagonal real o una matriz autoadjunta

        Raises:
            NotSelfAdjointError: Si la matriz no es autoadjunta
        """
        array = np.asarray(value)
        if array.ndim == 1:
            array = np.diag(array)
        array = MatrixValidator.validate_self_adjoint(array, self.tolerances.self_adjoint)
        return tuple(float(v) for v in linalg.eigvalsh(array))

    def sorted_spectrum_map(self, matrix) -> np.ndarray:
        """Reordenación X -> diag(exp(2πi x_1), ..., exp(2πi x_n)) sobre SU(n)."""
        coordinates = self.matrix_spectrum_ordered(matrix).coordinates
        return np.diag(coordinates.eigenvalues())

    def spectrum_distance(self, first: Sequence[complex], second: Sequence[complex]) -> float:
        """Distancia máxima bajo el emparejamiento óptimo de dos multiconjuntos."""
        return matching_distance(np.asarray(first), np.asarray(second))


def matching_distance(first: np.ndarray, second: np.ndarray) -> float:
    """Distancia máxima entre dos multiconjuntos bajo el emparejamiento óptimo."""
    cost = np.abs(first[:, None] - second[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max()) if rows.size else 0.0
