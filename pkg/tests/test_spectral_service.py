"""
Pruebas unitarias para SpectralService.
Este módulo prueba la selección fundamental, los cortes enteros y la ordenación
de espectros unitarios y hermíticos.
"""
import numpy as np
import pytest

from coxlip.models.spectral import UnitSpectrum
from coxlip.services.spectral_service import matching_distance
from coxlip.utils.exceptions import (
    DeterminantNotOneError,
    NotSelfAdjointError,
    NotUnitaryError,
    NotUnitModulusError,
)
from coxlip.utils.sampling import random_special_unitary, random_unit_spectrum


def cube_roots():
    return UnitSpectrum((1.0, np.exp(2j * np.pi / 3), np.exp(-2j * np.pi / 3)))


class TestFundamentalSelect:
    """Suite de pruebas para el representante fundamental."""

    def test_pair(self, spectral_service):
        """Prueba (i, -i) -> (-1/4, 1/4)."""
        coordinates = spectral_service.fundamental_select(UnitSpectrum((1j, -1j)))
        assert np.allclose(coordinates.x, [-0.25, 0.25])
        assert coordinates.order == (1, 0)

    def test_cube_roots(self, spectral_service):
        """Prueba las raíces cúbicas de la unidad -> (-1/3, 0, 1/3)."""
        coordinates = spectral_service.fundamental_select(cube_roots())
        assert np.allclose(coordinates.x, [-1 / 3, 0.0, 1 / 3])

    def test_identity_and_minus_identity(self, spectral_service):
        """Prueba los espectros con todas las entradas iguales."""
        assert np.allclose(spectral_service.fundamental_select(UnitSpectrum((1, 1, 1))).x, 0.0)
        assert np.allclose(spectral_service.fundamental_select(UnitSpectrum((-1, -1))).x, [-0.5, 0.5])

    def test_random_spectra(self, spectral_service, rng):
        """Prueba orden, suma cero, amplitud <= 1 y reconstrucción en espectros aleatorios."""
        for n in range(1, 7):
            for _ in range(50):
                values = random_unit_spectrum(n, rng)
                coordinates = spectral_service.fundamental_select(UnitSpectrum(tuple(values)))
                x = np.array(coordinates.x)

                assert np.all(np.diff(x) >= -1e-12)
                assert x[-1] <= x[0] + 1 + 1e-12
                assert abs(x.sum()) < 1e-9
                assert np.allclose(coordinates.eigenvalues(), values[list(coordinates.order)])

    def test_invariant_under_reordering(self, spectral_service, rng):
        """Prueba que el representante solo depende del multiconjunto."""
        values = random_unit_spectrum(5, rng)
        first = spectral_service.fundamental_select(UnitSpectrum(tuple(values)))
        second = spectral_service.fundamental_select(UnitSpectrum(tuple(values[::-1])))
        assert np.allclose(first.x, second.x)

    def test_exactly_one_integer_cut(self, spectral_service, rng):
        """Prueba que exactamente un corte cíclico tiene desplazamiento entero."""
        for n in range(2, 7):
            spectrum = UnitSpectrum(tuple(random_unit_spectrum(n, rng)))
            assert len(spectral_service.integer_cuts(spectrum)) == 1

    def test_not_unit_modulus(self, spectral_service):
        """Prueba el rechazo de valores fuera del círculo unidad."""
        with pytest.raises(NotUnitModulusError) as exc_info:
            spectral_service.fundamental_select(UnitSpectrum((2.0, 0.5)))
        assert exc_info.value.details == {"indices": [1, 2]}

    def test_determinant_not_one(self, spectral_service):
        """Prueba el rechazo de espectros con producto distinto de 1."""
        with pytest.raises(DeterminantNotOneError):
            spectral_service.fundamental_select(UnitSpectrum((1.0, 1j)))


class TestMatrixSpectra:
    """Suite de pruebas para espectros de matrices."""

    def test_ordered_frame(self, spectral_service, rng):
        """Prueba que el marco diagonaliza X en el orden de las coordenadas."""
        x = random_special_unitary(4, rng)
        ordered = spectral_service.matrix_spectrum_ordered(x)
        frame = ordered.frame
        eigenvalues = ordered.coordinates.eigenvalues()

        assert np.allclose(frame.conj().T @ frame, np.eye(4), atol=1e-10)
        assert np.allclose(x @ frame, frame @ np.diag(eigenvalues), atol=1e-8)

    def test_sorted_spectrum_map(self, spectral_service):
        """Prueba la reordenación sobre una diagonal."""
        z = np.array([1j, 1.0, -1j])
        image = spectral_service.sorted_spectrum_map(np.diag(z))
        assert np.allclose(image, np.diag([-1j, 1.0, 1j]))

    def test_rejects_non_unitary(self, spectral_service):
        """Prueba el rechazo de matrices no unitarias y de determinante distinto de 1."""
        with pytest.raises(NotUnitaryError):
            spectral_service.matrix_spectrum_ordered([[2, 0], [0, 0.5]])
        with pytest.raises(DeterminantNotOneError):
            spectral_service.matrix_spectrum_ordered(np.diag([1j, 1j]))

    def test_hermitian_sorted(self, spectral_service):
        """Prueba el orden no decreciente del espectro hermítico."""
        assert np.allclose(spectral_service.hermitian_sorted([3.0, -1.0, 2.0]), [-1.0, 2.0, 3.0])
        matrix = np.array([[0.0, 1.0], [1.0, 0.0]])
        assert np.allclose(spectral_service.hermitian_sorted(matrix), [-1.0, 1.0])
        with pytest.raises(NotSelfAdjointError):
            spectral_service.hermitian_sorted([[0.0, 1.0], [0.0, 0.0]])

    def test_matching_distance(self, spectral_service):
        """Prueba que la distancia ignora el orden de los multiconjuntos."""
        assert spectral_service.spectrum_distance([1, 1j, -1], [-1, 1, 1j]) == pytest.approx(0.0)
        assert matching_distance(np.array([1.0, 2.0]), np.array([2.0, 1.5])) == pytest.approx(0.5)
