"""
Pruebas unitarias para PreserverService.
Este módulo prueba la extensión por escalares, la reordenación por toros de SU(2)
y la comprobación por muestreo de espectro y conmutatividad.
"""
import numpy as np
import pytest

from coxlip.utils.exceptions import (
    BadDimensionError,
    NotSpecialUnitaryError,
    NotUnitaryError,
    ValidationError,
    WellDefinednessError,
)
from coxlip.utils.map_oracles import conjugation_map, identity_map, perturbation_map, transpose_map
from coxlip.utils.sampling import random_special_unitary, random_unitary


class TestScalingExtension:
    """Suite de pruebas para la extensión de SU(n) a U(n)."""

    def test_first_sample_for_odd_n(self, preserver_service, rng):
        """Prueba que para n impar la primera muestra es diag(1, ζ, ζ²)."""
        samples = preserver_service.scaling_samples(3, 4, rng)
        zeta = np.exp(2j * np.pi / 3)
        assert len(samples) == 4
        assert np.allclose(samples[0], np.diag([1, zeta, zeta ** 2]))
        assert all(np.linalg.det(sample) == pytest.approx(1.0) for sample in samples)

    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_identity_extends(self, preserver_service, rng, n):
        """Prueba que la identidad se extiende a la identidad de U(n)."""
        extension = preserver_service.scaling_extension(identity_map, n, 10, rng)
        u = random_unitary(n, rng)
        assert np.allclose(extension(u), u)

    def test_conjugation_extends(self, preserver_service, rng):
        """Prueba que Ad_Q se extiende a Ad_Q."""
        q = random_unitary(3, rng)
        extension = preserver_service.scaling_extension(conjugation_map(q), 3, 10, rng)
        u = random_unitary(3, rng)
        assert np.allclose(extension(u), q @ u @ q.conj().T)

    def test_sorted_map_is_not_well_defined(self, preserver_service, spectral_service, rng):
        """Prueba que la reordenación falla en diag(1, ζ, ζ²) y devuelve el testigo."""
        with pytest.raises(WellDefinednessError) as exc_info:
            preserver_service.scaling_extension(spectral_service.sorted_spectrum_map, 3, 10, rng)

        error = exc_info.value
        assert error.exit_code == 1
        assert error.code == 'WELL_DEFINEDNESS_FAILURE'
        assert np.allclose(error.matrix, np.diag(np.exp(2j * np.pi * np.arange(3) / 3)))
        assert error.deviation > 1e-3
        assert len(error.details['matrix']) == 3

    def test_extension_rejects_non_unitary(self, preserver_service, rng):
        """Prueba que la extensión exige una matriz unitaria."""
        extension = preserver_service.scaling_extension(identity_map, 2, 2, rng)
        with pytest.raises(NotUnitaryError):
            extension(np.diag([2.0, 1.0]))

    def test_bad_dimension(self, preserver_service, rng):
        """Prueba que n debe ser al menos 2."""
        with pytest.raises(BadDimensionError):
            preserver_service.scaling_extension(identity_map, 1, 2, rng)


class TestSu2Reordering:
    """Suite de pruebas para la reordenación por toros de SU(2)."""

    def test_preserves_spectrum(self, preserver_service, spectral_service, rng):
        """Prueba que la imagen tiene el mismo espectro."""
        for _ in range(20):
            x = random_special_unitary(2, rng)
            image = preserver_service.su2_torus_reordering(x)
            assert spectral_service.spectrum_distance(np.linalg.eigvals(x), np.linalg.eigvals(image)) < 1e-8

    def test_collision(self, preserver_service):
        """Prueba que -I va a -I."""
        assert np.allclose(preserver_service.su2_torus_reordering(-np.eye(2)), -np.eye(2))

    def test_diagonal_with_pz_one(self, preserver_service):
        """Prueba diag(i, -i): la recta propia de -i es e_2 y p_z = -1."""
        x = np.diag([1j, -1j])
        omega = np.cos(1.0) * np.eye(2) + 1j * np.sin(1.0) * np.array([[0, 1], [1, 0]])
        expected = omega @ np.diag([-1j, 1j]) @ omega.conj().T
        assert np.allclose(preserver_service.su2_torus_reordering(x), expected)

    def test_non_globality(self, preserver_service):
        """Prueba que dos matrices con el mismo espectro tienen imágenes distintas."""
        witness = preserver_service.non_globality_witness()
        assert witness.difference > 0.1
        assert witness.to_dict()['outputs_differ'] is True

    def test_rejects_non_special(self, preserver_service):
        """Prueba que la entrada debe estar en SU(2)."""
        with pytest.raises(NotSpecialUnitaryError):
            preserver_service.su2_torus_reordering(np.diag([1j, 1j]))
        with pytest.raises(BadDimensionError):
            preserver_service.su2_torus_reordering(np.eye(3))


class TestCsPreservation:
    """Suite de pruebas para la comprobación de espectro y conmutatividad."""

    @pytest.mark.parametrize('domain', ['su', 'hermitian', 'diagonal-torus'])
    def test_identity_passes(self, preserver_service, rng, domain):
        """Prueba que la identidad preserva ambas propiedades."""
        report = preserver_service.check_cs_preservation(identity_map, domain, 3, 50, rng)
        assert report.passed is True
        assert report.samples == 50

    def test_transpose_passes_on_hermitian(self, preserver_service, rng):
        """Prueba que la transposición preserva espectro y conmutatividad."""
        assert preserver_service.check_cs_preservation(transpose_map, 'hermitian', 4, 50, rng).passed

    def test_su2_reordering_passes(self, preserver_service, rng):
        """Prueba la reordenación de SU(2) sobre pares que conmutan."""
        report = preserver_service.check_cs_preservation(
            preserver_service.su2_torus_reordering, 'su', 2, 100, rng
        )
        assert report.passed is True

    def test_perturbation_fails(self, preserver_service, rng):
        """Prueba que una perturbación triangular rompe el espectro."""
        report = preserver_service.check_cs_preservation(perturbation_map(0.1), 'su', 3, 20, rng)
        assert report.passed is False
        assert report.spectrum_failures > 0
        assert report.to_dict()['passed'] is False

    def test_invalid_arguments(self, preserver_service, rng):
        """Prueba dominio desconocido y grado inválido."""
        with pytest.raises(ValidationError):
            preserver_service.check_cs_preservation(identity_map, 'real', 3, 1, rng)
        with pytest.raises(BadDimensionError):
            preserver_service.check_cs_preservation(identity_map, 'su', 0, 1, rng)
