"""
Pruebas unitarias para TorusService.
Este módulo prueba el etiquetado de componentes, el muestreo y la clasificación de
aplicaciones del toro, y la aplicación híbrida sobre diagonales hermíticas.
"""
import numpy as np
import pytest

import coxlip.services.torus_service as torus_module

from coxlip.models.permutation import Permutation
from coxlip.models.spectral import HermitianDiagonal3, TorusMapKind, TorusMapSampleTable, UnitSpectrum
from coxlip.utils.exceptions import (
    BadDimensionError,
    DimensionMismatchError,
    InternalInconsistencyError,
    NotDiagonalValuedError,
    RepeatedEigenvaluesError,
    SpectrumBrokenError,
    ValidationError,
)
from coxlip.utils.map_oracles import (
    coordinate_rotation_map,
    identity_map,
    permutation_conjugation_map,
    perturbation_map,
)
from coxlip.utils.sampling import random_permutation, random_unit_spectrum


def parse(n, text):
    return Permutation.parse(n, text)


class TestComponents:
    """Suite de pruebas para las componentes del toro."""

    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_labels_recover_permutation(self, torus_service, n):
        """Prueba que la etiqueta de rho ▷ z* es rho."""
        components = torus_service.torus_components(n)
        assert len(components) == len(list(Permutation.all(n)))
        for component in components:
            assert torus_service.component_label(component.spectrum) == component.label

    def test_label_equivariance(self, torus_service):
        """Prueba label(rho ▷ z) = rho · label(z)."""
        z = torus_service.base_point(4).act(parse(4, '(1 3)(2 4)'))
        rho = parse(4, '(1 2 3)')
        assert torus_service.component_label(z.act(rho)) == rho * torus_service.component_label(z)

    @pytest.mark.parametrize('n', [2, 3, 4, 5])
    def test_random_equivariance(self, torus_service, rng, n):
        """Prueba la equivariancia de la etiqueta con rho y z aleatorios."""
        for _ in range(200):
            z = UnitSpectrum(tuple(random_unit_spectrum(n, rng)))
            rho = random_permutation(n, rng)
            assert torus_service.component_label(z.act(rho)) == rho * torus_service.component_label(z)

    def test_base_point(self, torus_service):
        """Prueba z* para n = 3: las raíces cúbicas en orden creciente de argumento centrado."""
        z = torus_service.base_point(3).as_array()
        expected = np.exp(2j * np.pi * np.array([-1 / 3, 0.0, 1 / 3]))
        assert np.allclose(z, expected)

    @pytest.mark.parametrize('n', [1, 7])
    def test_bad_dimension(self, torus_service, n):
        """Prueba que n debe estar entre 2 y 6."""
        with pytest.raises(BadDimensionError):
            torus_service.torus_components(n)

    def test_repeated_entries(self, torus_service):
        """Prueba que un espectro con repeticiones no tiene etiqueta."""
        with pytest.raises(RepeatedEigenvaluesError):
            torus_service.component_label(UnitSpectrum((1j, 1j, -1)))


class TestSampling:
    """Suite de pruebas para el muestreo de aplicaciones."""

    def test_identity_is_conjugation(self, torus_service):
        """Prueba que la identidad da tau constante e."""
        verdict = torus_service.classify_torus_map(torus_service.sample_torus_map(identity_map, 3))
        assert verdict.kind == TorusMapKind.CONJUGATION
        assert verdict.permutation.is_identity()
        assert verdict.partial is False

    def test_permutation_conjugation(self, torus_service):
        """Prueba que Ad_P con P e_j = e_{rho(j)} da tau constante rho^-1."""
        rho = parse(3, '(1 2 3)')
        table = torus_service.sample_torus_map(permutation_conjugation_map(rho), 3)
        verdict = torus_service.classify_torus_map(table)
        assert verdict.kind == TorusMapKind.CONJUGATION
        assert verdict.permutation == rho.inverse()

    def test_coordinate_rotation(self, torus_service):
        """Prueba que la rotación de coordenadas da tau(j) = j + 1."""
        verdict = torus_service.classify_torus_map(torus_service.sample_torus_map(coordinate_rotation_map, 4))
        assert verdict.kind == TorusMapKind.CONJUGATION
        assert verdict.permutation == Permutation.cycle(4, 1, 2, 3, 4)

    def test_sorted_spectrum_is_reordering(self, torus_service, spectral_service):
        """Prueba que la reordenación da tau_theta = theta."""
        table = torus_service.sample_torus_map(spectral_service.sorted_spectrum_map, 3)
        for label, tau in table.rows:
            assert tau == label
        verdict = torus_service.classify_torus_map(table)
        assert verdict.kind == TorusMapKind.REORDERING
        assert verdict.permutation.is_identity()

    def test_not_diagonal(self, torus_service):
        """Prueba el rechazo de imágenes con parte fuera de la diagonal."""
        with pytest.raises(NotDiagonalValuedError):
            torus_service.sample_torus_map(perturbation_map(), 3)

    def test_spectrum_broken(self, torus_service):
        """Prueba el rechazo de imágenes cuya diagonal no es una permutación de z."""
        with pytest.raises(SpectrumBrokenError):
            torus_service.sample_torus_map(lambda matrix: 1j * matrix, 3)


class TestClassification:
    """Suite de pruebas para la clasificación de tablas."""

    def test_reordering_with_factor(self, torus_service):
        """Prueba tau_theta = theta·v con v = (1 2)."""
        v = parse(3, '(1 2)')
        table = TorusMapSampleTable(3, tuple((theta, theta * v) for theta in Permutation.all(3)))
        verdict = torus_service.classify_torus_map(table)
        assert verdict.kind == TorusMapKind.REORDERING
        assert verdict.permutation == v

    def test_neither_with_witnesses(self, torus_service):
        """Prueba el veredicto NEITHER con testigos y tabla parcial."""
        e, swap, other = parse(3, 'e'), parse(3, '(1 2)'), parse(3, '(2 3)')
        rows = ((e, e), (swap, swap), (other, e))
        verdict = torus_service.classify_torus_map(TorusMapSampleTable(3, rows))

        assert verdict.kind == TorusMapKind.NEITHER
        assert verdict.partial is True
        assert verdict.witnesses == (rows[0], rows[1], rows[0], rows[2])
        assert verdict.to_dict()['verdict'] == 'neither'

    def test_generator_only_table(self, torus_service, symmetric_service):
        """Prueba que el ejemplo de S_3 que solo cumple con generadores no es ninguno de los dos tipos."""
        report = symmetric_service.generator_only_example()
        codec = symmetric_service.codec(3)
        rows = tuple(
            (codec.to_permutation(theta), codec.to_permutation(value))
            for theta, value in enumerate(report.tau.table)
        )
        verdict = torus_service.classify_torus_map(TorusMapSampleTable(3, rows))
        assert verdict.kind == TorusMapKind.NEITHER

    def test_table_validation(self, torus_service):
        """Prueba tablas vacías, etiquetas repetidas y grados distintos."""
        e = parse(3, 'e')
        with pytest.raises(ValidationError):
            torus_service.classify_torus_map(TorusMapSampleTable(3, ()))
        with pytest.raises(ValidationError):
            TorusMapSampleTable(3, ((e, e), (e, e)))
        with pytest.raises(DimensionMismatchError):
            TorusMapSampleTable(3, ((e, parse(4, 'e')),))


class TestHermitianHybrid:
    """Suite de pruebas para la aplicación híbrida 3×3."""

    @pytest.mark.parametrize('entries, expected', [
        ((1.0, 2.0, 3.0), (1.0, 2.0, 3.0)),
        ((1.0, 3.0, 2.0), (1.0, 3.0, 2.0)),
        ((2.0, 1.0, 3.0), (1.0, 2.0, 3.0)),
        ((2.0, 3.0, 1.0), (1.0, 3.0, 2.0)),
        ((3.0, 1.0, 2.0), (1.0, 2.0, 3.0)),
        ((3.0, 2.0, 1.0), (1.0, 2.0, 3.0)),
    ])
    def test_table(self, torus_service, entries, expected):
        """Prueba cada fila de la tabla por casos."""
        assert torus_service.hermitian_hybrid(HermitianDiagonal3(entries)).entries == expected

    @pytest.mark.parametrize('entries', [
        (1.0, 1.0, 2.0), (1.0, 2.0, 1.0), (2.0, 1.0, 1.0),
        (1.0, 2.0, 2.0), (2.0, 1.0, 2.0), (2.0, 2.0, 1.0),
        (5.0, 5.0, 5.0),
    ])
    def test_ties_are_consistent(self, torus_service, entries):
        """Prueba que las filas aplicables coinciden en los empates."""
        image = torus_service.hermitian_hybrid(HermitianDiagonal3(entries))
        assert sorted(image.entries) == sorted(entries)

    def test_witnesses(self, torus_service):
        """Prueba los testigos de no conjugación y no reordenación."""
        witnesses = torus_service.hybrid_witnesses()
        assert witnesses['not_conjugation'] == ((2.0, 1.0, 3.0), (1.0, 2.0, 3.0))
        assert witnesses['not_sorted'] == ((1.0, 3.0, 2.0), (1.0, 3.0, 2.0))

    def test_sweep(self, torus_service, rng):
        """Prueba el barrido de empates y de continuidad en las fronteras."""
        report = torus_service.hermitian_hybrid_sweep(20, rng)
        assert report.evaluations == 20 * 13
        assert report.inconsistencies == 0
        assert report.spectrum_preserved is True
        assert report.continuity_error < 1e-6

    def test_wrong_size(self):
        """Prueba que la diagonal debe tener tres entradas."""
        with pytest.raises(DimensionMismatchError):
            HermitianDiagonal3((1.0, 2.0))

    def test_inconsistency_is_reported(self, torus_service, monkeypatch):
        """Prueba que una tabla con filas contradictorias se detecta en los empates."""
        monkeypatch.setitem(torus_module.HYBRID_TABLE, 'bac', 'cba')
        with pytest.raises(InternalInconsistencyError):
            torus_service.hermitian_hybrid(HermitianDiagonal3((1.0, 1.0, 2.0)))
