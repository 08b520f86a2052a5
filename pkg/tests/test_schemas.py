"""
Pruebas unitarias para los esquemas de Marshmallow.
"""
import pytest
from marshmallow import ValidationError as MarshmallowValidationError

from coxlip.models.coxeter import CoxeterMatrix
from coxlip.models.permutation import Permutation
from coxlip.models.spectral import TorusMapSampleTable, UnitSpectrum
from coxlip.schemas.coxeter_schema import coxeter_matrix_schema, element_schema
from coxlip.schemas.map_schema import permutation_schema, self_map_input_schema
from coxlip.schemas.report_schema import error_response_schema
from coxlip.schemas.spectral_schema import matrix_document_schema, sample_table_schema, spectrum_schema


class TestCoxeterSchemas:
    """Suite de pruebas para matrices y palabras."""

    def test_matrix(self):
        """Prueba que el documento produce una CoxeterMatrix."""
        matrix = coxeter_matrix_schema.load({"rank": 2, "m": [[1, 4], [4, 1]]})
        assert matrix == CoxeterMatrix.dihedral(4)

    @pytest.mark.parametrize('payload, field', [
        ({"m": [[1]]}, 'rank'),
        ({"rank": 0, "m": []}, 'rank'),
        ({"rank": 2, "m": [[1, 3], [3]]}, 'm'),
        ({"rank": 1, "m": [[1.5]]}, 'm'),
    ])
    def test_matrix_errors(self, payload, field):
        """Prueba campos ausentes, rangos y formas inválidas."""
        with pytest.raises(MarshmallowValidationError) as exc_info:
            coxeter_matrix_schema.load(payload)
        assert field in exc_info.value.messages

    def test_word_is_zero_based(self):
        """Prueba que las palabras pasan de índices desde 1 a índices desde 0."""
        assert element_schema.load({"word": [1, 2, 1]}) == [0, 1, 0]
        with pytest.raises(MarshmallowValidationError):
            element_schema.load({"word": [0]})

    def test_self_map_forms(self):
        """Prueba que se exige exactamente una de las formas."""
        matrix = {"rank": 1, "m": [[1]]}
        assert self_map_input_schema.load({"matrix": matrix, "table": [1, 0]})['map'] is None
        assert self_map_input_schema.load({"matrix": matrix, "map": {"e": "1"}})['table'] is None
        with pytest.raises(MarshmallowValidationError):
            self_map_input_schema.load({"matrix": matrix})


class TestSpectralSchemas:
    """Suite de pruebas para espectros, matrices y tablas de muestras."""

    def test_spectrum(self):
        """Prueba los complejos como pares [re, im]."""
        spectrum = spectrum_schema.load({"n": 2, "values": [[0, 1], [0, -1]]})
        assert spectrum == UnitSpectrum((1j, -1j))

    @pytest.mark.parametrize('value', [[1], [1, 2, 3], ["a", 0], [float('nan'), 0], 5])
    def test_spectrum_bad_complex(self, value):
        """Prueba complejos mal formados o no finitos."""
        with pytest.raises(MarshmallowValidationError):
            spectrum_schema.load({"n": 1, "values": [value]})

    def test_matrix_document(self):
        """Prueba que la matriz debe ser cuadrada y no vacía."""
        rows = matrix_document_schema.load({"matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})
        assert rows == [[1, 0], [0, 1]]
        with pytest.raises(MarshmallowValidationError):
            matrix_document_schema.load({"matrix": [[[1, 0], [0, 0]]]})
        with pytest.raises(MarshmallowValidationError):
            matrix_document_schema.load({"matrix": []})

    def test_sample_table(self):
        """Prueba la construcción de la tabla con permutaciones."""
        table = sample_table_schema.load({
            "n": 2,
            "rows": [{"label": {"n": 2, "images": [2, 1]}, "tau": {"n": 2, "images": [1, 2]}}],
        })
        assert isinstance(table, TorusMapSampleTable)
        assert table.rows == ((Permutation((2, 1)), Permutation((1, 2))),)

    def test_sample_table_requires_rows(self):
        """Prueba que la tabla no puede estar vacía."""
        with pytest.raises(MarshmallowValidationError):
            sample_table_schema.load({"n": 2, "rows": []})

    def test_permutation_length(self):
        """Prueba que images debe tener n entradas."""
        with pytest.raises(MarshmallowValidationError) as exc_info:
            permutation_schema.load({"n": 3, "images": [1, 2]})
        assert 'images' in exc_info.value.messages


class TestReportSchemas:
    """Suite de pruebas para el sobre de error."""

    def test_error_envelope(self):
        """Prueba que el sobre lleva status error."""
        payload = error_response_schema.dump({'error': {'code': 'X', 'message': 'm'}})
        assert payload['status'] == 'error'
        assert payload['error'] == {'code': 'X', 'message': 'm'}
