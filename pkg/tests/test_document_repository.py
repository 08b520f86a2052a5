"""
Pruebas unitarias para DocumentRepository.
"""
import json

import pytest

from coxlip.repositories.document_repository import DocumentRepository
from coxlip.utils.exceptions import InputFileError


@pytest.fixture
def repository():
    return DocumentRepository()


class TestDocumentRepository:
    """Suite de pruebas para DocumentRepository."""

    def test_load(self, repository, write_json):
        """Prueba la lectura de un documento válido."""
        path = write_json({"rank": 1, "m": [[1]]})
        assert repository.load(path) == {"rank": 1, "m": [[1]]}

    def test_load_missing(self, repository, tmp_path):
        """Prueba que un archivo inexistente se traduce a InputFileError."""
        path = tmp_path / 'missing.json'
        with pytest.raises(InputFileError) as exc_info:
            repository.load(path)

        assert exc_info.value.code == 'INPUT_FILE_ERROR'
        assert exc_info.value.exit_code == 2
        assert exc_info.value.details == {"path": str(path)}

    def test_load_malformed(self, repository, tmp_path):
        """Prueba que el JSON malformado informa de la posición."""
        path = tmp_path / 'broken.json'
        path.write_text('{"n": 2,', encoding='utf-8')
        with pytest.raises(InputFileError) as exc_info:
            repository.load(path)

        details = exc_info.value.details
        assert details['path'] == str(path)
        assert details['line'] == 1
        assert details['column'] == 9

    def test_load_not_utf8(self, repository, tmp_path):
        """Prueba que un documento que no es UTF-8 se traduce a InputFileError."""
        path = tmp_path / 'latin1.json'
        path.write_bytes(b'{"a":"\xff"}')
        with pytest.raises(InputFileError) as exc_info:
            repository.load(path)

        assert exc_info.value.code == 'INPUT_FILE_ERROR'
        assert exc_info.value.exit_code == 2
        assert exc_info.value.details['path'] == str(path)

    def test_dumps_is_canonical(self):
        """Prueba claves ordenadas y caracteres no ASCII sin escapar."""
        text = DocumentRepository.dumps({"b": 1, "a": "ζ"})
        assert text.index('"a"') < text.index('"b"')
        assert 'ζ' in text

    def test_save(self, repository, tmp_path):
        """Prueba que lo guardado coincide con la serialización canónica."""
        payload = {"x": [0.0, 0.5], "anchor": "prueba"}
        target = repository.save(tmp_path / 'out.json', payload)

        assert target.read_text(encoding='utf-8') == DocumentRepository.dumps(payload) + '\n'
        assert json.loads(target.read_text(encoding='utf-8')) == payload

    def test_save_to_missing_directory(self, repository, tmp_path):
        """Prueba que un error de escritura se traduce a InputFileError."""
        with pytest.raises(InputFileError):
            repository.save(tmp_path / 'nope' / 'out.json', {})
