"""
Repositorio para documentos JSON.
Este módulo maneja la lectura y escritura de los documentos de entrada y salida
siguiendo el patrón Repository.
"""
from pathlib import Path
from typing import Any
import json

from coxlip.utils.exceptions import InputFileError


class DocumentRepository:
    """Repositorio para documentos JSON en disco."""

    @staticmethod
    def dumps(payload: Any) -> str:
        """Serialización canónica: claves ordenadas y sangría fija."""
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)

    def load(self, path) -> Any:
        """
        Lee un documento JSON.

        Args:
            path: Ruta del documento

        Returns:
            Any: El contenido decodificado

        Raises:
            InputFileError: Si el archivo no existe, no se puede leer, no es UTF-8 o no es JSON válido
        """
        try:
            with open(path, encoding='utf-8') as handle:
                return json.load(handle)
        except json.JSONDecodeError as e:
            raise InputFileError(
                f"JSON malformado en {path}",
                details={"path": str(path), "line": e.lineno, "column": e.colno}
            )
        except UnicodeDecodeError as e:
            raise InputFileError(
                f"El documento {path} no está codificado en UTF-8",
                details={"path": str(path), "position": e.start}
            )
        except OSError as e:
            raise InputFileError(
                f"Error al leer documento: {e.strerror or str(e)}",
                details={"path": str(path)}
            )

    def save(self, path, payload: Any) -> Path:
        """
        Escribe un documento JSON con la serialización canónica.

        Raises:
            InputFileError: Si no se puede escribir
        """
        target = Path(path)
        try:
            target.write_text(self.dumps(payload) + '\n', encoding='utf-8')
            return target
        except OSError as e:
            raise InputFileError(
                f"Error al guardar documento: {e.strerror or str(e)}",
                details={"path": str(path)}
            )
