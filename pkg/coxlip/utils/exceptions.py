"""
Excepciones personalizadas para la aplicación.
Este módulo define las excepciones específicas del dominio de verificación.

Toda excepción lleva un ``code`` estable y el ``exit_code`` que la CLI
devuelve. Las violaciones de propiedades no son excepciones: se reportan en
los objetos de resultado.
"""


class VerificationError(Exception):
    """Excepción base para errores de entrada, uso o consistencia."""

    def __init__(self, message, code=None, exit_code=2, details=None):
        super().__init__(message)
        self.message = message
        self.code = code or 'VERIFICATION_ERROR'
        self.exit_code = exit_code
        self.details = details


class ValidationError(VerificationError):
    """Excepción para errores de validación de esquema."""

    def __init__(self, message, details=None):
        super().__init__(message, 'SCHEMA_VALIDATION_ERROR', 2, details)


class InputFileError(VerificationError):
    """Excepción para errores al leer o escribir documentos JSON."""

    def __init__(self, message="Error al acceder al documento", details=None):
        super().__init__(message, 'INPUT_FILE_ERROR', 2, details)


# --- Sistemas de Coxeter ---------------------------------------------------

class InvalidMatrixError(VerificationError):
    """La matriz de Coxeter no es simétrica, no tiene unos en la diagonal o tiene entradas inválidas."""

    def __init__(self, message="Matriz de Coxeter inválida", details=None):
        super().__init__(message, 'INVALID_MATRIX', 2, details)


class NotFinitaryError(VerificationError):
    """La matriz contiene una entrada infinita (codificada como 0)."""

    def __init__(self, message="La matriz de Coxeter contiene una entrada infinita", details=None):
        super().__init__(message, 'NOT_FINITARY', 2, details)


class OrderExceededError(VerificationError):
    """La clausura supera el orden máximo configurado."""

    def __init__(self, message="El grupo supera el orden máximo permitido", details=None):
        super().__init__(message, 'ORDER_EXCEEDED', 2, details)


class ForeignElementError(VerificationError):
    """El elemento o generador no pertenece al sistema."""

    def __init__(self, message="El elemento no pertenece al sistema", details=None):
        super().__init__(message, 'FOREIGN_ELEMENT', 2, details)


# --- Autoaplicaciones de Lipschitz ------------------------------------------

class ConditionSystemMismatchError(VerificationError):
    """La condición y la autoaplicación se construyeron sobre sistemas distintos."""

    def __init__(self, message="La condición no pertenece al sistema de la aplicación", details=None):
        super().__init__(message, 'CONDITION_SYSTEM_MISMATCH', 2, details)


class SystemMismatchError(VerificationError):
    """Dos autoaplicaciones viven en sistemas distintos."""

    def __init__(self, message="Las aplicaciones pertenecen a sistemas distintos", details=None):
        super().__init__(message, 'SYSTEM_MISMATCH', 2, details)


class SearchBoundExceededError(VerificationError):
    """El grupo es demasiado grande para la búsqueda exhaustiva."""

    def __init__(self, message="El orden del grupo supera la cota de búsqueda", details=None):
        super().__init__(message, 'SEARCH_BOUND_EXCEEDED', 2, details)


class InvalidConditionError(VerificationError):
    """Una condición por elemento usa algo que no es una reflexión."""

    def __init__(self, message="La condición contiene elementos que no son reflexiones", details=None):
        super().__init__(message, 'INVALID_CONDITION', 2, details)


class InvalidMapError(VerificationError):
    """La tabla de la autoaplicación no es total o contiene índices inválidos."""

    def __init__(self, message="Tabla de autoaplicación inválida", details=None):
        super().__init__(message, 'INVALID_MAP', 2, details)


# --- Grupo simétrico ---------------------------------------------------------

class InvalidPermutationError(VerificationError):
    """Las imágenes no forman una biyección de {1..n}."""

    def __init__(self, message="Permutación inválida", details=None):
        super().__init__(message, 'INVALID_PERMUTATION', 2, details)


class ConventionMismatchError(VerificationError):
    """La identidad de descomposición en ciclos falla con la convención de composición elegida."""

    def __init__(self, message="La descomposición del ciclo falla con esta convención de composición", details=None):
        super().__init__(message, 'CONVENTION_MISMATCH', 2, details)


# --- Espectral -----------------------------------------------------------------

class NotUnitModulusError(VerificationError):
    """Algún valor del espectro no tiene módulo 1."""

    def __init__(self, message="El espectro contiene valores de módulo distinto de 1", details=None):
        super().__init__(message, 'NOT_UNIT_MODULUS', 2, details)


class DeterminantNotOneError(VerificationError):
    """El producto del espectro (o el determinante) no es 1."""

    def __init__(self, message="El determinante no es 1", details=None):
        super().__init__(message, 'DETERMINANT_NOT_ONE', 2, details)


class NotUnitaryError(VerificationError):
    """La matriz no es unitaria."""

    def __init__(self, message="La matriz no es unitaria", details=None):
        super().__init__(message, 'NOT_UNITARY', 2, details)


class NotSpecialUnitaryError(VerificationError):
    """La matriz no pertenece a SU(n)."""

    def __init__(self, message="La matriz no es especial unitaria", details=None):
        super().__init__(message, 'NOT_SPECIAL_UNITARY', 2, details)


class NotSelfAdjointError(VerificationError):
    """La matriz no es autoadjunta."""

    def __init__(self, message="La matriz no es autoadjunta", details=None):
        super().__init__(message, 'NOT_SELF_ADJOINT', 2, details)


class RepeatedEigenvaluesError(VerificationError):
    """El espectro tiene valores repetidos donde se exigen distintos."""

    def __init__(self, message="El espectro tiene valores repetidos", details=None):
        super().__init__(message, 'REPEATED_EIGENVALUES', 2, details)


class NotDiagonalValuedError(VerificationError):
    """El oráculo devolvió una matriz no diagonal sobre el toro diagonal."""

    def __init__(self, message="La aplicación no devuelve matrices diagonales", details=None):
        super().__init__(message, 'NOT_DIAGONAL_VALUED', 2, details)


class SpectrumBrokenError(VerificationError):
    """El oráculo no conserva el espectro de la muestra."""

    def __init__(self, message="La aplicación no conserva el espectro", details=None):
        super().__init__(message, 'SPECTRUM_BROKEN', 2, details)


class InternalInconsistencyError(VerificationError):
    """Dos filas aplicables de una tabla por casos discrepan."""

    def __init__(self, message="Las filas aplicables de la tabla discrepan", details=None):
        super().__init__(message, 'INTERNAL_INCONSISTENCY', 2, details)


class DimensionMismatchError(VerificationError):
    """Los subespacios no tienen la misma dimensión ambiente o la misma dimensión."""

    def __init__(self, message="Las dimensiones no coinciden", details=None):
        super().__init__(message, 'DIMENSION_MISMATCH', 2, details)


class BadDimensionError(VerificationError):
    """La dimensión pedida está fuera del rango admitido."""

    def __init__(self, message="Dimensión fuera de rango", details=None):
        super().__init__(message, 'BAD_DIMENSION', 2, details)


class ClusterCollapseError(VerificationError):
    """La imagen del testigo aislado perdió el grupo de autovalores esperado."""

    def __init__(self, message="La imagen no conserva el grupo de autovalores esperado", details=None):
        super().__init__(message, 'CLUSTER_COLLAPSE', 2, details)


class ChainUnavailableError(VerificationError):
    """No existe cadena de perpendicularidad débil para los datos dados."""

    def __init__(self, message="No existe una cadena de perpendicularidad débil", details=None):
        super().__init__(message, 'CHAIN_UNAVAILABLE', 2, details)


class WellDefinednessError(VerificationError):
    """La extensión por escalares no está bien definida; lleva el testigo (zeta, X)."""

    def __init__(self, zeta, matrix, deviation, message="La extensión por escalares no está bien definida"):
        super().__init__(message, 'WELL_DEFINEDNESS_FAILURE', 1, {
            'zeta': [complex(zeta).real, complex(zeta).imag],
            'matrix': [[[complex(v).real, complex(v).imag] for v in row] for row in matrix],
            'deviation': deviation,
        })
        self.zeta = zeta
        self.matrix = matrix
        self.deviation = deviation


class InternalError(VerificationError):
    """Fallo inesperado fuera de los errores conocidos."""

    def __init__(self, message="Error interno inesperado", details=None):
        super().__init__(message, 'INTERNAL_ERROR', 2, details)
