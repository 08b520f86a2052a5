"""
Lógica de negocio para aplicaciones que preservan espectro y conmutatividad.
Este módulo certifica la extensión por escalares de una aplicación sobre SU(n),
implementa la reordenación por toros de SU(2) que no es global y comprueba por
muestreo la preservación de espectro y de conmutatividad.
"""
from typing import Callable, List
import logging

import numpy as np
from scipy import linalg

from coxlip.config import Tolerances
from coxlip.models.spectral import CsReport, NonGlobalityWitness
from coxlip.services.spectral_service import SpectralService, matching_distance
from coxlip.utils.exceptions import BadDimensionError, ValidationError, WellDefinednessError
from coxlip.utils.map_oracles import MatrixMap
from coxlip.utils.sampling import random_special_unitary, random_unit_spectrum, random_unitary
from coxlip.utils.validators import MatrixValidator

logger = logging.getLogger(__name__)

DOMAINS = ('su', 'hermitian', 'diagonal-torus')

# Generador autoadjunto fuera de la diagonal
OFF_DIAGONAL_GENERATOR = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


class PreserverService:
    """Servicio de comprobaciones sobre aplicaciones de matrices."""

    def __init__(self, spectral_service: SpectralService, tolerances: Tolerances):
        self.spectral_service = spectral_service
        self.tolerances = tolerances

    def scaling_samples(self, n: int, samples: int, rng: np.random.Generator) -> List[np.ndarray]:
        """Muestras de SU(n); para n impar la primera es diag(1, ζ, ..., ζ^{n-1})."""
        result = []
        if n % 2 == 1:
            zeta = np.exp(2j * np.pi / n)
            result.append(np.diag(zeta ** np.arange(n)))
        while len(result) < samples:
            result.append(random_special_unitary(n, rng))
        return result[:samples]

    def scaling_extension(
        self,
        phi: MatrixMap,
        n: int,
        samples: int,
        rng: np.random.Generator,
    ) -> Callable[[np.ndarray], np.ndarray]:
        """
        Extiende phi de SU(n) a U(n) con U -> ζ·phi(ζ^-1·U), det(ζ^-1·U) = 1.

        Antes de devolver la extensión comprueba phi(ζX) = ζ·phi(X) para toda
        raíz n-ésima de la unidad ζ sobre las muestras.

        Args:
            phi: Aplicación sobre SU(n)
            n: Grado
            samples: Número de muestras X
            rng: Generador aleatorio

        Returns:
            Callable: La extensión a U(n)

        Raises:
            WellDefinednessError: Con el testigo (ζ, X) si la identidad falla
        """
        if n < 2:
            raise BadDimensionError(details={"n": n})

        for matrix in self.scaling_samples(n, samples, rng):
            image = np.asarray(phi(matrix), dtype=complex)
            for k in range(1, n):
                zeta = np.exp(2j * np.pi * k / n)
                deviation = float(np.linalg.norm(np.asarray(phi(zeta * matrix)) - zeta * image))
                if deviation > self.tolerances.spectral:
                    logger.info("Extensión por escalares no bien definida (k=%d)", k)
                    raise WellDefinednessError(zeta, matrix, deviation)

        unitary_tolerance = self.tolerances.unitary

        def extension(unitary: np.ndarray) -> np.ndarray:
            array = MatrixValidator.validate_unitary(unitary, unitary_tolerance)
            zeta = np.exp(1j * np.angle(np.linalg.det(array)) / n)
            return zeta * np.asarray(phi(array / zeta), dtype=complex)

        return extension

    def su2_torus_reordering(self, matrix) -> np.ndarray:
        """
        Ad_{ω(E_1(X))} diag(λ_1, λ_2), con ω(p) = exp(i·p_z²·K).

        p es el punto de Bloch de la recta propia de λ_1 y K = [[0,1],[1,0]].
        Como p y -p dan el mismo p_z², ω coincide en una recta y su ortogonal.
        En una colisión λ_1 = λ_2 devuelve λ_1·I.

        Raises:
            NotSpecialUnitaryError: Si X no está en SU(2)
        """
        array = MatrixValidator.validate_special_unitary(
            matrix, self.tolerances.unitary, self.tolerances.determinant
        )
        if array.shape != (2, 2):
            raise BadDimensionError("Se esperaba una matriz 2×2", details={"shape": list(array.shape)})

        ordered = self.spectral_service.matrix_spectrum_ordered(array)
        eigenvalues = ordered.coordinates.eigenvalues()
        if abs(eigenvalues[0] - eigenvalues[1]) < self.tolerances.distinct:
            return eigenvalues[0] * np.eye(2, dtype=complex)

        line = ordered.frame[:, 0]
        p_z = float(abs(line[0]) ** 2 - abs(line[1]) ** 2)
        omega = linalg.expm(1j * p_z ** 2 * OFF_DIAGONAL_GENERATOR)
        return omega @ np.diag(eigenvalues) @ omega.conj().T

    def non_globality_witness(self) -> NonGlobalityWitness:
        """
        Evalúa la reordenación de SU(2) en dos matrices con espectro (-i, i):
        una con E_1 = span(e_1) y otra con E_1 = span((e_1 + e_2)/√2).
        Una reordenación global daría la misma imagen en ambas.
        """
        diagonal = np.diag([-1j, 1j])
        rotation = np.array([[1.0, -1.0], [1.0, 1.0]], dtype=complex) / np.sqrt(2)
        inputs = (diagonal, rotation @ diagonal @ rotation.conj().T)
        outputs = tuple(self.su2_torus_reordering(x) for x in inputs)
        return NonGlobalityWitness(spectrum=(-1j, 1j), inputs=inputs, outputs=outputs)

    def _commuting_pair(self, domain: str, n: int, rng: np.random.Generator):
        if domain == 'hermitian':
            first, second = rng.normal(size=n), rng.normal(size=n)
        else:
            first, second = random_unit_spectrum(n, rng), random_unit_spectrum(n, rng)
        if domain == 'diagonal-torus':
            return np.diag(first), np.diag(second)
        basis = random_unitary(n, rng)
        return (
            basis @ np.diag(first) @ basis.conj().T,
            basis @ np.diag(second) @ basis.conj().T,
        )

    def check_cs_preservation(
        self,
        f: MatrixMap,
        domain: str,
        n: int,
        samples: int,
        rng: np.random.Generator,
    ) -> CsReport:
        """
        Comprueba por muestreo que f preserva espectros y conmutatividad.

        Los pares que conmutan se generan conjugando dos diagonales por una
        misma unitaria aleatoria. Solo informa; no lanza por violaciones.

        Args:
            f: Aplicación a comprobar
            domain: 'su', 'hermitian' o 'diagonal-torus'
            n: Grado
            samples: Número de pares
            rng: Generador aleatorio

        Returns:
            CsReport: Fallos y peores desviaciones
        """
        if domain not in DOMAINS:
            raise ValidationError("Dominio desconocido", details={"domain": domain, "allowed": list(DOMAINS)})
        if n < 1:
            raise BadDimensionError(details={"n": n})

        report = CsReport(domain=domain, samples=samples)
        tolerance = self.tolerances.spectral
        for _ in range(samples):
            x, y = self._commuting_pair(domain, n, rng)
            fx = np.asarray(f(x), dtype=complex)
            fy = np.asarray(f(y), dtype=complex)

            spectrum = max(
                matching_distance(linalg.eigvals(x), linalg.eigvals(fx)),
                matching_distance(linalg.eigvals(y), linalg.eigvals(fy)),
            )
            commutator = float(np.linalg.norm(fx @ fy - fy @ fx))

            report.worst_spectrum = max(report.worst_spectrum, spectrum)
            report.worst_commutator = max(report.worst_commutator, commutator)
            if spectrum > tolerance:
                report.spectrum_failures += 1
            if commutator > tolerance:
                report.commutativity_failures += 1

        logger.info(
            "Preservación en %s(n=%d): espectro=%d fallos, conmutatividad=%d fallos",
            domain, n, report.spectrum_failures, report.commutativity_failures
        )
        return report
