"""
Lógica de negocio para aplicaciones sobre el toro diagonal.
Este módulo etiqueta las componentes del espacio de configuración con permutaciones,
muestrea aplicaciones sobre esas componentes y clasifica el patrón resultante
(conjugación, reordenación o ninguno). Incluye la aplicación híbrida sobre
diagonales hermíticas 3×3.
"""
from itertools import permutations
from math import factorial
from typing import Callable, Dict, List, Tuple
import logging

import numpy as np

from coxlip.config import Tolerances
from coxlip.models.permutation import Permutation
from coxlip.models.spectral import (
    HermitianDiagonal3,
    HybridSweepReport,
    TorusComponent,
    TorusMapKind,
    TorusMapSampleTable,
    TorusVerdict,
    UnitSpectrum,
)
from coxlip.services.spectral_service import SpectralService
from coxlip.utils.exceptions import (
    BadDimensionError,
    InternalInconsistencyError,
    NotDiagonalValuedError,
    SpectrumBrokenError,
    ValidationError,
)
from coxlip.utils.validators import SpectrumValidator

logger = logging.getLogger(__name__)

# Patrón de entrada -> patrón de salida, con [u v w] = diag(u, v, w) y a <= b <= c
HYBRID_TABLE = {
    'abc': 'abc',
    'acb': 'acb',
    'bac': 'abc',
    'bca': 'acb',
    'cab': 'abc',
    'cba': 'abc',
}


class TorusService:
    """Servicio para el toro diagonal de SU(n)."""

    MIN_DEGREE = 2
    MAX_DEGREE = 6

    def __init__(self, spectral_service: SpectralService, tolerances: Tolerances):
        self.spectral_service = spectral_service
        self.tolerances = tolerances

    def base_point(self, n: int) -> UnitSpectrum:
        """z* = exp(2πi x*) con x*_j = (j - (n+1)/2)/n."""
        x = (np.arange(1, n + 1) - (n + 1) / 2) / n
        return UnitSpectrum(tuple(np.exp(2j * np.pi * x)))

    def torus_components(self, n: int) -> List[TorusComponent]:
        """
        Un representante rho ▷ z* por cada permutación rho de S_n.

        Raises:
            BadDimensionError: Si n no está en 2..6
        """
        if not isinstance(n, int) or not self.MIN_DEGREE <= n <= self.MAX_DEGREE:
            raise BadDimensionError(
                f"n debe estar entre {self.MIN_DEGREE} y {self.MAX_DEGREE}",
                details={"n": n}
            )
        base = self.base_point(n)
        return [TorusComponent(label=rho, spectrum=base.act(rho)) for rho in Permutation.all(n)]

    def component_label(self, spectrum: UnitSpectrum) -> Permutation:
        """
        La única theta con z_j = exp(2πi x_{theta^-1(j)}), x el representante fundamental.

        Cumple label(rho ▷ z) = rho · label(z).

        Raises:
            RepeatedEigenvaluesError: Si hay entradas repetidas
        """
        values = spectrum.as_array()
        SpectrumValidator.validate_unit_spectrum(
            values, self.tolerances.unit_modulus, self.tolerances.determinant
        )
        SpectrumValidator.validate_distinct(values, self.tolerances.distinct)
        coordinates = self.spectral_service.fundamental_select(spectrum)
        return Permutation(tuple(i + 1 for i in coordinates.order))

    def sample_torus_map(self, oracle: Callable[[np.ndarray], np.ndarray], n: int) -> TorusMapSampleTable:
        """
        Evalúa la aplicación en el representante de cada componente y extrae
        tau con f(z)_j = z_{tau(j)}.

        Args:
            oracle: Aplicación sobre matrices; se evalúa en diag(z)
            n: Grado

        Returns:
            TorusMapSampleTable: Una fila por componente

        Raises:
            NotDiagonalValuedError: Si la imagen no es diagonal
            SpectrumBrokenError: Si la diagonal no es una permutación de z
        """
        rows = []
        for component in self.torus_components(n):
            z = component.spectrum.as_array()
            image = np.asarray(oracle(np.diag(z)), dtype=complex)
            diagonal = np.diag(image)
            off_diagonal = float(np.linalg.norm(image - np.diag(diagonal)))
            if off_diagonal > self.tolerances.spectral:
                raise NotDiagonalValuedError(
                    details={"label": str(component.label), "off_diagonal": off_diagonal}
                )

            distances = np.abs(diagonal[:, None] - z[None, :])
            images = []
            for j in range(n):
                matches = np.flatnonzero(distances[j] < self.tolerances.cluster_gap)
                if matches.size != 1:
                    raise SpectrumBrokenError(details={"label": str(component.label), "position": j + 1})
                images.append(int(matches[0]) + 1)
            if sorted(images) != list(range(1, n + 1)):
                raise SpectrumBrokenError(details={"label": str(component.label)})
            rows.append((component.label, Permutation(tuple(images))))

        return TorusMapSampleTable(n=n, rows=tuple(rows))

    def classify_torus_map(self, table: TorusMapSampleTable) -> TorusVerdict:
        """
        Clasifica el patrón theta -> tau_theta.

        Con f(z)_j = z_{tau(j)}, un patrón constante es una conjugación por la
        matriz de permutación correspondiente, y un patrón tau_theta = theta·v
        es una reordenación (depende solo del espectro). Si la tabla no cubre
        las n! componentes el veredicto se marca como parcial.

        Returns:
            TorusVerdict: Veredicto con su permutación o con testigos
        """
        rows = table.rows
        if not rows:
            raise ValidationError("La tabla de muestras está vacía")
        partial = len(rows) < factorial(table.n)

        first_label, first_tau = rows[0]
        breaks_constant = next((row for row in rows if row[1] != first_tau), None)
        if breaks_constant is None:
            return TorusVerdict(TorusMapKind.CONJUGATION, first_tau, partial=partial)

        v = first_label.inverse() * first_tau
        breaks_translation = next((row for row in rows if row[0].inverse() * row[1] != v), None)
        if breaks_translation is None:
            return TorusVerdict(TorusMapKind.REORDERING, v, partial=partial)

        logger.info("Patrón sin forma de conjugación ni de reordenación")
        return TorusVerdict(
            TorusMapKind.NEITHER,
            witnesses=(rows[0], breaks_constant, rows[0], breaks_translation),
            partial=partial,
        )

    def hermitian_hybrid(self, diagonal: HermitianDiagonal3) -> HermitianDiagonal3:
        """
        Aplicación continua sobre diagonales hermíticas 3×3 definida por casos
        según el orden de las entradas.

        Con empates se evalúan todas las filas aplicables y deben coincidir.

        Raises:
            InternalInconsistencyError: Si dos filas aplicables discrepan
        """
        a, b, c = sorted(diagonal.entries)
        named = {'a': a, 'b': b, 'c': c}
        outputs = set()
        for pattern, target in HYBRID_TABLE.items():
            if tuple(named[letter] for letter in pattern) == diagonal.entries:
                outputs.add(tuple(named[letter] for letter in target))
        if len(outputs) != 1:
            raise InternalInconsistencyError(
                details={"entries": list(diagonal.entries), "outputs": sorted(outputs)}
            )
        return HermitianDiagonal3(outputs.pop())

    def hermitian_hybrid_sweep(self, samples: int, rng: np.random.Generator, epsilon: float = 1e-8) -> HybridSweepReport:
        """
        Recorre los patrones de empate (a<b<c, a=b<c, a<b=c, a=b=c) en todos los
        órdenes y mide la continuidad acercándose a cada frontera desde el
        interior de un orden abierto.
        """
        evaluations = 0
        inconsistencies = 0
        continuity_error = 0.0
        preserved = True

        for _ in range(samples):
            a, b, c = np.sort(rng.normal(size=3))
            patterns = [(a, b, c), (a, a, c), (a, b, b), (a, a, a)]
            for values in patterns:
                for ordering in set(permutations(values)):
                    evaluations += 1
                    try:
                        image = self.hermitian_hybrid(HermitianDiagonal3(ordering))
                    except InternalInconsistencyError:
                        inconsistencies += 1
                        continue
                    preserved &= sorted(image.entries) == sorted(ordering)

            for interior in set(permutations((a, b, c))):
                interior = np.array(interior)
                for merged in self._boundaries(interior, a, b, c):
                    boundary = self.hermitian_hybrid(HermitianDiagonal3(tuple(merged)))
                    near = self.hermitian_hybrid(HermitianDiagonal3(tuple(merged + epsilon * (interior - merged))))
                    continuity_error = max(
                        continuity_error,
                        float(np.max(np.abs(np.array(near.entries) - np.array(boundary.entries)))),
                    )

        return HybridSweepReport(
            samples=samples,
            evaluations=evaluations,
            inconsistencies=inconsistencies,
            continuity_error=continuity_error,
            spectrum_preserved=bool(preserved),
            witnesses=self.hybrid_witnesses(),
        )

    @staticmethod
    def _boundaries(interior: np.ndarray, a: float, b: float, c: float) -> List[np.ndarray]:
        """Puntos de frontera obtenidos al fundir b con a, b con c, o las tres."""
        result = []
        for source, target in ((b, a), (b, c)):
            merged = interior.copy()
            merged[interior == source] = target
            result.append(merged)
        result.append(np.full(3, a))
        return result

    def hybrid_witnesses(self) -> Dict[str, Tuple[Tuple[float, ...], Tuple[float, ...]]]:
        """diag(2,1,3) -> diag(1,2,3) rompe la identidad y diag(1,3,2) -> diag(1,3,2) rompe el orden."""
        result = {}
        for name, entries in (('not_conjugation', (2.0, 1.0, 3.0)), ('not_sorted', (1.0, 3.0, 2.0))):
            image = self.hermitian_hybrid(HermitianDiagonal3(entries))
            result[name] = (entries, image.entries)
        return result
