"""
Lógica de negocio para subespacios de C^n.
Este módulo decide la perpendicularidad débil (proyecciones que conmutan), construye
cadenas de subespacios débilmente perpendiculares entre dos subespacios de la misma
dimensión, y calcula los testigos aislados U_V junto con el transporte de autoespacios
a través de una aplicación.
"""
from typing import Callable, List, Tuple
import logging

import numpy as np
from scipy import linalg

from coxlip.config import Tolerances
from coxlip.models.spectral import Subspace
from coxlip.utils.exceptions import (
    BadDimensionError,
    ChainUnavailableError,
    ClusterCollapseError,
    DimensionMismatchError,
    ValidationError,
)

logger = logging.getLogger(__name__)

SEGMENTS = ('initial', 'terminal')


def _unit(vector: np.ndarray) -> np.ndarray:
    return vector / np.linalg.norm(vector)


def _remove_line(basis: np.ndarray, line: np.ndarray) -> np.ndarray:
    """Base ortonormal de span(basis) ⊖ line, con line contenida en span(basis)."""
    coefficients = basis.conj().T @ line
    return basis @ linalg.null_space(coefficients[None, :].conj())


class SubspaceService:
    """Servicio de subespacios y testigos aislados."""

    def __init__(self, tolerances: Tolerances):
        self.tolerances = tolerances

    @staticmethod
    def _check_ambient(first: Subspace, second: Subspace) -> None:
        if first.ambient_dim != second.ambient_dim:
            raise DimensionMismatchError(
                "Los subespacios viven en espacios distintos",
                details={"first": first.ambient_dim, "second": second.ambient_dim}
            )

    def commutator_norm(self, first: Subspace, second: Subspace) -> float:
        """‖P_V P_V' - P_V' P_V‖ en norma de Frobenius."""
        self._check_ambient(first, second)
        p, q = first.projector(), second.projector()
        return float(np.linalg.norm(p @ q - q @ p))

    def weak_perp(self, first: Subspace, second: Subspace) -> bool:
        """
        Las proyecciones ortogonales sobre V y V' conmutan.

        Raises:
            DimensionMismatchError: Si la dimensión ambiente difiere
        """
        return self.commutator_norm(first, second) < self.tolerances.projection

    def same_subspace(self, first: Subspace, second: Subspace) -> bool:
        self._check_ambient(first, second)
        if first.dim != second.dim:
            return False
        return float(np.linalg.norm(first.projector() - second.projector())) < self.tolerances.projection

    def weak_perp_chain(self, first: Subspace, second: Subspace) -> Tuple[Subspace, ...]:
        """
        Cadena V = V_0, ..., V_m = V' con pares consecutivos débilmente perpendiculares.

        Para k <= n-2 se intercambia una recta por paso: con W común, W⊕ℓ pasa a
        W⊕ℓ″ y luego a W⊕ℓ′, donde ℓ″ es ortogonal a ℓ, ℓ′ y W. Para k = n-1
        basta un término intermedio ℓ″^⊥ con ℓ″ ⊂ V ∩ V'.

        Raises:
            DimensionMismatchError: Si las dimensiones no coinciden
            ChainUnavailableError: Si n = 2 y las rectas no son iguales ni ortogonales
        """
        self._check_ambient(first, second)
        if first.dim != second.dim:
            raise DimensionMismatchError(
                "Los subespacios deben tener la misma dimensión",
                details={"first": first.dim, "second": second.dim}
            )
        if self.same_subspace(first, second):
            return (first,)
        if self.weak_perp(first, second):
            return (first, second)

        n, k = first.ambient_dim, first.dim
        if k <= n - 2:
            middle = self._line_exchange_chain(first, second)
        elif n >= 3:
            middle = [self._hyperplane_middle(first, second)]
        else:
            raise ChainUnavailableError(details={"n": n, "k": k})

        chain = (first, *middle, second)
        logger.debug("Cadena de %d subespacios para n=%d, k=%d", len(chain), n, k)
        return chain

    def _line_exchange_chain(self, first: Subspace, second: Subspace) -> List[Subspace]:
        targets = second.basis
        remaining = first.basis
        chain: List[Subspace] = []

        for i in range(second.dim):
            target = targets[:, i]
            projected = remaining @ (remaining.conj().T @ target)
            if np.linalg.norm(projected) > self.tolerances.projection:
                line = _unit(projected)
            else:
                line = remaining[:, 0]
            rest = _remove_line(remaining, line)
            common = np.hstack([targets[:, :i], rest])

            if abs(np.vdot(line, target)) < 1 - self.tolerances.projection:
                blocker = np.hstack([common, line[:, None], target[:, None]])
                spare = linalg.null_space(blocker.conj().T)[:, 0]
                chain.append(Subspace(np.hstack([common, spare[:, None]])))
                chain.append(Subspace(np.hstack([common, target[:, None]])))
            remaining = rest

        # el último término es V' salvo redondeo; se sustituye por la entrada exacta
        while chain and self.same_subspace(chain[-1], second):
            chain.pop()
        return chain

    @staticmethod
    def _hyperplane_middle(first: Subspace, second: Subspace) -> Subspace:
        normals = np.hstack([first.complement().basis, second.complement().basis])
        common = linalg.null_space(normals.conj().T)
        spare = common[:, 0]
        return Subspace(linalg.null_space(spare[None, :].conj()))

    @staticmethod
    def _exponents(n: int, k: int, segment: str) -> Tuple[float, float]:
        """Exponentes (de V, de V^⊥) con k·a + (n-k)·b = 0 y salto n/(n+1)."""
        if segment == 'initial':
            return -(n - k) / (n + 1), k / (n + 1)
        return (n - k) / (n + 1), -k / (n + 1)

    def isolated_witness(self, subspace: Subspace, segment: str = 'initial') -> np.ndarray:
        """
        U_V = exp(2πia)·P_V + exp(2πib)·P_{V^⊥} en SU(n), con E_S(U_V) = V.

        En el segmento inicial a = -(n-k)/(n+1) y b = k/(n+1); en el terminal
        V recibe el autovalor mayor.

        Raises:
            BadDimensionError: Si dim V = 0
            ValidationError: Si el segmento no es 'initial' ni 'terminal'
        """
        if segment not in SEGMENTS:
            raise ValidationError("Segmento desconocido", details={"segment": segment})
        n, k = subspace.ambient_dim, subspace.dim
        if k == 0:
            raise BadDimensionError("V no puede ser el subespacio nulo", details={"n": n})
        if k == n:
            return np.eye(n, dtype=complex)

        a, b = self._exponents(n, k, segment)
        projector = subspace.projector()
        return np.exp(2j * np.pi * a) * projector + np.exp(2j * np.pi * b) * (np.eye(n) - projector)

    def isolated_eigenvalue(self, subspace: Subspace, segment: str = 'initial') -> complex:
        """Autovalor lambda_S de U_V asociado a V."""
        n, k = subspace.ambient_dim, subspace.dim
        if k == n:
            return 1.0 + 0.0j
        a, _ = self._exponents(n, k, segment)
        return complex(np.exp(2j * np.pi * a))

    def eigenspace_transport(
        self,
        phi: Callable[[np.ndarray], np.ndarray],
        subspace: Subspace,
        segment: str = 'initial',
    ) -> Subspace:
        """
        Autoespacio de phi(U_V) para el autovalor lambda_S de U_V.

        Args:
            phi: Aplicación sobre matrices
            subspace: V
            segment: 'initial' o 'terminal'

        Returns:
            Subspace: Autoespacio con base ortonormal

        Raises:
            ClusterCollapseError: Si phi(U_V) no tiene exactamente dim V autovalores cerca de lambda_S
        """
        witness = self.isolated_witness(subspace, segment)
        target = self.isolated_eigenvalue(subspace, segment)
        image = np.asarray(phi(witness), dtype=complex)
        gap = self.tolerances.cluster_gap

        _, vectors, selected = linalg.schur(
            image, output='complex', sort=lambda value: abs(value - target) < gap
        )
        if selected != subspace.dim:
            raise ClusterCollapseError(
                details={"expected": subspace.dim, "found": int(selected)}
            )
        return Subspace(vectors[:, :selected])
