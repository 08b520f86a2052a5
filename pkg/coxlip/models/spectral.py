"""
Modelos de datos para la parte espectral.
Este módulo define espectros unitarios, coordenadas fundamentales, subespacios,
tablas de muestras de aplicaciones del toro y sus veredictos.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from coxlip.models.permutation import Permutation
from coxlip.utils.exceptions import DimensionMismatchError, ValidationError


@dataclass(frozen=True)
class UnitSpectrum:
    """Espectro de n valores de módulo 1 con producto 1."""

    values: Tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(complex(v) for v in self.values))

    @property
    def n(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=complex)

    def act(self, rho: Permutation) -> 'UnitSpectrum':
        """(rho ▷ z)_j = z_{rho^-1(j)}."""
        inverse = rho.inverse()
        return UnitSpectrum(tuple(self.values[inverse(j) - 1] for j in range(1, self.n + 1)))

    def to_dict(self) -> Dict:
        return {'n': self.n, 'values': [[v.real, v.imag] for v in self.values]}


@dataclass(frozen=True)
class FundamentalCoordinates:
    """
    Representante x_1 <= ... <= x_n <= x_1 + 1 con suma 0.

    ``order[i]`` es el índice (desde 0) del valor original que ocupa la posición i.
    """

    x: Tuple[float, ...]
    order: Tuple[int, ...]

    def eigenvalues(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.array(self.x))

    def to_dict(self) -> Dict:
        return {'x': list(self.x)}


@dataclass(frozen=True, eq=False)
class OrderedSpectrum:
    """Coordenadas fundamentales de una matriz con su marco de autovectores en ese orden."""

    coordinates: FundamentalCoordinates
    frame: np.ndarray


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subespacio de C^n dado por una base ortonormal en columnas."""

    basis: np.ndarray

    @classmethod
    def span(cls, vectors, tolerance: float = 1e-10) -> 'Subspace':
        """Base ortonormal del espacio generado por las columnas (o la lista de vectores)."""
        array = np.asarray(vectors, dtype=complex)
        if array.ndim == 1:
            array = array[:, None]
        return cls(linalg.orth(array, rcond=tolerance))

    @classmethod
    def coordinate(cls, n: int, indices: Sequence[int]) -> 'Subspace':
        """Subespacio generado por los vectores canónicos e_i (i desde 1)."""
        return cls(np.eye(n, dtype=complex)[:, [i - 1 for i in indices]])

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=complex)
        if basis.ndim != 2:
            raise DimensionMismatchError("La base debe ser una matriz n×k")
        gram = basis.conj().T @ basis
        if not np.allclose(gram, np.eye(basis.shape[1]), atol=1e-10):
            raise ValidationError("Las columnas de la base no son ortonormales")
        object.__setattr__(self, 'basis', basis)

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T

    def complement(self) -> 'Subspace':
        return Subspace(linalg.null_space(self.basis.conj().T))

    def conjugate(self) -> 'Subspace':
        return Subspace(self.basis.conj())

    def transformed(self, unitary: np.ndarray) -> 'Subspace':
        return Subspace(unitary @ self.basis)

    def principal_angles(self, other: 'Subspace') -> np.ndarray:
        """Ángulos principales con otro subespacio de la misma dimensión ambiente."""
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatchError()
        return linalg.subspace_angles(self.basis, other.basis)

    def distance(self, other: 'Subspace') -> float:
        """Mayor ángulo principal; 0 si y solo si coinciden."""
        if other.dim != self.dim:
            return float(np.pi / 2)
        return float(np.max(self.principal_angles(other))) if self.dim else 0.0


@dataclass(frozen=True)
class HermitianDiagonal3:
    """Diagonal de una matriz hermítica diagonal 3×3."""

    entries: Tuple[float, float, float]

    def __post_init__(self):
        entries = tuple(float(v) for v in self.entries)
        if len(entries) != 3:
            raise DimensionMismatchError("Se esperaban 3 entradas", details={"received": len(entries)})
        object.__setattr__(self, 'entries', entries)


@dataclass(frozen=True)
class TorusComponent:
    """Componente del espacio de configuración con su representante."""

    label: Permutation
    spectrum: UnitSpectrum


@dataclass(frozen=True)
class TorusMapSampleTable:
    """Filas (etiqueta de componente, permutación extraída tau)."""

    n: int
    rows: Tuple[Tuple[Permutation, Permutation], ...]

    def __post_init__(self):
        rows = tuple((label, tau) for label, tau in self.rows)
        object.__setattr__(self, 'rows', rows)
        labels = [label for label, _ in rows]
        if len(set(labels)) != len(labels):
            raise ValidationError("Las etiquetas de componente deben ser distintas")
        for label, tau in rows:
            if label.n != self.n or tau.n != self.n:
                raise DimensionMismatchError("Las permutaciones deben ser de grado n", details={"n": self.n})

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'rows': [{'label': label.to_dict(), 'tau': tau.to_dict()} for label, tau in self.rows],
        }


class TorusMapKind(Enum):
    """Veredicto sobre el patrón de permutaciones."""
    CONJUGATION = 'conjugation'
    REORDERING = 'reordering'
    NEITHER = 'neither'


@dataclass(frozen=True)
class TorusVerdict:
    """
    Resultado de clasificar una tabla de muestras.

    ``permutation`` es la permutación constante (conjugación) o el factor v
    de tau_theta = theta·v (reordenación).
    """

    kind: TorusMapKind
    permutation: Optional[Permutation] = None
    witnesses: Tuple[Tuple[Permutation, Permutation], ...] = ()
    partial: bool = False

    def to_dict(self) -> Dict:
        return {
            'verdict': self.kind.value,
            'permutation': str(self.permutation) if self.permutation is not None else None,
            'witnesses': [{'label': str(label), 'tau': str(tau)} for label, tau in self.witnesses],
            'partial': self.partial,
        }


@dataclass
class CsReport:
    """Resultado de la comprobación de conmutatividad y espectro."""

    domain: str
    samples: int
    spectrum_failures: int = 0
    commutativity_failures: int = 0
    worst_spectrum: float = 0.0
    worst_commutator: float = 0.0

    @property
    def passed(self) -> bool:
        return self.spectrum_failures == 0 and self.commutativity_failures == 0

    def to_dict(self) -> Dict:
        return {
            'domain': self.domain,
            'samples': self.samples,
            'passed': self.passed,
            'spectrum_failures': self.spectrum_failures,
            'commutativity_failures': self.commutativity_failures,
            'worst_spectrum': self.worst_spectrum,
            'worst_commutator': self.worst_commutator,
        }


@dataclass
class HybridSweepReport:
    """Barrido de la aplicación híbrida sobre patrones de empate y fronteras."""

    samples: int
    evaluations: int
    inconsistencies: int
    continuity_error: float
    spectrum_preserved: bool
    witnesses: Dict[str, Tuple[Tuple[float, ...], Tuple[float, ...]]]

    def to_dict(self) -> Dict:
        return {
            'samples': self.samples,
            'evaluations': self.evaluations,
            'inconsistencies': self.inconsistencies,
            'continuity_error': self.continuity_error,
            'spectrum_preserved': self.spectrum_preserved,
            'witnesses': {
                name: {'input': list(source), 'output': list(image)}
                for name, (source, image) in self.witnesses.items()
            },
        }


@dataclass(frozen=True, eq=False)
class NonGlobalityWitness:
    """Dos entradas con el mismo espectro cuyas imágenes no coinciden."""

    spectrum: Tuple[complex, ...]
    inputs: Tuple[np.ndarray, np.ndarray]
    outputs: Tuple[np.ndarray, np.ndarray]

    @property
    def difference(self) -> float:
        return float(np.linalg.norm(self.outputs[0] - self.outputs[1]))

    def to_dict(self) -> Dict:
        return {
            'spectrum': [[v.real, v.imag] for v in self.spectrum],
            'difference': self.difference,
            'outputs_differ': self.difference > 1e-8,
        }
