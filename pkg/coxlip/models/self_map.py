"""
Modelos de autoaplicaciones y condiciones de Lipschitz.
Este módulo define las tablas W -> W, las condiciones sobre sigma y los reportes de verificación.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from coxlip.models.coxeter import CoxeterSystem, GroupElement
from coxlip.utils.exceptions import InvalidMapError


@dataclass(frozen=True)
class SelfMap:
    """Aplicación total W -> W guardada como tabla indexada por elemento."""

    system: CoxeterSystem = field(compare=False, hash=False, repr=False)
    table: Tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(value) for value in self.table)
        object.__setattr__(self, 'table', table)
        if len(table) != self.system.order:
            raise InvalidMapError(
                "La tabla debe tener un valor por elemento",
                details={"expected": self.system.order, "received": len(table)}
            )
        bad = [value for value in table if not 0 <= value < self.system.order]
        if bad:
            raise InvalidMapError("La tabla contiene índices inválidos", details={"invalid": bad[:10]})

    @classmethod
    def identity(cls, system: CoxeterSystem) -> 'SelfMap':
        return cls(system, tuple(range(system.order)))

    @classmethod
    def constant(cls, system: CoxeterSystem, value: GroupElement) -> 'SelfMap':
        return cls(system, (system.check(value),) * system.order)

    @classmethod
    def right_translation(cls, system: CoxeterSystem, w: GroupElement) -> 'SelfMap':
        """theta -> theta·w."""
        w_id = system.check(w)
        return cls(system, tuple(system.multiply_ids(theta, w_id) for theta in range(system.order)))

    def __call__(self, element: GroupElement) -> GroupElement:
        return self.system.elements[self.table[self.system.check(element)]]

    def is_constant(self) -> bool:
        return len(set(self.table)) == 1

    def translator(self) -> Optional[int]:
        """Devuelve w si la aplicación es theta -> theta·w, o None."""
        w = self.table[0]
        for theta, value in enumerate(self.table):
            if self.system.multiply_ids(theta, w) != value:
                return None
        return w

    def is_right_translation(self) -> bool:
        return self.translator() is not None

    def word_map(self) -> Dict[str, str]:
        """Forma legible: palabra del argumento -> palabra de la imagen."""
        elements = self.system.elements
        return {elements[theta].word_text(): elements[value].word_text() for theta, value in enumerate(self.table)}


class ConditionVariant(Enum):
    """Conjunto de sigmas admitido en la condición."""
    FULL_REFLECTION_SET = 'full'
    SIMPLE_GENERATORS = 'simple'
    PER_ELEMENT = 'per-element'


@dataclass(frozen=True)
class LipschitzCondition:
    """
    Condición tau(sigma·theta) en {tau(theta), sigma·tau(theta)}.

    Para ``PER_ELEMENT`` la tabla ``phi`` asigna a cada elemento un conjunto de reflexiones.
    """

    variant: ConditionVariant
    system: CoxeterSystem = field(compare=False, repr=False)
    sigma_sets: Tuple[FrozenSet[int], ...] = field(repr=False)

    def sigmas(self, theta: int) -> FrozenSet[int]:
        return self.sigma_sets[theta]

    def edges(self) -> Iterable[Tuple[int, int, int]]:
        """Recorre las instancias (theta, sigma, sigma·theta) de la condición."""
        for theta in range(self.system.order):
            for sigma in sorted(self.sigma_sets[theta]):
                yield theta, sigma, self.system.multiply_ids(sigma, theta)


@dataclass(frozen=True)
class CanonicalFamilyMember:
    """Proyección sobre las componentes elegidas seguida de traslación por la derecha."""

    chosen_components: FrozenSet[int]
    translator: int


@dataclass(frozen=True)
class Violation:
    """Par (theta, sigma) que incumple la condición."""

    theta: int
    sigma: int


@dataclass
class LipschitzReport:
    """Resultado de una verificación de Lipschitz."""

    passed: bool
    checked: int
    violations: Sequence[Violation] = ()

    def to_dict(self, system: CoxeterSystem) -> Dict:
        elements = system.elements
        return {
            'passed': self.passed,
            'checked': self.checked,
            'violations': [
                {'theta': elements[v.theta].word_text(), 'sigma': elements[v.sigma].word_text()}
                for v in self.violations
            ],
        }


@dataclass(frozen=True)
class ContractionReport:
    """Comparación entre S-Lipschitz y contracción de Bruhat por pares."""

    s_lipschitz: bool
    pairwise_bruhat: bool


@dataclass
class EnumerationResult:
    """Aplicaciones encontradas por una búsqueda completa."""

    maps: Tuple[SelfMap, ...]
    candidates: int
    strategy: str
    nodes: int = 0

    def tables(self) -> FrozenSet[Tuple[int, ...]]:
        return frozenset(m.table for m in self.maps)
