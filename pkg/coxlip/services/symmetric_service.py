"""
Lógica de negocio para el grupo simétrico.
Este módulo especializa las condiciones de Lipschitz a S_n: transposiciones cíclicas,
enumeración de las aplicaciones cíclicamente Lipschitz, descomposición del ciclo
y el ejemplo que solo cumple la condición con generadores.
"""
from dataclasses import dataclass
from math import factorial
from typing import Dict, FrozenSet, List, Tuple
import logging

from coxlip.models.coxeter import CoxeterMatrix, CoxeterSystem, GroupElement
from coxlip.models.permutation import CycleDecomposition, Permutation, product
from coxlip.models.self_map import EnumerationResult, LipschitzCondition, LipschitzReport, SelfMap
from coxlip.services.coxeter_service import CoxeterService
from coxlip.services.lipschitz_service import LipschitzService
from coxlip.utils.exceptions import (
    ConventionMismatchError,
    InvalidPermutationError,
    SearchBoundExceededError,
    ValidationError,
)

logger = logging.getLogger(__name__)


class PermutationCodec:
    """Isomorfismo entre S_n y el sistema A_{n-1}: el generador s_i va a (i+1 i+2)."""

    def __init__(self, system: CoxeterSystem, n: int):
        self.system = system
        self.n = n
        generators = [Permutation.transposition(n, i + 1, i + 2) for i in range(n - 1)]
        self._to_permutation: List[Permutation] = [
            product([generators[letter] for letter in element.word], n) for element in system.elements
        ]
        self._to_id: Dict[Permutation, int] = {perm: i for i, perm in enumerate(self._to_permutation)}

    def to_permutation(self, element_id: int) -> Permutation:
        return self._to_permutation[element_id]

    def to_id(self, permutation: Permutation) -> int:
        if permutation.n != self.n:
            raise InvalidPermutationError(
                "La permutación no es del grado del sistema",
                details={"n": permutation.n, "expected": self.n}
            )
        return self._to_id[permutation]

    def to_element(self, permutation: Permutation) -> GroupElement:
        return self.system.elements[self.to_id(permutation)]

    def self_map(self, images: Dict[Permutation, Permutation]) -> SelfMap:
        """Traduce una aplicación theta -> tau(theta) entre permutaciones a una tabla."""
        table = [0] * self.system.order
        for theta, value in images.items():
            table[self.to_id(theta)] = self.to_id(value)
        return SelfMap(self.system, tuple(table))


@dataclass
class GeneratorOnlyReport:
    """Certificados del ejemplo que solo cumple la condición con generadores."""

    tau: SelfMap
    generator_only: LipschitzReport
    full_cyclic: LipschitzReport
    constant_or_translation: bool
    in_enumerated_set: bool


class SymmetricService:
    """Servicio para las especializaciones al grupo simétrico."""

    def __init__(self, coxeter_service: CoxeterService, lipschitz_service: LipschitzService):
        """
        Inicializa el servicio.

        Args:
            coxeter_service: Servicio de sistemas de Coxeter
            lipschitz_service: Servicio de verificación y búsqueda
        """
        self.coxeter_service = coxeter_service
        self.lipschitz_service = lipschitz_service
        self._codecs: Dict[int, PermutationCodec] = {}

    def codec(self, n: int) -> PermutationCodec:
        """Codec de S_n (se construye una vez por grado)."""
        if not isinstance(n, int) or n < 2:
            raise ValidationError("n debe ser un entero >= 2", details={"n": n})
        if n not in self._codecs:
            system = self.coxeter_service.build_system(CoxeterMatrix.type_a(n - 1))
            self._codecs[n] = PermutationCodec(system, n)
        return self._codecs[n]

    @staticmethod
    def cyclic_transpositions(n: int) -> List[Permutation]:
        """(1 2), (2 3), ..., (n-1 n), (n 1) sin repeticiones."""
        result = []
        for i in range(1, n + 1):
            xi = Permutation.transposition(n, i, i % n + 1)
            if xi not in result:
                result.append(xi)
        return result

    @staticmethod
    def adjacent_transpositions(n: int) -> List[Permutation]:
        return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]

    def _conjugated_condition(self, n: int, xis: List[Permutation]) -> LipschitzCondition:
        codec = self.codec(n)
        phi = []
        for theta_id in range(codec.system.order):
            theta = codec.to_permutation(theta_id)
            phi.append({codec.to_id(theta.conjugate(xi)) for xi in xis})
        return self.lipschitz_service.per_element(codec.system, phi)

    def cyclic_phi(self, n: int) -> LipschitzCondition:
        """
        phi(theta) = { theta xi theta^-1 : xi transposición cíclica }.

        Como theta·xi = (Ad_theta xi)·theta, la condición por la derecha
        tau(theta·xi) en {tau(theta), Ad_theta(xi)·tau(theta)} es esta
        condición por la izquierda.
        """
        return self._conjugated_condition(n, self.cyclic_transpositions(n))

    def generator_only_phi(self, n: int) -> LipschitzCondition:
        """Como ``cyclic_phi`` pero solo con las transposiciones adyacentes."""
        return self._conjugated_condition(n, self.adjacent_transpositions(n))

    def _check_search_bound(self, n: int) -> None:
        if not isinstance(n, int) or n < 2:
            raise ValidationError("n debe ser un entero >= 2", details={"n": n})
        if factorial(n) > self.lipschitz_service.search_bound:
            raise SearchBoundExceededError(
                details={"order": factorial(n), "search_bound": self.lipschitz_service.search_bound}
            )

    def enumerate_cyclic_lipschitz(self, n: int) -> EnumerationResult:
        """
        Todas las autoaplicaciones de S_n que cumplen la condición cíclica (búsqueda por árbol).

        Raises:
            SearchBoundExceededError: Si n! supera la cota de búsqueda
        """
        self._check_search_bound(n)
        codec = self.codec(n)
        return self.lipschitz_service.enumerate_lipschitz(codec.system, self.cyclic_phi(n))

    def exhaustive_cyclic_lipschitz(self, n: int) -> EnumerationResult:
        """Igual que ``enumerate_cyclic_lipschitz`` pero con el oráculo exhaustivo."""
        self._check_search_bound(n)
        codec = self.codec(n)
        return self.lipschitz_service.exhaustive_lipschitz(codec.system, self.cyclic_phi(n))

    def constants_and_translations(self, n: int) -> FrozenSet[Tuple[int, ...]]:
        """Tablas de las aplicaciones constantes y de las traslaciones por la derecha."""
        system = self.codec(n).system
        tables = set()
        for w in system.elements:
            tables.add(SelfMap.constant(system, w).table)
            tables.add(SelfMap.right_translation(system, w).table)
        return frozenset(tables)

    def classify_edges(self, tau: SelfMap, n: int) -> Dict[str, int]:
        """
        Cuenta, para cada theta y cada transposición cíclica xi, si tau
        crece (tau(theta·xi) = Ad_theta(xi)·tau(theta)) o se queda
        (tau(theta·xi) = tau(theta)).
        """
        codec = self.codec(n)
        system = codec.system
        counts = {'grow': 0, 'linger': 0, 'other': 0}
        for theta_id in range(system.order):
            theta = codec.to_permutation(theta_id)
            value = codec.to_permutation(tau.table[theta_id])
            for xi in self.cyclic_transpositions(n):
                image = codec.to_permutation(tau.table[codec.to_id(theta * xi)])
                if image == value:
                    counts['linger'] += 1
                elif image == theta.conjugate(xi) * value:
                    counts['grow'] += 1
                else:
                    counts['other'] += 1
        return counts

    def cycle_decomposition_check(
        self,
        n: int,
        theta: Permutation,
        j: int,
        left_to_right: bool = False,
    ) -> CycleDecomposition:
        """
        Verifica theta·eta = theta_{jn} ··· theta_{j1}·theta con eta = (1 2 ... n)
        y theta_{jk} = Ad_theta(j j+k), índices módulo n en {1..n}.

        Args:
            n: Grado
            theta: Permutación de grado n
            j: Índice en {1..n}
            left_to_right: Evalúa los productos aplicando primero el factor izquierdo

        Returns:
            CycleDecomposition: Factores y resultado

        Raises:
            ConventionMismatchError: Si la identidad falla con la convención pedida
        """
        if theta.n != n:
            raise InvalidPermutationError("theta no es de grado n", details={"n": n})
        if not 1 <= j <= n:
            raise ValidationError("j debe estar en 1..n", details={"j": j, "n": n})

        factors = tuple(
            theta.conjugate(Permutation.transposition(n, j, (j + k - 1) % n + 1))
            for k in range(1, n + 1)
        )
        eta = Permutation.cycle(n, *range(1, n + 1))

        def compose(sequence: List[Permutation]) -> Permutation:
            ordered = list(reversed(sequence)) if left_to_right else sequence
            return product(ordered, n)

        lhs = compose([theta, eta])
        rhs = compose(list(reversed(factors)) + [theta])
        holds = lhs == rhs
        if not holds:
            raise ConventionMismatchError(
                details={"n": n, "theta": str(theta), "j": j, "left_to_right": left_to_right}
            )
        return CycleDecomposition(n=n, theta=theta, j=j, factors=factors, holds=holds)

    def generator_only_example(self) -> GeneratorOnlyReport:
        """
        Aplicación de S_3 que cumple la condición con las transposiciones
        adyacentes pero no con todas las cíclicas:
        e, (2 3) -> e; (1 2) -> (1 2); (1 3), (1 3 2) -> (1 3); (1 2 3) -> (1 2 3).
        """
        n = 3
        codec = self.codec(n)

        def parse(text: str) -> Permutation:
            return Permutation.parse(n, text)

        images = {
            parse('e'): parse('e'),
            parse('(2 3)'): parse('e'),
            parse('(1 2)'): parse('(1 2)'),
            parse('(1 3)'): parse('(1 3)'),
            parse('(1 3 2)'): parse('(1 3)'),
            parse('(1 2 3)'): parse('(1 2 3)'),
        }
        tau = codec.self_map(images)
        system = codec.system

        generator_only = self.lipschitz_service.is_phi_lipschitz(system, tau, self.generator_only_phi(n))
        full_cyclic = self.lipschitz_service.is_phi_lipschitz(system, tau, self.cyclic_phi(n))
        enumerated = self.enumerate_cyclic_lipschitz(n).tables()

        logger.info(
            "Ejemplo con generadores: generadores=%s, cíclica=%s",
            generator_only.passed, full_cyclic.passed
        )
        return GeneratorOnlyReport(
            tau=tau,
            generator_only=generator_only,
            full_cyclic=full_cyclic,
            constant_or_translation=tau.is_constant() or tau.is_right_translation(),
            in_enumerated_set=tau.table in enumerated,
        )
