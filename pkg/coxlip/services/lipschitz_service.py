"""
Lógica de negocio para autoaplicaciones de Lipschitz.
Este módulo verifica condiciones de Lipschitz, construye aplicaciones de plegado y la familia canónica,
y enumera todas las aplicaciones que cumplen una condición.
"""
from collections import OrderedDict
from heapq import heappop, heappush
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
import logging

import numpy as np

from coxlip.models.coxeter import CoxeterSystem
from coxlip.models.infinite_dihedral import DihedralReport, DihedralWord, ball
from coxlip.models.self_map import (
    CanonicalFamilyMember,
    ConditionVariant,
    ContractionReport,
    EnumerationResult,
    LipschitzCondition,
    LipschitzReport,
    SelfMap,
    Violation,
)
from coxlip.services.coxeter_service import CoxeterService
from coxlip.utils.exceptions import (
    ConditionSystemMismatchError,
    ForeignElementError,
    InvalidConditionError,
    SearchBoundExceededError,
    SystemMismatchError,
    ValidationError,
)

logger = logging.getLogger(__name__)

# Por encima de este número de candidatos el oráculo exhaustivo poda por prefijos
LITERAL_FILTER_LIMIT = 10 ** 6


class LipschitzService:
    """Servicio para verificar y enumerar autoaplicaciones de Lipschitz."""

    def __init__(self, coxeter_service: CoxeterService, search_bound: int = 48):
        """
        Inicializa el servicio.

        Args:
            coxeter_service: Servicio de sistemas de Coxeter (reflexiones, Bruhat, componentes)
            search_bound: Orden máximo del grupo para las búsquedas completas
        """
        self.coxeter_service = coxeter_service
        self.search_bound = search_bound

    # --- Condiciones -----------------------------------------------------------

    def full_reflections(self, system: CoxeterSystem) -> LipschitzCondition:
        """Condición con sigma en el conjunto T de todas las reflexiones."""
        reflections = self.coxeter_service.reflections(system)
        return LipschitzCondition(ConditionVariant.FULL_REFLECTION_SET, system, (reflections,) * system.order)

    def simple_generators(self, system: CoxeterSystem) -> LipschitzCondition:
        """Condición con sigma en el conjunto S de generadores."""
        generators = frozenset(g.id for g in system.generators)
        return LipschitzCondition(ConditionVariant.SIMPLE_GENERATORS, system, (generators,) * system.order)

    def per_element(self, system: CoxeterSystem, phi: Sequence[Iterable[int]]) -> LipschitzCondition:
        """
        Condición con un conjunto de reflexiones phi(theta) por elemento.

        Raises:
            InvalidConditionError: Si phi no cubre W o usa algo que no es reflexión
        """
        if len(phi) != system.order:
            raise InvalidConditionError(
                "phi debe tener un conjunto por elemento",
                details={"expected": system.order, "received": len(phi)}
            )
        reflections = self.coxeter_service.reflections(system)
        sigma_sets = tuple(frozenset(int(sigma) for sigma in sigmas) for sigmas in phi)
        for theta, sigmas in enumerate(sigma_sets):
            foreign = sorted(sigmas - reflections)
            if foreign:
                raise InvalidConditionError(details={"theta": theta, "not_reflections": foreign})
        return LipschitzCondition(ConditionVariant.PER_ELEMENT, system, sigma_sets)

    def condition(self, system: CoxeterSystem, variant: ConditionVariant) -> LipschitzCondition:
        """Condición constante por nombre de variante."""
        if variant == ConditionVariant.FULL_REFLECTION_SET:
            return self.full_reflections(system)
        if variant == ConditionVariant.SIMPLE_GENERATORS:
            return self.simple_generators(system)
        raise InvalidConditionError("Las condiciones por elemento requieren una tabla phi")

    # --- Verificación ----------------------------------------------------------

    def is_phi_lipschitz(self, system: CoxeterSystem, tau: SelfMap, condition: LipschitzCondition) -> LipschitzReport:
        """
        Comprueba tau(sigma·theta) en {tau(theta), sigma·tau(theta)} para toda instancia.

        Args:
            system: Sistema sobre el que se verifica
            tau: Autoaplicación a verificar
            condition: Conjuntos de sigmas admitidos

        Returns:
            LipschitzReport: Resultado con todas las violaciones

        Raises:
            ConditionSystemMismatchError: Si tau o la condición son de otro sistema
        """
        self._check_condition(system, condition)
        if tau.system.matrix != system.matrix:
            raise ConditionSystemMismatchError("La aplicación no pertenece al sistema")

        violations = []
        checked = 0
        for theta, sigma, eta in condition.edges():
            checked += 1
            x = tau.table[theta]
            y = tau.table[eta]
            if y != x and y != system.multiply_ids(sigma, x):
                violations.append(Violation(theta, sigma))

        return LipschitzReport(passed=not violations, checked=checked, violations=tuple(violations))

    def folding_map(self, system: CoxeterSystem, generator: int) -> SelfMap:
        """
        Plegado por un generador: w -> w·s si l(ws) < l(w), y w en otro caso.

        Raises:
            ForeignElementError: Si el índice no es un generador
        """
        if not isinstance(generator, (int, np.integer)) or not 0 <= generator < system.rank:
            raise ForeignElementError(
                "El plegado requiere un generador simple",
                details={"generator": generator, "rank": system.rank}
            )
        table = []
        for w in range(system.order):
            ws = int(system.right_table[w, generator])
            table.append(ws if system.length(ws) < system.length(w) else w)
        return SelfMap(system, tuple(table))

    def compose(self, tau1: SelfMap, tau0: SelfMap) -> SelfMap:
        """
        Composición tau1 ∘ tau0.

        Raises:
            SystemMismatchError: Si las aplicaciones son de sistemas distintos
        """
        if tau1.system.matrix != tau0.system.matrix:
            raise SystemMismatchError()
        return SelfMap(tau0.system, tuple(tau1.table[value] for value in tau0.table))

    def bruhat_contraction_check(self, system: CoxeterSystem, tau: SelfMap) -> ContractionReport:
        """
        Compara S-Lipschitz con tau(theta)·tau(eta)^-1 <= theta·eta^-1 para todo par.

        Returns:
            ContractionReport: Los dos booleanos
        """
        s_lipschitz = self.is_phi_lipschitz(system, tau, self.simple_generators(system)).passed
        inverses = system.inverse_table
        pairwise = True
        for theta in range(system.order):
            for eta in range(system.order):
                image = system.multiply_ids(tau.table[theta], int(inverses[tau.table[eta]]))
                source = system.multiply_ids(theta, int(inverses[eta]))
                if not self.coxeter_service.bruhat_leq_ids(system, image, source):
                    pairwise = False
                    break
            if not pairwise:
                break

        if s_lipschitz != pairwise:
            logger.warning("S-Lipschitz y contracción de Bruhat discrepan para %s", tau.table)
        return ContractionReport(s_lipschitz=s_lipschitz, pairwise_bruhat=pairwise)

    # --- Familia canónica -----------------------------------------------------

    def canonical_family_members(self, system: CoxeterSystem) -> List[Tuple[CanonicalFamilyMember, SelfMap]]:
        """
        Miembros distintos de la familia: proyectar sobre un subconjunto de
        componentes (borrando las letras de las demás) y trasladar por w.

        Returns:
            list: Pares (miembro, aplicación) sin tablas repetidas
        """
        blocks = self.coxeter_service.components(system)
        unique: Dict[Tuple[int, ...], Tuple[CanonicalFamilyMember, SelfMap]] = OrderedDict()

        for mask in range(2 ** len(blocks)):
            chosen = frozenset(i for i in range(len(blocks)) if mask >> i & 1)
            letters = {letter for i in chosen for letter in blocks[i]}
            projection = [
                system.evaluate_word([letter for letter in element.word if letter in letters]).id
                for element in system.elements
            ]
            for w in range(system.order):
                table = tuple(system.multiply_ids(p, w) for p in projection)
                if table not in unique:
                    unique[table] = (CanonicalFamilyMember(chosen, w), SelfMap(system, table))

        return list(unique.values())

    def canonical_family(self, system: CoxeterSystem) -> Tuple[SelfMap, ...]:
        """Aplicaciones de la familia canónica, ordenadas por tabla."""
        maps = [tau for _, tau in self.canonical_family_members(system)]
        return tuple(sorted(maps, key=lambda tau: tau.table))

    # --- Búsqueda ---------------------------------------------------------------

    def enumerate_lipschitz(self, system: CoxeterSystem, condition: LipschitzCondition) -> EnumerationResult:
        """
        Enumera todas las autoaplicaciones que cumplen la condición.

        Se recorre un árbol generador del grafo de la condición (con preferencia
        por las aristas de generadores simples); cada arista del árbol ofrece a
        lo sumo dos valores, y tras cada asignación se comprueban todas las
        aristas hacia vértices ya asignados.

        Returns:
            EnumerationResult: Aplicaciones ordenadas por tabla

        Raises:
            SearchBoundExceededError: Si |W| supera la cota de búsqueda
            ConditionSystemMismatchError: Si la condición es de otro sistema
        """
        self._check_condition(system, condition)
        self._check_bound(system)

        order = system.order
        left = system.product_table().tolist()
        adjacency = self._constraint_graph(condition)
        sequence, parents = self._spanning_order(system, adjacency)
        position = {vertex: i for i, vertex in enumerate(sequence)}
        earlier = [
            [(u, sigma) for u, sigma in adjacency[v].items() if position[u] < position[v]]
            for v in sequence
        ]

        values = [-1] * order
        found: List[Tuple[int, ...]] = []
        nodes = 0

        def extend(i: int) -> None:
            nonlocal nodes
            if i == order:
                found.append(tuple(values))
                return
            vertex = sequence[i]
            parent = parents[vertex]
            if parent is None:
                candidates = range(order)
            else:
                source, sigma = parent
                x = values[source]
                candidates = sorted({x, left[sigma][x]})
            for value in candidates:
                nodes += 1
                if all(values[u] == value or values[u] == left[sigma][value] for u, sigma in earlier[i]):
                    values[vertex] = value
                    extend(i + 1)
            values[vertex] = -1

        extend(0)
        found.sort()
        logger.info(
            "Búsqueda por árbol: orden=%d, nodos=%d, aplicaciones=%d",
            order, nodes, len(found)
        )
        return EnumerationResult(
            maps=tuple(SelfMap(system, table) for table in found),
            candidates=order ** order,
            strategy='spanning-tree',
            nodes=nodes,
        )

    def exhaustive_lipschitz(
        self,
        system: CoxeterSystem,
        condition: LipschitzCondition,
        literal_limit: int = LITERAL_FILTER_LIMIT,
    ) -> EnumerationResult:
        """
        Oráculo completo e independiente del árbol generador.

        Si |W|^|W| no supera ``literal_limit`` se filtran literalmente todas las
        tablas; si no, se asignan los elementos en orden de índice probando los
        |W| valores y descartando prefijos que ya violan la condición.

        Returns:
            EnumerationResult: Aplicaciones en orden lexicográfico
        """
        self._check_condition(system, condition)
        order = system.order
        candidates = order ** order

        if candidates <= literal_limit:
            found = self._literal_filter(system, condition)
            strategy = 'literal-filter'
            nodes = candidates
        else:
            found, nodes = self._prefix_filter(system, condition)
            strategy = 'prefix-pruned'

        logger.info(
            "Oráculo exhaustivo (%s): candidatos=%d, aplicaciones=%d",
            strategy, candidates, len(found)
        )
        return EnumerationResult(
            maps=tuple(SelfMap(system, table) for table in found),
            candidates=candidates,
            strategy=strategy,
            nodes=nodes,
        )

    def _literal_filter(self, system: CoxeterSystem, condition: LipschitzCondition) -> List[Tuple[int, ...]]:
        order = system.order
        left = system.product_table()
        tables = np.indices((order,) * order).reshape(order, -1).T
        mask = np.ones(len(tables), dtype=bool)
        for theta, sigma, eta in condition.edges():
            x = tables[:, theta]
            y = tables[:, eta]
            mask &= (y == x) | (y == left[sigma][x])
        return [tuple(int(v) for v in row) for row in tables[mask]]

    def _prefix_filter(self, system: CoxeterSystem, condition: LipschitzCondition):
        order = system.order
        left = system.product_table().tolist()
        adjacency = self._constraint_graph(condition)
        earlier = [[(u, sigma) for u, sigma in adjacency[v].items() if u < v] for v in range(order)]
        values: List[int] = []
        found: List[Tuple[int, ...]] = []
        nodes = 0

        def extend(vertex: int) -> None:
            nonlocal nodes
            if vertex == order:
                found.append(tuple(values))
                return
            for value in range(order):
                nodes += 1
                if all(values[u] == value or values[u] == left[sigma][value] for u, sigma in earlier[vertex]):
                    values.append(value)
                    extend(vertex + 1)
                    values.pop()

        extend(0)
        return found, nodes

    def _constraint_graph(self, condition: LipschitzCondition) -> List[Dict[int, int]]:
        """Grafo no dirigido de la condición; cada arista lleva su única sigma."""
        adjacency: List[Dict[int, int]] = [dict() for _ in range(condition.system.order)]
        for theta, sigma, eta in condition.edges():
            adjacency[theta][eta] = sigma
            adjacency[eta][theta] = sigma
        return adjacency

    def _spanning_order(self, system: CoxeterSystem, adjacency: List[Dict[int, int]]):
        """Bosque generador de Prim con peso 0 en aristas simples y 1 en las demás."""
        simple = {g.id for g in system.generators}
        visited = [False] * system.order
        parents: List[Optional[Tuple[int, int]]] = [None] * system.order
        sequence: List[int] = []
        counter = 0

        for root in range(system.order):
            if visited[root]:
                continue
            heap = [(0, counter, root, None)]
            while heap:
                _, _, vertex, parent = heappop(heap)
                if visited[vertex]:
                    continue
                visited[vertex] = True
                parents[vertex] = parent
                sequence.append(vertex)
                for u, sigma in adjacency[vertex].items():
                    if not visited[u]:
                        counter += 1
                        heappush(heap, (0 if sigma in simple else 1, counter, u, (vertex, sigma)))
        return sequence, parents

    def _check_condition(self, system: CoxeterSystem, condition: LipschitzCondition) -> None:
        if condition.system.matrix != system.matrix:
            raise ConditionSystemMismatchError()

    def _check_bound(self, system: CoxeterSystem) -> None:
        if system.order > self.search_bound:
            raise SearchBoundExceededError(
                details={"order": system.order, "search_bound": self.search_bound}
            )

    # --- Grupo diédrico infinito -------------------------------------------

    def infinite_dihedral_example(self, radius: int) -> DihedralReport:
        """
        Barre la bola de radio dado del grupo diédrico infinito con la aplicación
        1 -> 1, (... a) -> 1, (... b) -> w.

        Solo cuenta instancias con theta y sigma·theta dentro de la bola. Se
        barren la condición con todas las reflexiones y la de generadores.

        Args:
            radius: Radio de la bola (>= 1)

        Returns:
            DihedralReport: Violaciones y testigos

        Raises:
            ValidationError: Si el radio es menor que 1
        """
        if not isinstance(radius, int) or radius < 1:
            raise ValidationError("radius debe ser un entero >= 1", details={"radius": radius})

        def tau(word: DihedralWord) -> DihedralWord:
            if word.letters.endswith('b'):
                return word
            return DihedralWord('')

        words = ball(radius)
        t_violations = []
        t_instances = 0
        for theta in words:
            for eta in words:
                sigma = eta * theta.inverse()
                if not sigma.is_reflection():
                    continue
                t_instances += 1
                if tau(eta) not in (tau(theta), sigma * tau(theta)):
                    t_violations.append((theta, sigma))

        s_violations = []
        s_instances = 0
        for theta in words:
            for sigma in (DihedralWord('a'), DihedralWord('b')):
                eta = sigma * theta
                if eta.length > radius:
                    continue
                s_instances += 1
                if tau(eta) not in (tau(theta), sigma * tau(theta)):
                    s_violations.append((theta, sigma))

        identity, b = DihedralWord(''), DihedralWord('b')
        a = DihedralWord('a')
        report = DihedralReport(
            radius=radius,
            ball_size=len(words),
            t_instances=t_instances,
            t_violations=t_violations,
            s_instances=s_instances,
            s_violations=s_violations,
            non_constant_witness=(identity, b, tau(identity), tau(b)),
            non_translation_witness=(a, tau(a) * a.inverse(), tau(identity)),
        )
        logger.info(
            "Diédrico infinito, radio %d: %d violaciones T de %d, %d violaciones S de %d",
            radius, len(t_violations), t_instances, len(s_violations), s_instances
        )
        return report
