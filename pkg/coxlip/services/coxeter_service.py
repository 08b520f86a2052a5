"""
Lógica de negocio para sistemas de Coxeter.
Este módulo materializa grupos de Coxeter finitos y calcula reflexiones, orden de Bruhat y componentes.
"""
from collections import deque
from functools import lru_cache
from typing import FrozenSet, List, Tuple
import logging

import numpy as np

from coxlip.models.coxeter import CoxeterMatrix, CoxeterSystem, GroupElement
from coxlip.utils.exceptions import OrderExceededError
from coxlip.utils.validators import CoxeterMatrixValidator

logger = logging.getLogger(__name__)


class CoxeterService:
    """Servicio para construir y consultar sistemas de Coxeter."""

    def __init__(self, max_order: int = 5040, root_tolerance: float = 1e-9):
        """
        Inicializa el servicio.

        Args:
            max_order: Orden máximo admitido antes de abortar la clausura
            root_tolerance: Tolerancia absoluta para identificar raíces
        """
        self.max_order = max_order
        self.root_tolerance = root_tolerance

    def build_system(self, matrix: CoxeterMatrix, max_order: int = None) -> CoxeterSystem:
        """
        Materializa el grupo finito de una matriz de Coxeter.

        La representación geométrica se usa solo para enumerar raíces; después
        cada generador queda como permutación exacta de la lista de raíces y
        los elementos se descubren en anchura desde la identidad.

        Args:
            matrix: Matriz de Coxeter finitaria
            max_order: Cota del orden (por defecto la del servicio)

        Returns:
            CoxeterSystem: Sistema con todos sus elementos

        Raises:
            InvalidMatrixError: Si la matriz no cumple las invariantes
            NotFinitaryError: Si alguna entrada es infinito
            OrderExceededError: Si el grupo supera max_order
        """
        CoxeterMatrixValidator.validate(matrix.rank, matrix.entries)
        bound = max_order or self.max_order

        roots, generator_permutations = self._enumerate_roots(matrix, bound)
        positive = np.all(roots >= -self.root_tolerance, axis=1)
        elements, permutations, right_table = self._enumerate_elements(generator_permutations, bound)

        logger.debug(
            "Sistema construido: rango=%d, raíces=%d, orden=%d",
            matrix.rank, len(roots), len(elements)
        )
        return CoxeterSystem(
            matrix=matrix,
            elements=elements,
            permutations=permutations,
            right_table=right_table,
            generator_permutations=generator_permutations,
            positive_roots=positive,
        )

    def _enumerate_roots(self, matrix: CoxeterMatrix, bound: int) -> Tuple[np.ndarray, np.ndarray]:
        """Recorre en anchura la órbita de las raíces simples bajo los generadores."""
        rank = matrix.rank
        m = np.array(matrix.entries, dtype=float)
        gram = -np.cos(np.pi / m)
        np.fill_diagonal(gram, 1.0)

        roots = np.zeros((bound + rank, rank))
        roots[:rank] = np.eye(rank)
        count = rank
        transitions: List[List[int]] = []
        queue = deque(range(rank))

        while queue:
            r = queue.popleft()
            vector = roots[r]
            images = []
            for s in range(rank):
                image = vector.copy()
                image[s] -= 2.0 * gram[s] @ vector
                matches = np.flatnonzero(np.all(np.abs(roots[:count] - image) <= self.root_tolerance, axis=1))
                if matches.size:
                    images.append(int(matches[0]))
                    continue
                if count >= bound:
                    raise OrderExceededError(
                        f"La enumeración de raíces supera {bound}",
                        details={"max_order": bound}
                    )
                roots[count] = image
                images.append(count)
                queue.append(count)
                count += 1
            while len(transitions) <= r:
                transitions.append([])
            transitions[r] = images

        generator_permutations = np.array(transitions, dtype=np.int32).T.copy()
        return roots[:count], generator_permutations

    def _enumerate_elements(self, generator_permutations: np.ndarray, bound: int):
        """
        Clausura en anchura desde la identidad.

        Se procesa cada nivel en orden ShortLex y se añaden generadores por la
        derecha en orden de índice, así la primera palabra encontrada es la
        ShortLex mínima.
        """
        rank, root_total = generator_permutations.shape
        identity = np.arange(root_total, dtype=np.int32)

        permutations = [identity]
        words = [()]
        seen = {identity.tobytes(): 0}
        right_rows: List[List[int]] = []
        position = 0

        while position < len(permutations):
            current = permutations[position]
            row = []
            for s in range(rank):
                product = current[generator_permutations[s]]
                key = product.tobytes()
                target = seen.get(key)
                if target is None:
                    if len(permutations) >= bound:
                        raise OrderExceededError(
                            f"El grupo supera el orden máximo {bound}",
                            details={"max_order": bound}
                        )
                    target = len(permutations)
                    seen[key] = target
                    permutations.append(product)
                    words.append(words[position] + (s,))
                row.append(target)
            right_rows.append(row)
            position += 1

        elements = [GroupElement(id=i, word=word) for i, word in enumerate(words)]
        return elements, np.array(permutations, dtype=np.int32), np.array(right_rows, dtype=np.int64)

    def reflections(self, system: CoxeterSystem) -> FrozenSet[int]:
        """
        Conjunto de reflexiones { w s w^-1 } como índices de elementos.

        Args:
            system: Sistema materializado

        Returns:
            frozenset: Índices de las reflexiones
        """
        return _reflections(system)

    def bruhat_leq(self, system: CoxeterSystem, u: GroupElement, w: GroupElement) -> bool:
        """
        Decide u <= w en el orden de Bruhat con la propiedad de elevación.

        Recorre la palabra canónica de w desde la derecha: si ws < w, entonces
        u <= w equivale a us <= ws cuando us < u, y a u <= ws en otro caso.
        Se corta en cuanto l(u) > l(w) y termina con u <= e, es decir u = e.
        Equivale al criterio de subpalabras sin enumerarlas.

        Args:
            system: Sistema materializado
            u: Elemento candidato a ser menor
            w: Elemento de referencia

        Returns:
            bool: True si u <= w
        """
        return self.bruhat_leq_ids(system, system.check(u), system.check(w))

    def bruhat_leq_ids(self, system: CoxeterSystem, u: int, w: int) -> bool:
        """Variante de ``bruhat_leq`` sobre índices."""
        table = system.right_table
        while w != 0:
            if system.length(u) > system.length(w):
                return False
            s = system.elements[w].word[-1]
            w = int(table[w, s])
            us = int(table[u, s])
            if system.length(us) < system.length(u):
                u = us
        return u == 0

    def components(self, system: CoxeterSystem) -> Tuple[Tuple[int, ...], ...]:
        """
        Partición de los generadores en componentes conexas del grafo de Coxeter.

        Dos generadores son adyacentes si m(s, s') >= 3.

        Returns:
            tuple: Bloques ordenados por su menor generador
        """
        entries = system.matrix.entries
        rank = system.rank
        seen = [False] * rank
        blocks = []
        for start in range(rank):
            if seen[start]:
                continue
            block = []
            stack = [start]
            seen[start] = True
            while stack:
                s = stack.pop()
                block.append(s)
                for t in range(rank):
                    if not seen[t] and entries[s][t] >= 3:
                        seen[t] = True
                        stack.append(t)
            blocks.append(tuple(sorted(block)))
        return tuple(blocks)

    def longest_element(self, system: CoxeterSystem) -> GroupElement:
        """Elemento de longitud máxima (único en un grupo finito)."""
        return max(system.elements, key=lambda element: element.length)


@lru_cache(maxsize=32)
def _reflections(system: CoxeterSystem) -> FrozenSet[int]:
    found = set()
    for w in range(system.order):
        inverse = system.inverse_id(w)
        for s in system.generators:
            found.add(system.multiply_ids(system.multiply_ids(w, s.id), inverse))
    return frozenset(found)
