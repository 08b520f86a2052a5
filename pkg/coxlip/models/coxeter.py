"""
Modelos de datos para sistemas de Coxeter.
Este módulo define la matriz de Coxeter, los elementos del grupo y el sistema materializado.

Los elementos se guardan como permutaciones exactas de la lista de raíces;
la aritmética del grupo no usa coma flotante.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from coxlip.utils.exceptions import ForeignElementError


@dataclass(frozen=True)
class CoxeterMatrix:
    """
    Matriz de Coxeter m(s, s').

    El valor 0 codifica infinito y siempre es rechazado al construir el sistema.
    """

    rank: int
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], rank: int = None) -> 'CoxeterMatrix':
        """Construye la matriz a partir de filas (listas anidadas)."""
        entries = tuple(tuple(int(value) for value in row) for row in rows)
        return cls(rank=len(entries) if rank is None else rank, entries=entries)

    @classmethod
    def type_a(cls, rank: int) -> 'CoxeterMatrix':
        """Tipo A_rank, el grupo simétrico S_{rank+1} con transposiciones adyacentes."""
        rows = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(rank)] for i in range(rank)]
        return cls.from_rows(rows)

    @classmethod
    def dihedral(cls, m: int) -> 'CoxeterMatrix':
        """Tipo I_2(m), el grupo diédrico de orden 2m."""
        return cls.from_rows([[1, m], [m, 1]])

    @classmethod
    def block_diagonal(cls, *blocks: 'CoxeterMatrix') -> 'CoxeterMatrix':
        """Producto directo: bloques en la diagonal y 2 (generadores que conmutan) fuera."""
        rank = sum(block.rank for block in blocks)
        rows = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        offset = 0
        for block in blocks:
            for i in range(block.rank):
                for j in range(block.rank):
                    rows[offset + i][offset + j] = block.entries[i][j]
            offset += block.rank
        return cls.from_rows(rows)

    def permuted(self, order: Sequence[int]) -> 'CoxeterMatrix':
        """Reindexa los generadores: el nuevo generador i es el antiguo order[i]."""
        return self.from_rows([[self.entries[a][b] for b in order] for a in order])

    def to_dict(self) -> Dict:
        return {'rank': self.rank, 'm': [list(row) for row in self.entries]}


@dataclass(frozen=True)
class GroupElement:
    """Elemento de W con su palabra reducida ShortLex mínima."""

    id: int
    word: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def word_text(self) -> str:
        """Palabra con índices desde 1; la identidad se escribe ``e``."""
        return ' '.join(str(letter + 1) for letter in self.word) if self.word else 'e'


class CoxeterSystem:
    """
    Sistema de Coxeter finito totalmente materializado.

    Los elementos están indexados en orden ShortLex (índice 0 = identidad).
    ``right_table[w, s]`` es el índice de w·s.
    """

    def __init__(
        self,
        matrix: CoxeterMatrix,
        elements: Sequence[GroupElement],
        permutations: np.ndarray,
        right_table: np.ndarray,
        generator_permutations: np.ndarray,
        positive_roots: np.ndarray,
    ):
        """
        Inicializa el sistema.

        Args:
            matrix: Matriz de Coxeter de partida
            elements: Elementos en orden ShortLex
            permutations: Fila w = acción de w sobre los índices de raíces
            right_table: Tabla |W|×rank de multiplicación por la derecha por generadores
            generator_permutations: Acción de cada generador sobre las raíces
            positive_roots: Máscara booleana de raíces positivas
        """
        self.matrix = matrix
        self.elements: Tuple[GroupElement, ...] = tuple(elements)
        self._permutations = permutations
        self._permutations.setflags(write=False)
        self.right_table = right_table
        self.right_table.setflags(write=False)
        self.generator_permutations = generator_permutations
        self.positive_roots = positive_roots
        self._index = {permutations[i].tobytes(): i for i in range(len(self.elements))}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return self.matrix.rank

    @property
    def root_count(self) -> int:
        """Número de raíces positivas (= número de reflexiones)."""
        return int(np.count_nonzero(self.positive_roots))

    @property
    def identity(self) -> GroupElement:
        return self.elements[0]

    @cached_property
    def generators(self) -> Tuple[GroupElement, ...]:
        return tuple(self.elements[int(self.right_table[0, s])] for s in range(self.rank))

    def element(self, element_id: int) -> GroupElement:
        """
        Devuelve el elemento con el índice dado.

        Raises:
            ForeignElementError: Si el índice está fuera de rango
        """
        if not isinstance(element_id, (int, np.integer)) or not 0 <= element_id < self.order:
            raise ForeignElementError(details={"id": element_id, "order": self.order})
        return self.elements[int(element_id)]

    def check(self, element: GroupElement) -> int:
        """Comprueba que el elemento pertenezca a este sistema y devuelve su índice."""
        element_id = element.id if isinstance(element, GroupElement) else element
        stored = self.element(element_id)
        if isinstance(element, GroupElement) and stored != element:
            raise ForeignElementError(
                "El elemento no coincide con el del sistema",
                details={"id": element.id}
            )
        return int(element_id)

    def _lookup(self, permutation: np.ndarray) -> int:
        return self._index[permutation.tobytes()]

    def multiply_ids(self, a: int, b: int) -> int:
        """Producto de índices: (a·b)[r] = a[b[r]]."""
        return self._lookup(self._permutations[a][self._permutations[b]])

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """Producto exacto a·b."""
        return self.elements[self.multiply_ids(self.check(a), self.check(b))]

    def inverse_id(self, a: int) -> int:
        return self._lookup(np.argsort(self._permutations[a]).astype(self._permutations.dtype))

    def inverse(self, a: GroupElement) -> GroupElement:
        """Inverso exacto de a."""
        return self.elements[self.inverse_id(self.check(a))]

    def evaluate_word(self, word: Iterable[int]) -> GroupElement:
        """
        Evalúa una palabra (índices de generadores desde 0) de izquierda a derecha.

        Raises:
            ForeignElementError: Si alguna letra no es un generador
        """
        current = 0
        for letter in word:
            if not isinstance(letter, (int, np.integer)) or not 0 <= letter < self.rank:
                raise ForeignElementError(
                    "La palabra contiene un generador inexistente",
                    details={"letter": letter, "rank": self.rank}
                )
            current = int(self.right_table[current, letter])
        return self.elements[current]

    def length(self, element_id: int) -> int:
        return len(self.elements[element_id].word)

    def product_table(self) -> np.ndarray:
        """Tabla |W|×|W| completa; pensada para grupos pequeños (búsqueda)."""
        return self._product_table

    @cached_property
    def _product_table(self) -> np.ndarray:
        table = np.empty((self.order, self.order), dtype=np.int64)
        for a in range(self.order):
            row = self._permutations[a]
            for b in range(self.order):
                table[a, b] = self._lookup(row[self._permutations[b]])
        table.setflags(write=False)
        return table

    @cached_property
    def inverse_table(self) -> np.ndarray:
        table = np.array([self.inverse_id(a) for a in range(self.order)], dtype=np.int64)
        table.setflags(write=False)
        return table

    def to_dict(self) -> Dict:
        return {
            'matrix': self.matrix.to_dict(),
            'order': self.order,
            'root_count': self.root_count,
        }

    def __repr__(self) -> str:
        return f"CoxeterSystem(rank={self.rank}, order={self.order})"


def word_from_text(text: str) -> List[int]:
    """Convierte ``"1 2 1"`` (o ``"e"``) en una lista de índices desde 0."""
    stripped = text.strip()
    if stripped in ('', 'e'):
        return []
    try:
        return [int(token) - 1 for token in stripped.replace(',', ' ').split()]
    except ValueError:
        raise ForeignElementError("La palabra debe contener índices de generadores", details={"word": text})
