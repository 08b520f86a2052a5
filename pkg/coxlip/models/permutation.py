"""
Modelo de permutaciones de {1..n}.
La composición es de funciones: (a * b)(x) = a(b(x)).
"""
from dataclasses import dataclass
from itertools import permutations as _all_orderings
from typing import Iterator, List, Sequence, Tuple

from coxlip.utils.exceptions import InvalidPermutationError


@dataclass(frozen=True, order=True)
class Permutation:
    """Biyección de {1..n} guardada por sus imágenes (desde 1)."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(value) for value in self.images)
        object.__setattr__(self, 'images', images)
        if not images or sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutationError(details={"images": list(images)})

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> 'Permutation':
        """(i j); si i == j devuelve la identidad."""
        return cls.cycle(n, i, j) if i != j else cls.identity(n)

    @classmethod
    def cycle(cls, n: int, *points: int) -> 'Permutation':
        """Ciclo (p1 p2 ... pk): p1 -> p2 -> ... -> pk -> p1."""
        images = list(range(1, n + 1))
        for current, following in zip(points, points[1:] + points[:1]):
            if not 1 <= current <= n:
                raise InvalidPermutationError(details={"point": current, "n": n})
            images[current - 1] = following
        return cls(tuple(images))

    @classmethod
    def all(cls, n: int) -> Iterator['Permutation']:
        """Las n! permutaciones en orden lexicográfico de imágenes."""
        for images in _all_orderings(range(1, n + 1)):
            yield cls(images)

    @classmethod
    def parse(cls, n: int, text: str) -> 'Permutation':
        """
        Lee notación de ciclos, p. ej. ``"(1 3 2)(4 5)"``; ``"e"`` es la identidad.

        Los ciclos se componen de derecha a izquierda, igual que ``*``.
        """
        stripped = text.strip()
        result = cls.identity(n)
        if stripped in ('', 'e'):
            return result
        if not (stripped.startswith('(') and stripped.endswith(')')):
            raise InvalidPermutationError(f"Notación de ciclos inválida: {text!r}")
        try:
            for chunk in stripped[1:-1].split(')('):
                points = tuple(int(token) for token in chunk.replace(',', ' ').split())
                result = result * cls.cycle(n, *points)
        except ValueError:
            raise InvalidPermutationError(f"Notación de ciclos inválida: {text!r}")
        return result

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if other.n != self.n:
            raise InvalidPermutationError("Las permutaciones tienen grados distintos")
        return Permutation(tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def inverse(self) -> 'Permutation':
        images = [0] * self.n
        for i, value in enumerate(self.images):
            images[value - 1] = i + 1
        return Permutation(tuple(images))

    def conjugate(self, other: 'Permutation') -> 'Permutation':
        """Ad_self(other) = self * other * self^-1."""
        return self * other * self.inverse()

    def is_identity(self) -> bool:
        return all(value == i + 1 for i, value in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Ciclos no triviales ordenados por su menor punto."""
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            result.append(tuple(cycle))
        return result

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self) -> str:
        if self.is_identity():
            return 'e'
        return ''.join('(' + ' '.join(str(p) for p in c) + ')' for c in self.cycles())

    def to_dict(self) -> dict:
        return {'n': self.n, 'images': list(self.images)}


def product(factors: Sequence[Permutation], n: int) -> Permutation:
    """Producto f1 * f2 * ... * fk (se aplica primero el último)."""
    result = Permutation.identity(n)
    for factor in factors:
        result = result * factor
    return result


@dataclass(frozen=True)
class CycleDecomposition:
    """Factores Ad_theta(j j+k), k = 1..n, y resultado de la identidad del ciclo."""

    n: int
    theta: Permutation
    j: int
    factors: Tuple[Permutation, ...]
    holds: bool

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'theta': str(self.theta),
            'j': self.j,
            'factors': [str(f) for f in self.factors],
            'holds': self.holds,
        }
