"""
Modelo del grupo diédrico infinito.
Los elementos son palabras alternantes en {a, b}; el problema de la palabra se resuelve cancelando letras repetidas.
"""
from dataclasses import dataclass
from typing import List


@dataclass(frozen=True, order=True)
class DihedralWord:
    """Palabra reducida (alternante) del grupo diédrico infinito."""

    letters: str = ''

    def __post_init__(self):
        if any(letter not in 'ab' for letter in self.letters):
            raise ValueError(f"Letra inválida en {self.letters!r}")
        if any(x == y for x, y in zip(self.letters, self.letters[1:])):
            raise ValueError(f"La palabra {self.letters!r} no es alternante")

    @classmethod
    def reduce(cls, letters: str) -> 'DihedralWord':
        """Cancela pares de letras iguales (a·a = b·b = 1)."""
        stack: List[str] = []
        for letter in letters:
            if stack and stack[-1] == letter:
                stack.pop()
            else:
                stack.append(letter)
        return cls(''.join(stack))

    def __mul__(self, other: 'DihedralWord') -> 'DihedralWord':
        return DihedralWord.reduce(self.letters + other.letters)

    def inverse(self) -> 'DihedralWord':
        return DihedralWord(self.letters[::-1])

    @property
    def length(self) -> int:
        return len(self.letters)

    def is_reflection(self) -> bool:
        """Las reflexiones son exactamente las palabras de longitud impar."""
        return self.length % 2 == 1

    def __str__(self) -> str:
        return self.letters or '1'


def ball(radius: int) -> List[DihedralWord]:
    """Palabras de longitud <= radius, ordenadas por longitud y letra inicial."""
    words = [DihedralWord('')]
    for length in range(1, radius + 1):
        for first in 'ab':
            other = 'b' if first == 'a' else 'a'
            words.append(DihedralWord(''.join(first if i % 2 == 0 else other for i in range(length))))
    return words


@dataclass
class DihedralReport:
    """Resultado del barrido sobre una bola del grupo diédrico infinito."""

    radius: int
    ball_size: int
    t_instances: int
    t_violations: List[tuple]
    s_instances: int
    s_violations: List[tuple]
    non_constant_witness: tuple
    non_translation_witness: tuple

    @property
    def t_lipschitz(self) -> bool:
        return not self.t_violations

    @property
    def s_lipschitz(self) -> bool:
        return not self.s_violations

    def to_dict(self) -> dict:
        return {
            'radius': self.radius,
            'ball_size': self.ball_size,
            't_lipschitz': {
                'passed': self.t_lipschitz,
                'checked': self.t_instances,
                'violations': [{'theta': str(t), 'sigma': str(s)} for t, s in self.t_violations],
            },
            's_lipschitz': {
                'passed': self.s_lipschitz,
                'checked': self.s_instances,
                'violations': [{'theta': str(t), 'sigma': str(s)} for t, s in self.s_violations],
            },
            'non_constant_witness': [str(w) for w in self.non_constant_witness],
            'non_translation_witness': [str(w) for w in self.non_translation_witness],
        }
