"""Prime fields GF(q) with small-integer residues."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import FieldMismatchError


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GF:
    """The prime field of order ``q``.

    Arithmetic helpers work on plain ``int`` residues; polynomial and matrix
    code uses those directly. ``GF(q)(v)`` wraps a residue as a FieldElement.
    """

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not _is_prime(self.q):
            raise ValueError(f"GF(q) needs a prime q, got {self.q!r}")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.q, self)

    def __repr__(self):
        return f"GF({self.q})"

    @property
    def elements(self) -> range:
        return range(self.q)

    @cached_property
    def inv_table(self) -> tuple[int, ...]:
        # entry 0 is a placeholder; inv() rejects zero before reading it
        return (0,) + tuple(pow(a, self.q - 2, self.q) for a in range(1, self.q))

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def mul(self, a: int, b: int) -> int:
        return a * b % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self.inv_table[a]


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: GF

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not a residue of {self.field!r}")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field.sub(self.value, other.value), self.field)

    def __neg__(self):
        return FieldElement(self.field.neg(self.value), self.field)

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field.mul(self.value, other.value), self.field)

    def inv(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inv()

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()
