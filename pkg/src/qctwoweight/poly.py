"""Polynomials over GF(q), residues modulo x^m - 1, and cyclic simplex generators.

Coefficients are stored lowest degree first, so ``Polynomial(GF(2), [1, 1, 1, 0, 1])``
is 1 + x + x^2 + x^4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import FieldMismatchError
from .field import GF, FieldElement

SIMPLEX_SEARCH_LIMIT = 2**20


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    field: GF
    coeffs: tuple[int, ...] = ()

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        # signed input such as -1 is reduced to its residue
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _trim([int(c) % field.q for c in coeffs]))

    @classmethod
    def monomial(cls, field: GF, degree: int, coeff: int = 1) -> "Polynomial":
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def one(cls, field: GF) -> "Polynomial":
        return cls(field, [1])

    @classmethod
    def x_pow_minus_one(cls, field: GF, m: int) -> "Polynomial":
        return cls(field, [-1] + [0] * (m - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> FieldElement:
        return self.field(self.coeffs[i] if i < len(self.coeffs) else 0)

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(self.field, [x + y for x, y in zip(a, b)])

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Polynomial(self.field)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(self.field, out)

    def scale(self, a: int) -> "Polynomial":
        return Polynomial(self.field, [a * c for c in self.coeffs])

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q = self.field.q
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = self.field.inv(other.lead)
        quot = [0] * max(len(rem) - db, 0)
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = rem[shift + db] * lead_inv % q
            if c:
                quot[shift] = c
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] = (rem[shift + j] - c * b) % q
        return Polynomial(self.field, quot), Polynomial(self.field, rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def padded(self, m: int) -> tuple[int, ...]:
        """Coefficient word of length m; the polynomial must have degree < m."""
        if self.degree >= m:
            raise ValueError(f"degree {self.degree} does not fit in length {m}")
        return self.coeffs + (0,) * (m - len(self.coeffs))

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def to_text(self) -> str:
        return " ".join(map(str, self.coeffs)) if self.coeffs else "0"

    @classmethod
    def from_text(cls, field: GF, text: str) -> "Polynomial":
        tokens = text.split()
        if not tokens:
            raise ValueError("empty polynomial text")
        values = [int(t) for t in tokens]
        if any(not 0 <= v < field.q for v in values):
            raise ValueError(f"coefficient out of range for {field!r}: {text!r}")
        return cls(field, values)

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 and i else (f"{c}" if i == 0 else f"{c}*{mono}"))
        return " + ".join(terms)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    return divmod(a, b)


@dataclass(frozen=True)
class CyclicWord:
    """Fixed-width residue modulo x^m - 1 (no trimming of trailing zeros)."""

    field: GF
    coeffs: tuple[int, ...]

    def __init__(self, field: GF, coeffs: Iterable[int]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(int(c) % field.q for c in coeffs))
        if not self.coeffs:
            raise ValueError("a cyclic word needs m >= 1")

    @property
    def m(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_poly(cls, p: Polynomial, m: int) -> "CyclicWord":
        return cls(p.field, (p % Polynomial.x_pow_minus_one(p.field, m)).padded(m))

    def to_poly(self) -> Polynomial:
        return Polynomial(self.field, self.coeffs)


def cyclic_mul(a: CyclicWord, b: Polynomial) -> CyclicWord:
    """Residue of a * b modulo x^m - 1."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    m, q = a.m, a.field.q
    out = [0] * m
    for j, bj in enumerate(b.coeffs):
        if bj:
            for i, ai in enumerate(a.coeffs):
                if ai:
                    out[(i + j) % m] = (out[(i + j) % m] + ai * bj) % q
    return CyclicWord(a.field, out)


def simplex_length(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def cyclic_code_weights(g: Polynomial, m: int) -> set[int]:
    """Nonzero weights of the cyclic code generated by g in GF(q)[x]/(x^m - 1).

    Messages run over all polynomials of degree < m - deg g, which gives each
    codeword exactly once when g divides x^m - 1.
    """
    k = m - g.degree
    weights = set()
    for msg in itertools.product(g.field.elements, repeat=k):
        if any(msg):
            weights.add((Polynomial(g.field, msg) * g).weight())
    return weights


def is_simplex_generator(g: Polynomial, k: int) -> bool:
    q = g.field.q
    m = simplex_length(q, k)
    if g.is_zero or g.lead != 1 or g.degree != m - k:
        return False
    if not (Polynomial.x_pow_minus_one(g.field, m) % g).is_zero:
        return False
    return cyclic_code_weights(g, m) == {q ** (k - 1)}


def find_simplex_generators(field: GF, k: int) -> list[Polynomial]:
    """All monic generator polynomials of cyclic simplex codes of dimension k over ``field``.

    Searches over the monic degree-k check polynomials h dividing x^m - 1 and keeps
    g = (x^m - 1) / h whenever the generated code is equidistant with weight q^(k-1).
    """
    q = field.q
    if k < 2:
        raise ValueError(f"simplex dimension must be >= 2, got {k}")
    if gcd(q - 1, k) != 1:
        raise ValueError(f"no cyclic simplex code promised: gcd(q - 1, k) = gcd({q - 1}, {k}) != 1")
    if q**k > SIMPLEX_SEARCH_LIMIT:
        raise ValueError(f"q^k = {q**k} exceeds the search limit {SIMPLEX_SEARCH_LIMIT}")
    m = simplex_length(q, k)
    xm1 = Polynomial.x_pow_minus_one(field, m)
    found = []
    for low in itertools.product(field.elements, repeat=k):
        h = Polynomial(field, list(low) + [1])
        g, r = divmod(xm1, h)
        if r.is_zero and cyclic_code_weights(g, m) == {q ** (k - 1)}:
            found.append(g)
    if not found:
        raise RuntimeError(f"no cyclic simplex generator found for q={q}, k={k}")
    return sorted(found, key=lambda g: g.coeffs)
