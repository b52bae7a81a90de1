"""Circulants and block-circulant (quasi-cyclic) generator matrices."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .field import GF
from .matrix import DTYPE, Matrix
from .poly import Polynomial

if TYPE_CHECKING:
    from .code import LinearCode


@dataclass(frozen=True)
class CirculantSpec:
    defining_poly: Polynomial
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"circulant order must be positive, got {self.m}")
        if self.defining_poly.degree >= self.m:
            raise ValueError(f"defining polynomial of degree {self.defining_poly.degree} needs m > degree")


def circulant(spec: CirculantSpec) -> Matrix:
    """Row s holds x^s * c(x) mod x^m - 1, i.e. row 0 shifted right s times."""
    row0 = np.array(spec.defining_poly.padded(spec.m), dtype=DTYPE)
    rows = np.stack([np.roll(row0, s) for s in range(spec.m)])
    return Matrix(spec.defining_poly.field, rows)


@dataclass(frozen=True)
class QcGeneratorSpec:
    """An r x p grid of defining polynomials, all of order m.

    ``extra_columns`` holds constant columns appended on the right; each entry is
    a length-r tuple giving the constant for every row of the corresponding band.
    """

    field: GF
    m: int
    rows: tuple[tuple[Polynomial, ...], ...]
    extra_columns: tuple[tuple[int, ...], ...] = dc_field(default=())

    def __init__(self, field: GF, m: int, rows: Sequence[Sequence[Polynomial]],
                 extra_columns: Sequence[Sequence[int]] = ()):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "extra_columns",
                           tuple(tuple(int(v) % field.q for v in col) for col in extra_columns))
        if not self.rows or not self.rows[0]:
            raise ValueError("empty generator grid")
        p = len(self.rows[0])
        for row in self.rows:
            if len(row) != p:
                raise ValueError("ragged generator grid")
            for poly in row:
                if poly.field != field:
                    raise ValueError(f"block polynomial over {poly.field!r}, spec over {field!r}")
                if poly.degree >= m:
                    raise ValueError(f"block polynomial degree {poly.degree} >= m = {m}")
        for col in self.extra_columns:
            if len(col) != len(self.rows):
                raise ValueError("extra column needs one constant per generator row")

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def p(self) -> int:
        return len(self.rows[0])


def expand(spec: QcGeneratorSpec) -> Matrix:
    m = spec.m
    bands = []
    for i, row in enumerate(spec.rows):
        blocks = [circulant(CirculantSpec(poly, m)).entries for poly in row]
        blocks += [np.full((m, 1), col[i], dtype=DTYPE) for col in spec.extra_columns]
        bands.append(np.hstack(blocks))
    return Matrix(spec.field, np.vstack(bands))


def rotate_blocks(words: np.ndarray, m: int, p: int) -> np.ndarray:
    """Rotate each length-m block right by one; coordinates past p*m stay put."""
    words = np.atleast_2d(words)
    head = words[:, : p * m].reshape(words.shape[0], p, m)
    head = np.roll(head, 1, axis=2).reshape(words.shape[0], p * m)
    return np.hstack([head, words[:, p * m:]])


def row_shift_invariance_witness(code: "LinearCode", m: int, p: int) -> bool:
    """True iff rotating every length-m block of each basis word by one stays in the code.

    In block order this is the same automorphism as a cyclic shift by p positions
    in interleaved order. Trailing coordinates beyond p*m are held fixed.
    """
    if p * m > code.n or p < 1:
        raise ValueError(f"{p} blocks of order {m} do not fit in length {code.n}")
    rotated = rotate_blocks(code.basis.entries, m, p)
    return all(code.contains(w) for w in rotated)
