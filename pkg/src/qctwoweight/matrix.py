"""Dense matrices over GF(q) backed by numpy integer arrays."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import GF

DTYPE = np.int64


@dataclass(frozen=True, eq=False)
class Matrix:
    field: GF
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=DTYPE, copy=True)
        if a.ndim != 2:
            raise ValueError(f"matrix entries must be 2-D, got shape {a.shape}")
        a %= self.field.q
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n_rows(self) -> int:
        return self.entries.shape[0]

    @property
    def n_cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, self.entries @ other.entries)

    def to_text(self) -> str:
        lines = [f"{self.field.q} {self.n_rows} {self.n_cols}"]
        lines += [" ".join(map(str, row)) for row in self.entries.tolist()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Matrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        try:
            q, n_rows, n_cols = (int(t) for t in lines[0].split())
            rows = [[int(t) for t in ln.split()] for ln in lines[1:]]
        except ValueError as exc:
            raise ValueError(f"malformed matrix text: {exc}") from None
        field = GF(q)
        if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
            raise ValueError(f"matrix body does not match header {q} {n_rows} {n_cols}")
        if any(not 0 <= v < q for r in rows for v in r):
            raise ValueError(f"entry out of range for GF({q})")
        return cls(field, np.array(rows, dtype=DTYPE).reshape(n_rows, n_cols))


def rref(a: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod q. Returns (nonzero rows, pivot columns)."""
    a = np.array(a, dtype=DTYPE) % q
    n_rows, n_cols = a.shape
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] * pow(int(a[r, c]), q - 2, q) % q
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r])) % q
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m.entries, m.field.q)[1])
