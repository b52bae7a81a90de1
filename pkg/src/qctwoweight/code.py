"""Linear codes over GF(q) and the exhaustive analyses run on them."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .errors import EnumerationGuardError
from .field import GF
from .matrix import DTYPE, Matrix, rref
from .qc import row_shift_invariance_witness

DEFAULT_GUARD = 2**24
# bound on the int64 cells materialized per enumeration chunk
_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True, eq=False)
class LinearCode:
    raw_generator: Matrix
    basis: Matrix
    pivots: tuple[int, ...]

    @property
    def field(self) -> GF:
        return self.raw_generator.field

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.basis.n_cols

    @property
    def k(self) -> int:
        return self.basis.n_rows

    @property
    def size(self) -> int:
        return self.q**self.k

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=DTYPE) % self.q
        if w.shape != (self.n,):
            return False
        b = self.basis.entries
        coeffs = w[list(self.pivots)]
        residual = (w - coeffs @ b) % self.q
        return not residual.any()

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over GF({self.q}))"


def from_generator(raw: Matrix) -> LinearCode:
    basis, pivots = rref(raw.entries, raw.field.q)
    if not pivots:
        raise ValueError("generator matrix has rank 0")
    return LinearCode(raw, Matrix(raw.field, basis), tuple(pivots))


def _check_guard(code: LinearCode, guard: int) -> None:
    if code.size > guard:
        raise EnumerationGuardError(
            f"{code.q}^{code.k} = {code.size} codewords exceeds the enumeration guard {guard}")


def _messages(q: int, k: int, start: int, stop: int) -> np.ndarray:
    # lexicographic: first coefficient is the most significant digit
    idx = np.arange(start, stop, dtype=DTYPE)
    powers = q ** np.arange(k - 1, -1, -1, dtype=DTYPE)
    return (idx[:, None] // powers[None, :]) % q


def codeword_chunks(code: LinearCode, guard: int = DEFAULT_GUARD) -> Iterator[np.ndarray]:
    """All q^k codewords in message-lexicographic order, as 2-D chunks."""
    _check_guard(code, guard)
    step = max(1, _CHUNK_CELLS // max(code.n, code.k))
    b = code.basis.entries
    for start in range(0, code.size, step):
        msgs = _messages(code.q, code.k, start, min(start + step, code.size))
        yield msgs @ b % code.q


def enumerate_codewords(code: LinearCode, guard: int = DEFAULT_GUARD) -> Iterator[np.ndarray]:
    for chunk in codeword_chunks(code, guard):
        yield from chunk


@dataclass(frozen=True)
class WeightDistribution:
    counts: dict[int, int] = dc_field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.counts.items() if w and c)

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def __str__(self):
        return "{" + ", ".join(f"{w}: {c}" for w, c in sorted(self.counts.items())) + "}"


def weight_distribution(code: LinearCode, guard: int = DEFAULT_GUARD) -> WeightDistribution:
    hist = np.zeros(code.n + 1, dtype=np.int64)
    for chunk in codeword_chunks(code, guard):
        hist += np.bincount(np.count_nonzero(chunk, axis=1), minlength=code.n + 1)
    return WeightDistribution({w: int(c) for w, c in enumerate(hist) if c})


def min_distance(code: LinearCode, guard: int = DEFAULT_GUARD) -> int:
    return weight_distribution(code, guard).nonzero_weights[0]


def is_two_weight(dist: WeightDistribution) -> Optional[tuple[int, int]]:
    ws = dist.nonzero_weights
    return (ws[0], ws[1]) if len(ws) == 2 else None


def is_projective(code: LinearCode) -> bool:
    """Pairwise independence of coordinates, checked on normalized basis columns."""
    q = code.q
    seen = set()
    for col in code.basis.entries.T:
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            return False
        key = tuple((col * pow(int(col[nz[0]]), q - 2, q) % q).tolist())
        if key in seen:
            return False
        seen.add(key)
    return True


def is_self_complementary(code: LinearCode) -> bool:
    if code.q != 2:
        raise ValueError(f"self-complementarity is defined for binary codes, got GF({code.q})")
    return code.contains(np.ones(code.n, dtype=DTYPE))


def grey_rankin_bound(n: int, d: int) -> Fraction:
    den = n - (n - 2 * d) ** 2
    if den <= 0:
        raise ValueError(f"Grey-Rankin bound inapplicable for n={n}, d={d}: denominator {den} <= 0")
    return Fraction(8 * d * (n - d), den)


def meets_grey_rankin(code: LinearCode, d: int) -> bool:
    try:
        return grey_rankin_bound(code.n, d) == code.size
    except ValueError:
        return False


@dataclass(frozen=True)
class PropertyReport:
    q: int
    n: int
    k: int
    d: int
    distribution: WeightDistribution
    two_weight: Optional[tuple[int, int]]
    projective: bool
    self_complementary: Optional[bool]
    m: Optional[int]
    qc: Optional[bool]
    gr_bound: Optional[Fraction]
    gr_met: bool

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)

    def summary(self) -> str:
        def b(v):
            return "na" if v is None else str(bool(v)).lower()

        weights = ",".join(map(str, self.distribution.nonzero_weights))
        gr = "na" if self.gr_bound is None else str(self.gr_bound)
        return (f"[{self.n},{self.k},{self.d}] q={self.q} weights={{{weights}}} "
                f"two_weight={b(self.two_weight is not None)} projective={b(self.projective)} "
                f"selfc={b(self.self_complementary)} qc={b(self.qc)} "
                f"gr_bound={gr} gr_met={b(self.gr_met)}")

    def render(self) -> str:
        tw = f"yes ({self.two_weight[0]}, {self.two_weight[1]})" if self.two_weight else "no"
        qc = "n/a (no block order given)" if self.qc is None else f"{self.qc} (m = {self.m})"
        selfc = "n/a (non-binary)" if self.self_complementary is None else str(self.self_complementary)
        gr = "inapplicable" if self.gr_bound is None else f"{self.gr_bound} (met: {self.gr_met})"
        lines = [
            f"field: GF({self.q})",
            f"parameters: [{self.n}, {self.k}, {self.d}]",
            f"weight distribution: {self.distribution}",
            f"two-weight: {tw}",
            f"projective: {self.projective}",
            f"self-complementary: {selfc}",
            f"quasi-cyclic: {qc}",
            f"Grey-Rankin bound: {gr}",
        ]
        return "\n".join(lines)


def analyze(code: LinearCode, m: Optional[int] = None, guard: int = DEFAULT_GUARD) -> PropertyReport:
    dist = weight_distribution(code, guard)
    ws = dist.nonzero_weights
    d = ws[0]
    selfc = is_self_complementary(code) if code.q == 2 else None
    qc = None
    if m is not None:
        p = code.n // m
        qc = p >= 1 and row_shift_invariance_witness(code, m, p)
    try:
        bound = grey_rankin_bound(code.n, d)
    except ValueError:
        bound = None
    return PropertyReport(
        q=code.q, n=code.n, k=code.k, d=d, distribution=dist,
        two_weight=is_two_weight(dist), projective=is_projective(code),
        self_complementary=selfc, m=m, qc=qc, gr_bound=bound,
        gr_met=bool(selfc) and bound is not None and bound == code.size,
    )
