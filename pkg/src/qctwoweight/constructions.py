"""Two-weight and self-complementary quasi-cyclic codes built from a cyclic simplex code.

Every builder measures the code it produces and raises ConstructionError if the
measured parameters differ from the predicted ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .code import LinearCode, from_generator, weight_distribution, is_self_complementary, meets_grey_rankin
from .errors import ConstructionError
from .field import GF
from .poly import Polynomial, is_simplex_generator, simplex_length
from .qc import QcGeneratorSpec, expand

BINARY = GF(2)


@dataclass(frozen=True)
class Su2Params:
    q: int
    t: int
    i: int
    n: int
    k: int
    w1: int
    w2: int


def su2_params(q: int, t: int, i: int) -> Su2Params:
    GF(q)  # rejects non-prime q
    if gcd(q - 1, t) != 1:
        raise ValueError(f"gcd(q - 1, t) = gcd({q - 1}, {t}) != 1")
    if not 2 <= i <= q**t:
        raise ValueError(f"copy count i = {i} outside [2, {q**t}]")
    return Su2Params(q=q, t=t, i=i, n=i * simplex_length(q, t), k=2 * t,
                     w1=(i - 1) * q ** (t - 1), w2=i * q ** (t - 1))


@dataclass(frozen=True)
class MultiplierSet:
    """Second-row block multipliers a * x^e; block 0 is always the zero block.

    ``terms`` lists the p - 1 nonzero multipliers as (a, e) pairs, so the
    generator row reads (0, a_1 x^e_1 g1, ..., a_{p-1} x^e_{p-1} g1).
    """

    field: GF
    m: int
    terms: tuple[tuple[int, int], ...]

    def __init__(self, field: GF, m: int, terms: Iterable[tuple[int, int]]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "terms", tuple((int(a), int(e)) for a, e in terms))
        for a, e in self.terms:
            if not 0 < a < field.q:
                raise ValueError(f"multiplier coefficient {a} is not a nonzero residue of {field!r}")
            if not 0 <= e < m:
                raise ValueError(f"shift exponent {e} outside [0, {m})")
        if len(set(self.terms)) != len(self.terms):
            raise ValueError(f"duplicate multipliers in {self.to_text()}")
        if len(self.terms) + 1 > field.q ** _dimension_for(field.q, m):
            raise ValueError(f"{len(self.terms)} multipliers exceed the q^t - 1 available")

    @property
    def p(self) -> int:
        return len(self.terms) + 1

    def polys(self) -> list[Polynomial]:
        return [Polynomial.monomial(self.field, e, a) for a, e in self.terms]

    def to_text(self) -> str:
        return ";".join(["0"] + [f"{a},{e}" for a, e in self.terms])

    @classmethod
    def from_text(cls, field: GF, m: int, text: str) -> "MultiplierSet":
        items = [s.strip() for s in text.split(";") if s.strip()]
        if items and items[0] == "0":
            items = items[1:]
        terms = []
        for item in items:
            parts = item.split(",")
            if len(parts) != 2:
                raise ValueError(f"multiplier {item!r} is not 'a,e' (the zero marker may only lead)")
            terms.append((int(parts[0]), int(parts[1])))
        return cls(field, m, terms)


def _dimension_for(q: int, m: int) -> int:
    t = 1
    while simplex_length(q, t) < m:
        t += 1
    if simplex_length(q, t) != m:
        raise ValueError(f"m = {m} is not a simplex length over GF({q})")
    return t


def default_multipliers(field: GF, t: int, p: int) -> MultiplierSet:
    """x^0, x^1, ..., x^(m-1), then 2 x^0, 2 x^1, ... truncated to p - 1 terms."""
    q = field.q
    if not 2 <= p <= q**t:
        raise ValueError(f"block count p = {p} outside [2, {q**t}]")
    m = simplex_length(q, t)
    order = ((a, e) for a in range(1, q) for e in range(m))
    return MultiplierSet(field, m, [next(order) for _ in range(p - 1)])


def _check_generator(g1: Polynomial, t: int) -> None:
    if not is_simplex_generator(g1, t):
        raise ValueError(f"{g1.to_text()!r} does not generate a cyclic simplex code of dimension {t}"
                         f" over {g1.field!r}")


def two_weight_spec(g1: Polynomial, t: int, multipliers: MultiplierSet) -> QcGeneratorSpec:
    m = simplex_length(g1.field.q, t)
    zero = Polynomial(g1.field)
    mod = Polynomial.x_pow_minus_one(g1.field, m)
    top = [g1] * multipliers.p
    bottom = [zero] + [(mu * g1) % mod for mu in multipliers.polys()]
    return QcGeneratorSpec(g1.field, m, [top, bottom])


def build_two_weight(g1: Polynomial, t: int, multipliers: MultiplierSet) -> LinearCode:
    field = g1.field
    _check_generator(g1, t)
    if multipliers.field != field or multipliers.m != simplex_length(field.q, t):
        raise ValueError("multiplier set does not match the simplex code")
    want = su2_params(field.q, t, multipliers.p)
    code = from_generator(expand(two_weight_spec(g1, t, multipliers)))
    ws = weight_distribution(code).nonzero_weights
    got = (code.n, code.k, ws)
    if got != (want.n, want.k, [want.w1, want.w2]):
        raise ConstructionError(
            f"multipliers {multipliers.to_text()} gave [n, k] = [{code.n}, {code.k}] with weights {ws};"
            f" expected [{want.n}, {want.k}; {want.w1}, {want.w2}]")
    return code


def gr_params(t: int, variant: str) -> tuple[int, int, int]:
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    if variant == "minus":
        return (2 ** (2 * t - 1) - 2 ** (t - 1), 2 * t + 1, 2 ** (2 * t - 2) - 2 ** (t - 1))
    if variant == "plus":
        return (2 ** (2 * t - 1) + 2 ** (t - 1), 2 * t + 1, 2 ** (2 * t - 2))
    raise ValueError(f"variant must be 'minus' or 'plus', got {variant!r}")


def self_complementary_spec(g1: Polynomial, t: int, variant: str) -> QcGeneratorSpec:
    if g1.field != BINARY:
        raise ValueError(f"self-complementary builds are binary, got {g1.field!r}")
    m = simplex_length(2, t)
    i = 2 ** (t - 1) + (variant == "plus")
    two = two_weight_spec(g1, t, default_multipliers(BINARY, t, i))
    ones = Polynomial(BINARY, [1] * m)
    extras = [(0, 0, 1)] if variant == "plus" else []
    return QcGeneratorSpec(BINARY, m, list(two.rows) + [[ones] * i], extras)


def _build_self_complementary(g1: Polynomial, t: int, variant: str) -> LinearCode:
    if g1.field != BINARY:
        raise ValueError(f"self-complementary builds are binary, got {g1.field!r}")
    _check_generator(g1, t)
    code = from_generator(expand(self_complementary_spec(g1, t, variant)))
    n, k, d = gr_params(t, variant)
    dist = weight_distribution(code)
    got_d = dist.nonzero_weights[0]
    if (code.n, code.k, got_d) != (n, k, d):
        raise ConstructionError(f"{variant} build gave [{code.n}, {code.k}, {got_d}], expected [{n}, {k}, {d}]")
    if not is_self_complementary(code) or not meets_grey_rankin(code, got_d):
        raise ConstructionError(f"{variant} build [{n}, {k}, {d}] is not self-complementary at the bound")
    return code


def build_self_complementary_minus(g1: Polynomial, t: int) -> LinearCode:
    return _build_self_complementary(g1, t, "minus")


def build_self_complementary_plus(g1: Polynomial, t: int) -> LinearCode:
    return _build_self_complementary(g1, t, "plus")

