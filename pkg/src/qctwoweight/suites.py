"""Reproduction suites: rebuild the published codes and compare measured parameters."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from importlib import resources

from .code import analyze
from .constructions import (
    MultiplierSet,
    build_self_complementary_minus,
    build_self_complementary_plus,
    build_two_weight,
    default_multipliers,
    gr_params,
)
from .errors import ConstructionError
from .field import GF
from .poly import Polynomial, find_simplex_generators, simplex_length


@lru_cache(maxsize=None)
def paper_cases() -> dict:
    with resources.files("qctwoweight").joinpath("data/paper_cases.json").open() as fh:
        return json.load(fh)


def paper_polynomial(name: str) -> Polynomial:
    entry = paper_cases()["polynomials"][name]
    return Polynomial(GF(entry["q"]), entry["coeffs"])


def generator_for(q: int, t: int) -> Polynomial:
    """The published g1 where one exists for (q, t), else the first discovered one."""
    for name in ("example1_g1", "example2_g1"):
        entry = paper_cases()["polynomials"][name]
        if (entry["q"], entry["k"]) == (q, t):
            return paper_polynomial(name)
    return find_simplex_generators(GF(q), t)[0]


@dataclass
class Case:
    label: str
    expected: str
    measured: str
    passed: bool


@dataclass
class SuiteResult:
    name: str
    cases: list[Case] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def add(self, label: str, expected: str, measured: str, passed: bool) -> None:
        self.cases.append(Case(label, expected, measured, passed))

    def render(self) -> str:
        width = max([len(c.label) for c in self.cases] + [4])
        out = [f"suite {self.name}"]
        for c in self.cases:
            flag = "PASS" if c.passed else "FAIL"
            out.append(f"  {flag}  {c.label:<{width}}  expected {c.expected}  measured {c.measured}")
        out += [f"  NOTE  {note}" for note in self.notes]
        out.append(f"  {sum(c.passed for c in self.cases)}/{len(self.cases)} passed")
        return "\n".join(out)


def _fmt_two_weight(n, k, w1, w2):
    return f"[{n}, {k}; {w1}, {w2}]"


def _measure_two_weight(g1, t, mult) -> tuple[str, tuple]:
    try:
        code = build_two_weight(g1, t, mult)
    except ConstructionError as exc:
        return f"construction failed ({exc})", ()
    rep = analyze(code, mult.m)
    w = rep.two_weight or (None, None)
    measured = (rep.n, rep.k, rep.d, w[0], w[1], rep.qc)
    text = _fmt_two_weight(rep.n, rep.k, *w) + f" d={rep.d}" + ("" if rep.qc else " not-QC")
    return text, measured


def suite_table1() -> SuiteResult:
    res = SuiteResult("table1")
    f2 = GF(2)
    for p, m, k, d, w1, w2 in paper_cases()["table1"]["rows"]:
        if simplex_length(2, k) != m:
            res.add(f"p={p} m={m} k={k}", "consistent row", f"m != 2^{k} - 1", False)
            continue
        text, got = _measure_two_weight(generator_for(2, k), k, default_multipliers(f2, k, p))
        want = (p * m, 2 * k, d, w1, w2, True)
        res.add(f"p={p} m={m} k={k}", _fmt_two_weight(p * m, 2 * k, w1, w2) + f" d={d}", text, got == want)
    return res


def suite_example1() -> SuiteResult:
    res = SuiteResult("example1")
    f2 = GF(2)
    g1 = paper_polynomial("example1_g1")
    for i, (n, k, w1, w2) in enumerate(paper_cases()["example1"]["codes"], start=2):
        text, got = _measure_two_weight(g1, 3, default_multipliers(f2, 3, i))
        res.add(f"i={i}", _fmt_two_weight(n, k, w1, w2), text, got == (n, k, w1, w1, w2, True))
    want = {int(w): c for w, c in paper_cases()["example1"]["distribution_14_6"].items()}
    dist = analyze(build_two_weight(g1, 3, default_multipliers(f2, 3, 2))).distribution
    res.add("[14, 6] distribution", str(want).replace("'", ""), str(dist), dist.counts == want)
    return res


def suite_example2() -> SuiteResult:
    res = SuiteResult("example2")
    f3 = GF(3)
    g1 = paper_polynomial("example2_g1")
    m = simplex_length(3, 3)
    cases = paper_cases()["example2"]
    for case in cases["displayed"]:
        mult = MultiplierSet.from_text(f3, m, case["multipliers"])
        text, got = _measure_two_weight(g1, 3, mult)
        want = (case["n"], case["k"], case["w1"], case["w1"], case["w2"], True)
        res.add(f"{case['label']} multipliers {mult.to_text()}",
                _fmt_two_weight(case["n"], case["k"], case["w1"], case["w2"]), text, got == want)
    for case in cases["claimed"]:
        mult = default_multipliers(f3, 3, case["p"])
        text, got = _measure_two_weight(g1, 3, mult)
        ok = bool(got) and got[:3] == (case["n"], case["k"], case["d"]) and got[5]
        res.add(f"{case['label']} p={case['p']}", f"[{case['n']}, {case['k']}, {case['d']}]", text, ok)
        res.notes.append(f"{case['label']} built with default multipliers {mult.to_text()}")
    return res


def suite_grey_rankin() -> SuiteResult:
    res = SuiteResult("grey-rankin")
    cases = paper_cases()["grey_rankin"]
    builders = {"minus": build_self_complementary_minus, "plus": build_self_complementary_plus}
    for variant in ("minus", "plus"):
        for t, n, k, d in cases[variant]:
            label = f"{variant} t={t}"
            if gr_params(t, variant) != (n, k, d):
                res.add(label, f"[{n}, {k}, {d}]", f"formula gives {list(gr_params(t, variant))}", False)
                continue
            try:
                code = builders[variant](generator_for(2, t), t)
            except ConstructionError as exc:
                res.add(label, f"[{n}, {k}, {d}]", f"construction failed ({exc})", False)
                continue
            rep = analyze(code, simplex_length(2, t))
            dist = rep.distribution
            symmetric = all(dist[w] == dist[rep.n - w] for w in dist.counts)
            ok = rep.params == (n, k, d) and rep.self_complementary and rep.gr_met and symmetric and rep.qc
            res.add(label, f"[{n}, {k}, {d}] selfc gr_met",
                    f"[{rep.n}, {rep.k}, {rep.d}] selfc={rep.self_complementary} gr_bound={rep.gr_bound}"
                    f" gr_met={rep.gr_met} symmetric={symmetric}", ok)
    for cited in cases["cited"]:
        formula = gr_params(cited["t"], cited["variant"])
        if formula != (cited["n"], cited["k"], cited["d"]):
            res.notes.append(
                f"cited [{cited['n']}, {cited['k']}, {cited['d']}] differs from the {cited['variant']} "
                f"formula at t={cited['t']}, which gives {list(formula)}; the built code follows the formula")
    return res


SUITES = {
    "table1": suite_table1,
    "example1": suite_example1,
    "example2": suite_example2,
    "grey-rankin": suite_grey_rankin,
}


def run_suite(name: str) -> list[SuiteResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name]()]
