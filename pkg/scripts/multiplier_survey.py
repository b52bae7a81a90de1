"""Sweep every block count p for a simplex code and check default multipliers give SU2 weights.

Also tallies which (n, k, d) the sweep reaches, e.g.

    python scripts/multiplier_survey.py --q 3 --t 3
    python scripts/multiplier_survey.py --q 2 --t 5
"""

import argparse
import time
from dataclasses import dataclass

from qctwoweight.code import analyze
from qctwoweight.constructions import build_two_weight, default_multipliers, su2_params
from qctwoweight.errors import ConstructionError
from qctwoweight.field import GF
from qctwoweight.poly import find_simplex_generators, simplex_length


@dataclass
class Config:
    q: int = 3
    t: int = 3
    all_generators: bool = False


def main(cfg: Config) -> int:
    field = GF(cfg.q)
    gens = find_simplex_generators(field, cfg.t)
    if not cfg.all_generators:
        gens = gens[:1]
    m = simplex_length(cfg.q, cfg.t)
    bad = 0
    start = time.perf_counter()
    for g in gens:
        print(f"g1 = {g.to_text()}")
        for p in range(2, cfg.q**cfg.t + 1):
            want = su2_params(cfg.q, cfg.t, p)
            try:
                rep = analyze(build_two_weight(g, cfg.t, default_multipliers(field, cfg.t, p)), m)
            except ConstructionError as exc:
                bad += 1
                print(f"  p={p:3d}  FAIL  {exc}")
                continue
            print(f"  p={p:3d}  [{rep.n}, {rep.k}; {rep.two_weight[0]}, {rep.two_weight[1]}]"
                  f"  predicted [{want.n}, {want.k}; {want.w1}, {want.w2}]  projective={rep.projective}")
    print(f"{bad} failures, {time.perf_counter() - start:.2f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--t", type=int, default=3)
    ap.add_argument("--all-generators", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(Config(a.q, a.t, a.all_generators)))
