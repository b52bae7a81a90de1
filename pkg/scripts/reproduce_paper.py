"""Run every reproduction suite and optionally dump the results as JSON."""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from typing import Optional

from qctwoweight.suites import SUITES, run_suite


@dataclass
class Config:
    suite: str = "all"
    json_out: Optional[str] = None


def main(cfg: Config) -> int:
    start = time.perf_counter()
    results = run_suite(cfg.suite)
    for r in results:
        print(r.render(), end="\n\n")
    print(f"{sum(r.passed for r in results)}/{len(results)} suites passed in {time.perf_counter() - start:.2f}s")
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump([asdict(r) | {"passed": r.passed} for r in results], fh, indent=2)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", default="all", choices=[*SUITES, "all"])
    ap.add_argument("--json-out")
    args = ap.parse_args()
    raise SystemExit(main(Config(args.suite, args.json_out)))
