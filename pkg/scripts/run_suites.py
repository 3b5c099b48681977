"""Run every randomized property suite at full size and print one line each.

    python scripts/run_suites.py [--seed N]
"""

import argparse
import time
from dataclasses import dataclass
from typing import Optional

from tropdual import suites


@dataclass
class RunConfig:
    seed: Optional[int] = None


def main(cfg: RunConfig) -> int:
    failed = 0
    for name, fn in suites.SUITES.items():
        start = time.perf_counter()
        rep = fn() if cfg.seed is None else fn(seed=cfg.seed)
        print(f"{rep.summary()}  ({time.perf_counter() - start:.1f}s)")
        for what, witness in rep.failures[:5]:
            print(f"  counterexample: {what} at {witness}")
        failed += not rep.ok
    return 1 if failed else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int)
    raise SystemExit(main(RunConfig(seed=ap.parse_args().seed)))
