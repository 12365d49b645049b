"""Run the three ordering deciders on seeded random pairs and count disagreements.

    python scripts/random_equivalence.py --pairs 1000 --seed 0
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from hhcert.oracle import RandomInstanceSpec, hinge_sweep, random_functional
from hhcert.ordering import Verdict, check_alternating, check_levin_steckin, check_necessary, compare


@dataclass
class Config:
    pairs: int = 1000
    seed: int = 0
    max_nodes: int = 6
    denom_bound: int = 12


def instance(cfg: Config, s: int):
    n = 3 + s % (cfg.max_nodes - 2)
    spec = RandomInstanceSpec(node_count=n, seed=s, denom_bound=cfg.denom_bound, endpoints=n > 3 and s % 3 == 0)
    return random_functional(spec)


def run(cfg: Config) -> dict:
    t0 = time.perf_counter()
    verdicts: Counter = Counter()
    parity: Counter = Counter()
    disagreements = []
    for i in range(cfg.pairs):
        lhs = instance(cfg, cfg.seed + 2 * i)
        rhs = instance(cfg, cfg.seed + 2 * i + 1)
        cert = compare(lhs, rhs)
        ls, _ = check_levin_steckin(lhs.transform, rhs.transform)
        m, e, _ = check_necessary(lhs, rhs)
        alt = check_alternating(cert.profile, m, e) is Verdict.HOLDS
        sweep = hinge_sweep(lhs, rhs)[0] <= 0
        if not ls == alt == sweep:
            disagreements.append(i)
        verdicts[cert.verdict.value] += 1
        parity["even" if cert.profile.n % 2 == 0 else "odd"] += 1
    return {
        "seconds": time.perf_counter() - t0,
        "verdicts": dict(verdicts),
        "crossing parity": dict(parity),
        "disagreements": disagreements,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=Config.pairs)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--max-nodes", type=int, default=Config.max_nodes)
    args = ap.parse_args()
    res = run(Config(args.pairs, args.seed, args.max_nodes))
    for k, v in res.items():
        print(f"{k}: {v if k != 'seconds' else f'{v:.2f}'}")
    return 1 if res["disagreements"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
