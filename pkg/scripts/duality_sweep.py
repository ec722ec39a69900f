#!/usr/bin/env python3
"""Sampled conjugate inequalities on random M-natural-concave instances.

For each instance a random exchange context (X, Y in dom f, I inside X \\ Y)
is drawn; the lower bound on g1(q) + g2(-q) and submodularity of g are
checked on sampled prices.  Prints one line per instance and a summary.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from mnat import DualityConfig, ExchangeContext, check_conjugate_submodular, elements_of, verify_lemma_g1g2
from mnat.generators import random_mnat_concave


@dataclass(frozen=True)
class SweepConfig:
    sizes: tuple[int, ...] = (2, 3, 4, 5)
    per_size: int = 5
    seed: int = 7
    duality: DualityConfig = DualityConfig()


def main(cfg: SweepConfig) -> int:
    rng = np.random.default_rng(cfg.seed)
    bad = 0
    for n in cfg.sizes:
        for f in random_mnat_concave(n, cfg.per_size, seed=cfg.seed + n):
            dom = np.flatnonzero(np.isfinite(f.table))
            X, Y = (int(v) for v in rng.choice(dom, size=2))
            ctx = ExchangeContext(X, Y, int(rng.integers(0, 1 << n)) & X & ~Y)
            lem = verify_lemma_g1g2(f, ctx, cfg.duality)
            sub = check_conjugate_submodular(f, cfg.duality)
            bad += not (lem.passed and sub.passed)
            print(f"n={n} X={elements_of(X)} Y={elements_of(Y)} I={elements_of(ctx.I)} "
                  f"slack>={lem.min_slack:.3g} submod_violations={sub.violations}")
    print(f"{bad} failing instances")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--per-size", type=int, default=5)
    p.add_argument("--q-samples", type=int, default=200)
    p.add_argument("--pairs", type=int, default=500)
    p.add_argument("--seed", type=int, default=7)
    a = p.parse_args()
    dcfg = DualityConfig(q_samples=a.q_samples, pair_samples=a.pairs)
    sys.exit(main(SweepConfig(per_size=a.per_size, seed=a.seed, duality=dcfg)))
