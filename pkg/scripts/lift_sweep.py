#!/usr/bin/env python3
"""Compare MNAT_EXC on f with M_EXC on its minimal lift, over random functions."""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from mnat import AxiomId, SetFunction, check_axiom, lift
from mnat.generators import CorpusSpec, corpus_array, random_mnat_concave


@dataclass(frozen=True)
class LiftConfig:
    max_n: int = 4
    per_n: int = 50  # half grid draws, half sampled positives
    seed: int = 6


def main(cfg: LiftConfig) -> int:
    mismatches = total = positives = 0
    for n in range(1, cfg.max_n + 1):
        half = cfg.per_n // 2
        fs = [SetFunction(n, t) for t in corpus_array(CorpusSpec(n, mode="random", count=half, seed=cfg.seed + n))]
        fs += random_mnat_concave(n, cfg.per_n - half, seed=cfg.seed + n)
        for f in fs:
            ft, spec = lift(f)
            a = check_axiom(f, AxiomId.MNAT_EXC).passed
            b = check_axiom(ft, AxiomId.M_EXC).passed
            total += 1
            positives += a
            if a != b:
                mismatches += 1
                print(f"mismatch n={n} s={spec.s}: {f.table.tolist()}", file=sys.stderr)
    print(f"{total} functions, {positives} M-natural-concave, {mismatches} mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--per-n", type=int, default=50)
    p.add_argument("--seed", type=int, default=6)
    a = p.parse_args()
    sys.exit(main(LiftConfig(a.max_n, a.per_n, a.seed)))
