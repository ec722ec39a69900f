#!/usr/bin/env python3
"""Theorem-equivalence suite over an exhaustive or seeded random corpus.

    python3 scripts/run_suite.py --n 3                 # all 65535 grid tables
    python3 scripts/run_suite.py --n 5 --random 500    # seeded sample
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from mnat.generators import DEFAULT_GRID, CorpusSpec, corpus_array
from mnat.io import dumps, encode_value
from mnat.suite import run_suite


@dataclass(frozen=True)
class SuiteConfig:
    n: int = 3
    random: int | None = None
    seed: int = 2024
    grid: tuple[float, ...] = DEFAULT_GRID
    threads: int = os.cpu_count() or 1
    out: str | None = None


def parse(argv=None) -> SuiteConfig:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--random", type=int)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    a = p.parse_args(argv)
    return SuiteConfig(a.n, a.random, a.seed, DEFAULT_GRID, a.threads, a.out)


def main(cfg: SuiteConfig) -> int:
    mode = "random" if cfg.random else "exhaustive"
    spec = CorpusSpec(cfg.n, cfg.grid, mode=mode, count=cfg.random or 0, seed=cfg.seed)
    t0 = time.perf_counter()
    tables = corpus_array(spec)
    run = run_suite(tables, threads=cfg.threads)
    elapsed = time.perf_counter() - t0

    print(f"{'theorem':8s} {'checked':>8s} {'pos':>7s} {'neg':>7s} {'bad':>4s}", file=sys.stderr)
    for r in run.results:
        print(f"{r.theorem:8s} {r.instances_checked:8d} {r.positives:7d} {r.negatives:7d} "
              f"{len(r.discrepancies):4d}", file=sys.stderr)
    print(f"{tables.shape[0]} instances, {len(run.families)} distinct domains, {elapsed:.1f}s",
          file=sys.stderr)

    config = {k: v for k, v in asdict(cfg).items() if k not in ("out", "threads")}
    config["grid"] = [encode_value(v) for v in cfg.grid]
    doc = {"config": config, **run.to_json()}
    text = dumps(doc)
    if cfg.out:
        Path(cfg.out).write_text(text + "\n")
    else:
        print(text)
    return 0 if run.passed else 1


if __name__ == "__main__":
    sys.exit(main(parse()))
