"""Instance generators: exhaustive/random corpora, weighted matroid bases,
concave-of-cardinality valuations, and single-entry mutations.

Nothing here asserts concavity of its output; the tests prove it with the
checkers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .axioms import AxiomId, check_axiom
from .core import (
    NEG_INF,
    CapExceeded,
    DCAError,
    GroundSet,
    SetFamily,
    SetFunction,
    as_price,
    mask_of,
    popcounts,
    subset_sums,
)

DEFAULT_GRID = (NEG_INF, 0.0, 1.0, 2.0)
EXHAUSTIVE_LIMIT = 10**7


class CorpusTooLarge(CapExceeded):
    pass


class NotABaseFamily(DCAError, ValueError):
    pass


class NotConcaveSequence(DCAError, ValueError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    n: int
    value_grid: tuple[float, ...] = DEFAULT_GRID
    mode: str = "exhaustive"
    count: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if len(set(self.value_grid)) != len(self.value_grid) or not self.value_grid:
            raise ValueError("value grid must be nonempty without repeats")
        GroundSet(self.n)

    @property
    def exhaustive_size(self) -> int:
        return len(self.value_grid) ** (1 << self.n)


def _has_finite(grid) -> bool:
    return any(np.isfinite(v) for v in grid)


def corpus_tables(spec: CorpusSpec, batch: int = 1 << 14) -> Iterator[np.ndarray]:
    """Corpus rows as (k, 2^n) arrays; tables with empty domain are skipped."""
    grid = np.array(spec.value_grid, dtype=np.float64)
    size = 1 << spec.n
    if spec.mode == "exhaustive":
        total = spec.exhaustive_size
        if total > EXHAUSTIVE_LIMIT:
            raise CorpusTooLarge(f"{len(grid)}^{size} = {total} tables exceeds {EXHAUSTIVE_LIMIT}")
        base = len(grid)
        place = base ** np.arange(size, dtype=np.int64)
        for start in range(0, total, batch):
            codes = np.arange(start, min(start + batch, total), dtype=np.int64)
            digits = (codes[:, None] // place[None, :]) % base
            tables = grid[digits]
            keep = np.isfinite(tables).any(axis=1)
            if keep.any():
                yield tables[keep]
        return
    if not _has_finite(grid):
        raise ValueError("random corpus needs a finite grid value")
    rng = np.random.default_rng(spec.seed)
    made = 0
    while made < spec.count:
        want = min(batch, spec.count - made)
        tables = grid[rng.integers(0, len(grid), size=(want, size))]
        tables = tables[np.isfinite(tables).any(axis=1)]
        if tables.shape[0]:
            made += tables.shape[0]
            yield tables


def enumerate_corpus(spec: CorpusSpec) -> Iterator[SetFunction]:
    ground = GroundSet(spec.n)
    for tables in corpus_tables(spec):
        for row in tables:
            yield SetFunction(ground, row)


def corpus_array(spec: CorpusSpec) -> np.ndarray:
    parts = list(corpus_tables(spec))
    if not parts:
        return np.zeros((0, 1 << spec.n))
    return np.vstack(parts)


def weighted_matroid_valuation(B: SetFamily, w) -> SetFunction:
    """f(X) = w(X) on members of a base family, -inf elsewhere."""
    from .family import FamilyAxiomId, check_family

    if not check_family(B, FamilyAxiomId.B_EXC).passed:
        raise NotABaseFamily(f"{B.as_sets()} violates base exchange")
    w = as_price(w, B.n)
    table = np.where(B.support(), subset_sums(w), NEG_INF)
    return SetFunction(B.ground, table)


def uniform_matroid_bases(r: int, n: int) -> SetFamily:
    pc = popcounts(n)
    return SetFamily(GroundSet(n), frozenset(int(m) for m in np.flatnonzero(pc == r)))


def graphic_matroid_bases(n_vertices: int, edges: Sequence[tuple[int, int]]) -> SetFamily:
    """Spanning forests with the maximum edge count; element k is edges[k-1]."""
    m = len(edges)
    forests = []
    for mask in range(1 << m):
        parent = list(range(n_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        acyclic = True
        for k in range(m):
            if mask >> k & 1:
                a, b = find(edges[k][0]), find(edges[k][1])
                if a == b:
                    acyclic = False
                    break
                parent[a] = b
        if acyclic:
            forests.append(mask)
    top = max(bin(f).count("1") for f in forests)
    return SetFamily(GroundSet(m), frozenset(f for f in forests if bin(f).count("1") == top))


def concave_cardinality_valuation(n: int, phi: Sequence[float], w=None) -> SetFunction:
    """f(X) = phi(|X|) + w(X).

    ``phi`` may be shorter than n+1; larger cardinalities get -inf.
    """
    phi = np.asarray(phi, dtype=np.float64)
    if phi.ndim != 1 or phi.shape[0] == 0 or not np.all(np.isfinite(phi)):
        raise NotConcaveSequence("phi must be a nonempty sequence of finite values")
    if phi.shape[0] > n + 1:
        raise ValueError(f"phi has {phi.shape[0]} entries, at most {n + 1} allowed")
    steps = np.diff(phi)
    if np.any(np.diff(steps) > 0):
        raise NotConcaveSequence(f"increments of {phi.tolist()} are not nonincreasing")
    w = np.zeros(n) if w is None else as_price(w, n)
    pc = popcounts(n)
    ext = np.append(phi, NEG_INF)
    table = ext[np.minimum(pc, phi.shape[0])] + subset_sums(w)
    return SetFunction(GroundSet(n), table)


def mutate(f: SetFunction, X, delta: float) -> SetFunction:
    """Shift one entry by ``delta`` (a -inf entry stays -inf)."""
    if not isinstance(X, (int, np.integer)):
        X = mask_of(X, f.n)
    f.ground.check_mask(int(X))
    table = f.table.copy()
    table[int(X)] += delta
    return SetFunction(f.ground, table)


def random_mnat_concave(n: int, count: int, seed: int = 0, grid=DEFAULT_GRID,
                        max_tries: int = 100_000) -> list[SetFunction]:
    """Draw grid-valued functions and keep those the checker accepts, plus
    concave-cardinality instances with random weights to vary the mix."""
    rng = np.random.default_rng(seed)
    out: list[SetFunction] = []
    tries = 0
    while len(out) < count and tries < max_tries:
        tries += 1
        if tries % 2:
            k = int(rng.integers(1, n + 2))
            steps = np.sort(rng.integers(-2, 3, size=k - 1))[::-1]
            phi = np.concatenate([[0.0], np.cumsum(steps)]).astype(float)
            f = concave_cardinality_valuation(n, phi, rng.integers(-2, 3, size=n))
        else:
            table = np.array(grid)[rng.integers(0, len(grid), size=1 << n)]
            if not np.isfinite(table).any():
                continue
            f = SetFunction(n, table)
        if check_axiom(f, AxiomId.MNAT_EXC).passed:
            out.append(f)
    return out
