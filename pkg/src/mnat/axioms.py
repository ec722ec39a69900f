"""Exhaustive checkers for the function-level exchange axioms.

Every axiom has the same shape: for each admissible tuple (X, Y, ...)

    f(X) + f(Y) <= max over candidates (A, B) of f(A) + f(B)

with the empty max equal to -inf.  A tuple generator turns an axiom and a
ground-set size into flat index arrays, ordered lexicographically by
(X, Y, i or I), and the evaluator runs those arrays against a whole batch of
tables at once.  The first violated tuple of a row is therefore its minimal
witness.
"""
from __future__ import annotations

import enum
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .core import (
    NEG_INF,
    CapExceeded,
    SetFunction,
    elements_of,
    is_integral_table,
    popcounts,
)
from .io import encode_value

FLOAT_EPS = 1e-9
DEFAULT_MULTI_CAP = 16
_CELL_BUDGET = 1 << 21
_CACHE_MAX_N = 8


class AxiomId(str, enum.Enum):
    MNAT_EXC = "MNAT_EXC"
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    L1 = "L1"
    L2 = "L2"
    L3 = "L3"
    M_EXC = "M_EXC"
    M_EXC_LOC = "M_EXC_LOC"
    M_EXC_W = "M_EXC_W"
    MNAT_EXC_M = "MNAT_EXC_M"
    MNAT_EXC_MS = "MNAT_EXC_MS"
    M_EXC_M = "M_EXC_M"

    def __str__(self):
        return self.value


MULTIPLE = frozenset({AxiomId.MNAT_EXC_M, AxiomId.MNAT_EXC_MS, AxiomId.M_EXC_M})
_WITH_I = frozenset({AxiomId.MNAT_EXC, AxiomId.P2, AxiomId.P3, AxiomId.P4, AxiomId.M_EXC})
_LOCAL = frozenset({AxiomId.L1, AxiomId.L2, AxiomId.L3})


@dataclass(frozen=True)
class Witness:
    """A tuple at which ``lhs = f(X) + f(Y)`` exceeds the best exchange ``rhs``.

    ``i`` is a 1-based element, ``I`` and ``Z`` are masks; ``elements`` lists
    the (i, j[, k[, l]]) of a local axiom.  ``note`` names a sub-axiom for
    family checks.
    """

    axiom: str
    X: int
    Y: int
    lhs: float
    rhs: float
    i: int | None = None
    I: int | None = None
    Z: int | None = None
    elements: tuple[int, ...] | None = None
    note: str | None = None

    def to_json(self) -> dict:
        doc: dict = {"X": elements_of(self.X), "Y": elements_of(self.Y)}
        if self.i is not None:
            doc["i"] = self.i
        if self.I is not None:
            doc["I"] = elements_of(self.I)
        if self.Z is not None:
            doc["Z"] = elements_of(self.Z)
        if self.elements is not None:
            doc["elements"] = list(self.elements)
        if self.note is not None:
            doc["note"] = self.note
        doc["lhs"] = encode_value(self.lhs)
        doc["rhs"] = encode_value(self.rhs)
        return doc


@dataclass(frozen=True)
class CheckReport:
    axiom: str
    passed: bool
    witness: Witness | None
    pairs_examined: int
    elapsed: float = 0.0

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("passed must hold exactly when there is no witness")

    def to_json(self, include_elapsed: bool = False) -> dict:
        doc = {
            "axiom": str(self.axiom),
            "passed": self.passed,
            "witness": None if self.witness is None else self.witness.to_json(),
            "pairs_examined": self.pairs_examined,
        }
        if include_elapsed:
            doc["elapsed"] = self.elapsed
        return doc


# -- tuple generation ------------------------------------------------------------

@dataclass(frozen=True)
class _Chunk:
    x: np.ndarray
    y: np.ndarray
    aux: np.ndarray  # 0-based i, mask I, or -1
    ca: np.ndarray
    cb: np.ndarray
    starts: np.ndarray

    def __len__(self):
        return self.x.shape[0]


def _bitmat(masks: np.ndarray, n: int) -> np.ndarray:
    return ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(bool)


def _ragged(A: np.ndarray, B: np.ndarray, valid: np.ndarray, neg: int):
    """Flatten per-tuple candidate matrices; rows with no candidate get one (-inf, -inf)."""
    t = valid.shape[0]
    counts = valid.sum(axis=1)
    size = np.maximum(counts, 1)
    starts = np.zeros(t, dtype=np.int64)
    if t:
        starts[1:] = np.cumsum(size)[:-1]
    total = int(size.sum())
    ca = np.full(total, neg, dtype=np.int64)
    cb = np.full(total, neg, dtype=np.int64)
    rows, cols = np.nonzero(valid)
    first = np.cumsum(counts) - counts
    pos = starts[rows] + np.arange(rows.shape[0]) - first[rows]
    ca[pos] = A[rows, cols]
    cb[pos] = B[rows, cols]
    return ca, cb, starts


def _gen(axiom: AxiomId, X: np.ndarray, Y: np.ndarray, n: int) -> _Chunk:
    pc = popcounts(n)
    neg = 1 << n
    D = X & ~Y
    E = Y & ~X
    bj = (np.int64(1) << np.arange(n, dtype=np.int64))[None, :]
    none = lambda m: np.full(m, -1, dtype=np.int64)  # noqa: E731

    if axiom in _WITH_I:
        keep = {
            AxiomId.MNAT_EXC: np.ones_like(X, dtype=bool),
            AxiomId.M_EXC: np.ones_like(X, dtype=bool),
            AxiomId.P2: pc[X] == pc[Y],
            AxiomId.P3: pc[X] < pc[Y],
            AxiomId.P4: pc[X] > pc[Y],
        }[axiom]
        X, Y, D, E = X[keep], Y[keep], D[keep], E[keep]
        rows, ii = np.nonzero(_bitmat(D, n))
        TX, TY, TE = X[rows], Y[rows], E[rows]
        bi = (np.int64(1) << ii.astype(np.int64))[:, None]
        A = (TX[:, None] & ~bi) | bj
        B = (TY[:, None] | bi) & ~bj
        valid = (TE[:, None] & bj) != 0
        if axiom in (AxiomId.MNAT_EXC, AxiomId.P4):
            A = np.hstack([TX[:, None] & ~bi, A])
            B = np.hstack([TY[:, None] | bi, B])
            valid = np.hstack([np.ones((rows.shape[0], 1), dtype=bool), valid])
        ca, cb, starts = _ragged(A, B, valid, neg)
        return _Chunk(TX, TY, ii.astype(np.int64), ca, cb, starts)

    if axiom is AxiomId.P1:
        keep = pc[X] < pc[Y]
        X, Y, E = X[keep], Y[keep], E[keep]
        A = X[:, None] | bj
        B = Y[:, None] & ~bj
        valid = (E[:, None] & bj) != 0
        ca, cb, starts = _ragged(A, B, valid, neg)
        return _Chunk(X, Y, none(X.shape[0]), ca, cb, starts)

    if axiom in (AxiomId.M_EXC_LOC, AxiomId.M_EXC_W):
        keep = pc[D] == 2 if axiom is AxiomId.M_EXC_LOC else X != Y
        X, Y, D, E = X[keep], Y[keep], D[keep], E[keep]
        bi = np.repeat(bj, n, axis=1)  # column c -> i = c // n
        bjj = np.tile(bj, (1, n))  # column c -> j = c % n
        A = (X[:, None] & ~bi) | bjj
        B = (Y[:, None] | bi) & ~bjj
        valid = ((D[:, None] & bi) != 0) & ((E[:, None] & bjj) != 0)
        ca, cb, starts = _ragged(A, B, valid, neg)
        return _Chunk(X, Y, none(X.shape[0]), ca, cb, starts)

    if axiom in _LOCAL:
        need_e = {AxiomId.L1: 0, AxiomId.L2: 1, AxiomId.L3: 2}[axiom]
        keep = (pc[D] == 2) & (pc[E] == need_e)
        X, Y, D, E = X[keep], Y[keep], D[keep], E[keep]
        Z = X & Y
        i = D & -D
        j = D & ~i
        if axiom is AxiomId.L1:
            A, B = (Z | i)[:, None], (Z | j)[:, None]
        elif axiom is AxiomId.L2:
            k = E
            A = np.stack([Z | i | k, Z | j | k], axis=1)
            B = np.stack([Z | j, Z | i], axis=1)
        else:
            k = E & -E
            l = E & ~k
            A = np.stack([Z | i | k, Z | j | k], axis=1)
            B = np.stack([Z | j | l, Z | i | l], axis=1)
        valid = np.ones(A.shape, dtype=bool)
        ca, cb, starts = _ragged(A, B, valid, neg)
        return _Chunk(X, Y, none(X.shape[0]), ca, cb, starts)

    if axiom in MULTIPLE:
        S = np.arange(1 << n, dtype=np.int64)
        rows, I = np.nonzero((S[None, :] & ~D[:, None]) == 0)
        I = I.astype(np.int64)
        TX, TY, TE = X[rows], Y[rows], E[rows]
        J = S[None, :]
        valid = (J & ~TE[:, None]) == 0
        if axiom is AxiomId.MNAT_EXC_MS:
            valid &= pc[S][None, :] <= pc[I][:, None]
        elif axiom is AxiomId.M_EXC_M:
            valid &= pc[S][None, :] == pc[I][:, None]
        A = (TX & ~I)[:, None] | J
        B = (TY[:, None] & ~J) | I[:, None]
        ca, cb, starts = _ragged(A, B, valid, neg)
        return _Chunk(TX, TY, I, ca, cb, starts)

    raise ValueError(f"unknown axiom {axiom!r}")


def _width(axiom: AxiomId, n: int) -> float:
    if axiom in MULTIPLE:
        return (2.0 ** n) * (1.25 ** n)
    if axiom in (AxiomId.M_EXC_LOC, AxiomId.M_EXC_W):
        return float(n * n)
    return float(n + 1)


def _iter_chunks(axiom: AxiomId, n: int, support: np.ndarray | None) -> Iterator[_Chunk]:
    all_masks = np.arange(1 << n, dtype=np.int64)
    members = all_masks if support is None else all_masks[support]
    if members.shape[0] == 0:
        return
    per_x = members.shape[0] * _width(axiom, n)
    bx = max(1, int(_CELL_BUDGET // max(per_x, 1.0)))
    for start in range(0, members.shape[0], bx):
        xs = members[start:start + bx]
        X = np.repeat(xs, members.shape[0])
        Y = np.tile(members, xs.shape[0])
        chunk = _gen(axiom, X, Y, n)
        if len(chunk):
            yield chunk


@lru_cache(maxsize=None)
def _cached_chunks(axiom: AxiomId, n: int) -> tuple[_Chunk, ...]:
    return tuple(_iter_chunks(axiom, n, None))


def tuples(axiom: AxiomId, n: int, support: np.ndarray | None = None):
    """Chunks of admissible tuples in lexicographic order."""
    if support is None and n <= _CACHE_MAX_N:
        return _cached_chunks(axiom, n)
    return _iter_chunks(axiom, n, support)


# -- evaluation ------------------------------------------------------------------

def row_eps(tables: np.ndarray) -> np.ndarray:
    """0 for rows whose finite entries are all integers, FLOAT_EPS otherwise."""
    finite = np.where(np.isfinite(tables), tables, 0.0)
    integral = np.all(finite == np.round(finite), axis=1)
    return np.where(integral, 0.0, FLOAT_EPS)


def extend(tables: np.ndarray) -> np.ndarray:
    """Append the -inf slot used by absent candidates."""
    k = tables.shape[0]
    return np.hstack([tables, np.full((k, 1), NEG_INF)])


@dataclass
class BatchResult:
    """Verdicts for a batch of tables; failing rows carry their minimal tuple."""

    axiom: AxiomId
    n: int
    passed: np.ndarray
    x: np.ndarray
    y: np.ndarray
    aux: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    pairs_examined: int

    def witness(self, k: int) -> Witness | None:
        if self.passed[k]:
            return None
        return make_witness(self.axiom, self.n, int(self.x[k]), int(self.y[k]),
                            int(self.aux[k]), float(self.lhs[k]), float(self.rhs[k]))


def make_witness(axiom: AxiomId, n: int, X: int, Y: int, aux: int, lhs: float, rhs: float) -> Witness:
    if axiom in _WITH_I:
        return Witness(str(axiom), X, Y, lhs, rhs, i=aux + 1)
    if axiom in MULTIPLE:
        return Witness(str(axiom), X, Y, lhs, rhs, I=aux)
    if axiom in _LOCAL:
        elems = tuple(elements_of(X & ~Y) + elements_of(Y & ~X))
        return Witness(str(axiom), X, Y, lhs, rhs, Z=X & Y, elements=elems)
    return Witness(str(axiom), X, Y, lhs, rhs)


def _first_violations(ext: np.ndarray, eps: np.ndarray, chunks, state) -> int:
    """Sweep chunks in order, recording each row's first violation. Returns tuple count."""
    found, x, y, aux, lhs_out, rhs_out = state
    total = 0
    for chunk in chunks:
        total += len(chunk)
        todo = np.flatnonzero(~found)
        if todo.size == 0:
            continue
        width = chunk.ca.shape[0] + len(chunk)
        rb = max(1, _CELL_BUDGET // max(width, 1))
        for s in range(0, todo.size, rb):
            rows = todo[s:s + rb]
            sub = ext[rows]
            lhs = sub[:, chunk.x] + sub[:, chunk.y]
            cand = sub[:, chunk.ca] + sub[:, chunk.cb]
            rhs = np.maximum.reduceat(cand, chunk.starts, axis=1)
            viol = lhs > rhs + eps[rows, None]
            hit = viol.any(axis=1)
            if not hit.any():
                continue
            first = viol.argmax(axis=1)
            hr = rows[hit]
            ht = first[hit]
            found[hr] = True
            x[hr] = chunk.x[ht]
            y[hr] = chunk.y[ht]
            aux[hr] = chunk.aux[ht]
            lhs_out[hr] = lhs[hit, ht]
            rhs_out[hr] = rhs[hit, ht]
    return total


def _new_state(k: int):
    return (
        np.zeros(k, dtype=bool),
        np.full(k, -1, dtype=np.int64),
        np.full(k, -1, dtype=np.int64),
        np.full(k, -1, dtype=np.int64),
        np.full(k, NEG_INF),
        np.full(k, NEG_INF),
    )


def _check_cap(axiom: AxiomId, n: int, multi_cap: int) -> None:
    if axiom in MULTIPLE and n > multi_cap:
        raise CapExceeded(f"{axiom} limited to n <= {multi_cap}, got n={n}")


def check_batch(tables: np.ndarray, axiom: AxiomId | str, *, support: np.ndarray | None = None,
                threads: int = 1, multi_cap: int = DEFAULT_MULTI_CAP) -> BatchResult:
    """Check ``axiom`` on every row of ``tables`` (shape (K, 2^n)).

    ``support`` restricts the sweep to X, Y in a known superset of every
    row's effective domain; tuples outside it cannot be violated.
    """
    axiom = AxiomId(axiom)
    tables = np.asarray(tables, dtype=np.float64)
    k, size = tables.shape
    n = size.bit_length() - 1
    if 1 << n != size:
        raise ValueError(f"table width {size} is not a power of two")
    _check_cap(axiom, n, multi_cap)
    ext = extend(tables)
    eps = row_eps(tables)
    state = _new_state(k)
    threads = max(1, int(threads))

    if threads == 1 or k == 1:
        chunks = tuples(axiom, n, support)
        if threads > 1:
            chunks = list(chunks)
            parts = _split(len(chunks), threads)
            states = [_new_state(k) for _ in parts]
            with ThreadPoolExecutor(threads) as pool:
                counts = list(pool.map(
                    lambda ps: _first_violations(ext, eps, chunks[ps[0][0]:ps[0][1]], ps[1]),
                    zip(parts, states)))
            total = sum(counts)
            for st in states:  # earlier chunk ranges win
                pending = ~state[0] & st[0]
                for dst, src in zip(state, st):
                    dst[pending] = src[pending]
        else:
            total = _first_violations(ext, eps, chunks, state)
    else:
        chunks = tuples(axiom, n, support)
        if not isinstance(chunks, tuple):
            chunks = tuple(chunks)
        parts = _split(k, threads)

        def work(bounds):
            lo, hi = bounds
            st = _new_state(hi - lo)
            count = _first_violations(ext[lo:hi], eps[lo:hi], chunks, st)
            return bounds, st, count

        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(work, parts))
        total = results[0][2] if results else 0
        for (lo, hi), st, _ in results:
            for dst, src in zip(state, st):
                dst[lo:hi] = src

    found, x, y, aux, lhs, rhs = state
    return BatchResult(axiom, n, ~found, x, y, aux, lhs, rhs, total)


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total)) if total else 1
    edges = np.linspace(0, total, parts + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:])]


def check_axiom(f: SetFunction, axiom: AxiomId | str, *, threads: int = 1,
                multi_cap: int = DEFAULT_MULTI_CAP) -> CheckReport:
    """Decide one axiom for ``f`` exhaustively.

    Only tuples with X, Y in dom f are swept (all others have lhs = -inf);
    ``pairs_examined`` counts those tuples.
    """
    axiom = AxiomId(axiom)
    start = time.perf_counter()
    support = np.isfinite(f.table)
    res = check_batch(f.table[None, :], axiom, support=support, threads=threads, multi_cap=multi_cap)
    return CheckReport(str(axiom), bool(res.passed[0]), res.witness(0), res.pairs_examined,
                       time.perf_counter() - start)


def is_mnat_concave(f: SetFunction, **kw) -> CheckReport:
    return check_axiom(f, AxiomId.MNAT_EXC, **kw)


def is_m_concave(f: SetFunction, **kw) -> CheckReport:
    return check_axiom(f, AxiomId.M_EXC, **kw)


# -- witness re-evaluation ----------------------------------------------------------

def _bits(mask: int) -> list[int]:
    return [e - 1 for e in elements_of(mask)]


def _submasks(mask: int) -> list[int]:
    out, sub = [], mask
    while True:
        out.append(sub)
        if sub == 0:
            return out
        sub = (sub - 1) & mask


def evaluate_tuple(table, axiom: AxiomId | str, X: int, Y: int, i: int | None = None,
                   I: int | None = None) -> tuple[bool, float, float]:
    """Re-evaluate one quantified instance directly from the formula.

    ``i`` is 1-based.  Returns (admissible, lhs, rhs).
    """
    axiom = AxiomId(axiom)
    v = lambda m: float(table[m])  # noqa: E731
    cx, cy = bin(X).count("1"), bin(Y).count("1")
    D, E = X & ~Y, Y & ~X
    lhs = v(X) + v(Y)
    sums: list[float] = []

    if axiom in _WITH_I:
        if i is None or not (D >> (i - 1)) & 1:
            return False, lhs, NEG_INF
        cond = {AxiomId.MNAT_EXC: True, AxiomId.M_EXC: True, AxiomId.P2: cx == cy,
                AxiomId.P3: cx < cy, AxiomId.P4: cx > cy}[axiom]
        if not cond:
            return False, lhs, NEG_INF
        b = 1 << (i - 1)
        if axiom in (AxiomId.MNAT_EXC, AxiomId.P4):
            sums.append(v(X & ~b) + v(Y | b))
        for j in _bits(E):
            c = 1 << j
            sums.append(v((X & ~b) | c) + v((Y | b) & ~c))
    elif axiom is AxiomId.P1:
        if not cx < cy:
            return False, lhs, NEG_INF
        for j in _bits(E):
            c = 1 << j
            sums.append(v(X | c) + v(Y & ~c))
    elif axiom in (AxiomId.M_EXC_LOC, AxiomId.M_EXC_W):
        ok = bin(D).count("1") == 2 if axiom is AxiomId.M_EXC_LOC else X != Y
        if not ok:
            return False, lhs, NEG_INF
        for a in _bits(D):
            for c in _bits(E):
                sums.append(v((X & ~(1 << a)) | (1 << c)) + v((Y | (1 << a)) & ~(1 << c)))
    elif axiom in _LOCAL:
        d, e = _bits(D), _bits(E)
        need = {AxiomId.L1: 0, AxiomId.L2: 1, AxiomId.L3: 2}[axiom]
        if len(d) != 2 or len(e) != need:
            return False, lhs, NEG_INF
        Z = X & Y
        p, q = (1 << d[0]), (1 << d[1])
        if axiom is AxiomId.L1:
            sums = [v(Z | p) + v(Z | q)]
        elif axiom is AxiomId.L2:
            k = 1 << e[0]
            sums = [v(Z | p | k) + v(Z | q), v(Z | q | k) + v(Z | p)]
        else:
            k, l = 1 << e[0], 1 << e[1]
            sums = [v(Z | p | k) + v(Z | q | l), v(Z | q | k) + v(Z | p | l)]
    elif axiom in MULTIPLE:
        if I is None or I & ~D:
            return False, lhs, NEG_INF
        ni = bin(I).count("1")
        for J in _submasks(E):
            nj = bin(J).count("1")
            if axiom is AxiomId.MNAT_EXC_MS and nj > ni:
                continue
            if axiom is AxiomId.M_EXC_M and nj != ni:
                continue
            sums.append(v((X & ~I) | J) + v((Y & ~J) | I))
    return True, lhs, max(sums, default=NEG_INF)


def verify_witness(f: SetFunction, w: Witness) -> bool:
    """True iff the witness tuple is admissible and still violates its axiom on ``f``."""
    try:
        axiom = AxiomId(w.axiom)
    except ValueError as exc:
        raise ValueError(f"{w.axiom} is not a function axiom") from exc
    size = f.ground.size
    for m in (w.X, w.Y, w.I or 0, w.Z or 0):
        if not 0 <= m < size:
            raise ValueError("witness does not fit the ground set of f")
    ok, lhs, rhs = evaluate_tuple(f.table, axiom, w.X, w.Y, w.i, w.I)
    if not ok:
        return False
    eps = 0.0 if is_integral_table(f.table) else FLOAT_EPS
    return lhs > rhs + eps


# -- remark-form cross-check for L2/L3 ------------------------------------------

def _two_max_groups(n: int, size: int):
    """(Z, W) with |W| = size, Z and W disjoint, plus the three sum index pairs."""
    full = 1 << n
    pc = popcounts(n)
    Z, W = np.meshgrid(np.arange(full), np.arange(full), indexing="ij")
    Z, W = Z.ravel(), W.ravel()
    keep = (pc[W] == size) & ((Z & W) == 0)
    Z, W = Z[keep], W[keep]
    bits = [np.array(_bits(int(w)), dtype=np.int64) for w in W]
    el = np.array(bits, dtype=np.int64).reshape(len(W), size)
    b = np.int64(1) << el
    if size == 3:
        i, j, k = b[:, 0], b[:, 1], b[:, 2]
        pairs = [(Z | i | j, Z | k), (Z | i | k, Z | j), (Z | j | k, Z | i)]
    else:
        i, j, k, l = b[:, 0], b[:, 1], b[:, 2], b[:, 3]
        pairs = [(Z | i | j, Z | k | l), (Z | i | k, Z | j | l), (Z | j | k, Z | i | l)]
    return Z, W, pairs


def two_maximizer_batch(tables: np.ndarray, axiom: AxiomId | str) -> np.ndarray:
    """Per row: does the max of the three sums occur at least twice, everywhere?"""
    axiom = AxiomId(axiom)
    if axiom not in (AxiomId.L2, AxiomId.L3):
        raise ValueError("two-maximizer form exists only for L2 and L3")
    tables = np.asarray(tables, dtype=np.float64)
    n = tables.shape[1].bit_length() - 1
    size = 3 if axiom is AxiomId.L2 else 4
    Z, W, pairs = _two_max_groups(n, size)
    if Z.shape[0] == 0:
        return np.ones(tables.shape[0], dtype=bool)
    sums = np.stack([tables[:, a] + tables[:, b] for a, b in pairs], axis=2)
    sums.sort(axis=2)
    eps = row_eps(tables)[:, None]
    ok = sums[:, :, 1] >= sums[:, :, 2] - eps
    return ok.all(axis=1)


def two_maximizer_check(f: SetFunction, axiom: AxiomId | str) -> CheckReport:
    """L2/L3 in the form 'the maximum of the three sums is attained at least twice'."""
    axiom = AxiomId(axiom)
    if axiom not in (AxiomId.L2, AxiomId.L3):
        raise ValueError("two-maximizer form exists only for L2 and L3")
    start = time.perf_counter()
    size = 3 if axiom is AxiomId.L2 else 4
    Z, W, pairs = _two_max_groups(f.n, size)
    eps = 0.0 if f.integral else FLOAT_EPS
    t = f.table
    total = int(Z.shape[0])
    for g in range(total):
        vals = sorted(float(t[a[g]] + t[b[g]]) for a, b in pairs)
        if vals[1] < vals[2] - eps:
            z, w = int(Z[g]), int(W[g])
            a0, b0 = int(pairs[0][0][g]), int(pairs[0][1][g])
            witness = Witness(str(axiom), a0, b0, vals[2], vals[1], Z=z,
                              elements=tuple(elements_of(w)), note="unique maximum")
            return CheckReport(str(axiom), False, witness, total, time.perf_counter() - start)
    return CheckReport(str(axiom), True, None, total, time.perf_counter() - start)
