"""Set functions over N = {1..n} stored as dense extended-real tables.

Subsets are integer bitmasks: element ``k`` (1-based) lives at bit ``k-1``.
The value NEG_INF is IEEE ``-inf``; finite arithmetic never produces it and
``-inf + a == -inf`` for every finite ``a``, which is exactly the convention
the exchange inequalities need.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

NEG_INF = float("-inf")

DEFAULT_MAX_N = 20
HARD_MAX_N = 24


class DCAError(Exception):
    """Base class for library errors."""


class EmptyDomain(DCAError, ValueError):
    pass


class CapExceeded(DCAError):
    """A resource cap (ground-set size, corpus size) would be exceeded."""


class LiftTooSmall(DCAError, ValueError):
    pass


def default_max_n() -> int:
    """Ground-set cap, overridable through ``DCA_MAX_N`` (never above 24)."""
    raw = os.environ.get("DCA_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"DCA_MAX_N must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError("DCA_MAX_N must be positive")
    return min(value, HARD_MAX_N)


@dataclass(frozen=True)
class GroundSet:
    n: int
    max_n: int = field(default_factory=default_max_n)

    def __post_init__(self):
        if self.max_n > HARD_MAX_N:
            raise CapExceeded(f"max_n={self.max_n} above hard cap {HARD_MAX_N}")
        # n = 0 is allowed: exchange-pair functions live on Y \ X, which may be empty.
        if self.n < 0:
            raise ValueError(f"ground set size must be >= 0, got {self.n}")
        if self.n > self.max_n:
            raise CapExceeded(f"n={self.n} exceeds cap {self.max_n}")

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def elements(self) -> range:
        return range(1, self.n + 1)

    def check_mask(self, mask: int) -> int:
        if not 0 <= mask < (1 << self.n):
            raise ValueError(f"mask {mask} is not a subset of a {self.n}-element ground set")
        return mask


# -- bitmask helpers ---------------------------------------------------------

def mask_of(elements: Iterable[int], n: int | None = None) -> int:
    """Bitmask of a collection of 1-based elements."""
    mask = 0
    for e in elements:
        e = int(e)
        if e < 1 or (n is not None and e > n):
            raise ValueError(f"element {e} outside 1..{n}")
        if mask >> (e - 1) & 1:
            raise ValueError(f"element {e} repeated")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> list[int]:
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def popcounts(n: int) -> np.ndarray:
    """Cardinality of every subset of an n-set, indexed by mask."""
    sizes = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        sizes = np.concatenate([sizes, sizes + 1])
    return sizes


def subset_sums(p: np.ndarray) -> np.ndarray:
    """``out[Z] = sum(p[k] for bit k in Z)`` for every mask Z."""
    out = np.zeros(1, dtype=np.float64)
    for value in np.asarray(p, dtype=np.float64):
        out = np.concatenate([out, out + value])
    return out


def as_price(p: Sequence[float] | np.ndarray, n: int) -> np.ndarray:
    """Validate a price vector (one finite real per element)."""
    arr = np.asarray(p, dtype=np.float64).reshape(-1)
    if arr.shape[0] != n:
        raise ValueError(f"price vector has {arr.shape[0]} entries, ground set has {n}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("price vector entries must be finite")
    return arr


def is_integral_table(table: np.ndarray) -> bool:
    finite = table[np.isfinite(table)]
    return bool(np.all(finite == np.round(finite)))


# -- set functions and families ------------------------------------------------

class SetFunction:
    """Immutable f: 2^N -> R u {-inf} held as a length-2^n table."""

    __slots__ = ("ground", "table")

    def __init__(self, ground: GroundSet | int, table: Iterable[float] | np.ndarray,
                 *, allow_empty: bool = False):
        if not isinstance(ground, GroundSet):
            ground = GroundSet(int(ground))
        arr = np.array(table, dtype=np.float64).reshape(-1)
        if arr.shape[0] != ground.size:
            raise ValueError(f"table has {arr.shape[0]} entries, expected {ground.size}")
        if np.any(np.isnan(arr)) or np.any(arr == np.inf):
            raise ValueError("set function values must be finite reals or -inf")
        if not allow_empty and not np.any(np.isfinite(arr)):
            raise EmptyDomain("effective domain is empty")
        arr.flags.writeable = False
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "table", arr)

    def __setattr__(self, name, value):
        raise AttributeError("SetFunction is immutable")

    @property
    def n(self) -> int:
        return self.ground.n

    @classmethod
    def from_dict(cls, n: int, values: dict, default: float = NEG_INF) -> "SetFunction":
        """Build from ``{iterable_of_elements: value}``; missing subsets get ``default``."""
        ground = GroundSet(n)
        table = np.full(ground.size, default, dtype=np.float64)
        for key, value in values.items():
            table[mask_of(key, n)] = value
        return cls(ground, table)

    def __call__(self, X: int) -> float:
        return eval_at(self, X)

    def __eq__(self, other):
        if not isinstance(other, SetFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        finite = [(elements_of(m), v) for m, v in enumerate(self.table) if np.isfinite(v)]
        return f"SetFunction(n={self.n}, finite={finite})"

    @property
    def integral(self) -> bool:
        return is_integral_table(self.table)

    def finite_range(self) -> tuple[float, float]:
        finite = self.table[np.isfinite(self.table)]
        return float(finite.min()), float(finite.max())


@dataclass(frozen=True)
class SetFamily:
    ground: GroundSet
    members: frozenset[int]

    def __post_init__(self):
        for m in self.members:
            self.ground.check_mask(m)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        members = set()
        for s in sets:
            m = mask_of(s, n)
            if m in members:
                raise ValueError(f"duplicate member {sorted(s)}")
            members.add(m)
        return cls(GroundSet(n), frozenset(members))

    @property
    def n(self) -> int:
        return self.ground.n

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def as_sets(self) -> list[list[int]]:
        return [elements_of(m) for m in self.sorted_members()]

    def indicator(self) -> SetFunction:
        """0 on members, -inf elsewhere."""
        table = np.full(self.ground.size, NEG_INF)
        table[list(self.members)] = 0.0
        return SetFunction(self.ground, table, allow_empty=True)

    def support(self) -> np.ndarray:
        mask = np.zeros(self.ground.size, dtype=bool)
        mask[list(self.members)] = True
        return mask


@dataclass(frozen=True)
class LiftSpec:
    n: int
    r: int
    r_min: int
    s: int

    @property
    def n_tilde(self) -> int:
        return self.n + self.s

    @property
    def aux(self) -> list[int]:
        """The auxiliary elements n+1..n+s."""
        return list(range(self.n + 1, self.n + self.s + 1))


# -- operations -------------------------------------------------------------------

def eval_at(f: SetFunction, X: int) -> float:
    f.ground.check_mask(X)
    return float(f.table[X])


def effective_domain(f: SetFunction) -> SetFamily:
    members = np.flatnonzero(np.isfinite(f.table))
    if members.size == 0:
        raise EmptyDomain("effective domain is empty")
    return SetFamily(f.ground, frozenset(int(m) for m in members))


def add_linear(f: SetFunction, p) -> SetFunction:
    """f_p(X) = f(X) + p(X); -inf entries stay -inf."""
    p = as_price(p, f.n)
    return SetFunction(f.ground, f.table + subset_sums(p))


def cardinality_bounds(f: SetFunction) -> tuple[int, int]:
    """(max, min) of |X| over dom f."""
    sizes = popcounts(f.n)[np.isfinite(f.table)]
    if sizes.size == 0:
        raise EmptyDomain("effective domain is empty")
    return int(sizes.max()), int(sizes.min())


def lift_index(n: int, s: int, r: int) -> np.ndarray:
    """Map from masks of N u S to masks of N (or 2^n, the -inf slot) for the lifted table."""
    big = np.arange(1 << (n + s), dtype=np.int64)
    idx = big & ((1 << n) - 1)
    return np.where(popcounts(n + s) == r, idx, 1 << n)


def lift(f: SetFunction, s: int | None = None, *, max_n: int | None = None) -> tuple[SetFunction, LiftSpec]:
    """Equi-cardinal lifting onto N u {n+1..n+s}.

    ``lifted(Z) = f(Z & N)`` when ``|Z| == r`` (r = max cardinality in dom f),
    else -inf. ``s`` defaults to the smallest admissible value ``r - r_min``.
    """
    r, r_min = cardinality_bounds(f)
    if s is None:
        s = r - r_min
    if s < r - r_min:
        raise LiftTooSmall(f"s={s} < r - r' = {r - r_min}")
    cap = f.ground.max_n if max_n is None else max_n
    if f.n + s > cap:
        raise CapExceeded(f"lifted ground set has {f.n + s} elements, cap is {cap}")
    ext = np.append(f.table, NEG_INF)
    table = ext[lift_index(f.n, s, r)]
    return SetFunction(GroundSet(f.n + s, cap), table), LiftSpec(f.n, r, r_min, s)


def layer(f: SetFunction, r: int) -> SetFunction:
    """Restrict f to the sets of cardinality r."""
    table = np.where(popcounts(f.n) == r, f.table, NEG_INF)
    if not np.any(np.isfinite(table)):
        raise EmptyDomain(f"no member of dom f has cardinality {r}")
    return SetFunction(f.ground, table)


def restrict(f: SetFunction, family: SetFamily) -> SetFunction:
    """Keep f on the members of ``family``, -inf elsewhere."""
    table = np.where(family.support(), f.table, NEG_INF)
    return SetFunction(f.ground, table)
