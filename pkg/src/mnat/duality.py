"""Conjugates and the multiple-exchange duality checks.

For X, Y and I contained in X \\ Y the exchange pair on Y0 = Y \\ X is

    f1(J) = f((X \\ I) | J),    f2(J) = f((Y \\ J) | I)

and the conjugate of h is g(p) = max_Z h(Z) - p(Z).  Only the finite max side
of the Fenchel-type identity is computed exactly; the infimum over q is
probed on sampled q, so the identity is certified one-sidedly.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .axioms import FLOAT_EPS, AxiomId, check_axiom
from .core import (
    NEG_INF,
    DCAError,
    EmptyDomain,
    GroundSet,
    SetFunction,
    as_price,
    elements_of,
    subset_sums,
)


class HypothesisViolated(DCAError):
    """The instance does not satisfy the hypothesis the checked statement needs."""


@dataclass(frozen=True)
class ExchangeContext:
    X: int
    Y: int
    I: int

    def __post_init__(self):
        if self.I & ~(self.X & ~self.Y):
            raise ValueError("I must be a subset of X \\ Y")

    @property
    def C(self) -> int:
        return self.X & self.Y

    @property
    def X0(self) -> int:
        return self.X & ~self.Y

    @property
    def Y0(self) -> int:
        return self.Y & ~self.X

    def y0_elements(self) -> list[int]:
        return elements_of(self.Y0)

    def embed(self, J: int) -> int:
        """Mask over Y0's local numbering -> mask over N."""
        out = 0
        for pos, e in enumerate(self.y0_elements()):
            if J >> pos & 1:
                out |= 1 << (e - 1)
        return out

    def to_json(self) -> dict:
        return {"X": elements_of(self.X), "Y": elements_of(self.Y), "I": elements_of(self.I)}


@dataclass(frozen=True)
class DualityConfig:
    q_samples: int = 200
    pair_samples: int = 500
    seed: int = 42
    M: float | None = None  # None: 2 * (finite value range) + 1
    grid: tuple[float, ...] = ()

    def big_m(self, f: SetFunction) -> float:
        if self.M is not None:
            return float(self.M)
        lo, hi = f.finite_range()
        return 2.0 * (hi - lo) + 1.0


def conjugate_table(table: np.ndarray, p: np.ndarray) -> float:
    return float(np.max(table - subset_sums(p)))


def conjugate(f: SetFunction, p) -> float:
    """g(p) = max over Z of f(Z) - p(Z)."""
    return conjugate_table(f.table, as_price(p, f.n))


def _local_masks(ctx: ExchangeContext) -> np.ndarray:
    """For every local J over Y0, the corresponding mask over N."""
    k = len(ctx.y0_elements())
    return np.array([ctx.embed(J) for J in range(1 << k)], dtype=np.int64)


def exchange_tables(f: SetFunction, ctx: ExchangeContext) -> tuple[np.ndarray, np.ndarray]:
    Js = _local_masks(ctx)
    t1 = f.table[(ctx.X & ~ctx.I) | Js]
    t2 = f.table[(ctx.Y & ~Js) | ctx.I]
    return t1, t2


def exchange_pair(f: SetFunction, ctx: ExchangeContext) -> tuple[SetFunction, SetFunction]:
    """f1, f2 as set functions on Y0 (elements renumbered 1..|Y0| in increasing order)."""
    _check_ctx(f, ctx)
    t1, t2 = exchange_tables(f, ctx)
    ground = GroundSet(len(ctx.y0_elements()))
    if not np.any(np.isfinite(t1)) or not np.any(np.isfinite(t2)):
        raise EmptyDomain("dom f1 or dom f2 is empty")
    return SetFunction(ground, t1), SetFunction(ground, t2)


def _check_ctx(f: SetFunction, ctx: ExchangeContext) -> None:
    for m in (ctx.X, ctx.Y):
        f.ground.check_mask(m)


def check_multiple_exchange_value(f: SetFunction, ctx: ExchangeContext) -> tuple[float, int]:
    """max over J of f1(J) + f2(J) and the smallest maximizing J (a mask over N)."""
    _check_ctx(f, ctx)
    t1, t2 = exchange_tables(f, ctx)
    total = t1 + t2
    Js = _local_masks(ctx)
    best = float(total.max())
    ties = Js[total == best]
    return best, int(ties.min())


@dataclass
class LemmaReport:
    context: ExchangeContext
    samples: int
    violations: int
    min_slack: float
    worst_q: list[float]
    exchange_max: float
    min_dual: float
    weak_duality_violations: int
    domains_nonempty: bool
    note: str = field(default="infimum over q certified one-sidedly on sampled q")

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.weak_duality_violations == 0

    def to_json(self) -> dict:
        from .io import encode_value

        return {
            "context": self.context.to_json(),
            "samples": self.samples,
            "violations": self.violations,
            "weak_duality_violations": self.weak_duality_violations,
            "min_slack": self.min_slack,
            "worst_q": self.worst_q,
            "exchange_max": encode_value(self.exchange_max),
            "min_dual": self.min_dual,
            "domains_nonempty": self.domains_nonempty,
            "passed": self.passed,
            "note": self.note,
        }


def sample_q(k: int, count: int, spread: float, rng: np.random.Generator) -> np.ndarray:
    """Zero, +/- unit vectors, then uniform draws on [-spread, spread]^k."""
    fixed = [np.zeros(k)]
    for idx in range(k):
        e = np.zeros(k)
        e[idx] = 1.0
        fixed.extend([e, -e])
    rows = fixed[:count]
    extra = count - len(rows)
    if extra > 0:
        rows.extend(rng.uniform(-spread, spread, size=(extra, k)))
    return np.array(rows, dtype=np.float64).reshape(count, k)


def _require_mnat(f: SetFunction) -> None:
    if not check_axiom(f, AxiomId.MNAT_EXC).passed:
        raise HypothesisViolated("f is not M-natural concave")


def verify_lemma_g1g2(f: SetFunction, ctx: ExchangeContext,
                      cfg: DualityConfig = DualityConfig()) -> LemmaReport:
    """Check g1(q) + g2(-q) >= f(X) + f(Y) on sampled q.

    Also checks the weak-duality side g1(q) + g2(-q) >= max_J f1(J) + f2(J).
    A sample counts as a violation when its slack is below -eps, where eps is
    0 if f and q are integral and 1e-9 otherwise.
    """
    _check_ctx(f, ctx)
    _require_mnat(f)
    base = float(f.table[ctx.X] + f.table[ctx.Y])
    if base == NEG_INF:
        raise ValueError("X and Y must belong to dom f")
    t1, t2 = exchange_tables(f, ctx)
    k = len(ctx.y0_elements())
    lo, hi = f.finite_range()
    spread = max(hi - lo, 1.0)
    rng = np.random.default_rng(cfg.seed)
    Q = sample_q(k, cfg.q_samples, spread, rng)
    sums = np.stack([subset_sums(q) for q in Q]) if k else np.zeros((len(Q), 1))
    g1 = np.max(t1[None, :] - sums, axis=1)
    g2 = np.max(t2[None, :] + sums, axis=1)
    dual = g1 + g2
    slack = dual - base
    integral_f = f.integral
    q_integral = np.all(Q == np.round(Q), axis=1) if k else np.ones(len(Q), dtype=bool)
    eps = np.where(q_integral & integral_f, 0.0, FLOAT_EPS)
    exch = float(np.max(t1 + t2))
    worst = int(np.argmin(slack))
    return LemmaReport(
        context=ctx,
        samples=len(Q),
        violations=int(np.sum(slack < -eps)),
        min_slack=float(slack[worst]),
        worst_q=[float(v) for v in Q[worst]],
        exchange_max=exch,
        min_dual=float(dual.min()),
        weak_duality_violations=int(np.sum(dual < exch - eps)),
        domains_nonempty=bool(np.any(np.isfinite(t1)) and np.any(np.isfinite(t2))),
    )


@dataclass
class SubmodularReport:
    samples: int
    violations: int
    min_slack: float
    M: float

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_json(self) -> dict:
        return {"samples": self.samples, "violations": self.violations,
                "min_slack": self.min_slack, "M": self.M, "passed": self.passed}


def sample_price_pairs(n: int, count: int, M: float, spread: float, grid, rng) -> tuple[np.ndarray, np.ndarray]:
    """Price pairs whose components mix +/-M, grid values and uniform draws."""
    values = np.array([M, -M, *grid], dtype=np.float64)

    def draw():
        cont = rng.uniform(-spread, spread, size=(count, n))
        pick = rng.integers(0, len(values) + 2, size=(count, n))
        snapped = values[np.minimum(pick, len(values) - 1)]
        return np.where(pick < len(values), snapped, cont)

    return draw(), draw()


def check_conjugate_submodular(f: SetFunction, cfg: DualityConfig = DualityConfig(),
                               pairs: tuple[np.ndarray, np.ndarray] | None = None) -> SubmodularReport:
    """g(p v p') + g(p ^ p') <= g(p) + g(p') on sampled price pairs."""
    _require_mnat(f)
    M = cfg.big_m(f)
    lo, hi = f.finite_range()
    spread = max(hi - lo, 1.0)
    if pairs is None:
        rng = np.random.default_rng(cfg.seed)
        P, Q = sample_price_pairs(f.n, cfg.pair_samples, M, spread, cfg.grid, rng)
    else:
        P, Q = (np.atleast_2d(np.asarray(a, dtype=np.float64)) for a in pairs)
    incidence = ((np.arange(f.ground.size)[:, None] >> np.arange(f.n)) & 1).astype(np.float64)
    finite = np.isfinite(f.table)
    vals, inc = f.table[finite], incidence[finite]

    def g(prices):
        return np.max(vals[None, :] - prices @ inc.T, axis=1)

    lhs = g(np.maximum(P, Q)) + g(np.minimum(P, Q))
    rhs = g(P) + g(Q)
    slack = rhs - lhs
    integral = f.integral and np.all(P == np.round(P), axis=1) & np.all(Q == np.round(Q), axis=1)
    eps = np.where(integral, 0.0, FLOAT_EPS)
    return SubmodularReport(len(P), int(np.sum(slack < -eps)), float(slack.min()), M)

