"""Set-family axioms: g-matroid and base exchange, independence axioms,
connectedness and interval properties.

The exchange-type axioms run through the function checkers on the 0/-inf
indicator of the family.  The remaining properties are checked directly on
the member set so they can cross-validate the function route.
"""
from __future__ import annotations

import enum
import time

import numpy as np

from .axioms import (
    DEFAULT_MULTI_CAP,
    AxiomId,
    CheckReport,
    Witness,
    check_batch,
    evaluate_tuple,
)
from .core import NEG_INF, DCAError, SetFamily, elements_of, popcount


class InternalContradiction(DCAError):
    """A proven implication failed: the checkers disagree with each other."""


class FamilyAxiomId(str, enum.Enum):
    BNAT_EXC = "BNAT_EXC"
    B_EXC = "B_EXC"
    B_EXC_W = "B_EXC_W"
    EQUICARD = "EQUICARD"
    IND_AXIOMS = "IND_AXIOMS"
    CONN_DOWN = "CONN_DOWN"
    CONN_SWAP = "CONN_SWAP"
    CONN_CROSS = "CONN_CROSS"
    UPDOWN = "UPDOWN"
    INTERVAL = "INTERVAL"
    BNAT_EXC_M = "BNAT_EXC_M"
    BNAT_EXC_MS = "BNAT_EXC_MS"
    B_EXC_M = "B_EXC_M"

    def __str__(self):
        return self.value


# family axiom -> function axiom on the indicator
VIA_INDICATOR = {
    FamilyAxiomId.BNAT_EXC: AxiomId.MNAT_EXC,
    FamilyAxiomId.B_EXC: AxiomId.M_EXC,
    FamilyAxiomId.B_EXC_W: AxiomId.M_EXC_W,
    FamilyAxiomId.BNAT_EXC_M: AxiomId.MNAT_EXC_M,
    FamilyAxiomId.BNAT_EXC_MS: AxiomId.MNAT_EXC_MS,
    FamilyAxiomId.B_EXC_M: AxiomId.M_EXC_M,
}


def _fail(axiom, X, Y, *, i=None, Z=None, elements=None, note=None) -> Witness:
    return Witness(str(axiom), X, Y, 0.0, NEG_INF, i=i, Z=Z, elements=elements, note=note)


def _bits(mask: int) -> list[int]:
    return [e - 1 for e in elements_of(mask)]


# Each direct checker returns (witness or None, tuples examined).  Members are
# visited in increasing mask order, so the first hit is lexicographically minimal.

def _equicard(members: list[int]):
    if not members:
        return None, 0
    X = members[0]
    for Y in members:
        if popcount(Y) != popcount(X):
            return _fail(FamilyAxiomId.EQUICARD, X, Y), len(members)
    return None, len(members)


def _conn_down(members: list[int], F: frozenset[int]):
    count = 0
    for X in members:
        for Y in members:
            if popcount(X) >= popcount(Y):
                continue
            count += 1
            if not any((Y & ~(1 << j)) in F for j in _bits(Y & ~X)):
                return _fail(FamilyAxiomId.CONN_DOWN, X, Y), count
    return None, count


def _swap_exists(X: int, Y: int, F: frozenset[int]) -> bool:
    for i in _bits(X & ~Y):
        for j in _bits(Y & ~X):
            if ((Y | (1 << i)) & ~(1 << j)) in F:
                return True
    return False


def _conn_swap(members, F):
    count = 0
    for X in members:
        for Y in members:
            if X == Y or popcount(X) != popcount(Y):
                continue
            count += 1
            if not _swap_exists(X, Y, F):
                return _fail(FamilyAxiomId.CONN_SWAP, X, Y), count
    return None, count


def _conn_cross(members, F):
    count = 0
    for X in members:
        for Y in members:
            if popcount(X) >= popcount(Y) or not X & ~Y:
                continue
            count += 1
            if not _swap_exists(X, Y, F):
                return _fail(FamilyAxiomId.CONN_CROSS, X, Y), count
    return None, count


def _updown(members, F):
    count = 0
    for X in members:
        for Y in members:
            if X == Y or X & ~Y:
                continue
            count += 1
            if not any((X | (1 << j)) in F and (Y & ~(1 << j)) in F for j in _bits(Y & ~X)):
                return _fail(FamilyAxiomId.UPDOWN, X, Y), count
    return None, count


def _interval(members, F):
    count = 0
    for X in members:
        for Y in members:
            if X & ~Y:
                continue
            free = Y & ~X
            sub = free
            while True:
                count += 1
                Z = X | sub
                if Z not in F:
                    best = min(X | s for s in _all_submasks(free) if (X | s) not in F)
                    return _fail(FamilyAxiomId.INTERVAL, X, Y, Z=best), count
                if sub == 0:
                    break
                sub = (sub - 1) & free
    return None, count


def _all_submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _ind_axioms(members, F):
    if 0 not in F:
        return _fail(FamilyAxiomId.IND_AXIOMS, 0, 0, note="I-1"), 1
    count = 1
    # I-2: X subset of Y in F implies X in F; minimal (X, Y) among violations
    worst = None
    for Y in members:
        for X in _all_submasks(Y):
            count += 1
            if X not in F and (worst is None or (X, Y) < worst):
                worst = (X, Y)
    if worst is not None:
        return _fail(FamilyAxiomId.IND_AXIOMS, worst[0], worst[1], note="I-2"), count
    for X in members:
        for Y in members:
            if popcount(X) >= popcount(Y):
                continue
            count += 1
            if not any((X | (1 << j)) in F for j in _bits(Y & ~X)):
                return _fail(FamilyAxiomId.IND_AXIOMS, X, Y, note="I-3"), count
    return None, count


_DIRECT = {
    FamilyAxiomId.CONN_DOWN: _conn_down,
    FamilyAxiomId.CONN_SWAP: _conn_swap,
    FamilyAxiomId.CONN_CROSS: _conn_cross,
    FamilyAxiomId.UPDOWN: _updown,
    FamilyAxiomId.INTERVAL: _interval,
    FamilyAxiomId.IND_AXIOMS: _ind_axioms,
}


def check_family(F: SetFamily, axiom: FamilyAxiomId | str, *, threads: int = 1,
                 multi_cap: int = DEFAULT_MULTI_CAP) -> CheckReport:
    axiom = FamilyAxiomId(axiom)
    start = time.perf_counter()
    if not F.members:
        raise ValueError("family must be nonempty")
    if axiom in VIA_INDICATOR:
        fn_axiom = VIA_INDICATOR[axiom]
        table = F.indicator().table
        res = check_batch(table[None, :], fn_axiom, support=F.support(), threads=threads,
                          multi_cap=multi_cap)
        w = res.witness(0)
        if w is not None:
            w = Witness(str(axiom), w.X, w.Y, w.lhs, w.rhs, i=w.i, I=w.I)
        return CheckReport(str(axiom), w is None, w, res.pairs_examined, time.perf_counter() - start)
    members = F.sorted_members()
    if axiom is FamilyAxiomId.EQUICARD:
        w, count = _equicard(members)
    else:
        w, count = _DIRECT[axiom](members, F.members)
    return CheckReport(str(axiom), w is None, w, count, time.perf_counter() - start)


def verify_family_witness(F: SetFamily, w: Witness) -> bool:
    """Re-check that ``w`` is a genuine violation of its family axiom."""
    axiom = FamilyAxiomId(w.axiom)
    S = F.members
    X, Y = w.X, w.Y
    if axiom in VIA_INDICATOR:
        if X not in S or Y not in S:
            return False
        ok, lhs, rhs = evaluate_tuple(F.indicator().table, VIA_INDICATOR[axiom], X, Y, w.i, w.I)
        return ok and lhs > rhs
    if axiom is FamilyAxiomId.IND_AXIOMS:
        if w.note == "I-1":
            return 0 not in S
        if w.note == "I-2":
            return Y in S and not X & ~Y and X not in S
        if w.note == "I-3":
            return (X in S and Y in S and popcount(X) < popcount(Y)
                    and not any((X | (1 << j)) in S for j in _bits(Y & ~X)))
        return False
    if X not in S or Y not in S:
        return False
    if axiom is FamilyAxiomId.EQUICARD:
        return popcount(X) != popcount(Y)
    if axiom is FamilyAxiomId.CONN_DOWN:
        return popcount(X) < popcount(Y) and not any((Y & ~(1 << j)) in S for j in _bits(Y & ~X))
    if axiom is FamilyAxiomId.CONN_SWAP:
        return X != Y and popcount(X) == popcount(Y) and not _swap_exists(X, Y, S)
    if axiom is FamilyAxiomId.CONN_CROSS:
        return popcount(X) < popcount(Y) and bool(X & ~Y) and not _swap_exists(X, Y, S)
    if axiom is FamilyAxiomId.UPDOWN:
        return (X != Y and not X & ~Y
                and not any((X | (1 << j)) in S and (Y & ~(1 << j)) in S for j in _bits(Y & ~X)))
    if axiom is FamilyAxiomId.INTERVAL:
        Z = w.Z
        return Z is not None and not X & ~Z and not Z & ~Y and Z not in S
    return False


def implied_properties(F: SetFamily) -> dict[str, CheckReport]:
    """B-natural exchange and the three connectedness properties it implies.

    Raises InternalContradiction if the exchange property holds but one of
    the implied properties does not.
    """
    ids = (FamilyAxiomId.BNAT_EXC, FamilyAxiomId.CONN_DOWN,
           FamilyAxiomId.CONN_SWAP, FamilyAxiomId.CONN_CROSS)
    reports = {str(a): check_family(F, a) for a in ids}
    if reports["BNAT_EXC"].passed:
        broken = [k for k, r in reports.items() if not r.passed]
        if broken:
            raise InternalContradiction(f"BNAT_EXC holds but {broken} fail on {F.as_sets()}")
    return reports


def is_matroid_independence(F: SetFamily) -> CheckReport:
    """I-1, I-2, I-3; a witness names the first violated sub-axiom in ``note``."""
    return check_family(F, FamilyAxiomId.IND_AXIOMS)


def family_support_tables(families: list[frozenset[int]], n: int) -> np.ndarray:
    """Indicator tables (0/-inf) for a list of member sets."""
    tables = np.full((len(families), 1 << n), NEG_INF)
    for row, members in enumerate(families):
        tables[row, list(members)] = 0.0
    return tables
