"""Brute-force reference for the exchange axioms.

Written straight from the displayed inequalities over Python frozensets and
math.inf; shares no code with the package's vectorised engine.  Tuples are
enumerated in the same lexicographic order (X mask, Y mask, i, I) so the
first violation doubles as the expected minimal witness.
"""
import math
from itertools import chain, combinations

NEG = -math.inf


def subsets(items):
    items = sorted(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def to_mask(S):
    return sum(1 << (e - 1) for e in S)


def all_sets(n):
    """Every subset of {1..n}, ordered by bitmask."""
    return sorted(subsets(range(1, n + 1)), key=to_mask)


def value_map(table):
    n = len(table).bit_length() - 1
    return {S: float(table[to_mask(S)]) for S in all_sets(n)}, n


def _max(values):
    return max(values, default=NEG)


def _integral(v):
    return all(x == NEG or float(x).is_integer() for x in v.values())


def tuples(v, n, axiom):
    """Yield (key, lhs, rhs) for every admissible tuple of ``axiom``."""
    sets = all_sets(n)
    for X in sets:
        for Y in sets:
            D, E, C = X - Y, Y - X, X & Y
            lhs = v[X] + v[Y]
            cx, cy = len(X), len(Y)
            key = (to_mask(X), to_mask(Y))
            if axiom in ("MNAT_EXC", "P2", "P3", "P4", "M_EXC"):
                ok = {"MNAT_EXC": True, "M_EXC": True, "P2": cx == cy, "P3": cx < cy, "P4": cx > cy}[axiom]
                if not ok:
                    continue
                for i in sorted(D):
                    cands = [v[(X - {i}) | {j}] + v[(Y | {i}) - {j}] for j in E]
                    if axiom in ("MNAT_EXC", "P4"):
                        cands.append(v[X - {i}] + v[Y | {i}])
                    yield key + (i,), lhs, _max(cands)
            elif axiom == "P1":
                if cx < cy:
                    yield key, lhs, _max(v[X | {j}] + v[Y - {j}] for j in E)
            elif axiom in ("M_EXC_LOC", "M_EXC_W"):
                if (len(D) == 2) if axiom == "M_EXC_LOC" else X != Y:
                    yield key, lhs, _max(v[(X - {i}) | {j}] + v[(Y | {i}) - {j}] for i in D for j in E)
            elif axiom in ("L1", "L2", "L3"):
                need = {"L1": 0, "L2": 1, "L3": 2}[axiom]
                if len(D) != 2 or len(E) != need:
                    continue
                i, j = sorted(D)
                Z = C
                if axiom == "L1":
                    rhs = v[Z | {i}] + v[Z | {j}]
                elif axiom == "L2":
                    (k,) = E
                    rhs = max(v[Z | {i, k}] + v[Z | {j}], v[Z | {j, k}] + v[Z | {i}])
                else:
                    k, l = sorted(E)
                    rhs = max(v[Z | {i, k}] + v[Z | {j, l}], v[Z | {j, k}] + v[Z | {i, l}])
                yield key, lhs, rhs
            elif axiom in ("MNAT_EXC_M", "MNAT_EXC_MS", "M_EXC_M"):
                for I in sorted(subsets(D), key=to_mask):
                    cands = []
                    for J in subsets(E):
                        if axiom == "MNAT_EXC_MS" and len(J) > len(I):
                            continue
                        if axiom == "M_EXC_M" and len(J) != len(I):
                            continue
                        cands.append(v[(X - I) | J] + v[(Y - J) | I])
                    yield key + (to_mask(I),), lhs, _max(cands)
            else:
                raise ValueError(axiom)


def violations(table, axiom):
    v, n = value_map(table)
    eps = 0.0 if _integral(v) else 1e-9
    return [key for key, lhs, rhs in tuples(v, n, axiom) if lhs > rhs + eps]


def holds(table, axiom):
    v, n = value_map(table)
    eps = 0.0 if _integral(v) else 1e-9
    return all(lhs <= rhs + eps for _, lhs, rhs in tuples(v, n, axiom))


# -- families ------------------------------------------------------------------

def family_holds(members, n, axiom):
    """Direct set-family definitions; ``members`` is an iterable of frozensets."""
    F = set(members)
    fam = sorted(F, key=to_mask)
    if axiom == "BNAT_EXC":
        return all(
            ((X - {i}) in F and (Y | {i}) in F)
            or any(((X - {i}) | {j}) in F and ((Y | {i}) - {j}) in F for j in Y - X)
            for X in fam for Y in fam for i in X - Y)
    if axiom == "B_EXC":
        return all(any(((X - {i}) | {j}) in F and ((Y | {i}) - {j}) in F for j in Y - X)
                   for X in fam for Y in fam for i in X - Y)
    if axiom == "B_EXC_W":
        return all(any(((X - {i}) | {j}) in F and ((Y | {i}) - {j}) in F for i in X - Y for j in Y - X)
                   for X in fam for Y in fam if X != Y)
    if axiom == "EQUICARD":
        return len({len(X) for X in fam}) <= 1
    if axiom == "IND_AXIOMS":
        return (frozenset() in F
                and all(S in F for Y in fam for S in subsets(Y))
                and all(any((X | {j}) in F for j in Y - X) for X in fam for Y in fam if len(X) < len(Y)))
    if axiom == "CONN_DOWN":
        return all(any((Y - {j}) in F for j in Y - X) for X in fam for Y in fam if len(X) < len(Y))
    if axiom in ("CONN_SWAP", "CONN_CROSS"):
        def ok(X, Y):
            return any(((Y | {i}) - {j}) in F for i in X - Y for j in Y - X)
        if axiom == "CONN_SWAP":
            return all(ok(X, Y) for X in fam for Y in fam if len(X) == len(Y) and X != Y)
        return all(ok(X, Y) for X in fam for Y in fam if len(X) < len(Y) and X - Y)
    if axiom == "UPDOWN":
        return all(any((X | {j}) in F and (Y - {j}) in F for j in Y - X)
                   for X in fam for Y in fam if X < Y)
    if axiom == "INTERVAL":
        return all((X | S) in F for X in fam for Y in fam if X <= Y for S in subsets(Y - X))
    if axiom in ("BNAT_EXC_M", "BNAT_EXC_MS", "B_EXC_M"):
        def fits(I, J):
            if axiom == "BNAT_EXC_MS":
                return len(J) <= len(I)
            if axiom == "B_EXC_M":
                return len(J) == len(I)
            return True
        return all(any(fits(I, J) and ((X - I) | J) in F and ((Y - J) | I) in F for J in subsets(Y - X))
                   for X in fam for Y in fam for I in subsets(X - Y))
    raise ValueError(axiom)
