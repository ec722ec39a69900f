"""Theorem-equivalence suite over a corpus of set functions.

Each theorem is a list of clauses comparing verdict arrays: ``iff`` clauses
must agree row by row, ``implies`` clauses must never have a true premise
with a false conclusion.  Function-scope clauses range over the corpus rows,
family-scope clauses over the distinct effective domains of the corpus.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace

import numpy as np

from .axioms import AxiomId, BatchResult, check_batch
from .core import NEG_INF, GroundSet, SetFamily, elements_of, lift_index, popcounts
from .family import VIA_INDICATOR, FamilyAxiomId, check_family, family_support_tables

THEOREMS = (
    "T2.1", "T2.2.1", "T2.2.2", "T2.3", "T2.4", "P3.1", "P3.2", "P4.1",
    "P4.2", "P4.3", "T4.4", "T4.5", "T5.1", "T5.2", "R5.2", "L3.6",
)


def digest(table: np.ndarray) -> str:
    return hashlib.blake2b(np.ascontiguousarray(table, dtype=np.float64).tobytes(),
                           digest_size=8).hexdigest()


def family_digest(members) -> str:
    raw = ",".join(str(m) for m in sorted(members)).encode()
    return "F" + hashlib.blake2b(raw, digest_size=8).hexdigest()


@dataclass
class SuiteResult:
    theorem: str
    statement: str
    instances_checked: int
    positives: int
    negatives: int
    discrepancies: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    @property
    def exercised(self) -> bool:
        return self.positives > 0 and self.negatives > 0

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "statement": self.statement,
            "instances_checked": self.instances_checked,
            "positives": self.positives,
            "negatives": self.negatives,
            "discrepancies": self.discrepancies,
            "passed": self.passed,
        }


@dataclass
class SuiteRun:
    n: int
    tables: np.ndarray
    functions: dict[AxiomId, BatchResult]
    lifted: list[tuple[np.ndarray, np.ndarray, BatchResult]]  # (row indices, lifted tables, result)
    families: list[frozenset[int]]
    family_reports: dict[FamilyAxiomId, list]
    results: list[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "instances": int(self.tables.shape[0]),
            "families": len(self.families),
            "passed": self.passed,
            "theorems": [r.to_json() for r in self.results],
        }


def _domains(tables: np.ndarray):
    finite = np.isfinite(tables)
    packed = np.packbits(finite, axis=1)
    uniq, first, inverse = np.unique(packed, axis=0, return_index=True, return_inverse=True)
    families = [frozenset(int(m) for m in np.flatnonzero(finite[i])) for i in first]
    return families, inverse.reshape(-1)


def _family_verdicts(families, n: int, threads: int):
    reports: dict[FamilyAxiomId, list] = {}
    ind = family_support_tables(families, n)
    for fam_axiom, fn_axiom in VIA_INDICATOR.items():
        res = check_batch(ind, fn_axiom, threads=threads)
        ws = (res.witness(k) for k in range(len(families)))
        reports[fam_axiom] = [None if w is None else replace(w, axiom=str(fam_axiom)) for w in ws]
    ground = GroundSet(n)
    for fam_axiom in FamilyAxiomId:
        if fam_axiom in VIA_INDICATOR:
            continue
        reports[fam_axiom] = [check_family(SetFamily(ground, F), fam_axiom).witness for F in families]
    verdicts = {a: np.array([w is None for w in ws], dtype=bool) for a, ws in reports.items()}
    return verdicts, reports


def _lift_verdicts(tables: np.ndarray, n: int, threads: int):
    """M_EXC on the minimal lift of every row, grouped by (r, r')."""
    pc = popcounts(n)
    finite = np.isfinite(tables)
    r = np.where(finite, pc[None, :], -1).max(axis=1)
    r_min = np.where(finite, pc[None, :], n + 1).min(axis=1)
    out = np.zeros(tables.shape[0], dtype=bool)
    groups = []
    for key in sorted(set(zip(r.tolist(), r_min.tolist()))):
        rows = np.flatnonzero((r == key[0]) & (r_min == key[1]))
        s = key[0] - key[1]
        idx = lift_index(n, s, key[0])
        ext = np.hstack([tables[rows], np.full((rows.size, 1), NEG_INF)])
        lifted = ext[:, idx]
        support = popcounts(n + s) == key[0]
        res = check_batch(lifted, AxiomId.M_EXC, support=support, threads=threads)
        out[rows] = res.passed
        groups.append((rows, lifted, res))
    return out, groups


def run_suite(tables: np.ndarray, *, threads: int = 1) -> SuiteRun:
    tables = np.asarray(tables, dtype=np.float64)
    n = tables.shape[1].bit_length() - 1
    fns = {a: check_batch(tables, a, threads=threads) for a in AxiomId}
    v = {a: r.passed for a, r in fns.items()}
    families, inverse = _domains(tables)
    fam_v, fam_reports = _family_verdicts(families, n, threads)
    dom = {a: arr[inverse] for a, arr in fam_v.items()}
    lift_ok, lifted = _lift_verdicts(tables, n, threads)

    K = tables.shape[0]
    every = np.ones(K, dtype=bool)
    every_fam = np.ones(len(families), dtype=bool)
    empty_in_dom = np.isfinite(tables[:, 0])
    mnat, mexc = v[AxiomId.MNAT_EXC], v[AxiomId.M_EXC]
    L123 = v[AxiomId.L1] & v[AxiomId.L2] & v[AxiomId.L3]
    F = FamilyAxiomId
    conn = dom[F.CONN_DOWN] & dom[F.CONN_SWAP] & dom[F.CONN_CROSS]
    fconn = fam_v[F.CONN_DOWN] & fam_v[F.CONN_SWAP] & fam_v[F.CONN_CROSS]

    # (theorem, statement, [(scope, applicable, lhs, rhs, kind), ...])
    spec = [
        ("T2.1", "dom f contains the empty set: MNAT_EXC <=> P1",
         [("fn", empty_in_dom, mnat, v[AxiomId.P1], "iff")]),
        ("T2.2.1", "MNAT_EXC <=> P1 & P2",
         [("fn", every, mnat, v[AxiomId.P1] & v[AxiomId.P2], "iff")]),
        ("T2.2.2", "MNAT_EXC <=> P2 & P3 & P4",
         [("fn", every, mnat, v[AxiomId.P2] & v[AxiomId.P3] & v[AxiomId.P4], "iff")]),
        ("T2.3", "MNAT_EXC <=> BNAT_EXC(dom f) & L1 & L2 & L3",
         [("fn", every, mnat, dom[F.BNAT_EXC] & L123, "iff"),
          ("fn", every, mnat, dom[F.BNAT_EXC], "implies")]),
        ("T2.4", "dom f a matroid independence family: MNAT_EXC <=> L1 & L2",
         [("fn", dom[F.IND_AXIOMS], mnat, v[AxiomId.L1] & v[AxiomId.L2], "iff")]),
        ("P3.1", "BNAT_EXC(F) => CONN_DOWN & CONN_SWAP & CONN_CROSS",
         [("fam", every_fam, fam_v[F.BNAT_EXC], fconn, "implies")]),
        ("P3.2", "MNAT_EXC <=> CONN_*(dom f) & L1 & L2 & L3",
         [("fn", every, mnat, conn & L123, "iff")]),
        ("P4.1", "B_EXC(F) => EQUICARD(F)",
         [("fam", every_fam, fam_v[F.B_EXC], fam_v[F.EQUICARD], "implies")]),
        ("P4.2", "M_EXC <=> MNAT_EXC & EQUICARD(dom f)",
         [("fn", every, mexc, mnat & dom[F.EQUICARD], "iff")]),
        ("P4.3", "MNAT_EXC(f) <=> M_EXC(lift(f, r - r'))",
         [("fn", every, mnat, lift_ok, "iff")]),
        ("T4.4", "M_EXC <=> B_EXC(dom f) & M_EXC_LOC",
         [("fn", every, mexc, dom[F.B_EXC] & v[AxiomId.M_EXC_LOC], "iff"),
          ("fn", every, mexc, dom[F.B_EXC], "implies")]),
        ("T4.5", "M_EXC <=> M_EXC_W; B_EXC(F) <=> B_EXC_W(F)",
         [("fn", every, mexc, v[AxiomId.M_EXC_W], "iff"),
          ("fam", every_fam, fam_v[F.B_EXC], fam_v[F.B_EXC_W], "iff")]),
        ("T5.1", "MNAT_EXC <=> MNAT_EXC_M <=> MNAT_EXC_MS",
         [("fn", every, mnat, v[AxiomId.MNAT_EXC_M], "iff"),
          ("fn", every, mnat, v[AxiomId.MNAT_EXC_MS], "iff")]),
        ("T5.2", "M_EXC => M_EXC_M",
         [("fn", every, mexc, v[AxiomId.M_EXC_M], "implies")]),
        ("R5.2", "BNAT_EXC <=> BNAT_EXC_M <=> BNAT_EXC_MS; B_EXC => B_EXC_M",
         [("fam", every_fam, fam_v[F.BNAT_EXC], fam_v[F.BNAT_EXC_M], "iff"),
          ("fam", every_fam, fam_v[F.BNAT_EXC], fam_v[F.BNAT_EXC_MS], "iff"),
          ("fam", every_fam, fam_v[F.B_EXC], fam_v[F.B_EXC_M], "implies")]),
        ("L3.6", "UPDOWN(F) => INTERVAL(F)",
         [("fam", every_fam, fam_v[F.UPDOWN], fam_v[F.INTERVAL], "implies")]),
    ]

    fn_digests: dict[int, str] = {}
    fam_digests: dict[int, str] = {}

    def name(scope, k):
        if scope == "fn":
            if k not in fn_digests:
                fn_digests[k] = digest(tables[k])
            return fn_digests[k]
        if k not in fam_digests:
            fam_digests[k] = family_digest(families[k])
        return fam_digests[k]

    results = []
    for theorem, statement, clauses in spec:
        scope0, app0, lhs0, _, _ = clauses[0]
        bad: dict[tuple[str, int], None] = {}
        checked = 0
        for scope, app, lhs, rhs, kind in clauses:
            if kind == "iff":
                wrong = app & (lhs != rhs)
            else:
                wrong = app & lhs & ~rhs
            for k in np.flatnonzero(wrong):
                bad[(scope, int(k))] = None
        scopes_seen = set()
        for scope, app, *_ in clauses:
            if scope not in scopes_seen:
                scopes_seen.add(scope)
                checked += int(app.sum())
        results.append(SuiteResult(
            theorem, statement, checked,
            positives=int((app0 & lhs0).sum()),
            negatives=int((app0 & ~lhs0).sum()),
            discrepancies=[name(s, k) for s, k in bad],
        ))
    return SuiteRun(n, tables, fns, lifted, families, fam_reports, results)


def describe_family(members) -> list[list[int]]:
    return [elements_of(m) for m in sorted(members)]
