import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings

import oracle
from conftest import grid_tables, real_tables, zero
from mnat import (
    NEG_INF,
    AxiomId,
    CapExceeded,
    SetFunction,
    add_linear,
    check_axiom,
    check_batch,
    mask_of,
    two_maximizer_check,
    verify_witness,
)
from mnat.axioms import evaluate_tuple, two_maximizer_batch
from mnat.generators import CorpusSpec, corpus_array

ALL = list(AxiomId)


def m(*elems):
    return mask_of(elems)


def witness_key(w):
    if w.i is not None:
        return (w.X, w.Y, w.i)
    if w.I is not None:
        return (w.X, w.Y, w.I)
    return (w.X, w.Y)


@pytest.fixture(scope="module")
def corpus2():
    return corpus_array(CorpusSpec(2, (NEG_INF, 0.0, 1.0)))


@pytest.mark.parametrize("axiom", ALL)
def test_engine_matches_oracle_exhaustive_n2(corpus2, axiom):
    res = check_batch(corpus2, axiom)
    for k, row in enumerate(corpus2):
        bad = oracle.violations(row, axiom.value)
        assert res.passed[k] == (not bad)
        if bad:
            assert witness_key(res.witness(k)) == bad[0]


@pytest.mark.parametrize("axiom", ALL)
@settings(max_examples=40, deadline=None)
@given(table=grid_tables(3))
def test_engine_matches_oracle_n3(axiom, table):
    f = SetFunction(3, table)
    rep = check_axiom(f, axiom)
    bad = oracle.violations(table, axiom.value)
    assert rep.passed == (not bad)
    if bad:
        assert witness_key(rep.witness) == bad[0]
        assert verify_witness(f, rep.witness)


@pytest.mark.parametrize("axiom", [AxiomId.MNAT_EXC, AxiomId.M_EXC, AxiomId.L3, AxiomId.MNAT_EXC_MS])
@settings(max_examples=40, deadline=None)
@given(table=real_tables(3))
def test_engine_matches_oracle_real_values(axiom, table):
    rep = check_axiom(SetFunction(3, table), axiom)
    bad = oracle.violations(table, axiom.value)
    assert rep.passed == (not bad)
    if bad:
        assert witness_key(rep.witness) == bad[0]


@pytest.mark.parametrize("axiom", ALL)
@settings(max_examples=25, deadline=None)
@given(table=grid_tables(3))
def test_evaluate_tuple_agrees_with_oracle(axiom, table):
    v, n = oracle.value_map(table)
    for key, lhs, rhs in oracle.tuples(v, n, axiom.value):
        X, Y = key[0], key[1]
        i = key[2] if axiom.value in ("MNAT_EXC", "P2", "P3", "P4", "M_EXC") else None
        I = key[2] if axiom.value.endswith(("_M", "_MS")) else None
        ok, l2, r2 = evaluate_tuple(table, axiom, X, Y, i, I)
        assert ok and l2 == lhs and r2 == rhs


def test_capped_verdicts(fcap):
    passing = {"MNAT_EXC", "P1", "P2", "P3", "P4", "L1", "L2", "L3", "MNAT_EXC_M", "MNAT_EXC_MS"}
    for axiom in AxiomId:
        rep = check_axiom(fcap, axiom)
        assert rep.passed == (axiom.value in passing), axiom
        assert rep.passed == oracle.holds(fcap.table, axiom.value)


def test_two_triples_verdicts(ftt):
    rep = check_axiom(ftt, "MNAT_EXC")
    assert not rep.passed
    w = rep.witness
    assert (w.X, w.Y, w.i) == (m(1, 2, 3), m(4, 5, 6), 1)
    assert w.lhs == 0 and w.rhs == NEG_INF
    assert verify_witness(ftt, w)
    for axiom in ("L1", "L2", "L3", "M_EXC_LOC"):
        assert check_axiom(ftt, axiom).passed
    for axiom in ("M_EXC", "M_EXC_W"):
        assert not check_axiom(ftt, axiom).passed


def test_constant_zero_passes_every_axiom_except_equicardinal_ones():
    f = zero(3)
    for axiom in AxiomId:
        rep = check_axiom(f, axiom)
        expect = axiom not in (AxiomId.M_EXC, AxiomId.M_EXC_W, AxiomId.M_EXC_M, AxiomId.M_EXC_LOC)
        assert rep.passed == oracle.holds(f.table, axiom.value)
        if expect:
            assert rep.passed, axiom


def test_weighted_uniform_matroid_is_m_concave():
    f = SetFunction.from_dict(3, {(1, 2): 4, (1, 3): 3, (2, 3): 1})
    for axiom in ("M_EXC", "M_EXC_W", "M_EXC_LOC", "M_EXC_M", "MNAT_EXC"):
        assert check_axiom(f, axiom).passed


def test_single_point_domain():
    f = SetFunction.from_dict(4, {(2, 3): -1.5})
    for axiom in AxiomId:
        assert check_axiom(f, axiom).passed


def test_witness_tampering(ftt):
    w = check_axiom(ftt, "MNAT_EXC").witness
    assert not verify_witness(ftt, dataclasses.replace(w, i=4))  # i not in X \ Y
    assert not verify_witness(ftt, dataclasses.replace(w, axiom="M_EXC_LOC"))
    fixed = SetFunction.from_dict(6, {(1, 2, 3): 0, (4, 5, 6): 0, (2, 3): 0, (1, 4, 5, 6): 0})
    assert not verify_witness(fixed, w)
    with pytest.raises(ValueError):
        verify_witness(SetFunction(2, np.zeros(4)), w)


@settings(max_examples=60, deadline=None)
@given(grid_tables(3))
def test_shift_by_linear_preserves_violations(table):
    f = SetFunction(3, table)
    g = add_linear(f, [2, -1, 3])
    for axiom in (AxiomId.MNAT_EXC, AxiomId.M_EXC, AxiomId.MNAT_EXC_M):
        a, b = check_axiom(f, axiom), check_axiom(g, axiom)
        assert a.passed == b.passed
        if not a.passed:
            assert witness_key(a.witness) == witness_key(b.witness)


@pytest.mark.parametrize("axiom", [AxiomId.L2, AxiomId.L3])
def test_two_maximizer_form_agrees(corpus2, axiom):
    tables = corpus_array(CorpusSpec(3, (NEG_INF, 0.0, 1.0), mode="random", count=3000, seed=3))
    direct = check_batch(tables, axiom).passed
    assert np.array_equal(two_maximizer_batch(tables, axiom), direct)
    for row in tables[:200]:
        f = SetFunction(3, row)
        rep = two_maximizer_check(f, axiom)
        assert rep.passed == check_axiom(f, axiom).passed
        assert rep.pairs_examined == (1 if axiom is AxiomId.L2 else 0)  # W = {1,2,3}, Z = {}
    with pytest.raises(ValueError):
        two_maximizer_batch(tables, AxiomId.L1)


def test_threads_are_deterministic():
    tables = corpus_array(CorpusSpec(3, mode="random", count=400, seed=11))
    for axiom in (AxiomId.MNAT_EXC, AxiomId.M_EXC_W, AxiomId.MNAT_EXC_MS):
        one = check_batch(tables, axiom, threads=1)
        for t in (2, 4):
            many = check_batch(tables, axiom, threads=t)
            for name in ("passed", "x", "y", "aux", "lhs", "rhs"):
                assert np.array_equal(getattr(one, name), getattr(many, name))
        f = SetFunction(3, tables[0])
        assert check_axiom(f, axiom, threads=4).to_json() == check_axiom(f, axiom).to_json()


def test_report_json_shape(ftt):
    doc = check_axiom(ftt, "MNAT_EXC").to_json()
    assert doc == {"axiom": "MNAT_EXC", "passed": False, "pairs_examined": doc["pairs_examined"],
                   "witness": {"X": [1, 2, 3], "Y": [4, 5, 6], "i": 1, "lhs": 0.0, "rhs": "-inf"}}
    assert "elapsed" in check_axiom(ftt, "MNAT_EXC").to_json(include_elapsed=True)


def test_multi_cap():
    f = zero(3)
    with pytest.raises(CapExceeded):
        check_axiom(f, "MNAT_EXC_M", multi_cap=2)
    assert check_axiom(f, "MNAT_EXC", multi_cap=2).passed


def test_larger_n_runs():
    f = SetFunction(10, np.zeros(1 << 10))
    rep = check_axiom(f, "MNAT_EXC")
    assert rep.passed and rep.pairs_examined > 0
