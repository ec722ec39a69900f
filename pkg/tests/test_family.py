import dataclasses
from itertools import combinations

import pytest

import oracle
from mnat import (
    FamilyAxiomId,
    InternalContradiction,
    SetFamily,
    check_family,
    implied_properties,
    is_matroid_independence,
    mask_of,
    verify_family_witness,
)
from mnat.family import family_support_tables
from mnat.generators import graphic_matroid_bases, uniform_matroid_bases

ALL = list(FamilyAxiomId)


def fam(n, sets):
    return SetFamily.from_sets(n, sets)


def all_families(n):
    """Every nonempty family over 2^n (n <= 3 keeps this at 255 for n=3)."""
    size = 1 << n
    for code in range(1, 1 << size):
        yield frozenset(m for m in range(size) if code >> m & 1)


def frozen(F):
    return [frozenset(s) for s in F.as_sets()]


def test_cross_family(cross_family):
    F = cross_family
    reports = implied_properties(F)
    verdicts = {k: r.passed for k, r in reports.items()}
    assert verdicts == {"BNAT_EXC": False, "CONN_DOWN": True, "CONN_SWAP": True, "CONN_CROSS": False}
    for r in reports.values():
        if not r.passed:
            assert verify_family_witness(F, r.witness)
    w = reports["CONN_CROSS"].witness
    assert (w.X, w.Y) == (mask_of([1, 2]), mask_of([3, 4, 5]))
    assert not check_family(F, "EQUICARD").passed


def test_uniform_matroid_u24():
    F = uniform_matroid_bases(2, 4)
    assert len(F) == 6
    for axiom in ("B_EXC", "B_EXC_W", "B_EXC_M", "BNAT_EXC", "EQUICARD", "CONN_SWAP"):
        assert check_family(F, axiom).passed, axiom
    assert not check_family(F, "IND_AXIOMS").passed


def test_graphic_matroid_triangle():
    B = graphic_matroid_bases(3, [(0, 1), (1, 2), (0, 2)])
    assert sorted(B.as_sets()) == [[1, 2], [1, 3], [2, 3]]
    assert check_family(B, "B_EXC").passed


def test_empty_set_family():
    F = fam(3, [[]])
    for axiom in FamilyAxiomId:
        assert check_family(F, axiom).passed, axiom


def test_independence_axioms_name_subaxiom():
    rep = is_matroid_independence(fam(2, [[1], [2]]))
    assert not rep.passed and rep.witness.note == "I-1"
    assert verify_family_witness(fam(2, [[1], [2]]), rep.witness)
    rep = is_matroid_independence(fam(2, [[], [1, 2]]))
    assert rep.witness.note == "I-2"
    assert is_matroid_independence(fam(3, [[], [1], [2], [3], [1, 2], [1, 3], [2, 3]])).passed
    rep = is_matroid_independence(fam(3, [[], [1], [2], [3], [1, 2]]))
    assert rep.witness.note == "I-3"  # {3} cannot grow from {1,2}
    F = fam(4, [[], [1], [2], [3], [4], [1, 2], [3, 4]])
    rep = is_matroid_independence(F)
    assert rep.witness.note == "I-3"
    assert verify_family_witness(F, rep.witness)


def test_empty_family_rejected():
    with pytest.raises(ValueError):
        check_family(SetFamily.from_sets(2, []), "BNAT_EXC")


@pytest.mark.parametrize("axiom", ALL)
def test_matches_oracle_on_every_family_n2(axiom):
    for members in all_families(2):
        F = SetFamily.from_sets(2, [[e for e in range(1, 3) if m >> (e - 1) & 1] for m in members])
        rep = check_family(F, axiom)
        assert rep.passed == oracle.family_holds(frozen(F), 2, axiom.value), F.as_sets()
        if not rep.passed:
            assert verify_family_witness(F, rep.witness)


@pytest.mark.parametrize("axiom", ALL)
def test_matches_oracle_on_every_family_n3(axiom):
    for members in all_families(3):
        F = SetFamily(uniform_matroid_bases(0, 3).ground, members)
        rep = check_family(F, axiom)
        assert rep.passed == oracle.family_holds(frozen(F), 3, axiom.value), F.as_sets()
        if not rep.passed:
            assert verify_family_witness(F, rep.witness)


def test_witness_tampering(cross_family):
    w = check_family(cross_family, "CONN_CROSS").witness
    assert verify_family_witness(cross_family, w)
    patched = SetFamily(cross_family.ground, cross_family.members | {mask_of([1, 4, 5])})
    assert not verify_family_witness(patched, w)
    assert not verify_family_witness(cross_family, dataclasses.replace(w, Y=w.X))


def test_implied_properties_raise_on_contradiction(monkeypatch):
    import mnat.family as family

    F = uniform_matroid_bases(1, 3)
    real = family.check_family

    def broken(F, axiom, **kw):
        rep = real(F, axiom, **kw)
        if str(axiom) == "CONN_SWAP":
            return dataclasses.replace(rep, passed=False, witness=family._fail(axiom, 1, 2))
        return rep

    monkeypatch.setattr(family, "check_family", broken)
    with pytest.raises(InternalContradiction):
        implied_properties(F)


def test_support_tables_shape():
    t = family_support_tables([frozenset({0, 3}), frozenset({1})], 2)
    assert t.shape == (2, 4)
    assert t[0, 0] == 0 and t[0, 3] == 0 and t[0, 1] == float("-inf")


def test_bnat_families_are_connected_n4_sample():
    # Families of size <= 3 over n = 4
    masks = range(16)
    for k in (1, 2, 3):
        for members in combinations(masks, k):
            F = SetFamily(uniform_matroid_bases(0, 4).ground, frozenset(members))
            implied_properties(F)


def test_domain_fixtures(fcap, ftt):
    from mnat import effective_domain

    dcap = effective_domain(fcap)
    assert is_matroid_independence(dcap).passed
    assert all(r.passed for r in implied_properties(dcap).values())
    dtt = effective_domain(ftt)
    rep = check_family(dtt, "BNAT_EXC")
    assert not rep.passed and verify_family_witness(dtt, rep.witness)
    assert is_matroid_independence(fam(3, [[], [1], [2], [3], [1, 2], [1, 3], [2, 3]])).passed
