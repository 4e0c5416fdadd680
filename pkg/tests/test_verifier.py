import json
from math import comb

import pytest

from artifact.catalog import (Regenerator, catalog, expected_count, hs_generators,
                              involution_set, regenerate_hs)
from artifact.generators import Token, parse_genword
from artifact.verifier import (FALSIFIED, UNDECIDED, VERIFIED, RunConfig, minimality_matrix,
                               mutate, replay, select, surjectivity_check, verify, verify_all,
                               verify_mutant)


def by_id(g):
    return {s.id: s for s in catalog(g)}


def test_catalog_examples():
    c4 = catalog(4)
    l4 = [s for s in c4 if s.family == "L4.invol" and not s.as_printed]
    assert [s.id for s in l4] == ["L4.invol[i=2,j=3,k=4]"]
    t2 = [s for s in catalog(5) if s.family == "T2.odd"]
    assert len(t2) == 20
    assert by_id(4)["L2.short"].rhs == parse_genword("Ybar(3,4) * Ybar(2,4) * Ybar(1,4)")


@pytest.mark.parametrize("g", [4, 5, 6, 7])
def test_catalog_cardinalities(g):
    cat = catalog(g)
    fam = lambda f: [s for s in cat if s.family == f and not s.as_printed]
    assert len(fam("L4.invol")) == comb(g - 1, 3)
    assert len(fam("Eq1.lt")) + len(fam("Eq1.gt")) == (g - 1) * (g - 2)
    parity = "T2.odd" if g % 2 else "T2.even"
    other = "T2.even" if g % 2 else "T2.odd"
    assert len(fam(parity)) == expected_count(g)
    assert fam(other) == []
    assert len(fam("T2.regen.hs")) == len(hs_generators(g)) == expected_count(g)
    assert len({s.id for s in cat}) == len(cat)


def test_catalog_rejects_small_genus():
    with pytest.raises(ValueError):
        catalog(3)
    with pytest.raises(ValueError):
        involution_set(3)


def test_involution_set_examples():
    s5 = involution_set(5)
    assert s5.parity == "odd" and len(s5.members) == 20
    s4 = involution_set(4)
    labels = [m.label for m in s4.members]
    assert labels[:3] == ["R", "R*Ybar(1,4)", "R*Ybar(2,4)^-1"]
    assert len(s4.members) == 10 == s4.expected_count
    assert len(involution_set(6).members) == expected_count(6) == 35


def test_regenerate_hs_g4():
    words = regenerate_hs(4)
    assert len(words) == 10
    rg = Regenerator(4)
    assert rg.R() == ((0, 1),)


def test_verify_examples():
    c = by_id(4)
    cert = verify(c["L3.invol[i=1,j=4,e=+]"], "B")
    assert cert.verdict == VERIFIED and cert.witness.startswith("inner conjugator")
    assert verify(c["Eq1.lt[i=1,j=3]"], "B").verdict == VERIFIED


def test_flipped_exponent_mutant_falsified():
    s = by_id(5)["L2.short"]
    rhs = list(s.rhs)
    rhs[1] = rhs[1].inv()
    from dataclasses import replace
    m = replace(s, rhs=tuple(rhs))
    assert verify(m, "B").verdict == FALSIFIED


def test_printed_variants_falsified():
    for s in catalog(5):
        if s.as_printed:
            assert verify(s, "B").verdict == FALSIFIED, s.id


def test_tier_monotonicity_and_replay():
    for s in select(4, include_printed=False):
        b = verify(s, "B")
        assert b.verdict == VERIFIED, s.id
        assert verify(s, "A").verdict == VERIFIED, s.id
        if s.kind not in ("CountClaim", "MatrixClaim"):
            assert replay(b), s.id


def test_budget_zero_undecided():
    for s in select(4, "L2.short,L3.invol,LemY.fig1"):
        assert verify(s, "B", budget=0).verdict == UNDECIDED


@pytest.mark.parametrize("g", [4, 5, 6])
def test_minimality(g):
    rows, rank, ok = minimality_matrix(g)
    assert ok and len(rows) == expected_count(g) == rank
    members = involution_set(g).members
    rows2, rank2, ok2 = minimality_matrix(g, members[1:])
    assert not ok2 and rank2 < expected_count(g)


def test_surjectivity():
    rep = surjectivity_check(4)
    assert rep["closure"] == rep["bruteforce"] == 48


def test_mutants_never_verified():
    for s in select(5, include_printed=False):
        assert verify_mutant(mutate(s, 1), "B").verdict != VERIFIED, s.id


def test_mutation_is_single_token():
    s = by_id(4)["L3.invol[i=1,j=2,e=+]"]
    m = mutate(s, 0)
    assert len(m.lhs) == len(s.lhs) + 1
    assert mutate(s, 0) == m


def test_report_deterministic_across_jobs():
    def strip(d):
        for c in d["certificates"]:
            c.pop("elapsed_ms")
        return json.dumps(d, sort_keys=True)
    a = verify_all(RunConfig((4,), "B", "L3.*,L2.*", jobs=1)).to_json()
    b = verify_all(RunConfig((4,), "B", "L3.*,L2.*", jobs=2)).to_json()
    assert strip(a) == strip(b)
    assert [c["id"] for c in a["certificates"]] == sorted(c["id"] for c in a["certificates"])
    assert a["summary"] == {"verified": len(a["certificates"]), "falsified": 0, "undecided": 0}
