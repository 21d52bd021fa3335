from itertools import combinations

import pytest

from reference_tables import UNDETERMINED_75
from sl2quot.classify import (
    RANK2_CAVEAT,
    SAME_INVARIANTS_DIAGRAM_SWAP,
    WITNESSES,
    ClassifyError,
    SpaceId,
    classify_dimension,
    d4_report,
    distinguish,
    groups_of_dimension,
    space,
)
from sl2quot.invariants import is_quite_even
from sl2quot.orbits import enumerate_classes, find_class, trivial_class
from sl2quot.rootdata import group_type


def test_ktheory_witness():
    v = distinguish(space("B6", "[5,2^4]"), space("B6", "[4^2,3,1^2]"))
    assert (v.outcome, v.witness, v.payload) == ("Distinct", "ktheory_profile", (3, 3, 2))


def test_undetermined_b6():
    v = distinguish(space("B6", "[5,2^2,1^4]"), space("B6", "[4^2,2^2,1]"))
    assert v.outcome == "Undetermined" and v.witness is None
    assert any("97" in n for n in v.notes)


@pytest.mark.parametrize("u", ["[3,1^10]", "[5^2,1^3]", "[2^6,1]"])
@pytest.mark.parametrize("v", ["[2^6]", "[4,1^8]", "[3^2,2^3]"])
def test_bc_separation(u, v):
    verdict = distinguish(space("B6", u), space("C6", v))
    assert verdict.witness == "BC_separation"


def test_rank2_caveat():
    a = SpaceId(group_type("B2"), find_class("B2", "[5]"))
    b = SpaceId(group_type("C2"), find_class("C2", "[4]"))
    v = distinguish(a, b)
    assert v.witness != "BC_separation"
    assert RANK2_CAVEAT in v.notes


def test_reflexive_and_symmetric():
    cs = [space("B6", "[5,2^4]"), space("C6", "[4,1^8]"), space("E6", "A2"), space("B6", "[3,1^10]")]
    for a in cs:
        assert distinguish(a, a).outcome == "Identical"
    for a, b in combinations(cs, 2):
        x, y = distinguish(a, b), distinguish(b, a)
        assert (x.outcome, x.witness) == (y.outcome, y.witness)


def test_pipeline_order():
    # once a stage fires, every earlier stage saw equality
    b6 = [SpaceId(group_type("B6"), c) for c in enumerate_classes("B6")]
    for a, b in combinations(b6[:12], 2):
        v = distinguish(a, b)
        if v.witness in ("pi3_dynkin_index", "higher_pi", "ktheory_profile"):
            assert is_quite_even(a.cls) == is_quite_even(b.cls)


def test_e6_pairwise_distinct():
    e6 = [SpaceId(group_type("E6"), c) for c in enumerate_classes("E6")]
    assert len(e6) == 20
    for a, b in combinations(e6, 2):
        v = distinguish(a, b)
        assert v.outcome == "Distinct"
        assert v.witness in ("pi2_quite_even", "pi3_dynkin_index")


@pytest.mark.parametrize("part", ["[2^4]", "[4^2]"])
def test_very_even_flag(part):
    v = distinguish(space("D4", part + "I"), space("D4", part + "II"))
    assert v.outcome == "Undetermined"
    assert SAME_INVARIANTS_DIAGRAM_SWAP in v.flags


def test_trivial_vs_nontrivial():
    a = SpaceId(group_type("B6"), trivial_class("B6"))
    v = distinguish(a, space("B6", "[3,1^10]"))
    assert v.witness == "rational_spheres"


def test_dimension_witness():
    v = distinguish(space("B6", "[3,1^10]"), space("E7", "A2"))
    assert v.witness == "dimension" and v.payload == (75, 130)


def test_space_errors():
    with pytest.raises(ClassifyError):
        SpaceId(group_type("B6"), find_class("C6", "[4,1^8]"))


@pytest.mark.parametrize(
    "n,names",
    [(78, ["B6", "C6", "E6"]), (3, ["A1"]), (10, ["B2"]), (11, []), (248, ["E8"]), (28, ["D4"])],
)
def test_groups_of_dimension(n, names):
    assert [g.name for g in groups_of_dimension(n)] == names


def test_classify_small():
    rep = classify_dimension(0)
    assert [s.name for s in rep.spaces] == ["A1 [2]"]
    assert rep.verdicts == {}
    with pytest.raises(ClassifyError):
        classify_dimension(8)
    with pytest.raises(ClassifyError):
        classify_dimension(-1)


@pytest.fixture(scope="module")
def report75():
    return classify_dimension(75)


def test_classify_75(report75):
    assert len(report75.spaces) == 93
    found = {frozenset({a.name, b.name}) for a, b, _ in report75.undetermined()}
    assert found == UNDETERMINED_75
    for v in report75.verdicts.values():
        assert v.outcome == "Distinct" or v.outcome == "Undetermined"
        if v.outcome == "Distinct":
            assert v.witness in WITNESSES
    assert sum(report75.witness_counts().values()) == len(report75.verdicts) - 3


def test_classify_75_small_prime_bound():
    rep = classify_dimension(75, prime_bound=5)
    found = {frozenset({a.name, b.name}) for a, b, _ in rep.undetermined()}
    assert found == UNDETERMINED_75


def test_report_json(report75):
    doc = report75.to_json()
    assert doc["space_count"] == 93 and doc["pair_count"] == 93 * 92 // 2
    assert len(doc["undetermined"]) == 3


def test_d4_report():
    rep = d4_report()
    rows = {r["partition"]: r for r in rep["rows"]}
    assert rows["[3^2,1^2]"]["quite_even"] and not rows["[3,2^2,1]"]["quite_even"]
    assert all(p["outcome"] == "Distinct" for p in rep["pairs"])
    assert len(rep["pairs"]) == 15
