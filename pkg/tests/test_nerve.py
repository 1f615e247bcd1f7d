import json

import pytest

from duplicial import nerve as nv
from duplicial.simplicial import check_identities

VERDICTS = {  # name -> (duplicial, cyclic, witness)
    "terminal": (True, True, ["*"]), "Z/2": (True, True, ["*"]), "Z/3": (True, True, ["*"]),
    "iso": (True, True, ["0", "1"]), "interval": (True, False, ["0"]), "chain3": (True, False, ["0"]),
    "twisted interval": (True, False, ["0"]), "{1,e}": (False, False, None),
    "cospan": (False, False, None), "parallel": (False, False, None),
}


@pytest.mark.parametrize("C", nv.category_catalog(), ids=lambda C: C.name)
def test_verdicts(C):
    assert nv.category_report(C).ok
    v = nv.cyclic_iff_groupoid(C, 4)
    dup, cyc, w = VERDICTS[C.name]
    assert v.duplicial == dup
    assert (v.duplicial and v.cyclic_failure is None) == cyc
    assert (v.witness.subcategory if v.witness else None) == w


def test_nerve_is_simplicial():
    for C in nv.category_catalog():
        x = nv.nerve(C, 3)
        assert check_identities(x, "simplicial").ok


def test_interval_coreflector():
    C = nv.interval_category()
    t = nv.coreflector_from_witness(C, nv.find_coreflective_groupoid(C))
    assert t.obj == {"0": "0", "1": "0"}
    assert t.mor == {"1_0": "1_0", "0<1": "1_0", "1_1": "0<1"}
    x = nv.duplicial_on_nerve(C, t, 2)
    assert x.tmap(2)[("1_0", "0<1")] == ("1_0", "1_0")


def test_brute_force_counts_match_witness_existence():
    for C in nv.category_catalog():
        found = nv.all_coreflectors(C)
        assert bool(found) == (nv.find_coreflective_groupoid(C) is not None), C.name


def test_bad_coreflector_reported():
    C = nv.interval_category()
    t = nv.Coreflector({"0": "1", "1": "1"}, {"1_0": "1_1", "0<1": "1_1", "1_1": "1_1"})
    assert not nv.coreflector_report(C, t).ok


def test_json_roundtrip():
    for C in nv.category_catalog():
        D = nv.category_from_json(json.loads(json.dumps(C.to_json())))
        assert D.compose_table == C.compose_table and D.morphisms == C.morphisms


def test_invalid_category_rejected():
    obj = nv.interval_category().to_json()
    obj["compose"]["(0<1,1_0)"] = "1_1"
    with pytest.raises(nv.CategoryError):
        nv.category_from_json(obj)
    obj = nv.interval_category().to_json()
    del obj["identities"]
    with pytest.raises(nv.CategoryError):
        nv.category_from_json(obj)


def test_groupoid_detection():
    assert nv.iso_groupoid().is_groupoid()
    assert not nv.interval_category().is_groupoid()
