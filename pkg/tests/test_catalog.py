"""Descriptor grammar, description files, and the built-in catalog."""

import json

import pytest

from chardual.catalog import (
    CATALOG,
    candidates_of_order,
    catalog_entry,
    group_from_description,
    parse_descriptor,
    print_descriptor,
)
from chardual.chartab import character_table
from chardual.families import abelian, grow_quotient
from chardual.groups import ToolkitError


def test_every_catalog_descriptor_round_trips():
    for entry in CATALOG:
        G = parse_descriptor(entry.descriptor)
        assert print_descriptor(G) == entry.descriptor
        assert G.order == entry.order


def test_catalog_tags():
    tags = {t for e in CATALOG for t in e.tags}
    assert tags == {"control", "abelian", "stem-family"}
    assert catalog_entry("sym:3").tags == ("control",)
    assert catalog_entry("hanaki:p=3").tags == ("stem-family",)
    assert catalog_entry("nope") is None


def test_product_descriptor():
    G = parse_descriptor("sym:3*abelian:2")
    assert G.order == 12
    assert print_descriptor(G) == "sym:3*abelian:2"


@pytest.mark.parametrize(
    "bad",
    [
        "nope:3",
        "sym",
        "sym:",
        "sym:x",
        "sym:0",
        "q8:2",
        "abelian:4x",
        "hanaki:q=3",
        "hanaki:p=3,p=3",
        "suzuki:q=3",
        "sym:3**q8",
    ],
)
def test_parse_rejects(bad):
    with pytest.raises(ToolkitError):
        parse_descriptor(bad)


def test_print_requires_descriptor():
    G = grow_quotient(abelian([2, 4]), (0, 2))
    with pytest.raises(ToolkitError):
        print_descriptor(G)


@pytest.mark.parametrize(
    "desc",
    ["sym:3", "abelian:2x4", "q8", "hanaki:p=3", "suzuki:q=3,s=3,l=1", "sym:3*abelian:2"],
)
def test_description_codec_rebuilds_same_table(desc):
    G = parse_descriptor(desc)
    obj = json.loads(json.dumps(G.to_description()))
    H = group_from_description(obj)
    assert H.order == G.order
    assert character_table(H).to_json() == character_table(G).to_json()


def test_quotient_description_codec():
    Q = grow_quotient(abelian([2, 4]), (0, 2))
    obj = json.loads(json.dumps(Q.to_description()))
    assert obj["kind"] == "quotient" and obj["of"]["kind"] == "abelian"
    H = group_from_description(obj)
    assert H.order == 4
    assert character_table(H).to_json() == character_table(Q).to_json()


def test_description_codec_rejects_unknown_kind():
    with pytest.raises(ToolkitError):
        group_from_description({"kind": "martian"})


def test_candidates_of_order():
    got = {d for d, _ in candidates_of_order(8)}
    assert got == {"dih:4", "q8", "abelian:8", "abelian:2x4", "abelian:2x2x2"}
    for d, G in candidates_of_order(8):
        assert G.order == 8
    assert candidates_of_order(7) == []


def test_catalog_has_the_acceptance_stock():
    descriptors = {e.descriptor for e in CATALOG}
    assert {"sym:3", "dih:4", "q8", "sym:4"} <= descriptors
    assert {"hanaki:p=3", "suzuki:q=3,s=3,l=1", "suzuki:q=3,s=3,l=2"} <= descriptors
    # the stretch p^7 family is buildable but deliberately not in the pool
    assert not any(d.startswith("coclass2") for d in descriptors)
    assert parse_descriptor("coclass2:p=5").pres.ngens == 7
