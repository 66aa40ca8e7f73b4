"""The wire format: canonical bytes, round trips, defensive decoding."""

import json

import hypothesis
import hypothesis.strategies as strat
import pytest

from polygame.documents import (
    DocumentError,
    decode_element,
    dump_document,
    encode_element,
    load_document,
)
from polygame.elements import atom, fun, mset, pair, star, tup
from polygame.fixtures import ALL_FIXTURES, COIN, TRAP
from polygame.laws import random_game, random_simulation
from polygame.simulation import check_simulation
from polygame.synthesis import alfred_region, max_simulation

from conftest import element_pool
from test_elements import elements


@hypothesis.given(elements())
def test_element_encoding_round_trips(e):
    assert decode_element(encode_element(e)) == e


def test_element_encoding_is_json_ready():
    for e in element_pool():
        json.dumps(encode_element(e))


def test_unit_point_prints_as_reserved_word():
    assert encode_element(star()) == "star"
    assert decode_element("star") == star()
    assert decode_element("go") == atom("go")


def test_game_documents_round_trip():
    for name, g in sorted(ALL_FIXTURES.items()):
        text = dump_document("game", g, False)
        kind, back = load_document(text)
        assert kind == "game" and back == g, name


def test_simulation_documents_round_trip(rng):
    for _ in range(10):
        g1 = random_game(rng)
        g2 = random_game(rng)
        s = random_simulation(rng, g1, g2)
        kind, back = load_document(dump_document("simulation", s, False))
        assert kind == "simulation"
        assert back == s
        assert check_simulation(back) == []


def test_region_documents_round_trip():
    r = alfred_region(COIN)
    kind, back = load_document(dump_document("region", r, False))
    assert kind == "region" and back == r


def test_report_documents_round_trip():
    report = {"suite": "category", "seed": 7, "checks": [
        {"name": "x", "ok": True, "details": ""},
        {"name": "y", "ok": False, "details": "because"},
    ]}
    kind, back = load_document(dump_document("report", report, False))
    assert kind == "report" and back == report


def test_dump_is_deterministic_and_compact():
    s = max_simulation(COIN, TRAP)
    once = dump_document("simulation", s, False)
    again = dump_document("simulation", s, False)
    assert once == again
    assert once.endswith("\n")
    assert "  " not in once.splitlines()[0]


def test_pretty_and_compact_agree_after_parsing():
    g = ALL_FIXTURES["trap"]
    compact = load_document(dump_document("game", g, False))
    pretty = load_document(dump_document("game", g, True))
    assert compact == pretty


def test_key_order_does_not_matter_when_loading():
    text = dump_document("game", COIN, False)
    shuffled = json.dumps(json.loads(text), sort_keys=False, indent=2)
    kind, back = load_document(shuffled)
    assert back == COIN
    # and re-dumping restores the canonical bytes
    assert dump_document("game", back, False) == text


def test_malformed_documents_are_rejected():
    good = dump_document("game", COIN, False)
    payload = json.loads(good)
    for mangle in (
        lambda d: d.pop("kind"),
        lambda d: d.update(kind="gamey"),
        lambda d: d.update(format_version=99),
        lambda d: d.pop("payload"),
        lambda d: d["payload"].pop("states"),
    ):
        doc = json.loads(good)
        mangle(doc)
        with pytest.raises(DocumentError):
            load_document(json.dumps(doc))
    with pytest.raises(DocumentError):
        load_document("[1, 2, 3]")
    with pytest.raises(DocumentError):
        load_document("{{{")


def test_report_checks_are_validated_strictly():
    bad = {"suite": "s", "seed": 0,
           "checks": [{"name": "x", "ok": True, "details": "", "extra": 1}]}
    with pytest.raises(DocumentError):
        load_document(dump_document("report", bad, False))
    missing = {"suite": "s", "seed": 0, "checks": [{"name": "x", "ok": True}]}
    with pytest.raises(DocumentError):
        load_document(dump_document("report", missing, False))


def test_wrong_kind_payload_mismatch():
    text = dump_document("game", COIN, False)
    doc = json.loads(text)
    doc["kind"] = "simulation"
    with pytest.raises(DocumentError):
        load_document(json.dumps(doc))
