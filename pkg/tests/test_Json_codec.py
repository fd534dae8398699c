import json

import pytest

from unchained.BaseErrors import ParseError
from unchained.Signature_functor import PolyElem, Signature
from unchained.Coalgebra_recursion import hylo, is_recursive
from unchained.Json_codec import (
    dumps,
    functor_to_json,
    load_json,
    normalize,
    parse_algebra,
    parse_coalgebra,
    parse_diagram,
    parse_fn,
    parse_functor,
)


@pytest.mark.parametrize(
    "doc, expected",
    [
        ("cherry", Signature.cherry()),
        ("successor", Signature.successor()),
        ("constants:3", Signature.constants(3)),
        ("quicksort:12", Signature.quicksort("12")),
        ({"kind": "powerset"}, Signature.powerset()),
        ({"ops": [{"name": "z", "arity": 0}, {"name": "s", "arity": 1}]}, Signature.successor()),
    ],
)
def test_parse_functor(doc, expected):
    assert parse_functor(doc) == expected


@pytest.mark.parametrize(
    "doc",
    [
        "bananas",
        "constants:x",
        {"ops": [{"name": "a", "arity": -1}]},
        {"ops": [{"name": "a"}]},
        {"ops": [{"name": "a", "arity": 0}, {"name": "a", "arity": 0}]},
    ],
)
def test_parse_functor_rejects(doc):
    with pytest.raises(ParseError):
        parse_functor(doc)


def test_functor_to_json():
    assert parse_functor(functor_to_json(Signature.cherry())) == Signature.cherry()
    assert functor_to_json(Signature.powerset()) == {"kind": "powerset"}


def test_parse_coalgebra(fixture_path):
    c = parse_coalgebra(load_json(fixture_path("height_coalgebra.json")))
    assert c.carrier.elems == ("u", "v", "w", "x", "y", "z")
    assert c("v") == PolyElem("node", ("y", "w"))

    c = parse_coalgebra(load_json(fixture_path("cyclic_coalgebra.json")))
    assert not is_recursive(c)


def test_parse_powerset_coalgebra(fixture_path):
    c = parse_coalgebra(load_json(fixture_path("divisors_coalgebra.json")))
    assert c("4") == frozenset({"1", "2"})
    assert c("1") == frozenset()


def test_parse_algebra(fixture_path):
    c = parse_coalgebra(load_json(fixture_path("counter_coalgebra.json")))
    a = parse_algebra(load_json(fixture_path("parity_algebra.json")))
    assert hylo(c, a).as_dict() == {"a": "0", "b": "1", "c": "0"}


def test_parse_algebra_rejects_unknown_key():
    doc = {"functor": "successor", "carrier": ["0"], "structure": {"z": "0", "s(1)": "0"}}
    with pytest.raises(ParseError):
        parse_algebra(doc)


def test_parse_algebra_rejects_partial_table():
    doc = {"functor": "successor", "carrier": ["0", "1"], "structure": {"z": "0"}}
    with pytest.raises(ParseError):
        parse_algebra(doc)


def test_parse_diagram(fixture_path):
    d = parse_diagram(load_json(fixture_path("parallel_pair.json")))
    assert list(d.nodes) == ["P", "X"]
    assert [e.id for e in d.edges] == ["f", "g"]

    with pytest.raises(ParseError):
        parse_diagram({"nodes": {"P": ["p"]}, "edges": [{"id": "f", "src": "P", "dst": "Q", "map": {}}]})


def test_parse_fn():
    f = parse_fn({"dom": ["a"], "cod": ["0", "1"], "map": {"a": "1"}})
    assert f("a") == "1"
    with pytest.raises(ParseError):
        parse_fn({"dom": ["a"], "cod": ["0"], "map": {"a": "1"}})


def test_malformed_files(fixture_path):
    with pytest.raises(ParseError):
        load_json(fixture_path("broken.json"))
    with pytest.raises(ParseError):
        load_json(fixture_path("does_not_exist.json"))
    with pytest.raises(ParseError):
        parse_coalgebra(load_json(fixture_path("incomplete_coalgebra.json")))


def test_normalize(fixture_path):
    doc = normalize("coalgebra", load_json(fixture_path("divisors_coalgebra.json")))
    assert doc["format"] == "unchained/1"
    assert doc["carrier"] == ["1", "2", "3", "4"]
    assert doc["structure"]["4"] == ["1", "2"]
    assert normalize("coalgebra", doc) == doc

    doc = normalize("algebra", load_json(fixture_path("parity_algebra.json")))
    assert doc["structure"] == {"s(0)": "1", "s(1)": "0", "z": "0"}


def test_dumps_is_deterministic(fixture_path):
    doc = normalize("diagram", load_json(fixture_path("chain_diagram.json")))
    text = dumps(doc)
    assert text == dumps(json.loads(text))
