#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Reading and writing functors, coalgebras, algebras and diagrams as JSON
documents.

Functor::

    {"ops": [{"name": "leaf", "arity": 0}, {"name": "node", "arity": 2}]}
    {"kind": "powerset"}

or one of the shorthands `cherry`, `successor`, `empty`, `powerset`,
`constants:<k>` and `quicksort:<letters>`.

Coalgebra::

    {"functor": ..., "carrier": ["x", "y"],
     "structure": {"x": {"op": "node", "args": ["y", "y"]},
                   "y": {"op": "leaf", "args": []}}}

Subsets of the powerset functor are plain lists of element names. The
structure of an algebra maps encoded FElems, like `node(0,1)` or `{0,1}`,
to carrier elements. A diagram lists its nodes and edges by id::

    {"nodes": {"P": ["p"], "X": ["a", "b"]},
     "edges": [{"id": "f", "src": "P", "dst": "X", "map": {"p": "a"}}]}

Every document written carries ``"format": "unchained/1"``.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

import json
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Union

from unchained.BaseConfig import FORMAT_TAG
from unchained.BaseErrors import ParseError, SizeCapExceeded, UnchainedError
from unchained.FinSet_category import FinSet, FinFn
from unchained.FinSet_colimit import Diagram, Edge
from unchained.Signature_functor import (
    POWERSET,
    FElem,
    Operation,
    PolyElem,
    Signature,
    apply_obj,
    felem_args,
)
from unchained.Coalgebra_recursion import Algebra, Coalgebra

SHORTHANDS = {
    "cherry": Signature.cherry,
    "successor": Signature.successor,
    "empty": Signature.empty,
    "powerset": Signature.powerset,
}


@contextmanager
def _parse_guard(what: str):
    """Turn malformed input into a :class:`ParseError`."""
    try:
        yield
    except (ParseError, SizeCapExceeded):
        raise
    except (KeyError, ValueError, TypeError, AttributeError, UnchainedError) as err:
        raise ParseError(f"Malformed {what}: {err}", witness=what) from err


# ------------------------------------------------------------------------------
#   Functor
# ------------------------------------------------------------------------------


def parse_functor(doc: Union[str, dict]) -> Signature:
    with _parse_guard("functor"):
        if isinstance(doc, str):
            if doc in SHORTHANDS:
                return SHORTHANDS[doc]()
            if doc.startswith("constants:"):
                return Signature.constants(int(doc.split(":", 1)[1]))
            if doc.startswith("quicksort:"):
                return Signature.quicksort(doc.split(":", 1)[1])
            raise ValueError(f"unknown functor shorthand `{doc}`")

        if doc.get("kind") == POWERSET:
            return Signature.powerset()
        ops = tuple(Operation(op["name"], int(op["arity"])) for op in doc["ops"])
        return Signature(ops, name=doc.get("name", ""))


def functor_to_json(sig: Signature) -> dict:
    if sig.is_powerset:
        return {"kind": POWERSET}
    out: dict = {"ops": [{"name": op.name, "arity": op.arity} for op in sig.ops]}
    if sig.name:
        out["name"] = sig.name
    return out


# ------------------------------------------------------------------------------
#   FElem / FinFn
# ------------------------------------------------------------------------------


def parse_felem(sig: Signature, doc: Any) -> FElem:
    if sig.is_powerset:
        if not isinstance(doc, list):
            raise ValueError(f"expected a list of elements, got {doc!r}")
        return frozenset(str(x) for x in doc)
    return PolyElem(str(doc["op"]), tuple(str(a) for a in doc.get("args", [])))


def felem_to_json(felem: FElem) -> Any:
    if isinstance(felem, PolyElem):
        return {"op": felem.op, "args": list(felem.args)}
    return list(felem_args(felem))


def fn_to_json(f: FinFn) -> dict:
    return {"dom": list(f.dom), "cod": list(f.cod), "map": f.as_dict()}


def parse_fn(doc: dict) -> FinFn:
    with _parse_guard("function"):
        return FinFn(FinSet(tuple(doc["dom"])), FinSet(tuple(doc["cod"])), doc["map"])


# ------------------------------------------------------------------------------
#   Coalgebra / Algebra
# ------------------------------------------------------------------------------


def parse_coalgebra(doc: dict) -> Coalgebra:
    with _parse_guard("coalgebra"):
        sig = parse_functor(doc["functor"])
        carrier = FinSet(tuple(str(x) for x in doc["carrier"]))
        structure = {
            str(x): parse_felem(sig, fe) for x, fe in doc["structure"].items()
        }
        return Coalgebra(sig, carrier, structure)


def coalgebra_to_json(c: Coalgebra) -> dict:
    return {
        "format": FORMAT_TAG,
        "functor": functor_to_json(c.sig),
        "carrier": list(c.carrier),
        "structure": {x: felem_to_json(c(x)) for x in c.carrier},
    }


def parse_algebra(doc: dict, cap=None) -> Algebra:
    with _parse_guard("algebra"):
        sig = parse_functor(doc["functor"])
        carrier = FinSet(tuple(str(x) for x in doc["carrier"]))
        decode = apply_obj(sig, carrier, cap).decode
        table = {}
        for key, value in doc["structure"].items():
            if key not in decode:
                raise ValueError(f"`{key}` is not an element of F A")
            table[decode[key]] = str(value)
        return Algebra(sig, carrier, table, name=doc.get("name", ""), cap=cap)


def algebra_to_json(a: Algebra, cap=None) -> dict:
    fn = a.structure_fn(cap)
    return {
        "format": FORMAT_TAG,
        "functor": functor_to_json(a.sig),
        "carrier": list(a.carrier),
        "structure": fn.as_dict(),
    }


# ------------------------------------------------------------------------------
#   Diagram
# ------------------------------------------------------------------------------


def parse_diagram(doc: dict) -> Diagram:
    with _parse_guard("diagram"):
        nodes = {
            str(node): FinSet(tuple(str(x) for x in xs))
            for node, xs in doc["nodes"].items()
        }
        edges = [
            Edge(
                str(e["id"]),
                str(e["src"]),
                str(e["dst"]),
                FinFn(nodes[e["src"]], nodes[e["dst"]], e["map"]),
            )
            for e in doc.get("edges", [])
        ]
        return Diagram(nodes, edges)


def diagram_to_json(d: Diagram) -> dict:
    return {
        "format": FORMAT_TAG,
        "nodes": {node: list(xs) for node, xs in d.nodes.items()},
        "edges": [
            {"id": e.id, "src": e.src, "dst": e.dst, "map": e.fn.as_dict()}
            for e in d.edges
        ],
    }


# ------------------------------------------------------------------------------
#   Files
# ------------------------------------------------------------------------------


PARSERS = {
    "coalgebra": (parse_coalgebra, coalgebra_to_json),
    "algebra": (parse_algebra, algebra_to_json),
    "diagram": (parse_diagram, diagram_to_json),
}


def load_json(path: Union[str, Path]) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as err:
        raise ParseError(f"Cannot read `{path}`: {err}", witness=str(path)) from err
    except json.JSONDecodeError as err:
        raise ParseError(
            f"`{path}` is not valid JSON: {err}",
            witness={"path": str(path), "line": err.lineno},
        ) from err


def normalize(kind: str, doc: dict) -> dict:
    """serialize(parse(doc)): sorted carriers, canonical subsets and the
    format tag."""
    parse, serialize = PARSERS[kind]
    return serialize(parse(doc))


def dumps(doc: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(doc, indent=2, ensure_ascii=False)
