import pytest

from unchained.BaseErrors import (
    DomainMismatch,
    NoFactorization,
    NoMerge,
    NotACocone,
    SizeCapExceeded,
)
from unchained.FinSet_category import FinFn, FinSet, all_functions, compose, constant
from unchained.FinSet_colimit import (
    Cocone,
    Diagram,
    Edge,
    canonical_slice_diagram,
    colimit,
    factor_through,
    factorizations,
    mediate,
    merge,
    preserves_colimit_check,
    slice_object,
    verify_filtered_characterization,
)
from unchained.Json_codec import load_json, parse_diagram
from unchained.Signature_functor import Signature


@pytest.fixture
def parallel_pair(fixture_path):
    return parse_diagram(load_json(fixture_path("parallel_pair.json")))


@pytest.fixture
def chain(fixture_path):
    return parse_diagram(load_json(fixture_path("chain_diagram.json")))


def test_diagram_validation():
    x = FinSet(("a",))
    with pytest.raises(ValueError):
        Diagram({"X:1": x})
    f = FinFn(x, x, {"a": "a"})
    with pytest.raises(ValueError):
        Diagram({"X": x}, [Edge("f", "X", "X", f), Edge("f", "X", "X", f)])
    with pytest.raises(DomainMismatch):
        Diagram({"X": x}, [Edge("f", "X", "Y", f)])
    with pytest.raises(DomainMismatch):
        Diagram({"X": x, "Y": FinSet(("b",))}, [Edge("f", "X", "Y", f)])


def test_colimit_of_parallel_pair(parallel_pair):
    cd = colimit(parallel_pair)
    assert cd.apex.elems == ("P:p",)
    assert cd.injections["X"].as_dict() == {"a": "P:p", "b": "P:p"}
    assert cd.class_members("X") == {"P:p": ["a", "b"]}


def test_colimit_of_discrete_diagram():
    d = Diagram({"A": FinSet(("x",)), "B": FinSet(("x", "y"))})
    cd = colimit(d)
    assert cd.apex.elems == ("A:x", "B:x", "B:y")


def test_mediate(parallel_pair):
    cd = colimit(parallel_pair)
    one = FinSet(("*",))
    legs = {
        "P": constant(FinSet(("p",)), one, "*"),
        "X": constant(FinSet(("a", "b")), one, "*"),
    }
    v = mediate(cd, Cocone(one, legs))
    for node, leg in legs.items():
        assert compose(v, cd.injections[node]) == leg


def test_mediate_refuses_non_cocone(parallel_pair):
    cd = colimit(parallel_pair)
    two = FinSet.ordinal(2)
    legs = {
        "P": FinFn(FinSet(("p",)), two, {"p": "0"}),
        "X": FinFn(FinSet(("a", "b")), two, {"a": "0", "b": "1"}),
    }
    with pytest.raises(NotACocone) as exc:
        mediate(cd, Cocone(two, legs))
    assert exc.value.witness == {"edge": "g", "element": "p"}


def test_filtered_counterexample(parallel_pair):
    cd = colimit(parallel_pair)
    report = verify_filtered_characterization(parallel_pair, cd)
    assert report.jointly_surjective
    assert report.counterexamples == [{"node": "X", "x1": "a", "x2": "b"}]
    assert not report.clean


def test_filtered_chain(chain):
    cd = colimit(chain)
    report = verify_filtered_characterization(chain, cd)
    assert report.clean
    assert report.witnesses[0] == {
        "node": "X0",
        "x1": "a",
        "x2": "b",
        "target": "X1",
        "path": ["f"],
    }
    assert report.to_json()["clean"]


def test_factor_through(chain):
    cd = colimit(chain)
    f = FinFn(FinSet(("0",)), cd.apex, {"0": cd.apex.elems[0]})
    hit = factor_through(chain, cd, f)
    assert hit.node == "X0"
    assert hit.fn.as_dict() == {"0": "a"}
    assert factor_through(chain, cd, f, prefer="X1").fn.as_dict() == {"0": "c"}
    assert len(list(factorizations(chain, cd, f))) == 5


def test_no_factorization():
    d = Diagram({"A": FinSet(("x",)), "B": FinSet(("y",))})
    cd = colimit(d)
    f = FinFn(FinSet(("0", "1")), cd.apex, {"0": "A:x", "1": "B:y"})
    with pytest.raises(NoFactorization):
        factor_through(d, cd, f)


def test_merge(chain, parallel_pair):
    cd = colimit(chain)
    one = FinSet(("0",))
    x0 = chain.nodes["X0"]
    hit = merge(
        chain, cd, "X0", FinFn(one, x0, {"0": "a"}), FinFn(one, x0, {"0": "b"})
    )
    assert (hit.node, hit.path) == ("X1", ("f",))
    assert hit.fn.as_dict() == {"0": "c"}
    assert hit.step.as_dict() == {"a": "c", "b": "c"}

    cd = colimit(parallel_pair)
    x = parallel_pair.nodes["X"]
    with pytest.raises(NoMerge):
        merge(
            parallel_pair,
            cd,
            "X",
            FinFn(one, x, {"0": "a"}),
            FinFn(one, x, {"0": "b"}),
        )


def test_merge_needs_identified_functions():
    d = Diagram({"A": FinSet(("x", "y"))})
    cd = colimit(d)
    one = FinSet(("0",))
    a = d.nodes["A"]
    with pytest.raises(DomainMismatch):
        merge(d, cd, "A", FinFn(one, a, {"0": "x"}), FinFn(one, a, {"0": "y"}))


@pytest.mark.parametrize(
    "sig, preserved",
    [
        (Signature.successor(), True),
        (Signature.cherry(), False),
        (Signature.powerset(), False),
        (Signature.constants(2), True),
    ],
)
def test_preservation_of_coequalizer(parallel_pair, sig, preserved):
    cd = colimit(parallel_pair)
    assert preserves_colimit_check(sig, parallel_pair, cd) == preserved


def test_preservation_of_filtered_colimit(chain):
    cd = colimit(chain)
    for sig in (Signature.cherry(), Signature.powerset()):
        assert preserves_colimit_check(sig, chain, cd)


def test_canonical_slice_diagram():
    sd = canonical_slice_diagram(FinSet.ordinal(2), 1)
    assert len(sd.diagram.nodes) == 3
    assert sd.is_colimit
    assert list(sd.objects) == ["S0", "S1", "S2"]

    sd = canonical_slice_diagram(FinSet(("a", "b", "c")), 2, sample=6, seed=1)
    assert len(sd.diagram.nodes) == 6

    with pytest.raises(ValueError):
        canonical_slice_diagram(FinSet.ordinal(2), 0)


def test_slice_object_order():
    x = FinSet(("a", "b", "c"))
    expected = [
        p for k in range(3) for p in all_functions(FinSet.ordinal(k), x)
    ]
    assert [slice_object(x, idx) for idx in range(13)] == expected
    assert slice_object(x, 5).as_dict() == {"0": "a", "1": "b"}


def test_sampled_slice_respects_cap():
    x = FinSet.ordinal(10)
    with pytest.raises(SizeCapExceeded):
        canonical_slice_diagram(x, 2, cap=100)
    with pytest.raises(SizeCapExceeded):
        canonical_slice_diagram(x, 2, sample=101, cap=100)

    sd = canonical_slice_diagram(x, 2, sample=3, seed=0, cap=100)
    assert len(sd.objects) == 3
    assert all(len(p.dom) <= 2 for p in sd.objects.values())
