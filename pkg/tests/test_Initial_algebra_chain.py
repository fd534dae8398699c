import pytest

from unchained.FinSet_category import is_injective
from unchained.Signature_functor import Signature
from unchained.Coalgebra_recursion import is_recursive
from unchained.Finrec_construction import build_truncation
from unchained.Initial_algebra_chain import analyze_chain, build_chain, stage_terms


@pytest.mark.parametrize(
    "sig, steps, sizes",
    [
        (Signature.cherry(), 4, [0, 1, 2, 5, 26]),
        (Signature.successor(), 3, [0, 1, 2, 3]),
        (Signature.constants(3), 2, [0, 3, 3]),
        (Signature.empty(), 2, [0, 0, 0]),
        (Signature.powerset(), 3, [0, 1, 2, 4]),
    ],
)
def test_chain_sizes(sig, steps, sizes):
    assert build_chain(sig, steps).sizes == sizes


def test_chain_shape():
    cd = build_chain(Signature.cherry(), 3)
    assert len(cd.stages) == 4
    assert len(cd.links) == 3
    assert len(cd.coalgebras) == 4
    assert all(is_injective(w) for w in cd.links)
    assert all(is_recursive(c) for c in cd.coalgebras)

    terms = stage_terms(cd)
    assert sorted(t.text for t in terms[2].values()) == ["leaf", "node(leaf,leaf)"]

    with pytest.raises(ValueError):
        build_chain(Signature.cherry(), -1)


def test_cherry_report():
    report = analyze_chain(build_chain(Signature.cherry(), 4))
    assert report.clean
    assert report.converged_at is None
    assert len(report.recursive) == 5
    assert len(report.injective) == 4
    assert report.to_json()["sizes"] == [0, 1, 2, 5, 26]


def test_chain_against_truncation():
    report = analyze_chain(
        build_chain(Signature.cherry(), 3), build_truncation(Signature.cherry(), 3)
    )
    assert report.in_truncation
    assert report.missing_in_truncation == []


@pytest.mark.parametrize(
    "sig, steps, converged_at, initial_size",
    [
        (Signature.constants(3), 2, 1, 3),
        (Signature.empty(), 2, 0, 0),
        (Signature.successor(), 3, None, None),
    ],
)
def test_convergence(sig, steps, converged_at, initial_size):
    report = analyze_chain(build_chain(sig, steps))
    assert report.converged_at == converged_at
    assert report.initial_size == initial_size
