import pytest

from unchained.BaseErrors import DomainMismatch, MorphismFailed, NoTriangle
from unchained.FinSet_category import (
    FinFn,
    FinSet,
    all_functions,
    compose,
    constant,
    identity,
    try_inverse,
)
from unchained.FinSet_colimit import colimit, mediate
from unchained.Signature_functor import PolyElem, Signature
from unchained.Finrec_construction import build_truncation
from unchained.Iterate_construction import (
    BIJECTIVE,
    IterateContext,
    enumerate_E,
    fold_from_comparison,
    iterate_colimit_check,
    lift_cocone_morphism_check,
    make_triangles,
    merge_report,
    preserves_truncation,
    reduce_cocone,
    slice_over,
)


@pytest.fixture(scope="module")
def constants_1():
    return build_truncation(Signature.constants(3), 1)


@pytest.fixture(scope="module")
def e_diagram(constants_1):
    ctx = IterateContext(constants_1)
    return enumerate_E(constants_1, slice_over(ctx.fa.obj, 1), ctx=ctx)


def test_slice_over():
    assert len(slice_over(FinSet.ordinal(3), 1)) == 4
    assert len(slice_over(FinSet.ordinal(2), 2)) == 7


def test_make_triangles(constants_1):
    ctx = IterateContext(constants_1)
    p_obj = FinSet.ordinal(1)
    p = FinFn(p_obj, ctx.fa.obj, {"0": "k2"})
    triangles = make_triangles(constants_1, p_obj, p, ctx)
    assert len(triangles) == 3
    for tr in triangles:
        assert compose(ctx.f_inj[tr.node], tr.p_prime) == p

    with pytest.raises(DomainMismatch):
        make_triangles(constants_1, FinSet.ordinal(2), p, ctx)


def test_no_triangle_on_small_truncation():
    # No object of at most three states holds both depth-two cherries
    t = build_truncation(Signature.cherry(), 3)
    ctx = IterateContext(t)
    rep = {term.text: r for r, term in t.class_terms().items()}
    target = ctx.fa.encode[
        PolyElem(
            "node",
            (rep["node(leaf,node(leaf,leaf))"], rep["node(node(leaf,leaf),leaf)"]),
        )
    ]
    p_obj = FinSet.ordinal(1)
    p = FinFn(p_obj, ctx.fa.obj, {"0": target})
    with pytest.raises(NoTriangle):
        make_triangles(t, p_obj, p, ctx)


def test_merge_report_without_pairs(constants_1):
    ctx = IterateContext(constants_1)
    p_obj = FinSet.ordinal(1)
    p = FinFn(p_obj, ctx.fa.obj, {"0": "k1"})
    assert merge_report(constants_1, make_triangles(constants_1, p_obj, p, ctx)) == []


def test_preserves_truncation(constants_1):
    # The three one-state objects form a coproduct, which a constant
    # functor does not preserve
    assert not preserves_truncation(constants_1)
    assert preserves_truncation(build_truncation(Signature.successor(), 1))


def test_e_diagram(e_diagram):
    assert len(e_diagram.objects) == 12
    assert not e_diagram.missing
    assert e_diagram.lifted_ok


def test_reduce_colimit_cocone(e_diagram):
    cd = colimit(e_diagram.carriers())
    reduced = reduce_cocone(e_diagram, cd.cocone())
    assert reduced.clean
    assert len(reduced.legs) == 4


def test_lift_cocone_morphism_check(e_diagram, rng):
    cd = colimit(e_diagram.carriers())
    k = cd.cocone()
    fa = e_diagram.ctx.fa.obj
    kappa_inv = try_inverse(mediate(cd, e_diagram.inj_cocone()))
    assert kappa_inv is not None

    report = lift_cocone_morphism_check(e_diagram, k, kappa_inv)
    assert report.bool_slice and report.bool_E
    assert len(report.inserted) == 3

    for v in all_functions(fa, cd.apex):
        assert lift_cocone_morphism_check(e_diagram, k, v).agree

    with pytest.raises(DomainMismatch):
        lift_cocone_morphism_check(
            e_diagram, k, constant(cd.apex, cd.apex, cd.apex.elems[0])
        )


@pytest.mark.parametrize(
    "sig, bound",
    [(Signature.constants(3), 1), (Signature.constants(3), 2), (Signature.empty(), 2)],
)
def test_iterate_colimit_is_fa(sig, bound):
    verdict = iterate_colimit_check(build_truncation(sig, bound), 1)
    assert verdict.status == BIJECTIVE
    assert verdict.colimit_size == verdict.fa_size


def test_empty_functor_has_no_triangles():
    verdict = iterate_colimit_check(build_truncation(Signature.empty(), 1), 1)
    assert verdict.n_objects == 0
    assert len(verdict.missing) == 1


def test_successor_comparison_is_onto():
    verdict = iterate_colimit_check(build_truncation(Signature.successor(), 2), 1)
    assert verdict.surjective
    assert verdict.to_json()["status"] == verdict.status


def test_merges_recorded_in_e_diagram():
    # {0 -> z, 1 -> z} carries two triangles over p = s(z), merged by the
    # edge onto {0 -> z}
    t = build_truncation(Signature.successor(), 2)
    verdict = iterate_colimit_check(t, 1)
    merged = [e for e in verdict.ed.merges if e["outcome"] == "merged"]
    assert merged
    assert all(e["slice"] is not None for e in merged)
    assert verdict.to_json()["merged"] == len(merged)
    assert verdict.preserves == preserves_truncation(t)
    assert verdict.to_json()["preserves_colimit"] == verdict.preserves


def test_no_merges_on_constants(e_diagram):
    assert e_diagram.merges == []


def test_fold_from_comparison(constants_1):
    verdict = iterate_colimit_check(constants_1, 1)
    h = fold_from_comparison(constants_1, verdict)
    assert compose(h, constants_1.alpha) == identity(constants_1.a_set)
    assert compose(constants_1.alpha, h) == identity(h.dom)

    verdict.comparison = None
    with pytest.raises(MorphismFailed):
        fold_from_comparison(constants_1, verdict)
