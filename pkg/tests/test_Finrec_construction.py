from itertools import product

import pytest

from unchained.BaseErrors import NoFactorization, NotRecursive
from unchained.FinSet_category import FinFn, FinSet, compose, identity, is_injective
from unchained.Signature_functor import PolyElem, Signature
from unchained.Coalgebra_recursion import (
    COALG,
    Coalgebra,
    first_violation,
    iterate,
    verify_morphism,
)
from unchained.Finrec_construction import (
    INCONCLUSIVE,
    INITIAL,
    Term,
    build_truncation,
    canonical_form,
    cata,
    enumerate_finrec,
    enumerate_terms,
    factor_coalg_hom,
    fold_by_terms,
    main_theorem_check,
    merge_factorization,
    oracle_partition,
    terminal_morphism,
    truncation_map,
    unfold,
    universal_fold,
    universal_morphism,
)
from unchained.Builtin_examples import tree_coalgebra, height_algebra, parity_algebra

LEAF = Term("leaf")


def node(a, b):
    return Term("node", (a, b))


@pytest.fixture(scope="module")
def cherry_2():
    return build_truncation(Signature.cherry(), 2)


@pytest.fixture(scope="module")
def cherry_3():
    return build_truncation(Signature.cherry(), 3)


# ------------------------------------------------------------------------------
#   Terms
# ------------------------------------------------------------------------------


def test_term_basics():
    t = node(LEAF, node(LEAF, LEAF))
    assert t.text == "node(leaf,node(leaf,leaf))"
    assert t.depth == 2
    assert t.dag_size == 3
    assert Term(None, (LEAF, LEAF)).children == (LEAF,)
    assert Term(None, ()).text == "{}"


def test_unfold():
    assert str(unfold(tree_coalgebra(), "v")) == "node(leaf,node(leaf,leaf))"


def test_unfold_needs_recursion(loop):
    with pytest.raises(NotRecursive):
        unfold(loop, "x")


def test_cata():
    assert cata(node(LEAF, node(LEAF, LEAF)), height_algebra()) == "2"
    s = Term("s", (Term("s", (Term("s", (Term("z"),)),)),))
    assert cata(s, parity_algebra()) == "1"


@pytest.mark.parametrize("k, count", [(0, 0), (1, 1), (2, 2), (3, 5), (4, 26)])
def test_enumerate_terms(k, count):
    assert len(enumerate_terms(Signature.cherry(), k)) == count


def test_enumerate_powerset_terms():
    # ∅, {∅}, {{∅}}, {∅, {∅}}
    terms = enumerate_terms(Signature.powerset(), 3)
    assert len(terms) == 4
    assert terms[0].text == "{}"


# ------------------------------------------------------------------------------
#   enumerate_finrec
# ------------------------------------------------------------------------------


@pytest.mark.parametrize(
    "sig, bound, dedup, count",
    [
        (Signature.successor(), 1, False, 1),
        (Signature.successor(), 2, False, 4),
        (Signature.successor(), 3, False, 20),
        (Signature.successor(), 3, True, 7),
        (Signature.cherry(), 2, False, 4),
        (Signature.cherry(), 3, False, 38),
        (Signature.constants(3), 1, False, 3),
        (Signature.empty(), 2, False, 0),
    ],
)
def test_enumerate_finrec(sig, bound, dedup, count):
    assert len(enumerate_finrec(sig, bound, dedup)) == count


def test_enumerate_finrec_edge_cases():
    only = enumerate_finrec(Signature.cherry(), 0)
    assert len(only) == 1 and len(only[0]) == 0
    with pytest.raises(ValueError):
        enumerate_finrec(Signature.cherry(), -1)


def test_canonical_form_is_invariant():
    sig = Signature.successor()
    one = Coalgebra(
        sig, FinSet.ordinal(2), {"0": PolyElem("z"), "1": PolyElem("s", ("0",))}
    )
    two = Coalgebra(
        sig, FinSet.ordinal(2), {"0": PolyElem("s", ("1",)), "1": PolyElem("z")}
    )
    assert canonical_form(one) == canonical_form(two)


# ------------------------------------------------------------------------------
#   Truncations
# ------------------------------------------------------------------------------


@pytest.mark.parametrize(
    "sig, bound, size",
    [
        (Signature.cherry(), 1, 1),
        (Signature.cherry(), 2, 2),
        (Signature.constants(3), 1, 3),
        (Signature.empty(), 1, 0),
        (Signature.powerset(), 2, 2),
    ],
)
def test_truncation_size(sig, bound, size):
    t = build_truncation(sig, bound)
    assert len(t.a_set) == size
    assert is_injective(t.alpha)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_successor_truncation_grows_by_one(n):
    assert len(build_truncation(Signature.successor(), n, dedup=True).a_set) == n


def test_cherry_3(cherry_3):
    assert len(cherry_3.a_set) == 5
    texts = sorted(t.text for t in cherry_3.class_terms().values())
    assert texts == [
        "leaf",
        "node(leaf,leaf)",
        "node(leaf,node(leaf,leaf))",
        "node(node(leaf,leaf),leaf)",
        "node(node(leaf,leaf),node(leaf,leaf))",
    ]
    oracle_partition(cherry_3)


def test_dedup_keeps_the_colimit():
    a = build_truncation(Signature.successor(), 3)
    b = build_truncation(Signature.successor(), 3, dedup=True)
    assert sorted(str(t) for t in a.class_terms().values()) == sorted(
        str(t) for t in b.class_terms().values()
    )


def test_universal_fold(cherry_2):
    fold = universal_fold(cherry_2, height_algebra())
    assert fold == fold_by_terms(cherry_2, height_algebra())
    assert sorted(fold.images) == ["0", "1"]


def test_terminal_morphism(cherry_2, cherry_3):
    c = tree_coalgebra()
    with pytest.raises(NoFactorization):
        terminal_morphism(cherry_2, c)

    h = terminal_morphism(cherry_3, c)
    assert verify_morphism(COALG, h, c, cherry_3.coalgebra)
    assert h("x") == h("y") == h("z")
    assert len(set(h.images)) == 3


def test_universal_morphism(cherry_2):
    c = Coalgebra(
        Signature.cherry(),
        FinSet(("p", "q")),
        {"p": PolyElem("leaf"), "q": PolyElem("node", ("p", "p"))},
    )
    h = universal_morphism(cherry_2, c)
    assert h == terminal_morphism(cherry_2, c)


def test_factor_coalg_hom(cherry_2):
    c = Coalgebra(
        Signature.cherry(),
        FinSet(("p", "q")),
        {"p": PolyElem("leaf"), "q": PolyElem("node", ("p", "p"))},
    )
    h = terminal_morphism(cherry_2, c)
    hit = factor_coalg_hom(cherry_2, c, h)
    assert compose(cherry_2.injections[hit.node], hit.fn) == h
    assert verify_morphism(COALG, hit.fn, c, cherry_2.diagram.objects[hit.node])


def test_merge_factorization():
    t = build_truncation(Signature.successor(), 3)
    b = Coalgebra(
        Signature.successor(),
        FinSet(("a", "b")),
        {"a": PolyElem("z"), "b": PolyElem("s", ("a",))},
    )
    h = terminal_morphism(t, b)
    cd = t.colimit.colimit

    # Carrier-level factorizations that fail to commute with the structures
    n_repaired = 0
    for node, x in t.diagram.objects.items():
        members = cd.class_members(node)
        if not all(r in members for r in h.images):
            continue
        for images in product(*[members[h(y)] for y in b.carrier]):
            fn = FinFn.from_images(b.carrier, x.carrier, images)
            if first_violation(COALG, fn, b, x) is None:
                continue
            hit = merge_factorization(t, b, node, fn)
            assert hit is not None
            assert compose(t.injections[hit.node], hit.fn) == h
            assert verify_morphism(COALG, hit.fn, b, t.diagram.objects[hit.node])
            n_repaired += 1
    assert n_repaired > 0


def test_truncation_map(cherry_2, cherry_3):
    f = truncation_map(cherry_2, cherry_3)
    assert is_injective(f)
    with pytest.raises(ValueError):
        truncation_map(cherry_3, cherry_2)


# ------------------------------------------------------------------------------
#   main_theorem_check
# ------------------------------------------------------------------------------


def test_convergent_signature():
    verdict = main_theorem_check(Signature.constants(3), 1)
    assert verdict.status == INITIAL
    assert verdict.size == 3
    assert verdict.initial is not None
    assert verdict.to_json()["status"] == "initial"


def test_successor_is_inconclusive():
    verdict = main_theorem_check(Signature.successor(), 3)
    assert verdict.status == INCONCLUSIVE
    assert verdict.alpha_injective
    assert not verdict.alpha_surjective
    assert verdict.initial is None


def test_empty_functor():
    verdict = main_theorem_check(Signature.empty(), 1)
    assert verdict.status == INITIAL
    assert verdict.size == 0


@pytest.mark.parametrize("bound", [1, 2])
def test_inverse_read_off_the_iterate_colimit(bound):
    verdict = main_theorem_check(Signature.constants(3), bound)
    t = verdict.truncation
    assert verdict.status == INITIAL
    assert verdict.inverse == terminal_morphism(t, iterate(t.coalgebra))
    assert compose(verdict.inverse, t.alpha) == identity(t.a_set)


def test_non_bijective_iterate_colimit_is_inconclusive(monkeypatch):
    import unchained.Iterate_construction as ic

    real_check = ic.iterate_colimit_check

    def injective_only(t, slice_bound, cap=None):
        verdict = real_check(t, slice_bound, cap)
        verdict.status = ic.INJECTIVE
        verdict.surjective = False
        return verdict

    monkeypatch.setattr(ic, "iterate_colimit_check", injective_only)
    verdict = main_theorem_check(Signature.constants(3), 1)
    assert verdict.status == INCONCLUSIVE
    assert verdict.alpha_injective and verdict.alpha_surjective
    assert verdict.diagnostics["iterate_check"] == "injective"
    assert verdict.initial is None
    assert verdict.inverse is None
