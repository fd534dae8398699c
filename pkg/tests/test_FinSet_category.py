import pytest

from unchained.BaseErrors import DomainMismatch, ElementNotFound
from unchained.FinSet_category import (
    FinFn,
    FinSet,
    all_functions,
    codiagonal,
    compose,
    constant,
    copair,
    coproduct,
    identity,
    is_bijective,
    is_injective,
    is_surjective,
    quotient,
    random_function,
    sum_of_functions,
    try_inverse,
)


def test_canonical_order():
    assert FinSet(("10", "2", "b", "a")).elems == ("2", "10", "a", "b")
    assert FinSet(("b", "a")) == FinSet(("a", "b"))
    assert FinSet.ordinal(3).elems == ("0", "1", "2")
    assert FinSet.ordinal(3).is_ordinal()
    assert not FinSet(("a",)).is_ordinal()


def test_duplicates_refused():
    with pytest.raises(ValueError):
        FinSet(("a", "a"))


def test_position():
    x = FinSet(("a", "b"))
    assert x.position("b") == 1
    with pytest.raises(ElementNotFound):
        x.position("c")


def test_finfn_must_be_total():
    x = FinSet(("a", "b"))
    with pytest.raises(DomainMismatch):
        FinFn(x, x, {"a": "a"})
    with pytest.raises(DomainMismatch):
        FinFn(x, x, {"a": "a", "b": "b", "c": "a"})
    with pytest.raises(ElementNotFound):
        FinFn(x, x, {"a": "a", "b": "z"})


def test_compose():
    x = FinSet(("a", "b"))
    y = FinSet(("0", "1"))
    f = FinFn(x, y, {"a": "1", "b": "0"})
    g = FinFn(y, x, {"0": "a", "1": "a"})
    gf = compose(g, f)
    assert gf.as_dict() == {"a": "a", "b": "a"}
    assert compose(f, identity(x)) == f
    with pytest.raises(DomainMismatch):
        compose(f, f)


def test_injective_surjective_inverse():
    x = FinSet(("a", "b"))
    y = FinSet(("0", "1"))
    f = FinFn(x, y, {"a": "1", "b": "0"})
    assert is_bijective(f)
    assert compose(try_inverse(f), f) == identity(x)

    c = constant(x, y, "0")
    assert not is_injective(c)
    assert not is_surjective(c)
    assert c.image() == ["0"]
    assert try_inverse(c) is None


def test_all_functions_count():
    assert len(list(all_functions(FinSet.ordinal(2), FinSet.ordinal(3)))) == 9
    assert len(list(all_functions(FinSet(), FinSet.ordinal(3)))) == 1
    assert len(list(all_functions(FinSet.ordinal(2), FinSet()))) == 0


def test_random_function(rng):
    f = random_function(FinSet.ordinal(5), FinSet(("a", "b")), rng)
    assert set(f.images) <= {"a", "b"}
    with pytest.raises(DomainMismatch):
        random_function(FinSet.ordinal(1), FinSet(), rng)


def test_coproduct_and_copair():
    x = FinSet(("a",))
    y = FinSet(("a", "b"))
    cop = coproduct(x, y)
    assert cop.apex.elems == ("L:a", "R:a", "R:b")

    z = FinSet(("0", "1"))
    f = constant(x, z, "0")
    g = FinFn(y, z, {"a": "1", "b": "0"})
    fg = copair(f, g, cop)
    assert compose(fg, cop.inl) == f
    assert compose(fg, cop.inr) == g


def test_sum_and_codiagonal():
    x = FinSet(("a", "b"))
    nabla = codiagonal(x)
    assert nabla("L:a") == "a"
    assert nabla("R:b") == "b"

    swap = FinFn(x, x, {"a": "b", "b": "a"})
    s = sum_of_functions(swap, identity(x))
    assert s("L:a") == "L:b"
    assert s("R:a") == "R:a"


def test_quotient():
    x = FinSet(("a", "b", "c", "d"))
    partition, proj = quotient(x, [("c", "b"), ("d", "c")])
    assert partition.representatives() == ["a", "b"]
    assert partition.classes() == {"a": ["a"], "b": ["b", "c", "d"]}
    assert proj("d") == "b"
    assert partition.same_class("b", "d")
    assert not partition.same_class("a", "d")

    other, _ = quotient(x, [("b", "d"), ("c", "d")])
    assert partition == other

    with pytest.raises(ElementNotFound):
        quotient(x, [("a", "z")])
