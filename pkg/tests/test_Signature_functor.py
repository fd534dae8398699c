import pytest

from unchained.BaseErrors import SizeCapExceeded
from unchained.FinSet_category import FinFn, FinSet
from unchained.Signature_functor import (
    Operation,
    PolyElem,
    Signature,
    apply_fn,
    apply_obj,
    check_felem,
    encode,
    fmap,
)


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature((Operation("a", 0), Operation("a", 1)))
    with pytest.raises(ValueError):
        Signature((Operation("a", -1),))
    with pytest.raises(ValueError):
        Signature((Operation("f(x)", 1),))
    with pytest.raises(ValueError):
        Signature((Operation("a", 0),), kind="powerset")


def test_equality_ignores_name():
    assert Signature.cherry() == Signature(
        (Operation("leaf", 0), Operation("node", 2))
    )


def test_describe():
    assert Signature.cherry().describe() == "{leaf} + node·X^2"
    assert Signature.successor().describe() == "{z} + s·X"
    assert Signature.empty().describe() == "0"
    assert Signature.powerset().describe() == "P(X)"


@pytest.mark.parametrize(
    "sig, n, size",
    [
        (Signature.cherry(), 0, 1),
        (Signature.cherry(), 2, 5),
        (Signature.successor(), 3, 4),
        (Signature.constants(3), 4, 3),
        (Signature.powerset(), 3, 8),
        (Signature.empty(), 5, 0),
    ],
)
def test_apply_obj_size(sig, n, size):
    image = apply_obj(sig, FinSet.ordinal(n))
    assert len(image.obj) == size == sig.size_of_image(n)


def test_encode():
    assert encode(PolyElem("node", ("0", "1"))) == "node(0,1)"
    assert encode(PolyElem("leaf")) == "leaf"
    assert encode(frozenset({"10", "2"})) == "{2,10}"
    assert encode(frozenset()) == "{}"


def test_fmap():
    felem = PolyElem("node", ("a", "b"))
    assert fmap({"a": "0", "b": "0"}, felem) == PolyElem("node", ("0", "0"))
    assert fmap(str.upper, frozenset({"a", "b"})) == frozenset({"A", "B"})


def test_check_felem():
    x = FinSet(("a",))
    check_felem(Signature.cherry(), PolyElem("node", ("a", "a")), x)
    with pytest.raises(ValueError):
        check_felem(Signature.cherry(), PolyElem("node", ("a",)), x)
    with pytest.raises(ValueError):
        check_felem(Signature.cherry(), PolyElem("fork", ()), x)
    with pytest.raises(ValueError):
        check_felem(Signature.cherry(), PolyElem("node", ("a", "b")), x)
    with pytest.raises(ValueError):
        check_felem(Signature.powerset(), PolyElem("leaf"), x)


def test_apply_fn_direct_image():
    x = FinSet(("a", "b"))
    y = FinSet(("0",))
    h = FinFn(x, y, {"a": "0", "b": "0"})
    Fh = apply_fn(Signature.powerset(), h)
    assert Fh("{a,b}") == "{0}"
    assert Fh("{}") == "{}"

    Fh = apply_fn(Signature.cherry(), h)
    assert Fh("node(a,b)") == "node(0,0)"
    assert Fh("leaf") == "leaf"


def test_apply_obj_respects_cap():
    with pytest.raises(SizeCapExceeded):
        apply_obj(Signature.powerset(), FinSet.ordinal(10), cap=100)


def test_apply_obj_maps_are_read_only():
    img = apply_obj(Signature.successor(), FinSet(("a",)))
    with pytest.raises(TypeError):
        img.decode["bogus"] = PolyElem("z")
    with pytest.raises(TypeError):
        img.encode[PolyElem("z")] = "bogus"
    again = apply_obj(Signature.successor(), FinSet(("a",)))
    assert dict(again.decode) == {"s(a)": PolyElem("s", ("a",)), "z": PolyElem("z")}
