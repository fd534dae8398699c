#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Finitary endofunctors on finite sets, presented either by a signature of
operation symbols with arities (polynomial functors) or as the finite
powerset functor.

An element of FX (an *FElem*) is a :class:`PolyElem` ``(op, args)`` for a
polynomial functor, or a :obj:`frozenset` of elements of X for the powerset
functor. As members of a :class:`~unchained.FinSet_category.FinSet` they
are encoded canonically as `op(a,b)` (or just `op` for constants) and
`{a,b}` with sorted members.

Infinite parameter sets, like the C in FX = {•} + C × X × X, are modelled by
finitely many indexed operation symbols.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from types import MappingProxyType
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    Mapping,
    NamedTuple,
    Optional,
    Tuple,
    Union,
)

from unchained.BaseConfig import check_size
from unchained.FinSet_category import Elem, FinSet, FinFn, canonical_key

POLYNOMIAL = "polynomial"
POWERSET = "powerset"


class Operation(NamedTuple):
    name: str
    arity: int


class PolyElem(NamedTuple):
    op: str
    args: Tuple[Elem, ...] = ()


FElem = Union[PolyElem, FrozenSet[Elem]]


# ------------------------------------------------------------------------------
#   Signature
# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    """Presentation of a finitary set functor.

    Args:
        ops (:obj:`tuple` [:class:`Operation`]):
            Operation symbols with their arities. Names must be unique. Must
            be empty for the powerset functor.

        kind (:obj:`str`, optional):
            Either :const:`POLYNOMIAL` or :const:`POWERSET`.

            Default: :const:`POLYNOMIAL`

        name (:obj:`str`, optional):
            Display name, not part of the functor's identity.
    """

    ops: Tuple[Operation, ...] = ()
    kind: str = POLYNOMIAL
    name: str = ""

    def __post_init__(self):
        ops = tuple(Operation(str(n), int(a)) for n, a in self.ops)
        object.__setattr__(self, "ops", ops)

        if self.kind not in (POLYNOMIAL, POWERSET):
            raise ValueError(f"Unknown functor kind `{self.kind}`.")
        if self.kind == POWERSET and ops:
            raise ValueError("The powerset functor takes no operations.")

        names = [op.name for op in ops]
        if len(set(names)) != len(names):
            raise ValueError(f"Operation names must be unique: {names}")
        for op in ops:
            if op.arity < 0:
                raise ValueError(f"Negative arity for `{op.name}`.")
            if not op.name or any(c in op.name for c in "(){},"):
                raise ValueError(f"Illegal operation name `{op.name}`.")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return (self.ops, self.kind) == (other.ops, other.kind)

    def __hash__(self) -> int:
        return hash((self.ops, self.kind))

    # --------------------------------------------------------------------------
    #   Frequently used functors
    # --------------------------------------------------------------------------

    @classmethod
    def cherry(cls) -> "Signature":
        """FX = {•} + X × X, binary trees."""
        return cls((Operation("leaf", 0), Operation("node", 2)), name="cherry")

    @classmethod
    def successor(cls) -> "Signature":
        """FX = {z} + X, natural numbers."""
        return cls((Operation("z", 0), Operation("s", 1)), name="successor")

    @classmethod
    def constants(cls, k: int) -> "Signature":
        """FX = {k1, ..., kk}, a constant functor."""
        return cls(
            tuple(Operation(f"k{n + 1}", 0) for n in range(k)),
            name=f"constants:{k}",
        )

    @classmethod
    def empty(cls) -> "Signature":
        """FX = ∅."""
        return cls((), name="empty")

    @classmethod
    def powerset(cls) -> "Signature":
        return cls((), kind=POWERSET, name="powerset")

    @classmethod
    def quicksort(cls, alphabet: Iterable[str]) -> "Signature":
        """FX = {•} + C × X × X with C the given alphabet, one binary
        operation `pivot_c` per letter c."""
        letters = tuple(str(c) for c in alphabet)
        return cls(
            (Operation("nil", 0),)
            + tuple(Operation(f"pivot_{c}", 2) for c in letters),
            name="quicksort:" + "".join(letters),
        )

    @property
    def is_powerset(self) -> bool:
        return self.kind == POWERSET

    def arity(self, op: str) -> int:
        for candidate in self.ops:
            if candidate.name == op:
                return candidate.arity
        raise KeyError(f"Operation `{op}` is not in the signature.")

    def constants_list(self) -> Tuple[str, ...]:
        return tuple(op.name for op in self.ops if op.arity == 0)

    def size_of_image(self, n: int) -> int:
        """|F X| for |X| = n."""
        if self.is_powerset:
            return 2**n
        return sum(n**op.arity for op in self.ops)

    def describe(self) -> str:
        if self.is_powerset:
            return "P(X)"
        if not self.ops:
            return "0"
        terms = []
        for op in self.ops:
            if op.arity == 0:
                terms.append(f"{{{op.name}}}")
            elif op.arity == 1:
                terms.append(f"{op.name}·X")
            else:
                terms.append(f"{op.name}·X^{op.arity}")
        return " + ".join(terms)


# ------------------------------------------------------------------------------
#   FElem helpers
# ------------------------------------------------------------------------------


def encode(felem: FElem) -> Elem:
    """Canonical element name of an FElem."""
    if isinstance(felem, PolyElem):
        if not felem.args:
            return felem.op
        return f"{felem.op}({','.join(felem.args)})"
    members = sorted(felem, key=canonical_key)
    return "{" + ",".join(members) + "}"


def felem_args(felem: FElem) -> Tuple[Elem, ...]:
    """Elements of X occurring in an FElem, in order of occurrence."""
    if isinstance(felem, PolyElem):
        return felem.args
    return tuple(sorted(felem, key=canonical_key))


def fmap(
    func: Union[Callable[[Elem], Elem], Dict[Elem, Elem], FinFn],
    felem: FElem,
) -> FElem:
    """Apply a function pointwise to the arguments of an FElem, i.e. the
    action of Ff on a single element. For the powerset this is the direct
    image.
    """
    if isinstance(func, dict):
        func = func.__getitem__
    if isinstance(felem, PolyElem):
        return PolyElem(felem.op, tuple(func(a) for a in felem.args))
    return frozenset(func(a) for a in felem)


def check_felem(sig: Signature, felem: FElem, x: FinSet):
    """Raise :class:`ValueError` when `felem` is not an element of F `x`."""
    if sig.is_powerset:
        if not isinstance(felem, frozenset):
            raise ValueError(f"Expected a subset, got {felem!r}.")
    else:
        if not isinstance(felem, PolyElem):
            raise ValueError(f"Expected an operation term, got {felem!r}.")
        try:
            arity = sig.arity(felem.op)
        except KeyError as err:
            raise ValueError(str(err)) from None
        if arity != len(felem.args):
            raise ValueError(
                f"`{felem.op}` has arity {arity}, "
                f"got {len(felem.args)} arguments."
            )
    for a in felem_args(felem):
        if a not in x:
            raise ValueError(f"Argument `{a}` of {felem!r} is not in {x!r}.")


# ------------------------------------------------------------------------------
#   apply_obj / apply_fn
# ------------------------------------------------------------------------------


class FunctorImage(NamedTuple):
    """F X as a finite set together with its decoder and encoder. The maps
    are shared between callers through the cache and are read-only."""

    obj: FinSet
    decode: Mapping[Elem, FElem]
    encode: Mapping[FElem, Elem]


def apply_obj(
    sig: Signature, x: FinSet, cap: Optional[int] = None
) -> FunctorImage:
    """Object action of the functor.

    Raises:
        :class:`~unchained.BaseErrors.SizeCapExceeded`
    """
    check_size(
        f"F applied to a {len(x)}-element set",
        sig.size_of_image(len(x)),
        cap,
    )
    return _apply_obj(sig, x)


@lru_cache(maxsize=512)
def _apply_obj(sig: Signature, x: FinSet) -> FunctorImage:
    felems = []
    if sig.is_powerset:
        for size in range(len(x) + 1):
            for subset in combinations(x.elems, size):
                felems.append(frozenset(subset))
    else:
        for op in sig.ops:
            for args in product(x.elems, repeat=op.arity):
                felems.append(PolyElem(op.name, args))

    encoder = {felem: encode(felem) for felem in felems}
    decoder = {name: felem for felem, name in encoder.items()}
    if len(decoder) != len(encoder):
        raise ValueError(
            "Element names of the argument set make the encoding of F X "
            "ambiguous."
        )
    return FunctorImage(
        FinSet(tuple(decoder)),
        MappingProxyType(decoder),
        MappingProxyType(encoder),
    )


def apply_fn(sig: Signature, h: FinFn, cap: Optional[int] = None) -> FinFn:
    """Morphism action of the functor: (op, args) ↦ (op, h(args)), and the
    direct image for subsets."""
    src = apply_obj(sig, h.dom, cap)
    dst = apply_obj(sig, h.cod, cap)
    h_map = h.as_dict()
    return FinFn(
        src.obj,
        dst.obj,
        {
            name: dst.encode[fmap(h_map, felem)]
            for name, felem in src.decode.items()
        },
    )
