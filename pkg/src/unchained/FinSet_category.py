#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The ambient category: finite sets of named elements, total functions
between them, binary coproducts and quotients by generated equivalence
relations.

Elements are plain strings. Every :class:`FinSet` iterates in the canonical
ordering of :func:`canonical_key`, so equal constructions always produce
bit-identical sets, functions and quotients.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

import re
from itertools import product
from dataclasses import dataclass, field
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from unchained.BaseErrors import DomainMismatch, ElementNotFound

Elem = str

_RE_DIGITS = re.compile(r"(\d+)")


def canonical_key(name: Elem) -> tuple:
    """Sort key of the canonical element ordering: natural ordering, i.e.
    digit runs compare numerically. Hence `"2"` < `"10"` and `"X2:1"` <
    `"X10:0"`.
    """
    chunks = _RE_DIGITS.split(name)
    # Digit runs always sit at the odd positions
    natural = tuple(
        int(chunk) if idx % 2 else chunk for idx, chunk in enumerate(chunks)
    )
    return (natural, name)


# ------------------------------------------------------------------------------
#   FinSet
# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class FinSet:
    """Finite set of uniquely named elements, stored in canonical order.

    Args:
        elems (:obj:`Iterable` [:obj:`str`]):
            Element names, in any order. Duplicates are refused.
    """

    elems: Tuple[Elem, ...] = ()
    _index: Dict[Elem, int] = field(
        default=None, compare=False, hash=False, repr=False  # type: ignore
    )

    def __post_init__(self):
        elems = tuple(sorted(self.elems, key=canonical_key))
        index = {name: idx for idx, name in enumerate(elems)}
        if len(index) != len(elems):
            seen = set()
            dupes = sorted({x for x in elems if x in seen or seen.add(x)})
            raise ValueError(f"Duplicate element names in FinSet: {dupes}")

        object.__setattr__(self, "elems", elems)
        object.__setattr__(self, "_index", index)

    @classmethod
    def ordinal(cls, n: int) -> "FinSet":
        """The canonical presentable object {0, ..., n-1}."""
        return cls(tuple(str(k) for k in range(n)))

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[Elem]:
        return iter(self.elems)

    def __contains__(self, name) -> bool:
        return name in self._index

    def __repr__(self) -> str:
        return "{" + ", ".join(self.elems) + "}"

    def position(self, name: Elem) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ElementNotFound(
                f"Element `{name}` is not in {self!r}.", witness=name
            ) from None

    def is_ordinal(self) -> bool:
        return self.elems == tuple(str(k) for k in range(len(self)))


# ------------------------------------------------------------------------------
#   FinFn
# ------------------------------------------------------------------------------


class FinFn:
    """Total function between two finite sets.

    Args:
        dom (:class:`FinSet`):
            Domain.

        cod (:class:`FinSet`):
            Codomain.

        mapping (:obj:`Mapping` [:obj:`str`, :obj:`str`]):
            Image of every element of ``dom``. Must be total on ``dom`` and
            land in ``cod``.
    """

    __slots__ = ("dom", "cod", "images")

    def __init__(self, dom: FinSet, cod: FinSet, mapping: Mapping[Elem, Elem]):
        missing = [x for x in dom if x not in mapping]
        if missing:
            raise DomainMismatch(
                f"Function is not total, no image for {missing}.",
                witness=missing,
            )
        extra = [x for x in mapping if x not in dom]
        if extra:
            raise DomainMismatch(
                f"Function maps elements outside its domain: {extra}.",
                witness=extra,
            )
        images = tuple(mapping[x] for x in dom)
        for x, y in zip(dom, images):
            if y not in cod:
                raise ElementNotFound(
                    f"Image `{y}` of `{x}` is not in the codomain.",
                    witness=[x, y],
                )

        self.dom = dom
        self.cod = cod
        # Images in canonical order of `dom`
        self.images: Tuple[Elem, ...] = images

    @classmethod
    def from_images(
        cls, dom: FinSet, cod: FinSet, images: Sequence[Elem]
    ) -> "FinFn":
        return cls(dom, cod, dict(zip(dom.elems, images)))

    def __call__(self, x: Elem) -> Elem:
        return self.images[self.dom.position(x)]

    def as_dict(self) -> Dict[Elem, Elem]:
        return dict(zip(self.dom.elems, self.images))

    def image(self) -> List[Elem]:
        """Distinct images in canonical order of the codomain."""
        hit = set(self.images)
        return [y for y in self.cod if y in hit]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinFn):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, self.images))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{x}->{y}" for x, y in zip(self.dom, self.images))
        return f"FinFn({pairs})"


# ------------------------------------------------------------------------------
#   fn_ops
# ------------------------------------------------------------------------------


def identity(x: FinSet) -> FinFn:
    return FinFn(x, x, {e: e for e in x})


def compose(g: FinFn, f: FinFn) -> FinFn:
    """Return g∘f, i.e. first `f`, then `g`."""
    if f.cod != g.dom:
        raise DomainMismatch(
            f"Cannot compose: cod(f)={f.cod!r} differs from dom(g)={g.dom!r}.",
            witness={"cod_f": list(f.cod), "dom_g": list(g.dom)},
        )
    g_map = g.as_dict()
    return FinFn.from_images(f.dom, g.cod, [g_map[y] for y in f.images])


def is_injective(f: FinFn) -> bool:
    return len(set(f.images)) == len(f.images)


def is_surjective(f: FinFn) -> bool:
    return len(set(f.images)) == len(f.cod)


def is_bijective(f: FinFn) -> bool:
    return is_injective(f) and is_surjective(f)


def try_inverse(f: FinFn) -> Optional[FinFn]:
    """Return the two-sided inverse of `f` when it is bijective, otherwise
    :obj:`None`."""
    if not is_bijective(f):
        return None
    return FinFn(f.cod, f.dom, {y: x for x, y in zip(f.dom, f.images)})


def constant(dom: FinSet, cod: FinSet, value: Elem) -> FinFn:
    return FinFn(dom, cod, {x: value for x in dom})


def random_function(
    dom: FinSet, cod: FinSet, rng: np.random.Generator
) -> FinFn:
    """Uniformly random total function, drawn with a numpy generator so that
    a fixed seed gives a fixed function.
    """
    if len(dom) and not len(cod):
        raise DomainMismatch(
            "No function from a nonempty set into the empty set."
        )
    if not len(dom):
        return FinFn(dom, cod, {})
    picks = rng.integers(0, len(cod), size=len(dom))
    return FinFn.from_images(dom, cod, [cod.elems[k] for k in picks])


def all_functions(dom: FinSet, cod: FinSet) -> Iterator[FinFn]:
    """Every function `dom` --> `cod`, in lexicographic order of the image
    tuples. The caller is responsible for the size cap."""
    for images in product(cod.elems, repeat=len(dom)):
        yield FinFn.from_images(dom, cod, images)


# ------------------------------------------------------------------------------
#   coproduct / copair
# ------------------------------------------------------------------------------


class Coproduct(NamedTuple):
    apex: FinSet
    inl: FinFn
    inr: FinFn


def tag_left(name: Elem) -> Elem:
    return f"L:{name}"


def tag_right(name: Elem) -> Elem:
    return f"R:{name}"


def coproduct(x: FinSet, y: FinSet) -> Coproduct:
    """Disjoint union with tagged element names `L:<name>` and `R:<name>`."""
    apex = FinSet(
        tuple(tag_left(a) for a in x) + tuple(tag_right(b) for b in y)
    )
    inl = FinFn(x, apex, {a: tag_left(a) for a in x})
    inr = FinFn(y, apex, {b: tag_right(b) for b in y})
    return Coproduct(apex, inl, inr)


def copair(f: FinFn, g: FinFn, cop: Coproduct) -> FinFn:
    """The unique [f, g]: X + Y --> Z with [f, g]∘inl = f and
    [f, g]∘inr = g."""
    if f.cod != g.cod:
        raise DomainMismatch(
            "copair: f and g must share their codomain.",
            witness={"cod_f": list(f.cod), "cod_g": list(g.cod)},
        )
    if f.dom != cop.inl.dom or g.dom != cop.inr.dom:
        raise DomainMismatch(
            "copair: the coproduct does not match the domains of f and g."
        )

    mapping = {cop.inl(a): f(a) for a in f.dom}
    mapping.update({cop.inr(b): g(b) for b in g.dom})
    return FinFn(cop.apex, f.cod, mapping)


def sum_of_functions(f: FinFn, g: FinFn) -> FinFn:
    """f + g: X + Y --> X' + Y' on the tagged coproducts."""
    src = coproduct(f.dom, g.dom)
    dst = coproduct(f.cod, g.cod)
    return copair(compose(dst.inl, f), compose(dst.inr, g), src)


def codiagonal(x: FinSet) -> FinFn:
    """∇ = [id, id]: X + X --> X."""
    return copair(identity(x), identity(x), coproduct(x, x))


# ------------------------------------------------------------------------------
#   Partition / quotient
# ------------------------------------------------------------------------------


class Partition:
    """Equivalence relation on a finite set, stored as a union-find forest.
    The representative of every class is its least element in canonical
    order.

    After :func:`quotient` has built it, every element points directly at its
    representative, hence :meth:`find` does not mutate anymore.
    """

    def __init__(self, base: FinSet):
        self.base = base
        self.parent: Dict[Elem, Elem] = {x: x for x in base}

    def find(self, x: Elem) -> Elem:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        # Path compression
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Elem, y: Elem):
        rx = self.find(x)
        ry = self.find(y)
        if rx == ry:
            return
        if canonical_key(ry) < canonical_key(rx):
            rx, ry = ry, rx
        # Least element stays root
        self.parent[ry] = rx

    def compress(self):
        for x in self.base:
            self.find(x)

    def representatives(self) -> List[Elem]:
        return [x for x in self.base if self.parent[x] == x]

    def classes(self) -> Dict[Elem, List[Elem]]:
        out: Dict[Elem, List[Elem]] = {r: [] for r in self.representatives()}
        for x in self.base:
            out[self.find(x)].append(x)
        return out

    def same_class(self, x: Elem, y: Elem) -> bool:
        return self.find(x) == self.find(y)

    def as_blocks(self) -> List[Tuple[Elem, ...]]:
        return [tuple(block) for block in self.classes().values()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.base == other.base and self.as_blocks() == other.as_blocks()

    def __repr__(self) -> str:
        return "Partition(" + " | ".join(
            ",".join(block) for block in self.as_blocks()
        ) + ")"


def quotient(
    x: FinSet, pairs: Iterable[Tuple[Elem, Elem]]
) -> Tuple[Partition, FinFn]:
    """Quotient of `x` by the equivalence relation generated by `pairs`.

    Returns:
        :obj:`tuple`:
            partition (:class:`Partition`)

            proj (:class:`FinFn`):
                Projection onto the set of class representatives.
    """
    partition = Partition(x)
    for a, b in pairs:
        for e in (a, b):
            if e not in x:
                raise ElementNotFound(
                    f"quotient: element `{e}` is not in the base set.",
                    witness=e,
                )
        partition.union(a, b)

    partition.compress()
    reps = FinSet(tuple(partition.representatives()))
    proj = FinFn(x, reps, {e: partition.find(e) for e in x})
    return partition, proj
