#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Ready-made coalgebras and algebras.

    * ``height``: the six-state binary-tree coalgebra x, y, z, u, w, v and
      the height algebra leaf ↦ 0, node(k, n) ↦ 1 + max(k, n).
    * ``quicksort``: the divide step of Quicksort as a recursive coalgebra on
      short lists, and the merge step as an algebra.
    * ``wf-relation``: the powerset coalgebra of the proper-divisor relation,
      with the rank algebra.
    * ``gcd``: Euclid's algorithm as a recursive coalgebra for
      FX = {r0, ..., rN} + X.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence

from unchained.BaseConfig import check_size
from unchained.FinSet_category import Elem, FinSet
from unchained.Signature_functor import (
    FElem,
    Operation,
    PolyElem,
    Signature,
    apply_obj,
)
from unchained.Coalgebra_recursion import Algebra, Coalgebra

# fmt: off
DEFAULT_MAX_HEIGHT = 5      # Saturation point of the height algebra
DEFAULT_ALPHABET   = "123"  # Letters of the Quicksort lists
DEFAULT_MAX_LEN    = 5      # Longest Quicksort list
DEFAULT_WF_SIZE    = 6      # Proper-divisor relation on 1, ..., n
DEFAULT_GCD_MAX    = 12     # Pairs (a, b) with a, b <= N
OVERFLOW           = "overflow"
# fmt: on


@dataclass
class Example:
    name: str
    coalgebra: Coalgebra
    algebra: Algebra
    description: str = ""


# ------------------------------------------------------------------------------
#   height
# ------------------------------------------------------------------------------


def tree_coalgebra() -> Coalgebra:
    """Six-state recursive coalgebra for FX = {leaf} + X × X: x, y, z are
    leaves, u ↦ node(x, x), w ↦ node(z, y) and v ↦ node(y, w)."""
    leaf = PolyElem("leaf")
    return Coalgebra(
        Signature.cherry(),
        FinSet(("x", "y", "z", "u", "w", "v")),
        {
            "x": leaf,
            "y": leaf,
            "z": leaf,
            "u": PolyElem("node", ("x", "x")),
            "w": PolyElem("node", ("z", "y")),
            "v": PolyElem("node", ("y", "w")),
        },
    )


def height_algebra(
    max_height: int = DEFAULT_MAX_HEIGHT, cap: Optional[int] = None
) -> Algebra:
    """leaf ↦ 0 and node(k, n) ↦ 1 + max(k, n), saturating at
    `max_height` to stay finite."""
    sig = Signature.cherry()
    carrier = FinSet.ordinal(max_height + 1)
    table: Dict[FElem, Elem] = {PolyElem("leaf"): "0"}
    for k, n in product(carrier, repeat=2):
        table[PolyElem("node", (k, n))] = str(
            min(1 + max(int(k), int(n)), max_height)
        )
    return Algebra(sig, carrier, table, name="height", cap=cap)


def height_example(cap: Optional[int] = None) -> Example:
    return Example(
        "height",
        tree_coalgebra(),
        height_algebra(cap=cap),
        "Height of binary trees by the hylomorphism h = a∘Fh∘c.",
    )


# ------------------------------------------------------------------------------
#   quicksort
# ------------------------------------------------------------------------------


def list_name(seq: Sequence[str]) -> Elem:
    return "[" + "".join(seq) + "]"


def list_letters(name: Elem) -> List[str]:
    return list(name[1:-1])


def all_lists(
    alphabet: str, max_len: int, cap: Optional[int] = None
) -> List[Elem]:
    """Every list over `alphabet` of length at most `max_len`."""
    check_size(
        "lists over the alphabet",
        sum(len(alphabet) ** k for k in range(max_len + 1)),
        cap,
    )
    return [
        list_name(seq)
        for n in range(max_len + 1)
        for seq in product(alphabet, repeat=n)
    ]


def quicksort_coalgebra(
    alphabet: str = DEFAULT_ALPHABET,
    max_len: int = DEFAULT_MAX_LEN,
    cap: Optional[int] = None,
) -> Coalgebra:
    """[] ↦ nil and c·w ↦ pivot_c(w_<=c, w_>c). Letters compare by their
    position in `alphabet`."""
    sig = Signature.quicksort(alphabet)
    rank = {c: k for k, c in enumerate(alphabet)}
    structure: Dict[Elem, FElem] = {}
    for name in all_lists(alphabet, max_len, cap):
        letters = list_letters(name)
        if not letters:
            structure[name] = PolyElem("nil")
            continue
        pivot, rest = letters[0], letters[1:]
        low = [c for c in rest if rank[c] <= rank[pivot]]
        high = [c for c in rest if rank[c] > rank[pivot]]
        structure[name] = PolyElem(
            f"pivot_{pivot}", (list_name(low), list_name(high))
        )
    return Coalgebra(sig, FinSet(tuple(structure)), structure)


def merge_algebra(
    alphabet: str = DEFAULT_ALPHABET,
    max_len: int = DEFAULT_MAX_LEN,
    cap: Optional[int] = None,
) -> Algebra:
    """nil ↦ [] and pivot_c(l, r) ↦ l·c·r. Results longer than `max_len`
    go to the sink element `overflow`, which absorbs everything."""
    sig = Signature.quicksort(alphabet)
    carrier = FinSet(tuple(all_lists(alphabet, max_len, cap)) + (OVERFLOW,))

    def merge(felem: FElem) -> Elem:
        if felem.op == "nil":
            return list_name([])
        if OVERFLOW in felem.args:
            return OVERFLOW
        low, high = felem.args
        pivot = felem.op[len("pivot_") :]
        letters = list_letters(low) + [pivot] + list_letters(high)
        if len(letters) > max_len:
            return OVERFLOW
        return list_name(letters)

    return Algebra(sig, carrier, merge, name="merge")


def quicksort_example(
    alphabet: str = DEFAULT_ALPHABET,
    max_len: int = DEFAULT_MAX_LEN,
    cap: Optional[int] = None,
) -> Example:
    return Example(
        "quicksort",
        quicksort_coalgebra(alphabet, max_len, cap),
        merge_algebra(alphabet, max_len, cap),
        "Quicksort as the hylomorphism of divide and merge.",
    )


# ------------------------------------------------------------------------------
#   wf-relation
# ------------------------------------------------------------------------------


def wf_relation_coalgebra(
    n: int = DEFAULT_WF_SIZE, cap: Optional[int] = None
) -> Coalgebra:
    """c(b) = {a : a properly divides b} on 1, ..., n."""
    check_size("states of the divisor relation", n, cap)
    carrier = FinSet(tuple(str(k) for k in range(1, n + 1)))
    structure = {
        str(b): frozenset(str(a) for a in range(1, b) if b % a == 0)
        for b in range(1, n + 1)
    }
    return Coalgebra(Signature.powerset(), carrier, structure)


def rank_algebra(max_rank: int, cap: Optional[int] = None) -> Algebra:
    """∅ ↦ 0 and S ↦ 1 + max(S), saturating at `max_rank`."""
    sig = Signature.powerset()
    carrier = FinSet.ordinal(max_rank + 1)
    table = {}
    for subset in apply_obj(sig, carrier, cap).decode.values():
        if not subset:
            table[subset] = "0"
        else:
            table[subset] = str(min(1 + max(int(k) for k in subset), max_rank))
    return Algebra(sig, carrier, table, name="rank", cap=cap)


def wf_relation_example(
    n: int = DEFAULT_WF_SIZE, cap: Optional[int] = None
) -> Example:
    return Example(
        "wf-relation",
        wf_relation_coalgebra(n, cap),
        rank_algebra(n.bit_length(), cap),
        "Rank in the proper-divisor order, a well-founded relation.",
    )


# ------------------------------------------------------------------------------
#   gcd
# ------------------------------------------------------------------------------


def gcd_signature(n: int = DEFAULT_GCD_MAX) -> Signature:
    return Signature(
        tuple(Operation(f"r{k}", 0) for k in range(n + 1))
        + (Operation("step", 1),),
        name=f"gcd:{n}",
    )


def pair_name(a: int, b: int) -> Elem:
    return f"g{a}_{b}"


def gcd_coalgebra(
    n: int = DEFAULT_GCD_MAX, cap: Optional[int] = None
) -> Coalgebra:
    """(a, 0) ↦ r_a and (a, b) ↦ step((b, a mod b))."""
    check_size("pairs of the gcd coalgebra", (n + 1) ** 2, cap)
    structure: Dict[Elem, FElem] = {}
    for a, b in product(range(n + 1), repeat=2):
        if b == 0:
            structure[pair_name(a, b)] = PolyElem(f"r{a}")
        else:
            structure[pair_name(a, b)] = PolyElem("step", (pair_name(b, a % b),))
    return Coalgebra(gcd_signature(n), FinSet(tuple(structure)), structure)


def result_algebra(n: int = DEFAULT_GCD_MAX, cap: Optional[int] = None) -> Algebra:
    """r_k ↦ k and step(k) ↦ k."""
    sig = gcd_signature(n)
    carrier = FinSet.ordinal(n + 1)
    table: Dict[FElem, Elem] = {}
    for k in carrier:
        table[PolyElem(f"r{k}")] = k
        table[PolyElem("step", (k,))] = k
    return Algebra(sig, carrier, table, name="result", cap=cap)


def gcd_example(
    n: int = DEFAULT_GCD_MAX, cap: Optional[int] = None
) -> Example:
    return Example(
        "gcd",
        gcd_coalgebra(n, cap),
        result_algebra(n, cap),
        "Euclid's algorithm as a hylomorphism.",
    )


# ------------------------------------------------------------------------------
#   Algebras used across tests and the self-test
# ------------------------------------------------------------------------------


def parity_algebra() -> Algebra:
    """z ↦ 0 and s(k) ↦ 1 - k for the successor functor."""
    sig = Signature.successor()
    return Algebra(
        sig,
        FinSet.ordinal(2),
        {
            PolyElem("z"): "0",
            PolyElem("s", ("0",)): "1",
            PolyElem("s", ("1",)): "0",
        },
        name="parity",
    )


def constant_algebra(sig: Signature, value: Elem = "0") -> Algebra:
    """The algebra on the one-element set."""
    carrier = FinSet((value,))
    table = {fe: value for fe in apply_obj(sig, carrier).decode.values()}
    return Algebra(sig, carrier, table, name="constant")


EXAMPLES: Dict[str, Callable[..., Example]] = {
    "height": height_example,
    "quicksort": quicksort_example,
    "wf-relation": wf_relation_example,
    "gcd": gcd_example,
}
