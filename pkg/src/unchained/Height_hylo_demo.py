#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Hylomorphisms on the built-in examples, and what goes wrong on a
coalgebra that is not recursive.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
print(__url__)
# pylint: disable=wrong-import-position, missing-function-docstring

from dvg_debug_functions import dprint, ANSI

from unchained.BaseErrors import NotRecursive
from unchained.FinSet_category import FinSet
from unchained.Signature_functor import PolyElem, Signature
from unchained.Coalgebra_recursion import (
    Algebra,
    Coalgebra,
    brute_force_solutions,
    hylo,
    recursion_certificate,
)
from unchained.Report_output import fn_table
from unchained import Builtin_examples as bx

# ------------------------------------------------------------------------------
#   Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    for name, make_example in bx.EXAMPLES.items():
        ex = make_example()
        cert = recursion_certificate(ex.coalgebra)

        dprint(f"\n{name}: {ex.description}", ANSI.YELLOW)
        print(f"  {len(ex.coalgebra)} states, evaluated in the order")
        print(f"  {' '.join(cert.order[:12])}{' ...' if len(cert.order) > 12 else ''}")
        if name == "height":
            print(fn_table(hylo(ex.coalgebra, ex.algebra)))
        elif name == "quicksort":
            h = hylo(ex.coalgebra, ex.algebra)
            for x in ("[312]", "[3211]", "[23132]"):
                print(f"  {x} ↦ {h(x)}")
        elif name == "gcd":
            h = hylo(ex.coalgebra, ex.algebra)
            for a, b in ((12, 8), (9, 6), (7, 5)):
                print(f"  gcd({a}, {b}) = {h(bx.pair_name(a, b))}")

    # A single state x ↦ node(x, x) has no unique solution
    loop = Coalgebra(
        Signature.cherry(),
        FinSet(("x",)),
        {"x": PolyElem("node", ("x", "x"))},
    )
    dprint("\nx ↦ node(x, x)", ANSI.YELLOW)
    try:
        hylo(loop, bx.height_algebra())
    except NotRecursive as err:
        dprint(f"  {err.message}", ANSI.RED)

    first = Algebra(
        Signature.cherry(),
        FinSet.ordinal(2),
        lambda fe: fe.args[0] if fe.args else "0",
        name="first",
    )
    for a in (bx.height_algebra(), first):
        n_solutions = len(brute_force_solutions(loop, a))
        print(f"  h = a∘Fh∘c has {n_solutions} solution(s) into `{a.name}`")
