#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Grows the initial-algebra chain and the truncations A_n side by side,
then saves a plot of both.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
print(__url__)
# pylint: disable=wrong-import-position, missing-function-docstring

from dvg_debug_functions import dprint, ANSI

from unchained.BaseErrors import SizeCapExceeded
from unchained.Signature_functor import Signature
from unchained.Finrec_construction import build_truncation, main_theorem_check
from unchained.Initial_algebra_chain import analyze_chain, build_chain
from unchained.Report_output import plot_growth, rows_table

# ------------------------------------------------------------------------------
#   Main
# ------------------------------------------------------------------------------

if __name__ == "__main__":
    PATH_PLOT = "chain_growth.png"

    # (functor, chain steps, largest truncation bound)
    # fmt: off
    CASES = [
        (Signature.cherry(),       4, 3),
        (Signature.successor(),    5, 5),
        (Signature.constants(3),   3, 3),
        (Signature.empty(),        2, 2),
    ]
    # fmt: on

    for sig, steps, max_bound in CASES:
        dprint(f"\n{sig.describe()}", ANSI.YELLOW)

        cd = build_chain(sig, steps)
        sizes_A = {}
        for n in range(1, max_bound + 1):
            try:
                sizes_A[n] = len(build_truncation(sig, n).a_set)
            except SizeCapExceeded as err:
                dprint(f"  bound {n}: {err.message}", ANSI.RED)
                break

        report = analyze_chain(cd, build_truncation(sig, max(sizes_A, default=1)))
        print(
            rows_table(
                ["k", "|W_k|", "|A_k|"],
                [[k, size, sizes_A.get(k, "-")] for k, size in enumerate(cd.sizes)],
            )
        )
        if report.converged_at is None:
            print("  the chain has not converged")
        else:
            print(f"  converged at k = {report.converged_at}")

        verdict = main_theorem_check(sig, max(sizes_A, default=1))
        dprint(
            f"  truncation at bound {verdict.truncation.bound}: {verdict.status}",
            ANSI.GREEN if report.clean else ANSI.RED,
        )

        if sig == Signature.cherry():
            plot_growth(PATH_PLOT, cd.sizes, sizes_A, sig.describe())
            print(f"  plot saved to {PATH_PLOT}")
