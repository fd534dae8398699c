#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Self-test: the invariants of the package checked exhaustively on small
instances, with seeded randomized checks where exhaustion is out of reach.

Run from the command line with ``unchained selftest``.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

import time
from itertools import product
from typing import Callable, List, NamedTuple, Optional, Tuple

import numpy as np
from dvg_debug_functions import dprint, ANSI

from unchained.BaseConfig import DEFAULT_SEED
from unchained.FinSet_category import (
    FinSet,
    all_functions,
    is_injective,
    random_function,
    try_inverse,
)
from unchained.Signature_functor import Signature, apply_obj
from unchained.Coalgebra_recursion import (
    COALG_TO_ALG,
    Algebra,
    Coalgebra,
    brute_force_solutions,
    hylo,
    is_recursive,
    verify_morphism,
)
from unchained.Finrec_construction import (
    INITIAL,
    build_truncation,
    fold_by_terms,
    main_theorem_check,
    oracle_partition,
    universal_fold,
)
from unchained.Initial_algebra_chain import analyze_chain, build_chain
from unchained.Iterate_construction import (
    BIJECTIVE,
    IterateContext,
    enumerate_E,
    lift_cocone_morphism_check,
    make_triangles,
    reduce_cocone,
    slice_over,
    iterate_colimit_check,
)
from unchained.FinSet_colimit import colimit, mediate
from unchained import Builtin_examples as bx


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str
    seconds: float


# ------------------------------------------------------------------------------
#   Helpers
# ------------------------------------------------------------------------------


def all_coalgebras(sig: Signature, n: int):
    carrier = FinSet.ordinal(n)
    img = apply_obj(sig, carrier)
    for images in product(img.obj.elems, repeat=n):
        yield Coalgebra(
            sig, carrier, {p: img.decode[y] for p, y in zip(carrier, images)}
        )


def all_algebras(sig: Signature, n: int):
    carrier = FinSet.ordinal(n)
    img = apply_obj(sig, carrier)
    felems = list(img.decode.values())
    for images in product(carrier.elems, repeat=len(felems)):
        yield Algebra(sig, carrier, dict(zip(felems, images)))


def random_algebra(sig: Signature, n: int, rng: np.random.Generator) -> Algebra:
    carrier = FinSet.ordinal(n)
    img = apply_obj(sig, carrier)
    fn = random_function(img.obj, carrier, rng)
    return Algebra(sig, carrier, {img.decode[k]: fn(k) for k in img.obj})


# ------------------------------------------------------------------------------
#   Checks
# ------------------------------------------------------------------------------


def check_decision_vs_uniqueness(max_carrier: int = 3) -> Tuple[bool, str]:
    sig = Signature.cherry()
    algebras = [a for n in (1, 2) for a in all_algebras(sig, n)]
    n_coalg = 0
    for n in range(max_carrier + 1):
        for c in all_coalgebras(sig, n):
            n_coalg += 1
            counts = [len(brute_force_solutions(c, a)) for a in algebras]
            unique = all(k == 1 for k in counts)
            if is_recursive(c) != unique:
                return False, f"disagreement at {c!r}"
    return True, f"{n_coalg} coalgebras x {len(algebras)} algebras"


def check_height() -> Tuple[bool, str]:
    ex = bx.height_example()
    h = hylo(ex.coalgebra, ex.algebra)
    expected = {"x": "0", "y": "0", "z": "0", "u": "1", "w": "1", "v": "2"}
    ok = h.as_dict() == expected and verify_morphism(
        COALG_TO_ALG, h, ex.coalgebra, ex.algebra
    )
    return ok, f"h = {h.as_dict()}"


def check_quicksort() -> Tuple[bool, str]:
    ex = bx.quicksort_example()
    h = hylo(ex.coalgebra, ex.algebra)
    for name in ex.coalgebra.carrier:
        if h(name) != bx.list_name(sorted(bx.list_letters(name))):
            return False, f"{name} sorts to {h(name)}"
    return True, f"{len(ex.coalgebra.carrier)} lists sorted"


def check_chain() -> Tuple[bool, str]:
    cd = build_chain(Signature.cherry(), 4)
    report = analyze_chain(cd)
    ok = cd.sizes == [0, 1, 2, 5, 26] and report.clean
    return ok, f"sizes {cd.sizes}"


def check_oracle_partition() -> Tuple[bool, str]:
    for sig in (Signature.successor(), Signature.cherry()):
        for bound in (1, 2, 3):
            oracle_partition(build_truncation(sig, bound))
    return True, "successor and cherry, bounds 1 to 3"


def check_truncation_sizes() -> Tuple[bool, str]:
    sizes = [
        len(build_truncation(Signature.successor(), n, dedup=True).a_set)
        for n in range(1, 6)
    ]
    if sizes != [1, 2, 3, 4, 5]:
        return False, f"|A_n| = {sizes}"
    for sig in (Signature.cherry(), Signature.constants(2), Signature.powerset()):
        for bound in (1, 2, 3):
            if not is_injective(build_truncation(sig, bound).alpha):
                return False, f"α not injective for {sig.name} at {bound}"
    return True, f"|A_n| = {sizes}"


def check_universal_fold(rng: np.random.Generator) -> Tuple[bool, str]:
    combos: List[Tuple[Signature, Algebra, int]] = []
    for bound in (1, 2, 3, 4):
        combos.append((Signature.successor(), bx.parity_algebra(), bound))
    for bound in (1, 2, 3):
        combos.append((Signature.cherry(), bx.height_algebra(), bound))
    for sig in (Signature.successor(), Signature.cherry(), Signature.constants(3)):
        for bound in (1, 2):
            combos.append((sig, bx.constant_algebra(sig), bound))
            for size in (2, 3):
                combos.append((sig, random_algebra(sig, size, rng), bound))

    for sig, b, bound in combos:
        t = build_truncation(sig, bound)
        if universal_fold(t, b) != fold_by_terms(t, b):
            return False, f"{sig.name}, {b!r}, bound {bound}"
    return True, f"{len(combos)} combinations"


def check_convergent_initial() -> Tuple[bool, str]:
    sig = Signature.constants(3)
    verdict = main_theorem_check(sig, 2)
    if verdict.status != INITIAL or verdict.size != 3:
        return False, f"verdict {verdict.status}, size {verdict.size}"
    n_alg = 0
    for n in (1, 2):
        for b in all_algebras(sig, n):
            verdict.initial.unique_morphism(b)
            n_alg += 1
    return True, f"initial algebra of size 3, unique into {n_alg} algebras"


def check_E_construction(
    rng: np.random.Generator, n_random: int = 100
) -> Tuple[bool, str]:
    t = build_truncation(Signature.constants(3), 2)
    ctx = IterateContext(t)
    ed = enumerate_E(t, slice_over(ctx.fa.obj, 1), ctx=ctx)
    if not ed.lifted_ok:
        return False, "a lifted morphism is missing"

    cd = colimit(ed.carriers())
    k = cd.cocone()
    if not reduce_cocone(ed, k).clean:
        return False, "independence failure on the colimit cocone"

    kappa_inv = try_inverse(mediate(cd, ed.inj_cocone()))
    if kappa_inv is None:
        return False, "colimit of the E-diagram is not FA"
    candidates = [kappa_inv]
    candidates += [
        random_function(ctx.fa.obj, cd.apex, rng) for _ in range(n_random)
    ]
    for v in candidates:
        if not lift_cocone_morphism_check(ed, k, v).agree:
            return False, f"booleans disagree for v = {v!r}"

    for p_obj in (FinSet.ordinal(0), FinSet.ordinal(1)):
        for p in all_functions(p_obj, ctx.fa.obj):
            make_triangles(t, p_obj, p, ctx)
    return True, f"{len(ed.objects)} E-objects, {len(candidates)} maps v"


def check_iterate_colimit() -> Tuple[bool, str]:
    for sig, bound in ((Signature.constants(3), 2), (Signature.empty(), 2)):
        verdict = iterate_colimit_check(build_truncation(sig, bound), 1)
        if verdict.status != BIJECTIVE:
            return False, f"{sig.name}: {verdict.status}"
    return True, "constants:3 and empty"


# ------------------------------------------------------------------------------
#   run_selftest
# ------------------------------------------------------------------------------


def run_selftest(
    seed: int = DEFAULT_SEED,
    quick: bool = False,
    verbose: bool = True,
) -> List[CheckResult]:
    """Run all checks and return their results.

    Args:
        quick (:obj:`bool`, optional):
            Restrict the exhaustive recursiveness check to carriers <= 2.

            Default: :obj:`False`
    """
    rng = np.random.default_rng(seed)
    checks: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
        (
            "recursive iff unique solutions",
            lambda: check_decision_vs_uniqueness(2 if quick else 3),
        ),
        ("height regression", check_height),
        ("quicksort", check_quicksort),
        ("initial-algebra chain", check_chain),
        ("colimit vs unfolding", check_oracle_partition),
        ("truncation sizes", check_truncation_sizes),
        ("universal property", lambda: check_universal_fold(rng)),
        ("convergent initial algebra", check_convergent_initial),
        ("E-construction", lambda: check_E_construction(rng)),
        ("iterate colimit", check_iterate_colimit),
    ]

    results: List[CheckResult] = []
    for name, check in checks:
        tick = time.perf_counter()
        try:
            passed, detail = check()
        except Exception as err:  # pylint: disable=broad-except
            passed, detail = False, f"{type(err).__name__}: {err}"
        result = CheckResult(name, passed, detail, time.perf_counter() - tick)
        results.append(result)

        if verbose:
            dprint(
                f"{'PASS' if passed else 'FAIL'}  {name:<32s} {detail}",
                ANSI.GREEN if passed else ANSI.RED,
            )
    return results


def selftest_passed(results: Optional[List[CheckResult]]) -> bool:
    return bool(results) and all(r.passed for r in results)
