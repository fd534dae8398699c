#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Command-line interface.

Usage::

    unchained check-recursive COALG.json
    unchained hylo COALG.json ALG.json
    unchained initial --functor cherry --bound 3 --emit-terms
    unchained chain --functor cherry --steps 4 --plot chain.png
    unchained iterate-check --functor constants:3 --bound 2 --slice 1
    unchained colimit DIAGRAM.json --format dot
    unchained examples quicksort --input 3,1,2
    unchained selftest --seed 0

Common options: ``--functor``, ``--format text|json|dot``, ``--cap`` and
``--seed``. Exit codes: 0 on success, 2 when a categorical property fails
to hold, 3 when the size cap is exceeded, 4 on malformed input and 1 on
anything unexpected.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

import argparse
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Union

from dvg_debug_functions import dprint, ANSI, print_fancy_traceback as pft

from unchained.BaseConfig import DEFAULT_SEED, FORMAT_TAG
from unchained.BaseErrors import ParseError, UnchainedError
from unchained.FinSet_colimit import colimit, verify_filtered_characterization
from unchained.Signature_functor import Signature, encode
from unchained.Coalgebra_recursion import (
    COALG_TO_ALG,
    first_violation,
    hylo,
    recursion_certificate,
)
from unchained.Finrec_construction import (
    INITIAL,
    build_truncation,
    main_theorem_check,
)
from unchained.Initial_algebra_chain import analyze_chain, build_chain
from unchained.Iterate_construction import BIJECTIVE, iterate_colimit_check
from unchained.Json_codec import (
    dumps,
    fn_to_json,
    load_json,
    parse_algebra,
    parse_coalgebra,
    parse_diagram,
    parse_functor,
)
from unchained.Report_output import (
    colimit_dot,
    fn_table,
    plot_growth,
    rows_table,
    successor_graph_dot,
)
from unchained.Selftest_suite import run_selftest, selftest_passed
from unchained import Builtin_examples as bx

# fmt: off
TEXT = "text"
JSON = "json"
DOT  = "dot"
FORMATS = (TEXT, JSON, DOT)

EXIT_OK       = 0
EXIT_VERIFY   = 2
EXIT_UNKNOWN  = 1
# fmt: on


# ------------------------------------------------------------------------------
#   RunConfig
# ------------------------------------------------------------------------------


@dataclass
class RunConfig:
    """Everything one invocation needs.

    Args:
        command (:obj:`str`):
            Name of the subcommand.

        inputs (:obj:`list` [:obj:`str`]):
            Input file paths of the subcommand, or the example name for
            ``examples``.

        bound (:obj:`int`, optional):
            Truncation bound n. For ``chain`` it adds the comparison with
            the truncation at this bound.

        cap (:obj:`int`, optional):
            Size cap, see :func:`~unchained.BaseConfig.get_size_cap`.

        seed (:obj:`int`):
            Seed of the randomized checks. The same seed gives the same
            output, byte for byte.
    """

    command: str
    inputs: List[str] = field(default_factory=list)
    functor: Union[str, dict] = "cherry"
    bound: Optional[int] = None
    slice_bound: int = 1
    steps: int = 4
    cap: Optional[int] = None
    fmt: str = TEXT
    seed: int = DEFAULT_SEED
    emit_terms: bool = False
    plot: Optional[str] = None
    example_input: Optional[str] = None
    quick: bool = False

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ParseError(
                f"Unknown output format `{self.fmt}`.", witness=self.fmt
            )
        if self.cap is not None and self.cap <= 0:
            raise ParseError(
                f"The size cap must be positive, got {self.cap}.",
                witness=self.cap,
            )
        for name in ("bound", "slice_bound", "steps"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ParseError(
                    f"`{name}` must be a natural number, got {value}.",
                    witness=value,
                )

    @property
    def sig(self) -> Signature:
        return parse_functor(self.functor)


def _emit(cfg: RunConfig, text: str, doc: dict, dot: Optional[str] = None):
    if cfg.fmt == JSON:
        print(dumps({"format": FORMAT_TAG, **doc}))
    elif cfg.fmt == DOT:
        if dot is None:
            raise ParseError(
                f"`{cfg.command}` has no DOT output.", witness=cfg.command
            )
        print(dot, end="")
    else:
        print(text)


def _status(cfg: RunConfig, msg: str, ok: bool = True):
    if cfg.fmt == TEXT:
        dprint(msg, ANSI.GREEN if ok else ANSI.RED)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# ------------------------------------------------------------------------------
#   Subcommands
# ------------------------------------------------------------------------------


def cmd_check_recursive(cfg: RunConfig) -> int:
    c = parse_coalgebra(load_json(cfg.inputs[0]))
    cert = recursion_certificate(c)
    if cert.recursive:
        text = "evaluation order: " + " ".join(cert.order)
        doc = {"recursive": True, "order": list(cert.order)}
    else:
        text = "cycle: " + " -> ".join(cert.cycle + cert.cycle[:1])
        doc = {"recursive": False, "cycle": list(cert.cycle)}
    _emit(cfg, text, doc, successor_graph_dot(c))
    _status(
        cfg,
        "recursive" if cert.recursive else "not recursive",
        cert.recursive,
    )
    return EXIT_OK if cert.recursive else EXIT_VERIFY


def cmd_hylo(cfg: RunConfig) -> int:
    c = parse_coalgebra(load_json(cfg.inputs[0]))
    a = parse_algebra(load_json(cfg.inputs[1]), cfg.cap)
    h = hylo(c, a)
    bad = first_violation(COALG_TO_ALG, h, c, a)
    _emit(cfg, fn_table(h), {"h": h.as_dict()}, successor_graph_dot(c))
    _status(
        cfg,
        "h = a∘Fh∘c holds" if bad is None else f"h = a∘Fh∘c fails at {bad}",
        bad is None,
    )
    return EXIT_OK if bad is None else EXIT_VERIFY


def cmd_initial(cfg: RunConfig) -> int:
    bound = 2 if cfg.bound is None else cfg.bound
    verdict = main_theorem_check(cfg.sig, bound, cfg.cap)
    t = verdict.truncation

    lines = [
        f"functor  {t.sig.describe()}",
        f"bound    {bound}",
        f"|A|      {verdict.size}",
        f"|FA|     {len(t.alpha.cod)}",
        f"α        injective: {_yes(verdict.alpha_injective)}, "
        f"surjective: {_yes(verdict.alpha_surjective)}",
    ]
    doc = verdict.to_json()
    if cfg.emit_terms:
        terms = t.class_terms()
        lines.append("terms")
        lines += [f"  {rep}  {terms[rep].text}" for rep in t.a_set]
        doc["terms"] = {rep: terms[rep].text for rep in t.a_set}

    _emit(cfg, "\n".join(lines), doc, colimit_dot(t.colimit.colimit, "A"))
    _status(cfg, f"status: {verdict.status}", verdict.status == INITIAL)
    return EXIT_OK


def cmd_chain(cfg: RunConfig) -> int:
    sig = cfg.sig
    cd = build_chain(sig, cfg.steps, cfg.cap)
    truncation = None
    truncation_sizes = None
    if cfg.bound is not None and cfg.bound > 0:
        truncation = build_truncation(sig, cfg.bound, cap=cfg.cap)
        truncation_sizes = {
            n: len(build_truncation(sig, n, cap=cfg.cap).a_set)
            for n in range(1, cfg.bound + 1)
        }
    report = analyze_chain(cd, truncation, cfg.cap)

    rows = []
    for k, size in enumerate(cd.sizes):
        injective = _yes(report.injective[k]) if k < len(report.injective) else "-"
        rows.append([k, size, _yes(report.recursive[k]), injective])
    lines = [rows_table(["k", "|W_k|", "recursive", "injective"], rows)]
    if report.converged_at is not None:
        lines.append(
            f"converged at k = {report.converged_at}, "
            f"initial algebra of size {report.initial_size}"
        )
    else:
        lines.append("not converged")
    if report.in_truncation is not None:
        lines.append(f"terms in A_{cfg.bound}: {_yes(report.in_truncation)}")

    if cfg.plot:
        plot_growth(cfg.plot, cd.sizes, truncation_sizes, sig.describe())

    _emit(cfg, "\n".join(lines), report.to_json())
    _status(
        cfg,
        "chain checks pass" if report.clean else "chain checks fail",
        report.clean,
    )
    return EXIT_OK if report.clean else EXIT_VERIFY


def cmd_iterate_check(cfg: RunConfig) -> int:
    bound = 2 if cfg.bound is None else cfg.bound
    t = build_truncation(cfg.sig, bound, cap=cfg.cap)
    verdict = iterate_colimit_check(t, cfg.slice_bound, cfg.cap)
    lines = [
        f"|colim E|  {verdict.colimit_size}",
        f"|FA|       {verdict.fa_size}",
        f"E-objects  {verdict.n_objects}",
        f"morphisms  {verdict.n_morphisms}",
        f"uncovered  {len(verdict.missing)}",
        f"merged     {verdict.to_json()['merged']}",
        f"preserves  {verdict.preserves}",
    ]
    _emit(cfg, "\n".join(lines), verdict.to_json())
    _status(cfg, f"comparison map: {verdict.status}", verdict.status == BIJECTIVE)
    return EXIT_OK


def cmd_colimit(cfg: RunConfig) -> int:
    d = parse_diagram(load_json(cfg.inputs[0]))
    cd = colimit(d, cfg.cap)
    filtered = verify_filtered_characterization(d, cd)

    lines = [f"{len(cd.apex)} classes"]
    for rep, members in cd.partition.classes().items():
        lines.append(f"  {rep}: {' '.join(members)}")
    lines.append(
        f"filtered characterization: {'holds' if filtered.clean else 'fails'}"
    )
    doc = {
        "apex": list(cd.apex),
        "classes": cd.partition.classes(),
        "injections": {node: fn_to_json(f) for node, f in cd.injections.items()},
        "filtered": filtered.to_json(),
    }
    _emit(cfg, "\n".join(lines), doc, colimit_dot(cd))
    return EXIT_OK


# ------------------------------------------------------------------------------
#   examples
# ------------------------------------------------------------------------------


def _split_input(raw: str) -> List[str]:
    return [tok.strip() for tok in raw.split(",") if tok.strip()]


def _example_report(cfg: RunConfig, ex: bx.Example, h) -> int:
    c = ex.coalgebra
    lines = [ex.description, "", "coalgebra"]
    lines += [f"  {x} ↦ {encode(c(x))}" for x in c.carrier]
    lines += ["", f"algebra `{ex.algebra.name}` on {len(ex.algebra.carrier)} elements"]
    lines += ["", "h", fn_table(h)]
    _emit(
        cfg,
        "\n".join(lines),
        {"example": ex.name, "h": h.as_dict()},
        successor_graph_dot(c, ex.name),
    )
    return EXIT_OK


def cmd_examples(cfg: RunConfig) -> int:
    name = cfg.inputs[0]
    if name not in bx.EXAMPLES:
        raise ParseError(
            f"Unknown example `{name}`, choose from {sorted(bx.EXAMPLES)}.",
            witness=name,
        )
    if cfg.example_input is None:
        ex = bx.EXAMPLES[name](cap=cfg.cap)
        return _example_report(cfg, ex, hylo(ex.coalgebra, ex.algebra))

    tokens = _split_input(cfg.example_input)
    if name == "quicksort":
        if any(len(tok) != 1 for tok in tokens):
            raise ParseError("Quicksort input must be single characters.", witness=tokens)
        alphabet = "".join(sorted(set(tokens))) or bx.DEFAULT_ALPHABET
        ex = bx.quicksort_example(alphabet, len(tokens), cfg.cap)
        x = bx.list_name(tokens)
        result = ",".join(bx.list_letters(hylo(ex.coalgebra, ex.algebra)(x)))
    elif name == "gcd":
        try:
            a, b = (int(tok) for tok in tokens)
        except ValueError as err:
            raise ParseError("gcd input must be two natural numbers a,b.", witness=tokens) from err
        if a < 0 or b < 0:
            raise ParseError("gcd input must be two natural numbers a,b.", witness=tokens)
        ex = bx.gcd_example(max(a, b), cfg.cap)
        result = hylo(ex.coalgebra, ex.algebra)(bx.pair_name(a, b))
    else:
        ex = bx.EXAMPLES[name](cap=cfg.cap)
        h = hylo(ex.coalgebra, ex.algebra)
        if len(tokens) != 1 or tokens[0] not in ex.coalgebra.carrier:
            raise ParseError(
                f"Input must be one element of {list(ex.coalgebra.carrier)}.",
                witness=tokens,
            )
        result = h(tokens[0])

    _emit(cfg, result, {"example": name, "input": tokens, "result": result})
    return EXIT_OK


def cmd_selftest(cfg: RunConfig) -> int:
    results = run_selftest(cfg.seed, cfg.quick, verbose=cfg.fmt == TEXT)
    passed = selftest_passed(results)
    doc = {
        "passed": passed,
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
    }
    if cfg.fmt == JSON:
        _emit(cfg, "", doc)
    elif cfg.fmt == DOT:
        raise ParseError("`selftest` has no DOT output.", witness=cfg.command)
    else:
        n_failed = sum(not r.passed for r in results)
        _status(cfg, f"{len(results) - n_failed} passed, {n_failed} failed", passed)
    return EXIT_OK if passed else EXIT_VERIFY


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    "check-recursive": cmd_check_recursive,
    "hylo": cmd_hylo,
    "initial": cmd_initial,
    "chain": cmd_chain,
    "iterate-check": cmd_iterate_check,
    "colimit": cmd_colimit,
    "examples": cmd_examples,
    "selftest": cmd_selftest,
}


# ------------------------------------------------------------------------------
#   run
# ------------------------------------------------------------------------------


def run(cfg: RunConfig) -> int:
    """Execute one subcommand and return its exit code. Errors of the
    package are reported, not raised."""
    try:
        return COMMANDS[cfg.command](cfg)
    except UnchainedError as err:
        if cfg.fmt == JSON:
            print(dumps(err.to_json()))
        else:
            dprint(f"{type(err).__name__}: {err.message}", ANSI.RED)
        return err.exit_code
    except Exception as err:  # pylint: disable=broad-except
        pft(err)
        return EXIT_UNKNOWN


# ------------------------------------------------------------------------------
#   Argument parsing
# ------------------------------------------------------------------------------


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message, witness=self.prog)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--functor", default="cherry", help="functor JSON file or shorthand")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default=TEXT)
    common.add_argument("--cap", type=int, default=None, help="size cap on enumerations")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = _ArgumentParser(
        prog="unchained",
        description="Recursive coalgebras and initial algebras of finitary set functors.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("check-recursive", parents=[common], help="decide recursiveness")
    p.add_argument("inputs", nargs=1, metavar="COALG")

    p = sub.add_parser("hylo", parents=[common], help="evaluate the hylomorphism")
    p.add_argument("inputs", nargs=2, metavar=("COALG", "ALG"))

    p = sub.add_parser("initial", parents=[common], help="truncation of the initial algebra")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--emit-terms", action="store_true")

    p = sub.add_parser("chain", parents=[common], help="initial-algebra chain")
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--bound", type=int, default=None, help="compare with A_n")
    p.add_argument("--plot", default=None, metavar="FILE")

    p = sub.add_parser("iterate-check", parents=[common], help="colimit of the E-diagram vs FA")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--slice", dest="slice_bound", type=int, default=1)

    p = sub.add_parser("colimit", parents=[common], help="colimit of a diagram of finite sets")
    p.add_argument("inputs", nargs=1, metavar="DIAGRAM")

    p = sub.add_parser("examples", parents=[common], help="built-in examples")
    p.add_argument("inputs", nargs=1, metavar="NAME", choices=sorted(bx.EXAMPLES))
    p.add_argument("--input", dest="example_input", default=None)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    p.add_argument("--quick", action="store_true")

    return parser


def parse_args(argv: Optional[List[str]] = None) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    if args["functor"].endswith(".json"):
        args["functor"] = load_json(args["functor"])
    return RunConfig(**args)


def _wants_json(argv: List[str]) -> bool:
    """Whether the raw arguments ask for JSON output, for errors raised
    before a :class:`RunConfig` exists."""
    for k, arg in enumerate(argv):
        if arg == f"--format={JSON}":
            return True
        if arg == "--format" and argv[k + 1 : k + 2] == [JSON]:
            return True
    return False


def main(argv: Optional[List[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        cfg = parse_args(argv)
    except UnchainedError as err:
        if _wants_json(argv):
            print(dumps(err.to_json()))
        else:
            dprint(f"{type(err).__name__}: {err.message}", ANSI.RED)
        return err.exit_code
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
