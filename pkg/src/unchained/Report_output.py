#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Rendering of results: DOT graphs of successor graphs and colimit
quotients, plain-text tables, and growth plots of the initial-algebra chain
and of the truncations.

DOT sources are built with `graphviz.Digraph` and returned as text. They
start with the comment line ``// unchained/1``. Node ids are positional
(`n0`, `n1`, ...), element names only appear as labels.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import graphviz

from unchained.BaseConfig import FORMAT_TAG
from unchained.FinSet_category import FinFn
from unchained.FinSet_colimit import ColimitData
from unchained.Signature_functor import encode, felem_args
from unchained.Coalgebra_recursion import Coalgebra, recursion_certificate

# fmt: off
COLOR_OK    = "black"
COLOR_CYCLE = "red"
FONT        = "Helvetica"
# fmt: on


# ------------------------------------------------------------------------------
#   DOT
# ------------------------------------------------------------------------------


def successor_graph_dot(c: Coalgebra, title: str = "coalgebra") -> str:
    """Successor graph of a coalgebra. Nodes are labelled `x ↦ c(x)`, the
    nodes of a cycle are drawn in red."""
    cert = recursion_certificate(c)
    on_cycle = set(cert.cycle)
    ids = {x: f"n{k}" for k, x in enumerate(c.carrier)}

    dot = graphviz.Digraph(name=title, comment=FORMAT_TAG)
    dot.attr(label=f"{title}: {'recursive' if cert.recursive else 'not recursive'}")
    dot.attr("node", shape="box", fontname=FONT)
    for x in c.carrier:
        dot.node(
            ids[x],
            f"{x} ↦ {encode(c(x))}",
            color=COLOR_CYCLE if x in on_cycle else COLOR_OK,
        )
    for x in c.carrier:
        for pos, y in enumerate(felem_args(c(x))):
            dot.edge(ids[x], ids[y], label=str(pos) if not c.sig.is_powerset else "")
    return dot.source


def colimit_dot(cd: ColimitData, title: str = "colimit") -> str:
    """Colimit quotient: one cluster per class of the apex holding the
    tagged elements of all node sets, diagram edges drawn dashed."""
    ids = {tag: f"n{k}" for k, tag in enumerate(cd.coproduct)}

    dot = graphviz.Digraph(name=title, comment=FORMAT_TAG)
    dot.attr(label=f"{title}: {len(cd.apex)} classes", fontname=FONT)
    dot.attr("node", shape="ellipse", fontname=FONT)
    for k, (rep, members) in enumerate(cd.partition.classes().items()):
        with dot.subgraph(name=f"cluster_{k}") as sub:
            sub.attr(label=rep, style="rounded")
            for tag in members:
                sub.node(ids[tag], tag)
    for e in cd.diagram.edges:
        for x, y in zip(e.fn.dom, e.fn.images):
            dot.edge(
                ids[f"{e.src}:{x}"],
                ids[f"{e.dst}:{y}"],
                label=e.id,
                style="dashed",
            )
    return dot.source


# ------------------------------------------------------------------------------
#   Plain text
# ------------------------------------------------------------------------------


def fn_table(h: FinFn, arrow: str = "↦") -> str:
    width = max((len(x) for x in h.dom), default=0)
    return "\n".join(
        f"  {x:<{width}} {arrow} {y}" for x, y in zip(h.dom, h.images)
    )


def rows_table(header: Sequence[str], rows: List[Sequence]) -> str:
    cells = [[str(v) for v in header]] + [[str(v) for v in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = []
    for n, row in enumerate(cells):
        lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


# ------------------------------------------------------------------------------
#   Plots
# ------------------------------------------------------------------------------


def plot_growth(
    path: Union[str, Path],
    chain_sizes: Sequence[int],
    truncation_sizes: Optional[Dict[int, int]] = None,
    title: str = "",
):
    """Save a plot of |W_k| per chain step and, when given, |A_n| per
    bound. Uses the non-interactive Agg backend."""
    # pylint: disable=import-outside-toplevel
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4), dpi=100)
    ax.plot(
        range(len(chain_sizes)),
        [max(s, 0.5) for s in chain_sizes],
        "o-",
        label="|W_k|, chain step k",
    )
    if truncation_sizes:
        bounds = sorted(truncation_sizes)
        ax.plot(
            bounds,
            [max(truncation_sizes[n], 0.5) for n in bounds],
            "s--",
            label="|A_n|, truncation bound n",
        )
    ax.set_yscale("log")
    ax.set_xlabel("k, n")
    ax.set_ylabel("size")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
