#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The initial-algebra chain 0 --> F0 --> FF0 --> ..., built up to a
finite number of steps and analyzed for cross-validation of the colimit
construction.

Every stage W_i carries the coalgebra structure w_(i,i+1): W_i --> F W_i
given by the link to the next stage. The chain converges at the first k
whose link is a bijection, and then W_k is the initial algebra.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from unchained.FinSet_category import (
    Elem,
    FinSet,
    FinFn,
    is_bijective,
    is_injective,
)
from unchained.Signature_functor import (
    FElem,
    Signature,
    apply_fn,
    apply_obj,
    fmap,
)
from unchained.Coalgebra_recursion import (
    Coalgebra,
    initial_from_iso,
    is_recursive,
)
from unchained.Finrec_construction import (
    InitialTruncation,
    Term,
    enumerate_terms,
    term_of,
    unfold_all,
)


@dataclass
class ChainData:
    """Stages W_0, ..., W_steps of the chain.

    Attributes:
        links (:obj:`list` [:class:`FinFn`]):
            w_(i,i+1) = F^i(!): W_i --> W_(i+1), for i < steps.

        decodes (:obj:`list` [:obj:`dict`]):
            Per stage the decoder of W_i = F W_(i-1) into FElems. Empty
            for W_0.

        coalgebras (:obj:`list` [:class:`Coalgebra`]):
            (W_i, w_(i,i+1)) for every stage, the last one included: its
            structure is read off F w_(i-1,i) without building W_(i+1).
    """

    sig: Signature
    stages: List[FinSet]
    links: List[FinFn]
    decodes: List[Mapping[Elem, FElem]]
    coalgebras: List[Coalgebra]

    @property
    def sizes(self) -> List[int]:
        return [len(w) for w in self.stages]


def build_chain(sig: Signature, steps: int, cap: Optional[int] = None) -> ChainData:
    if steps < 0:
        raise ValueError("The number of steps must be a natural number.")

    stages = [FinSet()]
    decodes: List[Mapping[Elem, FElem]] = [{}]
    for _ in range(steps):
        img = apply_obj(sig, stages[-1], cap)
        stages.append(img.obj)
        decodes.append(img.decode)

    links: List[FinFn] = []
    for i in range(steps):
        if i == 0:
            links.append(FinFn(stages[0], stages[1], {}))
        else:
            links.append(apply_fn(sig, links[-1], cap))

    # w_(i,i+1)(x) decodes to F(w_(i-1,i)) applied to the decoding of x
    coalgebras = [Coalgebra(sig, stages[0], {})]
    for i in range(1, steps + 1):
        coalgebras.append(
            Coalgebra(
                sig,
                stages[i],
                {x: fmap(links[i - 1], fe) for x, fe in decodes[i].items()},
            )
        )
    return ChainData(sig, stages, links, decodes, coalgebras)


def stage_terms(cd: ChainData) -> List[Dict[Elem, Term]]:
    """Term of every element of every stage, read off the decoders."""
    out: List[Dict[Elem, Term]] = [{}]
    for i in range(1, len(cd.stages)):
        out.append(
            {x: term_of(fe, out[i - 1]) for x, fe in cd.decodes[i].items()}
        )
    return out


@dataclass
class ChainReport:
    sizes: List[int]
    recursive: List[bool]
    injective: List[bool]
    converged_at: Optional[int] = None
    initial_size: Optional[int] = None
    term_counts_match: List[bool] = field(default_factory=list)
    links_preserve_terms: bool = True
    unfold_matches_terms: bool = True
    in_truncation: Optional[bool] = None
    missing_in_truncation: List[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return (
            all(self.recursive)
            and all(self.injective)
            and all(self.term_counts_match)
            and self.links_preserve_terms
            and self.unfold_matches_terms
            and self.in_truncation is not False
        )

    def to_json(self) -> dict:
        return {
            "sizes": self.sizes,
            "recursive": self.recursive,
            "injective": self.injective,
            "converged_at": self.converged_at,
            "initial_size": self.initial_size,
            "term_counts_match": self.term_counts_match,
            "links_preserve_terms": self.links_preserve_terms,
            "unfold_matches_terms": self.unfold_matches_terms,
            "in_truncation": self.in_truncation,
            "missing_in_truncation": self.missing_in_truncation,
        }


def analyze_chain(
    cd: ChainData,
    truncation: Optional[InitialTruncation] = None,
    cap: Optional[int] = None,
) -> ChainReport:
    """Check every stage coalgebra for recursiveness and every link for
    injectivity, detect convergence, and compare the stage terms with the
    terms of depth < k and, when given, with the classes of a truncation.
    Terms with more distinct subterms than the truncation bound are skipped
    in the latter comparison."""
    report = ChainReport(
        sizes=cd.sizes,
        recursive=[is_recursive(c) for c in cd.coalgebras],
        injective=[is_injective(w) for w in cd.links],
    )

    for k, w in enumerate(cd.links):
        if is_bijective(w):
            report.converged_at = k
            report.initial_size = len(
                initial_from_iso(cd.coalgebras[k], cap).algebra.carrier
            )
            break

    terms = stage_terms(cd)
    for k, stage in enumerate(terms):
        expected = set(enumerate_terms(cd.sig, k, cap))
        report.term_counts_match.append(
            len(stage) == len(expected) and set(stage.values()) == expected
        )

    for i, w in enumerate(cd.links):
        for x, y in zip(w.dom, w.images):
            if terms[i][x] != terms[i + 1][y]:
                report.links_preserve_terms = False

    for i, c in enumerate(cd.coalgebras):
        if report.recursive[i] and unfold_all(c) != terms[i]:
            report.unfold_matches_terms = False

    if truncation is not None:
        known = set(truncation.class_terms().values())
        seen = set()
        for stage in terms:
            for term in stage.values():
                if term.dag_size <= truncation.bound and term not in known:
                    seen.add(term.text)
        report.missing_in_truncation = sorted(seen)
        report.in_truncation = not seen

    return report
