#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Colimits of finite diagrams of finite sets.

The colimit of a diagram is computed the way it is characterized in Set:
the disjoint union of all node sets, quotiented by x ~ Df(x) for every edge
f. On top of that this module offers

    * the universal property (:func:`mediate`),
    * a checker for the characterization of filtered colimits in Set
      (:func:`verify_filtered_characterization`),
    * hom-factorization through a colimit injection and the merging of two
      such factorizations further along the diagram (:func:`factor_through`,
      :func:`merge`),
    * a test whether a functor preserves a given colimit
      (:func:`preserves_colimit_check`),
    * the canonical diagram of a finite set over the canonical ordinals
      (:func:`canonical_slice_diagram`).

Filteredness is never assumed. Every search runs breadth-first over paths of
edges with a path-length cap, defaulting to the number of edges.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Tuple,
)

import numpy as np

from unchained.BaseConfig import check_size, DEFAULT_SEED
from unchained.BaseErrors import (
    DomainMismatch,
    NoFactorization,
    NoMerge,
    NotACocone,
)
from unchained.FinSet_category import (
    Elem,
    FinSet,
    FinFn,
    Partition,
    all_functions,
    compose,
    is_bijective,
    quotient,
)
from unchained.Signature_functor import Signature, apply_fn, apply_obj

NodeId = str


class Edge(NamedTuple):
    id: str
    src: NodeId
    dst: NodeId
    fn: FinFn


def tag_node(node: NodeId, x: Elem) -> Elem:
    """Name of element `x` of node `node` inside the coproduct of all
    node sets."""
    return f"{node}:{x}"


# ------------------------------------------------------------------------------
#   Diagram
# ------------------------------------------------------------------------------


class Diagram:
    """Finite diagram of finite sets over a directed multigraph. Colimits
    over the free category on the graph coincide with colimits over the
    graph, so no composites or identities need to be listed.

    Args:
        nodes (:obj:`Mapping` [:obj:`str`, :class:`FinSet`]):
            Node sets by node id. Node ids must not contain a colon.

        edges (:obj:`Iterable` [:class:`Edge`]):
            Edge functions between node sets.
    """

    def __init__(self, nodes: Mapping[NodeId, FinSet], edges: Iterable[Edge] = ()):
        self.nodes: Dict[NodeId, FinSet] = dict(nodes)
        self.edges: List[Edge] = list(edges)

        for node in self.nodes:
            if ":" in node:
                raise ValueError(f"Node id `{node}` must not contain ':'.")

        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise ValueError("Edge ids must be unique.")

        for e in self.edges:
            if e.src not in self.nodes or e.dst not in self.nodes:
                raise DomainMismatch(
                    f"Edge `{e.id}` connects unknown nodes.", witness=e.id
                )
            if e.fn.dom != self.nodes[e.src] or e.fn.cod != self.nodes[e.dst]:
                raise DomainMismatch(
                    f"Edge `{e.id}` does not fit its node sets.", witness=e.id
                )

        self._out: Dict[NodeId, List[Edge]] = {node: [] for node in self.nodes}
        for e in self.edges:
            self._out[e.src].append(e)

    def out_edges(self, node: NodeId) -> List[Edge]:
        return self._out[node]

    def total_size(self) -> int:
        return sum(len(x) for x in self.nodes.values())

    def __repr__(self) -> str:
        return f"Diagram({len(self.nodes)} nodes, {len(self.edges)} edges)"


@dataclass
class Cocone:
    apex: FinSet
    legs: Dict[NodeId, FinFn]


@dataclass
class ColimitData:
    """Colimit of a :class:`Diagram`.

    Attributes:
        apex (:class:`FinSet`):
            Set of class representatives of the coproduct of all node sets.

        injections (:obj:`dict` [:obj:`str`, :class:`FinFn`]):
            Colimit injections c_i, one per node.

        partition (:class:`Partition`):
            The quotient partition on :attr:`coproduct`.
    """

    diagram: Diagram
    apex: FinSet
    injections: Dict[NodeId, FinFn]
    partition: Partition
    coproduct: FinSet
    untag: Dict[Elem, Tuple[NodeId, Elem]] = field(repr=False)

    def cocone(self) -> Cocone:
        return Cocone(self.apex, dict(self.injections))

    def class_members(self, node: NodeId) -> Dict[Elem, List[Elem]]:
        """Elements of node `node` grouped by their colimit class."""
        out: Dict[Elem, List[Elem]] = {}
        inj = self.injections[node]
        for x, r in zip(inj.dom, inj.images):
            out.setdefault(r, []).append(x)
        return out


# ------------------------------------------------------------------------------
#   colimit
# ------------------------------------------------------------------------------


def colimit(d: Diagram, cap: Optional[int] = None) -> ColimitData:
    check_size("colimit of the node sets", d.total_size(), cap)

    untag = {
        tag_node(node, x): (node, x)
        for node, xs in d.nodes.items()
        for x in xs
    }
    base = FinSet(tuple(untag))
    pairs = [
        (tag_node(e.src, x), tag_node(e.dst, y))
        for e in d.edges
        for x, y in zip(e.fn.dom, e.fn.images)
    ]
    partition, proj = quotient(base, pairs)

    injections = {
        node: FinFn(xs, proj.cod, {x: proj(tag_node(node, x)) for x in xs})
        for node, xs in d.nodes.items()
    }
    return ColimitData(d, proj.cod, injections, partition, base, untag)


# ------------------------------------------------------------------------------
#   mediate
# ------------------------------------------------------------------------------


def check_cocone(d: Diagram, k: Cocone):
    """Raise :class:`~unchained.BaseErrors.NotACocone` unless the legs of `k`
    commute with every edge of `d`."""
    if set(k.legs) != set(d.nodes):
        raise NotACocone(
            "Cocone legs do not match the diagram nodes.",
            witness={"missing": sorted(set(d.nodes) - set(k.legs))},
        )
    for node, leg in k.legs.items():
        if leg.dom != d.nodes[node] or leg.cod != k.apex:
            raise NotACocone(
                f"Leg at `{node}` does not fit node set and apex.",
                witness=node,
            )
    for e in d.edges:
        leg_src = k.legs[e.src]
        leg_dst = k.legs[e.dst]
        for x, y in zip(e.fn.dom, e.fn.images):
            if leg_dst(y) != leg_src(x):
                raise NotACocone(
                    f"Legs fail the edge equation of `{e.id}` at `{x}`.",
                    witness={"edge": e.id, "element": x},
                )


def mediate(c: ColimitData, k: Cocone) -> FinFn:
    """The unique v: apex --> apex(k) with v∘c_i = k_i for all nodes i."""
    check_cocone(c.diagram, k)
    mapping = {}
    for r in c.apex:
        node, x = c.untag[r]
        mapping[r] = k.legs[node](x)
    return FinFn(c.apex, k.apex, mapping)


# ------------------------------------------------------------------------------
#   Edge-path search
# ------------------------------------------------------------------------------


class PathHit(NamedTuple):
    node: NodeId
    path: Tuple[str, ...]
    composite: FinFn


def search_path(
    d: Diagram,
    start: NodeId,
    accept: Callable[[NodeId, Dict[Elem, Elem]], bool],
    max_len: Optional[int] = None,
) -> Optional[PathHit]:
    """Breadth-first search over edge paths leaving `start` for the shortest
    one whose composite Dh: D(start) --> D(j) satisfies `accept(j, Dh)`. The
    empty path (identity) is tried first. Edges are tried in diagram order,
    so the result is deterministic.
    """
    if max_len is None:
        max_len = len(d.edges)

    dom = d.nodes[start]
    identity_images = tuple(dom.elems)
    queue = deque([(start, identity_images, ())])
    seen = {(start, identity_images)}

    while queue:
        node, images, path = queue.popleft()
        current = dict(zip(dom.elems, images))
        if accept(node, current):
            return PathHit(
                node, path, FinFn.from_images(dom, d.nodes[node], images)
            )
        if len(path) >= max_len:
            continue
        for e in d.out_edges(node):
            fn = e.fn.as_dict()
            nxt = tuple(fn[y] for y in images)
            if (e.dst, nxt) in seen:
                continue
            seen.add((e.dst, nxt))
            queue.append((e.dst, nxt, path + (e.id,)))

    return None


# ------------------------------------------------------------------------------
#   verify_filtered_characterization
# ------------------------------------------------------------------------------


@dataclass
class FilteredReport:
    """Outcome of checking the two conditions characterizing filtered
    colimits in Set: (1) joint surjectivity of the injections, (2) elements
    identified by one injection are already merged by some edge path."""

    jointly_surjective: bool
    unreached: List[Elem] = field(default_factory=list)
    witnesses: List[dict] = field(default_factory=list)
    counterexamples: List[dict] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return self.jointly_surjective and not self.counterexamples

    def to_json(self) -> dict:
        return {
            "jointly_surjective": self.jointly_surjective,
            "unreached": self.unreached,
            "witnesses": self.witnesses,
            "counterexamples": self.counterexamples,
            "clean": self.clean,
        }


def verify_filtered_characterization(
    d: Diagram, c: ColimitData, max_len: Optional[int] = None
) -> FilteredReport:
    hit = set()
    for inj in c.injections.values():
        hit.update(inj.images)
    unreached = [r for r in c.apex if r not in hit]
    report = FilteredReport(jointly_surjective=not unreached, unreached=unreached)

    for node, xs in d.nodes.items():
        for members in c.class_members(node).values():
            for idx, x1 in enumerate(members):
                for x2 in members[idx + 1 :]:
                    hit_ = search_path(
                        d,
                        node,
                        lambda _j, h, a=x1, b=x2: h[a] == h[b],
                        max_len,
                    )
                    entry = {"node": node, "x1": x1, "x2": x2}
                    if hit_ is None:
                        report.counterexamples.append(entry)
                    else:
                        entry.update({"target": hit_.node, "path": list(hit_.path)})
                        report.witnesses.append(entry)
    return report


# ------------------------------------------------------------------------------
#   factor_through / merge
# ------------------------------------------------------------------------------


class Factorization(NamedTuple):
    node: NodeId
    fn: FinFn


def _check_into_apex(c: ColimitData, f: FinFn):
    if f.cod != c.apex:
        raise DomainMismatch("The function must land in the colimit apex.")


def factor_through(
    d: Diagram,
    c: ColimitData,
    f: FinFn,
    prefer: Optional[NodeId] = None,
) -> Factorization:
    """Find a node i and f': B --> D_i with c_i∘f' = f. Nodes are tried in
    diagram order, `prefer` first when given. Per element the least member
    of the required class is chosen.

    Raises:
        :class:`~unchained.BaseErrors.NoFactorization`
    """
    _check_into_apex(c, f)
    order = list(d.nodes)
    if prefer is not None:
        order.remove(prefer)
        order.insert(0, prefer)

    for node in order:
        members = c.class_members(node)
        if all(r in members for r in f.images):
            return Factorization(
                node,
                FinFn.from_images(
                    f.dom, d.nodes[node], [members[r][0] for r in f.images]
                ),
            )

    missing = sorted(set(f.images))
    raise NoFactorization(
        "No node of the diagram holds representatives of all required "
        "classes.",
        witness={"classes": missing},
    )


def factorizations(
    d: Diagram,
    c: ColimitData,
    f: FinFn,
    nodes: Optional[Iterable[NodeId]] = None,
    cap: Optional[int] = None,
) -> Iterator[Factorization]:
    """Every pair (i, f') with c_i∘f' = f, found by exhaustive search over
    the nodes and the candidate functions per node."""
    _check_into_apex(c, f)
    for node in d.nodes if nodes is None else nodes:
        members = c.class_members(node)
        candidates = [members.get(r, []) for r in f.images]
        if not all(candidates):
            continue
        check_size(
            f"factorizations through `{node}`",
            int(np.prod([len(cs) for cs in candidates], dtype=np.float64)),
            cap,
        )
        for images in product(*candidates):
            yield Factorization(
                node, FinFn.from_images(f.dom, d.nodes[node], images)
            )


class MergeHit(NamedTuple):
    """Edge path h: i --> j with its composite `step` = Dh, and `fn` =
    Dh∘f' = Dh∘f''."""

    node: NodeId
    path: Tuple[str, ...]
    fn: FinFn
    step: FinFn


def merge(
    d: Diagram,
    c: ColimitData,
    node: NodeId,
    f1: FinFn,
    f2: FinFn,
    max_len: Optional[int] = None,
) -> MergeHit:
    """Given f', f'': B --> D_i with c_i∘f' = c_i∘f'', find an edge path
    h: i --> j with Dh∘f' = Dh∘f''. Returns j, the path, the merged
    function Dh∘f' and Dh itself.

    Raises:
        :class:`~unchained.BaseErrors.NoMerge`
    """
    inj = c.injections[node]
    if compose(inj, f1) != compose(inj, f2):
        raise DomainMismatch(
            "merge: the two functions are not identified by the injection."
        )
    pairs = list(zip(f1.images, f2.images))
    hit = search_path(
        d, node, lambda _j, h: all(h[a] == h[b] for a, b in pairs), max_len
    )
    if hit is None:
        raise NoMerge(
            f"No edge path from `{node}` merges the two functions.",
            witness={"node": node},
        )
    return MergeHit(
        hit.node, hit.path, compose(hit.composite, f1), hit.composite
    )


# ------------------------------------------------------------------------------
#   preserves_colimit_check
# ------------------------------------------------------------------------------


def image_diagram(sig: Signature, d: Diagram, cap: Optional[int] = None) -> Diagram:
    """The diagram F∘D."""
    return Diagram(
        {node: apply_obj(sig, xs, cap).obj for node, xs in d.nodes.items()},
        [Edge(e.id, e.src, e.dst, apply_fn(sig, e.fn, cap)) for e in d.edges],
    )


def comparison_map(
    sig: Signature, d: Diagram, c: ColimitData, cap: Optional[int] = None
) -> FinFn:
    """The canonical map colim(F∘D) --> F(colim D)."""
    fd = image_diagram(sig, d, cap)
    fc = colimit(fd, cap)
    legs = {node: apply_fn(sig, inj, cap) for node, inj in c.injections.items()}
    return mediate(fc, Cocone(apply_obj(sig, c.apex, cap).obj, legs))


def preserves_colimit_check(
    sig: Signature, d: Diagram, c: ColimitData, cap: Optional[int] = None
) -> bool:
    """True iff (F c_i)_i is a colimit cocone of F∘D."""
    return is_bijective(comparison_map(sig, d, c, cap))


# ------------------------------------------------------------------------------
#   canonical_slice_diagram
# ------------------------------------------------------------------------------


@dataclass
class SliceDiagram:
    """Diagram of the slice of canonical ordinals over a finite set x,
    together with its canonical cocone into x.

    Attributes:
        objects (:obj:`dict` [:obj:`str`, :class:`FinFn`]):
            The morphism p: P --> x of every object (P, p), by node id.

        is_colimit (:obj:`bool`):
            Whether the canonical cocone is a colimit cocone.
    """

    diagram: Diagram
    cocone: Cocone
    objects: Dict[NodeId, FinFn]
    is_colimit: bool


def slice_object(x: FinSet, index: int) -> FinFn:
    """The `index`-th object p: {0, ..., k-1} --> x of the canonical slice,
    counting block by block in k and within a block in the order of
    :func:`~unchained.FinSet_category.all_functions`."""
    n = len(x)
    k = 0
    while index >= n**k:
        index -= n**k
        k += 1
    images = []
    for _ in range(k):
        index, r = divmod(index, n)
        images.append(x.elems[r])
    return FinFn.from_images(FinSet.ordinal(k), x, images[::-1])


def canonical_slice_diagram(
    x: FinSet,
    bound: int,
    sample: Optional[int] = None,
    seed: int = DEFAULT_SEED,
    cap: Optional[int] = None,
) -> SliceDiagram:
    """Objects are pairs (P, p) with P = {0, ..., k-1}, k <= `bound`, and
    p: P --> x. Morphisms are all commuting triangles g: P --> Q with
    q∘g = p.

    Args:
        sample (:obj:`int`, optional):
            Keep only this many objects, drawn with a seeded numpy generator.
            The slice is large, so this is the way to go for larger `x`.

            Default: :obj:`None`, i.e. keep all objects.
    """
    if bound < 1:
        raise ValueError("The slice bound must be at least 1.")

    n_objects = sum(len(x) ** k for k in range(bound + 1))
    if sample is None or sample >= n_objects:
        check_size("objects of the canonical slice", n_objects, cap)
        indices = range(n_objects)
    else:
        check_size("sampled objects of the canonical slice", sample, cap)
        rng = np.random.default_rng(seed)
        indices = np.sort(rng.choice(n_objects, size=sample, replace=False))
    objects = [slice_object(x, int(idx)) for idx in indices]

    ids = [f"S{idx}" for idx in range(len(objects))]
    n_candidates = sum(len(q.dom) ** len(p.dom) for p in objects for q in objects)
    check_size("candidate morphisms of the canonical slice", n_candidates, cap)

    edges = []
    for (id_p, p), (id_q, q) in product(zip(ids, objects), repeat=2):
        for g in all_functions(p.dom, q.dom):
            if compose(q, g) == p:
                edges.append(Edge(f"{id_p}>{id_q}#{len(edges)}", id_p, id_q, g))

    d = Diagram({i: p.dom for i, p in zip(ids, objects)}, edges)
    cocone = Cocone(x, dict(zip(ids, objects)))
    v = mediate(colimit(d, cap), cocone)
    return SliceDiagram(d, cocone, dict(zip(ids, objects)), is_bijective(v))
