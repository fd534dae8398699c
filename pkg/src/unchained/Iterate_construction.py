#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""The iterate (FA, Fα) of a truncation as a colimit of finite recursive
coalgebras.

Every morphism p: P --> FA out of a canonical ordinal P factors as
p = Fπ_i∘p' through the F-image of some diagram object X_i. Such a
*triangle* t = (P, p, i, p') generates the recursive coalgebra E(t) on
P + X_i with structure F inr∘[p', x_i], and inj_t = [p, α∘π_i] is a
coalgebra morphism E(t) --> (FA, Fα). The E-objects and all coalgebra
morphisms between them over (FA, Fα) form the E-diagram, whose colimit is
compared with FA by :func:`iterate_colimit_check`.

Coproducts P + X_i use the tagged names of
:func:`~unchained.FinSet_category.coproduct`: `L:<q>` for q in P and
`R:<x>` for x in X_i.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, NamedTuple, Optional, Set, Tuple

from unchained.BaseConfig import check_size
from unchained.BaseErrors import (
    DomainMismatch,
    IndependenceFailed,
    MorphismFailed,
    NoMerge,
    NoTriangle,
    NotACocone,
    RecursivenessFailed,
)
from unchained.FinSet_category import (
    Elem,
    FinSet,
    FinFn,
    Coproduct,
    all_functions,
    codiagonal,
    compose,
    coproduct,
    copair,
    identity,
    is_injective,
    is_surjective,
    sum_of_functions,
    try_inverse,
)
from unchained.FinSet_colimit import (
    Cocone,
    ColimitData,
    Diagram,
    Edge,
    check_cocone,
    colimit,
    image_diagram,
    mediate,
    merge,
    preserves_colimit_check,
)
from unchained.Signature_functor import apply_fn, apply_obj
from unchained.Coalgebra_recursion import (
    COALG,
    Coalgebra,
    coalgebra_morphisms,
    first_violation,
    is_recursive,
    iterate,
)
from unchained.Finrec_construction import InitialTruncation, terminal_morphism

# Statuses of `iterate_colimit_check`
BIJECTIVE = "bijective"
INJECTIVE = "injective"
SURJECTIVE = "surjective"
MISMATCH = "mismatch"


class Triangle(NamedTuple):
    """(P, p, i, p') with Fπ_i∘p' = p."""

    p_obj: FinSet
    p: FinFn
    node: str
    p_prime: FinFn


# ------------------------------------------------------------------------------
#   IterateContext
# ------------------------------------------------------------------------------


class IterateContext:
    """Data of a truncation that every step of the construction needs:
    (FA, Fα), the maps Fπ_i and α∘π_i.

    Args:
        t (:class:`~unchained.Finrec_construction.InitialTruncation`):
            The truncation (A_n, α_n).
    """

    def __init__(self, t: InitialTruncation, cap: Optional[int] = None):
        self.t = t
        self.cap = cap
        self.sig = t.sig
        self.fa = apply_obj(t.sig, t.a_set, cap)
        self.fa_coalgebra = iterate(t.coalgebra, cap)
        self.f_inj = {
            node: apply_fn(t.sig, pi, cap) for node, pi in t.injections.items()
        }
        self.alpha_pi = {
            node: compose(t.alpha, pi) for node, pi in t.injections.items()
        }
        self.structures = {
            node: c.structure_fn(cap) for node, c in t.diagram.objects.items()
        }

        # Preimages under Fπ_i, per node
        self._preimage: Dict[str, Dict[Elem, List[Elem]]] = {}
        for node, f in self.f_inj.items():
            pre: Dict[Elem, List[Elem]] = {}
            for x, y in zip(f.dom, f.images):
                pre.setdefault(y, []).append(x)
            self._preimage[node] = pre

        self._image_colimit: Optional[Tuple[Diagram, ColimitData]] = None

    def preimage(self, node: str, y: Elem) -> List[Elem]:
        return self._preimage[node].get(y, [])

    def image_colimit(self) -> Tuple[Diagram, ColimitData]:
        """F applied to the carrier diagram, and its colimit. Built on first
        use."""
        if self._image_colimit is None:
            fd = image_diagram(self.sig, self.t.colimit.colimit.diagram, self.cap)
            self._image_colimit = (fd, colimit(fd, self.cap))
        return self._image_colimit


def _context(t, ctx: Optional[IterateContext], cap) -> IterateContext:
    return ctx if ctx is not None else IterateContext(t, cap)


# ------------------------------------------------------------------------------
#   make_triangles
# ------------------------------------------------------------------------------


def make_triangles(
    t: InitialTruncation,
    p_obj: FinSet,
    p: FinFn,
    ctx: Optional[IterateContext] = None,
    cap: Optional[int] = None,
) -> List[Triangle]:
    """All triangles over p: P --> FA, node by node, by exhaustive search
    over the Fπ_i-preimages of the images of p.

    Raises:
        :class:`~unchained.BaseErrors.NoTriangle`:
            The truncation is too small to factor `p`.
    """
    ctx = _context(t, ctx, cap)
    if p.dom != p_obj or p.cod != ctx.fa.obj:
        raise DomainMismatch("p must be a function P --> FA.")

    out: List[Triangle] = []
    covered: Set[Elem] = set()
    for node in t.diagram.objects:
        candidates = [ctx.preimage(node, p(q)) for q in p_obj]
        covered.update(q for q, cs in zip(p_obj, candidates) if cs)
        if not all(candidates):
            continue
        n_combos = 1
        for cs in candidates:
            n_combos *= len(cs)
        check_size(f"triangles at node `{node}`", n_combos, cap)

        cod = ctx.f_inj[node].dom
        for images in product(*candidates):
            out.append(
                Triangle(p_obj, p, node, FinFn.from_images(p_obj, cod, images))
            )

    if not out:
        uncovered = [q for q in p_obj if q not in covered]
        raise NoTriangle(
            "No diagram object factors p.",
            witness={"elements": uncovered or list(p_obj), "p": p.as_dict()},
        )
    return out


def merge_report(
    t: InitialTruncation,
    triangles: List[Triangle],
    cap: Optional[int] = None,
    ctx: Optional[IterateContext] = None,
) -> List[dict]:
    """Try to merge every two triangles over the same p and node further
    along the F-image of the carrier diagram. Each entry has an `outcome`
    of ``merged``, ``not_identified`` or ``no_merge``."""
    report = []
    for k, t1 in enumerate(triangles):
        for t2 in triangles[k + 1 :]:
            if t1.node != t2.node or t1.p != t2.p or t1.p_prime == t2.p_prime:
                continue
            ctx = _context(t, ctx, cap)
            fd, fc = ctx.image_colimit()
            entry = {
                "node": t1.node,
                "p": t1.p.as_dict(),
                "p1": t1.p_prime.as_dict(),
                "p2": t2.p_prime.as_dict(),
            }
            try:
                hit = merge(fd, fc, t1.node, t1.p_prime, t2.p_prime)
                entry.update(
                    {"outcome": "merged", "target": hit.node, "path": list(hit.path)}
                )
            except DomainMismatch:
                entry["outcome"] = "not_identified"
            except NoMerge:
                entry["outcome"] = "no_merge"
            report.append(entry)
    return report


def preserves_truncation(t: InitialTruncation, cap: Optional[int] = None) -> bool:
    """Whether F preserves the carrier colimit of the truncation."""
    cd = t.colimit.colimit
    return preserves_colimit_check(t.sig, cd.diagram, cd, cap)


# ------------------------------------------------------------------------------
#   build_E_object
# ------------------------------------------------------------------------------


@dataclass
class EObject:
    """E(t) on P + X_i with inj_t: P + X_i --> FA."""

    triangle: Triangle
    coalg: Coalgebra
    inj: FinFn
    cop: Coproduct = field(repr=False)


def build_E_object(
    t: InitialTruncation,
    tr: Triangle,
    ctx: Optional[IterateContext] = None,
    cap: Optional[int] = None,
) -> EObject:
    """Raises :class:`~unchained.BaseErrors.RecursivenessFailed` or
    :class:`~unchained.BaseErrors.MorphismFailed`, both of which signal an
    implementation error."""
    ctx = _context(t, ctx, cap)
    x_i = t.diagram.objects[tr.node]
    cop = coproduct(tr.p_obj, x_i.carrier)
    check_size("F applied to P + X_i", t.sig.size_of_image(len(cop.apex)), cap)

    f_cop = apply_obj(t.sig, cop.apex, cap)
    f_inr = apply_fn(t.sig, cop.inr, cap)
    structure = compose(f_inr, copair(tr.p_prime, ctx.structures[tr.node], cop))
    coalg = Coalgebra(
        t.sig, cop.apex, {z: f_cop.decode[structure(z)] for z in cop.apex}
    )
    inj = copair(tr.p, ctx.alpha_pi[tr.node], cop)

    if not is_recursive(coalg):
        raise RecursivenessFailed(
            "The generated coalgebra is not recursive.",
            witness={"node": tr.node, "p": tr.p.as_dict()},
        )
    bad = first_violation(COALG, inj, coalg, ctx.fa_coalgebra)
    if bad is not None:
        raise MorphismFailed(
            "inj_t is not a coalgebra morphism into (FA, Fα).",
            witness={"node": tr.node, "element": bad},
        )
    return EObject(tr, coalg, inj, cop)


def s_triangle(ctx: IterateContext, node: str) -> Triangle:
    """The triangle (X_i, α∘π_i, i, x_i)."""
    x_fn = ctx.structures[node]
    return Triangle(x_fn.dom, ctx.alpha_pi[node], node, x_fn)


# ------------------------------------------------------------------------------
#   enumerate_E
# ------------------------------------------------------------------------------


SliceObject = Tuple[FinSet, FinFn]


@dataclass
class EDiagram:
    """Finite part of the E-diagram.

    Attributes:
        slice (:obj:`list` [(:class:`FinSet`, :class:`FinFn`)]):
            The objects (P, p) the E-objects were generated from.

        slice_of (:obj:`dict` [:obj:`str`, :obj:`int` | :obj:`None`]):
            Index into :attr:`slice` per E-object, :obj:`None` for inserted
            objects (X_i, α∘π_i, i, x_i).

        s_objects (:obj:`dict` [:obj:`str`, :obj:`str`]):
            E-object id of the inserted object per diagram node.

        missing (:obj:`list` [:obj:`dict`]):
            Slice objects without any triangle.

        lifted (:obj:`list` [:obj:`dict`]):
            Outcome of every lifted-morphism check.

        merges (:obj:`list` [:obj:`dict`]):
            Outcome of merging every two triangles over the same slice
            object and node, see :func:`merge_report`.
    """

    ctx: IterateContext = field(repr=False)
    slice: List[SliceObject]
    objects: Dict[str, EObject]
    slice_of: Dict[str, Optional[int]]
    s_objects: Dict[str, str]
    morphisms: List[Edge]
    missing: List[dict] = field(default_factory=list)
    lifted: List[dict] = field(default_factory=list)
    merges: List[dict] = field(default_factory=list)

    def carriers(self) -> Diagram:
        return Diagram(
            {eid: e.coalg.carrier for eid, e in self.objects.items()},
            self.morphisms,
        )

    def inj_cocone(self) -> Cocone:
        return Cocone(
            self.ctx.fa.obj, {eid: e.inj for eid, e in self.objects.items()}
        )

    @property
    def lifted_ok(self) -> bool:
        return all(entry["ok"] for entry in self.lifted)


def _triangle_key(slice_idx, tr: Triangle):
    return (slice_idx, tr.node, tr.p_prime.images)


def enumerate_E(
    t: InitialTruncation,
    slice_objs: List[SliceObject],
    with_s_objects: bool = False,
    ctx: Optional[IterateContext] = None,
    cap: Optional[int] = None,
) -> EDiagram:
    """E-objects over the given slice objects and all coalgebra morphisms
    h: E(t1) --> E(t2) with inj_t2∘h = inj_t1. Also checks that every
    diagram edge f: i --> j lifts to id_P + Df and every slice morphism
    g: (P, p) --> (Q, q) lifts to g + id_X_i."""
    ctx = _context(t, ctx, cap)

    objects: Dict[str, EObject] = {}
    slice_of: Dict[str, Optional[int]] = {}
    by_key: Dict[tuple, str] = {}
    missing: List[dict] = []
    merges: List[dict] = []

    def add(slice_idx, tr: Triangle) -> str:
        eid = f"E{len(objects)}"
        objects[eid] = build_E_object(t, tr, ctx, cap)
        slice_of[eid] = slice_idx
        by_key[_triangle_key(slice_idx, tr)] = eid
        check_size("objects of the E-diagram", len(objects), cap)
        return eid

    for idx, (p_obj, p) in enumerate(slice_objs):
        try:
            triangles = make_triangles(t, p_obj, p, ctx, cap)
        except NoTriangle as err:
            missing.append({"slice": idx, "witness": err.witness})
            continue
        for tr in triangles:
            add(idx, tr)
        merges.extend(
            {"slice": idx, **entry}
            for entry in merge_report(t, triangles, cap, ctx)
        )

    s_objects: Dict[str, str] = {}
    if with_s_objects:
        for node in t.diagram.objects:
            s_objects[node] = add(None, s_triangle(ctx, node))

    morphisms: List[Edge] = []
    hom: Dict[Tuple[str, str], Set[FinFn]] = {}
    for id1, e1 in objects.items():
        for id2, e2 in objects.items():
            allowed = {
                z: [w for w in e2.coalg.carrier if e2.inj(w) == e1.inj(z)]
                for z in e1.coalg.carrier
            }
            found = set()
            for h in coalgebra_morphisms(e1.coalg, e2.coalg, allowed=allowed):
                found.add(h)
                morphisms.append(Edge(f"{id1}>{id2}#{len(found) - 1}", id1, id2, h))
            hom[(id1, id2)] = found
            check_size("morphisms of the E-diagram", len(morphisms), cap)

    ed = EDiagram(ctx, list(slice_objs), objects, slice_of, s_objects, morphisms, missing)
    ed.merges = merges
    ed.lifted = _lifted_checks(ed, by_key, hom)
    return ed


def _lifted_checks(ed: EDiagram, by_key, hom) -> List[dict]:
    t = ed.ctx.t
    report = []

    # id_P + Df for every diagram edge f: i --> j
    for eid, e in ed.objects.items():
        idx = ed.slice_of[eid]
        if idx is None:
            continue
        tr = e.triangle
        for edge in t.diagram.morphisms:
            if edge.src != tr.node:
                continue
            f_df = apply_fn(t.sig, edge.fn, ed.ctx.cap)
            target = by_key.get(
                _triangle_key(idx, tr._replace(node=edge.dst, p_prime=compose(f_df, tr.p_prime)))
            )
            lifted = sum_of_functions(identity(tr.p_obj), edge.fn)
            ok = target is not None and lifted in hom[(eid, target)]
            report.append({"kind": "edge", "edge": edge.id, "from": eid, "to": target, "ok": ok})

    # g + id_X_i for every slice morphism g: (P, p) --> (Q, q)
    for id1, e1 in ed.objects.items():
        i1 = ed.slice_of[id1]
        if i1 is None:
            continue
        t1 = e1.triangle
        for id2, e2 in ed.objects.items():
            i2 = ed.slice_of[id2]
            t2 = e2.triangle
            if i2 is None or t2.node != t1.node:
                continue
            for g in all_functions(t1.p_obj, t2.p_obj):
                if compose(t2.p, g) != t1.p or compose(t2.p_prime, g) != t1.p_prime:
                    continue
                lifted = sum_of_functions(g, identity(t.diagram.objects[t1.node].carrier))
                ok = lifted in hom[(id1, id2)]
                report.append({"kind": "slice", "from": id1, "to": id2, "ok": ok})
    return report


# ------------------------------------------------------------------------------
#   reduce_cocone
# ------------------------------------------------------------------------------


@dataclass
class ReducedCocone:
    """k̄ over the slice objects with the outcome of the independence check.

    Attributes:
        legs (:obj:`dict` [:obj:`int`, :class:`FinFn`]):
            k̄_(P, p) = k_t∘inl by slice index, for the first triangle t.
    """

    apex: FinSet
    legs: Dict[int, FinFn]
    independence_failures: List[dict] = field(default_factory=list)
    slice_cocone: bool = True

    @property
    def clean(self) -> bool:
        return not self.independence_failures and self.slice_cocone


def reduce_cocone(ed: EDiagram, k: Cocone, strict: bool = False) -> ReducedCocone:
    """Reduce a cocone over the E-diagram to the slice.

    Args:
        strict (:obj:`bool`, optional):
            Raise :class:`~unchained.BaseErrors.IndependenceFailed` instead
            of reporting.

            Default: :obj:`False`
    """
    check_cocone(ed.carriers(), k)

    legs: Dict[int, FinFn] = {}
    first: Dict[int, str] = {}
    failures: List[dict] = []
    for eid, e in ed.objects.items():
        idx = ed.slice_of[eid]
        if idx is None:
            continue
        leg = compose(k.legs[eid], e.cop.inl)
        if idx not in legs:
            legs[idx] = leg
            first[idx] = eid
        elif leg != legs[idx]:
            failures.append({"slice": idx, "pair": [first[idx], eid]})

    if failures and strict:
        raise IndependenceFailed(
            "k_t∘inl depends on the triangle t.", witness=failures[0]
        )

    slice_cocone = True
    for i1, (p_obj, p) in enumerate(ed.slice):
        for i2, (q_obj, q) in enumerate(ed.slice):
            if i1 not in legs or i2 not in legs:
                continue
            for g in all_functions(p_obj, q_obj):
                if compose(q, g) == p and compose(legs[i2], g) != legs[i1]:
                    slice_cocone = False
    return ReducedCocone(k.apex, legs, failures, slice_cocone)


# ------------------------------------------------------------------------------
#   lift_cocone_morphism_check
# ------------------------------------------------------------------------------


@dataclass
class LiftReport:
    bool_slice: bool
    bool_E: bool
    inserted: List[str] = field(default_factory=list)
    slice_witness: Optional[dict] = None
    e_witness: Optional[dict] = None

    @property
    def agree(self) -> bool:
        return self.bool_slice == self.bool_E


def lift_cocone_morphism_check(ed: EDiagram, k: Cocone, v: FinFn) -> LiftReport:
    """Compare "v is a morphism of slice cocones" with "v is a morphism of
    E-cocones", after inserting the objects s = (X_i, α∘π_i, i, x_i) with
    k_s = k_t∘inr∘∇ for some t at node i."""
    ctx = ed.ctx
    if v.dom != ctx.fa.obj or v.cod != k.apex:
        raise DomainMismatch("v must be a function FA --> apex of k.")

    objects = dict(ed.objects)
    legs = dict(k.legs)
    inserted = []

    at_node: Dict[str, str] = {}
    for eid, e in ed.objects.items():
        at_node.setdefault(e.triangle.node, eid)

    for node, eid in at_node.items():
        if node in ed.s_objects:
            continue
        s_obj = build_E_object(ctx.t, s_triangle(ctx, node), ctx, ctx.cap)
        sid = f"s:{node}"
        host = ed.objects[eid]
        objects[sid] = s_obj
        legs[sid] = compose(
            compose(k.legs[eid], host.cop.inr),
            codiagonal(ctx.t.diagram.objects[node].carrier),
        )
        inserted.append(sid)

    # bool_E
    e_witness = None
    for eid, e in objects.items():
        if compose(v, e.inj) != legs[eid]:
            e_witness = {"object": eid}
            break

    # bool_slice, including the slice objects of the inserted s-objects
    reduced = reduce_cocone(ed, k)
    slice_witness = None
    for idx, (_p_obj, p) in enumerate(ed.slice):
        if idx in reduced.legs and compose(v, p) != reduced.legs[idx]:
            slice_witness = {"slice": idx}
            break
    if slice_witness is None:
        s_ids = inserted + list(ed.s_objects.values())
        for sid in s_ids:
            s_obj = objects[sid]
            k_bar = compose(legs[sid], s_obj.cop.inl)
            if compose(v, s_obj.triangle.p) != k_bar:
                slice_witness = {"object": sid}
                break

    return LiftReport(
        slice_witness is None,
        e_witness is None,
        inserted,
        slice_witness,
        e_witness,
    )


# ------------------------------------------------------------------------------
#   iterate_colimit_check
# ------------------------------------------------------------------------------


def slice_over(
    target: FinSet, slice_bound: int, cap: Optional[int] = None
) -> List[SliceObject]:
    """All (P, p) with P = {0, ..., k-1}, k <= `slice_bound`, p: P -->
    `target`."""
    check_size(
        "objects of the slice",
        sum(len(target) ** k for k in range(slice_bound + 1)),
        cap,
    )
    out = []
    for k in range(slice_bound + 1):
        p_obj = FinSet.ordinal(k)
        out.extend((p_obj, p) for p in all_functions(p_obj, target))
    return out


@dataclass
class IterateVerdict:
    status: str
    injective: bool
    surjective: bool
    colimit_size: int
    fa_size: int
    n_objects: int
    n_morphisms: int
    missing: List[dict] = field(default_factory=list)
    comparison: Optional[FinFn] = field(default=None, repr=False)
    colimit: Optional[ColimitData] = field(default=None, repr=False)
    ed: Optional[EDiagram] = field(default=None, repr=False)
    preserves: Optional[bool] = None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "injective": self.injective,
            "surjective": self.surjective,
            "colimit_size": self.colimit_size,
            "FA_size": self.fa_size,
            "objects": self.n_objects,
            "morphisms": self.n_morphisms,
            "missing": len(self.missing),
            "merged": sum(
                e["outcome"] == "merged" for e in (self.ed.merges if self.ed else [])
            ),
            "preserves_colimit": self.preserves,
        }


def iterate_colimit_check(
    t: InitialTruncation,
    slice_bound: int,
    cap: Optional[int] = None,
) -> IterateVerdict:
    """Compare the colimit of the E-diagram over all (P, p) with
    |P| <= `slice_bound` with FA, through the map induced by the cocone of
    the inj_t."""
    ctx = IterateContext(t, cap)
    ed = enumerate_E(t, slice_over(ctx.fa.obj, slice_bound, cap), ctx=ctx, cap=cap)
    cd = colimit(ed.carriers(), cap)
    preserves = preserves_truncation(t, cap)
    try:
        kappa = mediate(cd, ed.inj_cocone())
    except NotACocone:
        return IterateVerdict(
            MISMATCH, False, False, len(cd.apex), len(ctx.fa.obj),
            len(ed.objects), len(ed.morphisms), ed.missing, None, cd, ed, preserves,
        )

    inj = is_injective(kappa)
    surj = is_surjective(kappa)
    if inj and surj:
        status = BIJECTIVE
    elif inj:
        status = INJECTIVE
    elif surj:
        status = SURJECTIVE
    else:
        status = MISMATCH
    return IterateVerdict(
        status, inj, surj, len(cd.apex), len(ctx.fa.obj),
        len(ed.objects), len(ed.morphisms), ed.missing, kappa, cd, ed, preserves,
    )


def fold_from_comparison(t: InitialTruncation, verdict: IterateVerdict) -> FinFn:
    """The coalgebra morphism h: (FA, Fα) --> (A, α) read off the E-diagram.
    Every E(t) maps uniquely into (A, α), these maps mediate
    m: colim E --> A and h = m∘κ⁻¹.

    Raises:
        :class:`~unchained.BaseErrors.MorphismFailed`:
            κ is not bijective.
    """
    kappa_inv = None
    if verdict.comparison is not None:
        kappa_inv = try_inverse(verdict.comparison)
    if kappa_inv is None or verdict.ed is None:
        raise MorphismFailed(
            "colim E --> FA is not bijective.",
            witness={"status": verdict.status},
        )
    legs = {
        eid: terminal_morphism(t, e.coalg) for eid, e in verdict.ed.objects.items()
    }
    m = mediate(verdict.colimit, Cocone(t.a_set, legs))
    return compose(m, kappa_inv)
