#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Construction of (truncations of) the initial algebra as the colimit of
all finite recursive coalgebras.

For a bound n the diagram consists of every recursive coalgebra on the
carriers {0}, {0,1}, ..., {0,...,n-1} together with *all* coalgebra
morphisms between them. Its colimit (A_n, α_n) is computed on the carriers
and equipped with the structure created by the forgetful functor. Every
element of A_n is a class of states that unfold to the same finite term,
which :func:`oracle_partition` cross-checks.

The finite subdiagram is not filtered: the coproduct of two objects may
exceed the bound. Results at a finite bound are therefore checked against
the unfolding oracle rather than derived from filteredness.
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Dict, List, NamedTuple, Optional, Tuple

from unchained.BaseConfig import check_size
from unchained.BaseErrors import (
    DomainMismatch,
    MorphismFailed,
    NoFactorization,
    NoMerge,
    NotMorphism,
    NotRecursive,
    PartitionMismatch,
    UniquenessFailed,
)
from unchained.FinSet_category import (
    Elem,
    FinSet,
    FinFn,
    Partition,
    compose,
    is_injective,
    is_surjective,
    quotient,
)
from unchained.FinSet_colimit import (
    Cocone,
    Edge,
    colimit,
    factor_through,
    image_diagram,
    mediate,
    merge,
)
from unchained.Signature_functor import (
    FElem,
    PolyElem,
    Signature,
    apply_fn,
    apply_obj,
    encode,
    fmap,
)
from unchained.Coalgebra_recursion import (
    COALG,
    Algebra,
    Coalgebra,
    CoalgebraColimit,
    CoalgebraDiagram,
    InitialAlgebra,
    coalgebra_morphisms,
    colim_coalgebras,
    first_violation,
    hylo,
    initial_from_iso,
    is_recursive,
    lambek_check,
    recursion_certificate,
    split_to_canonical,
)

# Verdicts of `main_theorem_check`
INITIAL = "initial"
INCONCLUSIVE = "inconclusive"


# ------------------------------------------------------------------------------
#   Term
# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    """Finite well-founded tree over a signature.

    Polynomial terms carry an operation symbol. Powerset terms have
    ``op = None`` and hold a finite set of children, kept sorted and free
    of duplicates.
    """

    op: Optional[str]
    children: Tuple["Term", ...] = ()

    def __post_init__(self):
        if self.op is None:
            kids = sorted(set(self.children), key=str)
            object.__setattr__(self, "children", tuple(kids))

    @cached_property
    def text(self) -> str:
        if self.op is None:
            return "{" + ",".join(ch.text for ch in self.children) + "}"
        if not self.children:
            return self.op
        return f"{self.op}({','.join(ch.text for ch in self.children)})"

    def __str__(self) -> str:
        return self.text

    @cached_property
    def depth(self) -> int:
        """Leaves and the empty set have depth 0."""
        if not self.children:
            return 0
        return 1 + max(ch.depth for ch in self.children)

    def subterms(self) -> set:
        out = {self}
        for ch in self.children:
            out |= ch.subterms()
        return out

    @property
    def dag_size(self) -> int:
        """Number of distinct subterms, i.e. the node count of the maximally
        shared term graph."""
        return len(self.subterms())


def term_of(felem: FElem, terms: Dict[Elem, Term]) -> Term:
    if isinstance(felem, PolyElem):
        return Term(felem.op, tuple(terms[a] for a in felem.args))
    return Term(None, tuple(terms[a] for a in felem))


def unfold_all(c: Coalgebra) -> Dict[Elem, Term]:
    """Unfolding of every state of a recursive coalgebra.

    Raises:
        :class:`~unchained.BaseErrors.NotRecursive`
    """
    cert = recursion_certificate(c)
    if not cert.recursive:
        raise NotRecursive(
            "Only recursive coalgebras unfold to finite terms.",
            witness={"cycle": list(cert.cycle)},
        )
    terms: Dict[Elem, Term] = {}
    for x in cert.order:
        terms[x] = term_of(c(x), terms)
    return terms


def unfold(c: Coalgebra, x: Elem) -> Term:
    return unfold_all(c)[x]


def cata(term: Term, a: Algebra, _memo: Optional[dict] = None) -> Elem:
    """Evaluate a term in an algebra."""
    memo = {} if _memo is None else _memo
    if term in memo:
        return memo[term]
    args = tuple(cata(ch, a, memo) for ch in term.children)
    if term.op is None:
        value = a(frozenset(args))
    else:
        value = a(PolyElem(term.op, args))
    memo[term] = value
    return value


def enumerate_terms(sig: Signature, k: int, cap: Optional[int] = None) -> List[Term]:
    """All terms of depth < `k`, ordered by depth and then by text."""
    terms: List[Term] = []
    for _ in range(k):
        check_size("terms of the next depth", sig.size_of_image(len(terms)), cap)
        if sig.is_powerset:
            terms = [
                Term(None, subset)
                for size in range(len(terms) + 1)
                for subset in combinations(terms, size)
            ]
        else:
            terms = [
                Term(op.name, args)
                for op in sig.ops
                for args in product(terms, repeat=op.arity)
            ]
    return sorted(terms, key=lambda t: (t.depth, t.text))


# ------------------------------------------------------------------------------
#   enumerate_finrec
# ------------------------------------------------------------------------------


def canonical_form(c: Coalgebra) -> Tuple[Elem, ...]:
    """Least encoded structure over all relabellings of an ordinal carrier.
    Isomorphic coalgebras share their canonical form."""
    n = len(c.carrier)
    best = None
    for perm in permutations(range(n)):
        sigma = {str(k): str(perm[k]) for k in range(n)}
        inv = {v: k for k, v in sigma.items()}
        form = tuple(
            encode(fmap(sigma, c(inv[str(p)]))) for p in range(n)
        )
        if best is None or form < best:
            best = form
    return best if best is not None else ()


def enumerate_finrec(
    sig: Signature,
    bound: int,
    dedup: bool = False,
    cap: Optional[int] = None,
) -> List[Coalgebra]:
    """Every recursive coalgebra on the carriers {0,...,k-1}, 1 <= k <=
    `bound`, ordered by carrier size and then by structure. A bound of 0
    gives only the empty coalgebra.

    Args:
        dedup (:obj:`bool`, optional):
            Keep one coalgebra per isomorphism class, the one equal to its
            canonical form. The colimit does not change.

            Default: :obj:`False`
    """
    if bound < 0:
        raise ValueError("The bound must be a natural number.")
    if bound == 0:
        return [Coalgebra(sig, FinSet(), {})]

    out: List[Coalgebra] = []
    for k in range(1, bound + 1):
        carrier = FinSet.ordinal(k)
        img = apply_obj(sig, carrier, cap)
        check_size(
            f"structures on a {k}-element carrier", len(img.obj) ** k, cap
        )
        for images in product(img.obj.elems, repeat=k):
            c = Coalgebra(
                sig,
                carrier,
                {p: img.decode[n] for p, n in zip(carrier.elems, images)},
            )
            if not is_recursive(c):
                continue
            if dedup and c.encoded() != canonical_form(c):
                continue
            out.append(c)
    return out


# ------------------------------------------------------------------------------
#   FinrecDiagram
# ------------------------------------------------------------------------------


@dataclass
class FinrecDiagram:
    """Full diagram of finite recursive coalgebras. Objects are keyed by
    node ids `X0`, `X1`, ... in enumeration order; morphisms hold every
    coalgebra morphism between every ordered pair of objects."""

    sig: Signature
    bound: int
    objects: Dict[str, Coalgebra]
    morphisms: List[Edge]

    def coalgebra_diagram(self) -> CoalgebraDiagram:
        return CoalgebraDiagram(self.objects, self.morphisms)

    def node_of(self, c: Coalgebra) -> Optional[str]:
        for node, obj in self.objects.items():
            if obj == c:
                return node
        return None


def build_finrec_diagram(
    sig: Signature,
    bound: int,
    dedup: bool = False,
    cap: Optional[int] = None,
) -> FinrecDiagram:
    objs = enumerate_finrec(sig, bound, dedup, cap)
    objects = {f"X{k}": c for k, c in enumerate(objs)}

    morphisms: List[Edge] = []
    for src_id, src in objects.items():
        for dst_id, dst in objects.items():
            for k, h in enumerate(coalgebra_morphisms(src, dst, cap=cap)):
                morphisms.append(Edge(f"{src_id}>{dst_id}#{k}", src_id, dst_id, h))
                check_size("morphisms of the finrec diagram", len(morphisms), cap)
    return FinrecDiagram(sig, bound, objects, morphisms)


# ------------------------------------------------------------------------------
#   InitialTruncation
# ------------------------------------------------------------------------------


@dataclass
class InitialTruncation:
    """Colimit (A_n, α_n) of the finrec diagram at bound n.

    Attributes:
        a_set (:class:`FinSet`):
            The apex A_n. Its elements are class representatives, named
            `<node>:<state>`.

        alpha (:class:`FinFn`):
            α_n: A_n --> F A_n.

        injections (:obj:`dict` [:obj:`str`, :class:`FinFn`]):
            The coalgebra morphisms π_i: X_i --> A_n.
    """

    sig: Signature
    bound: int
    a_set: FinSet
    alpha: FinFn
    injections: Dict[str, FinFn]
    diagram: FinrecDiagram
    colimit: CoalgebraColimit = field(repr=False)

    @property
    def coalgebra(self) -> Coalgebra:
        return self.colimit.coalgebra

    def class_terms(self) -> Dict[Elem, Term]:
        """The term every element of A_n stands for."""
        return unfold_all(self.coalgebra)


def build_truncation(
    sig: Signature,
    bound: int,
    dedup: bool = False,
    cap: Optional[int] = None,
) -> InitialTruncation:
    """Raises :class:`~unchained.BaseErrors.MorphismFailed` if α_n is not
    injective, which would be an implementation error."""
    fd = build_finrec_diagram(sig, bound, dedup, cap)
    cc = colim_coalgebras(fd.coalgebra_diagram(), sig=sig, cap=cap)
    alpha = cc.coalgebra.structure_fn(cap)
    if not is_injective(alpha):
        raise MorphismFailed(
            "The colimit structure is not injective.",
            witness={"bound": bound},
        )
    return InitialTruncation(
        sig, bound, cc.coalgebra.carrier, alpha, cc.injections, fd, cc
    )


# ------------------------------------------------------------------------------
#   oracle_partition
# ------------------------------------------------------------------------------


def oracle_partition(t: InitialTruncation) -> Partition:
    """Partition of the disjoint union of all carriers by equality of
    unfoldings, confirmed equal to the colimit partition.

    Raises:
        :class:`~unchained.BaseErrors.PartitionMismatch`:
            With a class on which the two partitions differ.
    """
    cd = t.colimit.colimit
    unfoldings = {
        node: unfold_all(c) for node, c in t.diagram.objects.items()
    }
    first_of: Dict[Term, Elem] = {}
    pairs = []
    for tag, (node, x) in cd.untag.items():
        term = unfoldings[node][x]
        if term in first_of:
            pairs.append((first_of[term], tag))
        else:
            first_of[term] = tag
    partition, _proj = quotient(cd.coproduct, pairs)

    if partition != cd.partition:
        ours = partition.classes()
        for rep, block in cd.partition.classes().items():
            if ours.get(partition.find(rep)) != block:
                raise PartitionMismatch(
                    "Unfoldings and colimit disagree.",
                    witness={
                        "colimit_class": block,
                        "oracle_class": ours[partition.find(rep)],
                    },
                )
    return partition


# ------------------------------------------------------------------------------
#   universal_fold
# ------------------------------------------------------------------------------


def universal_fold(t: InitialTruncation, b: Algebra) -> FinFn:
    """The map A_n --> B induced by the cocone of hylomorphisms
    X_i --> B."""
    legs = {node: hylo(c, b) for node, c in t.diagram.objects.items()}
    return mediate(t.colimit.colimit, Cocone(b.carrier, legs))


def fold_by_terms(t: InitialTruncation, b: Algebra) -> FinFn:
    """The same map, computed as cata∘unfold on the class representatives."""
    memo: dict = {}
    terms = t.class_terms()
    return FinFn(
        t.a_set, b.carrier, {r: cata(terms[r], b, memo) for r in t.a_set}
    )


# ------------------------------------------------------------------------------
#   Morphisms into the truncation
# ------------------------------------------------------------------------------


def check_injection_uniqueness(t: InitialTruncation):
    """Every π_i must be the only coalgebra morphism X_i --> A_n.

    Raises:
        :class:`~unchained.BaseErrors.UniquenessFailed`
    """
    for node, c in t.diagram.objects.items():
        found = list(coalgebra_morphisms(c, t.coalgebra))
        if found != [t.injections[node]]:
            raise UniquenessFailed(
                f"`{node}` has {len(found)} coalgebra morphisms into A_n.",
                witness={"node": node, "count": len(found)},
            )


class CoalgFactorization(NamedTuple):
    """Pair (node, h') with π_node∘h' = h."""

    node: str
    fn: FinFn


def merge_factorization(
    t: InitialTruncation,
    b: Coalgebra,
    node: str,
    fn: FinFn,
    cap: Optional[int] = None,
) -> Optional[CoalgFactorization]:
    """Turn a carrier-level factorization fn: B --> X_node of a coalgebra
    morphism into a coalgebra morphism by merging x_node∘fn and F fn∘β along
    an edge path k of F∘D. Returns (j, Dk∘fn), or :obj:`None` when the two
    maps are not identified in colim F∘D or no path merges them."""
    cd = t.colimit.colimit
    x = t.diagram.objects[node]
    f1 = compose(x.structure_fn(cap), fn)
    f2 = compose(apply_fn(t.sig, fn, cap), b.structure_fn(cap))

    fd = image_diagram(t.sig, cd.diagram, cap)
    try:
        hit = merge(fd, colimit(fd, cap), node, f1, f2)
    except (DomainMismatch, NoMerge):
        return None

    # Same edge ids in D and F∘D
    edges = {e.id: e for e in cd.diagram.edges}
    g = fn
    for eid in hit.path:
        g = compose(edges[eid].fn, g)
    if first_violation(COALG, g, b, t.diagram.objects[hit.node]) is not None:
        return None
    return CoalgFactorization(hit.node, g)


def factor_coalg_hom(
    t: InitialTruncation,
    b: Coalgebra,
    h: FinFn,
    check_uniqueness: bool = True,
) -> CoalgFactorization:
    """Factor a coalgebra morphism h: (B, β) --> (A_n, α_n) through one of
    the injections by a coalgebra morphism.

    The carrier-level factorization comes first. When it is not a coalgebra
    morphism, it is pushed along the diagram by :func:`merge_factorization`.
    Failing that, all coalgebra morphisms B --> X_j that land in the right
    classes are searched, node by node.

    Raises:
        :class:`~unchained.BaseErrors.NotMorphism`,
        :class:`~unchained.BaseErrors.NoFactorization`
    """
    bad = first_violation(COALG, h, b, t.coalgebra)
    if bad is not None:
        raise NotMorphism(
            "h is not a coalgebra morphism into the truncation.",
            witness={"element": bad},
        )
    if check_uniqueness:
        check_injection_uniqueness(t)

    cd = t.colimit.colimit
    objects = t.diagram.objects
    try:
        node, fn = factor_through(cd.diagram, cd, h)
        if first_violation(COALG, fn, b, objects[node]) is None:
            return CoalgFactorization(node, fn)
        merged = merge_factorization(t, b, node, fn)
        if merged is not None:
            return merged
    except NoFactorization:
        pass

    for node, c in objects.items():
        members = cd.class_members(node)
        if not all(r in members for r in h.images):
            continue
        allowed = {y: members[h(y)] for y in b.carrier}
        for fn in coalgebra_morphisms(b, c, allowed=allowed):
            return CoalgFactorization(node, fn)

    raise NoFactorization(
        "h does not factor through any injection by a coalgebra morphism.",
        witness={"bound": t.bound},
    )


def terminal_morphism(t: InitialTruncation, c: Coalgebra) -> FinFn:
    """The unique coalgebra morphism (C, c) --> (A_n, α_n), by search.

    Raises:
        :class:`~unchained.BaseErrors.NoFactorization`:
            No morphism exists, the truncation is too small.

        :class:`~unchained.BaseErrors.UniquenessFailed`
    """
    found = list(coalgebra_morphisms(c, t.coalgebra))
    if not found:
        raise NoFactorization(
            "No coalgebra morphism into the truncation.",
            witness={"bound": t.bound},
        )
    if len(found) > 1:
        raise UniquenessFailed(
            f"{len(found)} coalgebra morphisms into the truncation.",
            witness=[f.as_dict() for f in found[:2]],
        )
    return found[0]


def universal_morphism(t: InitialTruncation, c: Coalgebra) -> FinFn:
    """The coalgebra morphism (C, c) --> (A_n, α_n) of a finite recursive
    coalgebra with |C| <= n, read off as π_P∘m with P the ordinal copy of
    (C, c). Cross-checked against the exhaustive search."""
    if not is_recursive(c):
        raise NotRecursive("Only recursive coalgebras map into A_n.")
    if len(c.carrier) > t.bound or not len(c.carrier):
        return terminal_morphism(t, c)

    split = split_to_canonical(c)
    node = t.diagram.node_of(split.coalgebra)
    if node is None:
        return terminal_morphism(t, c)

    result = compose(t.injections[node], split.m)
    if terminal_morphism(t, c) != result:
        raise UniquenessFailed(
            "Search and diagram disagree on the morphism into A_n.",
            witness={"node": node},
        )
    return result


def truncation_map(t_n: InitialTruncation, t_m: InitialTruncation) -> FinFn:
    """The canonical map A_n --> A_m, n <= m, mediated through the inclusion
    of diagrams. Checked injective and a coalgebra morphism.

    Raises:
        :class:`~unchained.BaseErrors.MorphismFailed`
    """
    if t_n.sig != t_m.sig or t_n.bound > t_m.bound:
        raise ValueError("truncation_map needs the same functor and n <= m.")

    legs = {}
    for node, c in t_n.diagram.objects.items():
        target = t_m.diagram.node_of(c)
        if target is not None:
            legs[node] = t_m.injections[target]
        else:
            legs[node] = terminal_morphism(t_m, c)

    f = mediate(t_n.colimit.colimit, Cocone(t_m.a_set, legs))
    if not is_injective(f):
        raise MorphismFailed("A_n --> A_m is not injective.")
    bad = first_violation(COALG, f, t_n.coalgebra, t_m.coalgebra)
    if bad is not None:
        raise MorphismFailed(
            "A_n --> A_m does not commute with α.", witness={"element": bad}
        )
    return f


# ------------------------------------------------------------------------------
#   main_theorem_check
# ------------------------------------------------------------------------------


@dataclass
class TheoremVerdict:
    status: str
    size: int
    alpha_injective: bool
    alpha_surjective: bool
    truncation: InitialTruncation = field(repr=False)
    initial: Optional[InitialAlgebra] = field(default=None, repr=False)
    diagnostics: dict = field(default_factory=dict)
    inverse: Optional[FinFn] = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "bound": self.truncation.bound,
            "size": self.size,
            "alpha_injective": self.alpha_injective,
            "alpha_surjective": self.alpha_surjective,
            "diagnostics": self.diagnostics,
        }


def main_theorem_check(
    sig: Signature, bound: int, cap: Optional[int] = None
) -> TheoremVerdict:
    """Decide whether the truncation at `bound` already is the initial
    algebra. Functors with an infinite initial algebra end up
    :const:`INCONCLUSIVE`, with α_n injective but not surjective.

    When α_n is bijective, the inverse h: FA --> A is read off the colimit
    of the E-diagram, see
    :func:`~unchained.Iterate_construction.fold_from_comparison`. A
    comparison colim E --> FA that is not bijective leaves the verdict
    :const:`INCONCLUSIVE`.
    """
    # pylint: disable=import-outside-toplevel
    from unchained.Iterate_construction import (
        BIJECTIVE,
        fold_from_comparison,
        iterate_colimit_check,
    )

    t = build_truncation(sig, bound, cap=cap)
    inj = is_injective(t.alpha)
    surj = is_surjective(t.alpha)
    diagnostics = {"|A|": len(t.a_set), "|FA|": len(t.alpha.cod)}

    if not (inj and surj):
        diagnostics["reason"] = "α is not surjective" if inj else "α is not injective"
        return TheoremVerdict(INCONCLUSIVE, len(t.a_set), inj, surj, t, None, diagnostics)

    comparison = iterate_colimit_check(t, slice_bound=1, cap=cap)
    diagnostics["iterate_check"] = comparison.status
    if comparison.status != BIJECTIVE:
        diagnostics["reason"] = "colim E --> FA is not bijective"
        return TheoremVerdict(INCONCLUSIVE, len(t.a_set), inj, surj, t, None, diagnostics)

    h = fold_from_comparison(t, comparison)
    lambek_check(t.coalgebra, h, cap)
    initial = initial_from_iso(t.coalgebra, cap)
    return TheoremVerdict(
        INITIAL, len(t.a_set), inj, surj, t, initial, diagnostics, h
    )
