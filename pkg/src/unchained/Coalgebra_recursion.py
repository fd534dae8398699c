#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Algebras and coalgebras for a :class:`~unchained.Signature_functor.Signature`
on finite sets, together with the recursion machinery built on them.

A coalgebra (C, c) is *recursive* when every algebra (A, a) receives exactly
one coalgebra-to-algebra morphism h = a∘Fh∘c, the hylomorphism. On finite
carriers and for polynomial and finite powerset functors this is the case
iff the successor graph of (C, c) is acyclic, which is what
:func:`is_recursive` decides. The brute-force oracle
:func:`brute_force_solutions` stays available as an independent check of
that equivalence.

Main entry points:

    * :func:`is_recursive`, :func:`recursion_certificate`
    * :func:`hylo`
    * :func:`verify_morphism`, :func:`coalgebra_morphisms`
    * :func:`iterate`, :func:`sandwich_transfer`
    * :func:`colim_coalgebras`
    * :func:`lambek_check`, :func:`initial_from_iso`
    * :func:`split_to_canonical`
"""
__author__ = "Dennis van Gils"
__authoremail__ = "vangils.dennis@gmail.com"
__url__ = "https://github.com/Dennis-van-Gils/python-unchained"
__date__ = "18-10-2026"
__version__ = "1.0.0"
# pylint: disable=missing-function-docstring

from dataclasses import dataclass
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import networkx as nx

from unchained.BaseConfig import check_size
from unchained.BaseErrors import (
    DomainMismatch,
    ElementNotFound,
    HypothesisFailed,
    NotBijective,
    NotCoalgebraMorphism,
    NotInverse,
    NotMorphism,
    NotRecursive,
    RecursivenessFailed,
    UniquenessFailed,
)
from unchained.FinSet_category import (
    Elem,
    FinSet,
    FinFn,
    all_functions,
    canonical_key,
    identity,
    try_inverse,
)
from unchained.FinSet_colimit import (
    ColimitData,
    Cocone,
    Diagram,
    Edge,
    colimit,
    mediate,
)
from unchained.Signature_functor import (
    FElem,
    Signature,
    apply_obj,
    check_felem,
    encode,
    felem_args,
    fmap,
)

# Kinds of morphism understood by `verify_morphism`
COALG = "coalg"
ALG = "alg"
COALG_TO_ALG = "coalg_to_alg"


# ------------------------------------------------------------------------------
#   Coalgebra
# ------------------------------------------------------------------------------


class Coalgebra:
    """Finite coalgebra (C, c) with c: C --> F C.

    Args:
        sig (:class:`~unchained.Signature_functor.Signature`):
            The functor F.

        carrier (:class:`~unchained.FinSet_category.FinSet`):
            The carrier C.

        structure (:obj:`Mapping` [:obj:`str`, FElem]):
            c(x) for every x in C. Every argument of c(x) must lie in C.
    """

    def __init__(
        self,
        sig: Signature,
        carrier: FinSet,
        structure: Mapping[Elem, FElem],
    ):
        missing = [x for x in carrier if x not in structure]
        if missing:
            raise DomainMismatch(
                f"Coalgebra structure is not total, missing {missing}.",
                witness=missing,
            )
        extra = [x for x in structure if x not in carrier]
        if extra:
            raise DomainMismatch(
                f"Coalgebra structure has elements outside the carrier: "
                f"{extra}.",
                witness=extra,
            )
        for x in carrier:
            check_felem(sig, structure[x], carrier)

        self.sig = sig
        self.carrier = carrier
        self.structure: Dict[Elem, FElem] = {x: structure[x] for x in carrier}

    def __call__(self, x: Elem) -> FElem:
        try:
            return self.structure[x]
        except KeyError:
            raise ElementNotFound(
                f"`{x}` is not in the coalgebra carrier.", witness=x
            ) from None

    def __len__(self) -> int:
        return len(self.carrier)

    def encoded(self) -> Tuple[Elem, ...]:
        """Encoded c(x) in carrier order."""
        return tuple(encode(self.structure[x]) for x in self.carrier)

    def structure_fn(self, cap: Optional[int] = None) -> FinFn:
        """c as a :class:`FinFn` C --> F C."""
        img = apply_obj(self.sig, self.carrier, cap)
        return FinFn.from_images(self.carrier, img.obj, self.encoded())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coalgebra):
            return NotImplemented
        return (
            self.sig == other.sig
            and self.carrier == other.carrier
            and self.structure == other.structure
        )

    def __hash__(self) -> int:
        return hash((self.sig, self.carrier, self.encoded()))

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{x}->{y}" for x, y in zip(self.carrier, self.encoded())
        )
        return f"Coalgebra({pairs})"


# ------------------------------------------------------------------------------
#   Algebra
# ------------------------------------------------------------------------------


class Algebra:
    """Finite algebra (A, a) with a: F A --> A.

    Args:
        sig (:class:`~unchained.Signature_functor.Signature`):
            The functor F.

        carrier (:class:`~unchained.FinSet_category.FinSet`):
            The carrier A.

        structure (:obj:`Mapping` [FElem, :obj:`str`] | :obj:`Callable`):
            Either an explicit table, checked to be total on F A, or a
            callable evaluated on demand. Callables suit algebras whose
            F A is too large to tabulate, like the merge algebra of
            Quicksort. Their results are checked on every call.

        name (:obj:`str`, optional):
            Display name.
    """

    def __init__(
        self,
        sig: Signature,
        carrier: FinSet,
        structure: Union[Mapping[FElem, Elem], Callable[[FElem], Elem]],
        name: str = "",
        cap: Optional[int] = None,
    ):
        self.sig = sig
        self.carrier = carrier
        self.name = name

        if isinstance(structure, Mapping):
            img = apply_obj(sig, carrier, cap)
            missing = [n for n, fe in img.decode.items() if fe not in structure]
            if missing:
                raise DomainMismatch(
                    f"Algebra structure is not total on F A, missing "
                    f"{missing[:5]}.",
                    witness=missing,
                )
            table = {fe: structure[fe] for fe in img.decode.values()}
            for fe, y in table.items():
                if y not in carrier:
                    raise ElementNotFound(
                        f"a({encode(fe)}) = `{y}` is not in the carrier.",
                        witness=[encode(fe), y],
                    )
            self._table: Optional[Dict[FElem, Elem]] = table
            self._func: Optional[Callable[[FElem], Elem]] = None
        else:
            self._table = None
            self._func = structure

    @property
    def is_tabulated(self) -> bool:
        return self._table is not None

    def __call__(self, felem: FElem) -> Elem:
        if self._table is not None:
            return self._table[felem]

        y = self._func(felem)
        if y not in self.carrier:
            raise ElementNotFound(
                f"a({encode(felem)}) = `{y}` is not in the carrier.",
                witness=[encode(felem), y],
            )
        return y

    def structure_fn(self, cap: Optional[int] = None) -> FinFn:
        """a as a :class:`FinFn` F A --> A. Evaluates a callable structure on
        all of F A, so the size cap applies."""
        img = apply_obj(self.sig, self.carrier, cap)
        return FinFn(
            img.obj,
            self.carrier,
            {n: self(fe) for n, fe in img.decode.items()},
        )

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"Algebra{label}(|A| = {len(self.carrier)})"


def _check_same_sig(*objs):
    sigs = {o.sig for o in objs}
    if len(sigs) > 1:
        raise DomainMismatch("(Co)algebras over different functors.")


# ------------------------------------------------------------------------------
#   Successor graph and recursiveness
# ------------------------------------------------------------------------------


def successor_graph(c: Coalgebra) -> nx.DiGraph:
    """Directed graph on the carrier with an edge x --> y for every y
    occurring in c(x)."""
    g = nx.DiGraph()
    g.add_nodes_from(c.carrier)
    for x in c.carrier:
        for y in felem_args(c(x)):
            g.add_edge(x, y)
    return g


class RecursionCertificate(NamedTuple):
    """Evaluation order (dependencies first) when recursive, else a cycle of
    the successor graph."""

    recursive: bool
    order: Tuple[Elem, ...] = ()
    cycle: Tuple[Elem, ...] = ()


def recursion_certificate(c: Coalgebra) -> RecursionCertificate:
    g = successor_graph(c)
    if nx.is_directed_acyclic_graph(g):
        topo = nx.lexicographical_topological_sort(g, key=canonical_key)
        return RecursionCertificate(True, order=tuple(reversed(list(topo))))

    cycle = None
    for x in c.carrier:
        try:
            cycle = nx.find_cycle(g, source=x)
            break
        except nx.NetworkXNoCycle:
            continue
    return RecursionCertificate(False, cycle=tuple(u for u, _v in cycle))


def is_recursive(c: Coalgebra) -> bool:
    return recursion_certificate(c).recursive


# ------------------------------------------------------------------------------
#   hylo
# ------------------------------------------------------------------------------


def hylo(c: Coalgebra, a: Algebra) -> FinFn:
    """The unique h: C --> A with h = a∘Fh∘c, evaluated memoized along the
    topological order of the successor graph.

    Raises:
        :class:`~unchained.BaseErrors.NotRecursive`:
            With the offending cycle as witness.
    """
    _check_same_sig(c, a)
    cert = recursion_certificate(c)
    if not cert.recursive:
        raise NotRecursive(
            "The coalgebra is not recursive, its successor graph has a "
            f"cycle through {list(cert.cycle)}.",
            witness={"cycle": list(cert.cycle)},
        )

    values: Dict[Elem, Elem] = {}
    for x in cert.order:
        values[x] = a(fmap(values, c(x)))
    return FinFn(c.carrier, a.carrier, values)


# ------------------------------------------------------------------------------
#   verify_morphism
# ------------------------------------------------------------------------------


def first_violation(kind: str, h: FinFn, src, dst) -> Optional[Elem]:
    """First element at which the square (or pentagon) of `kind` fails to
    commute, or :obj:`None`. For algebra morphisms the element is the
    encoded FElem."""
    if h.dom != src.carrier or h.cod != dst.carrier:
        raise DomainMismatch(
            "The function does not fit the carriers.",
            witness={"kind": kind},
        )
    _check_same_sig(src, dst)
    hmap = h.as_dict()

    if kind == COALG:
        # d∘h = Fh∘c
        for x in src.carrier:
            if dst(hmap[x]) != fmap(hmap, src(x)):
                return x
        return None

    if kind == ALG:
        # h∘a = b∘Fh
        for fe in apply_obj(src.sig, src.carrier).decode.values():
            if hmap[src(fe)] != dst(fmap(hmap, fe)):
                return encode(fe)
        return None

    if kind == COALG_TO_ALG:
        # h = a∘Fh∘c
        for x in src.carrier:
            if hmap[x] != dst(fmap(hmap, src(x))):
                return x
        return None

    raise ValueError(f"Unknown morphism kind `{kind}`.")


def verify_morphism(kind: str, h: FinFn, src, dst) -> bool:
    """Check the morphism equation of `kind` pointwise.

    Args:
        kind (:obj:`str`):
            :const:`COALG` for d∘h = Fh∘c, :const:`ALG` for h∘a = b∘Fh and
            :const:`COALG_TO_ALG` for h = a∘Fh∘c.
    """
    return first_violation(kind, h, src, dst) is None


# ------------------------------------------------------------------------------
#   brute_force_solutions / coalgebra_morphisms
# ------------------------------------------------------------------------------


def brute_force_solutions(
    c: Coalgebra, a: Algebra, cap: Optional[int] = None
) -> List[FinFn]:
    """All h: C --> A with h = a∘Fh∘c, by enumerating every function."""
    _check_same_sig(c, a)
    check_size(
        "functions tried by brute force",
        len(a.carrier) ** len(c.carrier),
        cap,
    )
    return [
        h
        for h in all_functions(c.carrier, a.carrier)
        if verify_morphism(COALG_TO_ALG, h, c, a)
    ]


def coalgebra_morphisms(
    src: Coalgebra,
    dst: Coalgebra,
    allowed: Optional[Mapping[Elem, Sequence[Elem]]] = None,
    cap: Optional[int] = None,
) -> Iterator[FinFn]:
    """Every coalgebra morphism `src` --> `dst`, by backtracking.

    Source elements are assigned along the evaluation order of `src` when it
    is recursive. Then h(x) is forced into the preimage under d of
    Fh(c(x)), which keeps the search tiny. Otherwise the elements are
    assigned in carrier order and every equation is checked as soon as all
    its unknowns are fixed.

    Args:
        allowed (:obj:`Mapping`, optional):
            Restricts the candidate images per source element.
    """
    _check_same_sig(src, dst)
    cert = recursion_certificate(src)
    order = list(cert.order) if cert.recursive else list(src.carrier)
    if not cert.recursive:
        check_size(
            "coalgebra morphisms tried by backtracking",
            len(dst.carrier) ** len(src.carrier),
            cap,
        )

    preimage: Dict[FElem, List[Elem]] = {}
    for y in dst.carrier:
        preimage.setdefault(dst(y), []).append(y)

    position = {x: k for k, x in enumerate(order)}
    # Equations that become checkable once position `k` is assigned
    ready: Dict[int, List[Elem]] = {k: [] for k in range(len(order))}
    forced = {}
    for x in order:
        deps = [position[y] for y in felem_args(src(x))]
        last = max([position[x]] + deps)
        ready[last].append(x)
        forced[x] = all(k < position[x] for k in deps)

    def candidates(x: Elem, hmap: Dict[Elem, Elem]) -> Iterable[Elem]:
        pool = dst.carrier.elems if allowed is None else allowed.get(x, ())
        if forced[x]:
            hits = set(preimage.get(fmap(hmap, src(x)), ()))
            return [y for y in pool if y in hits]
        return pool

    hmap: Dict[Elem, Elem] = {}

    def backtrack(k: int) -> Iterator[FinFn]:
        if k == len(order):
            yield FinFn(src.carrier, dst.carrier, dict(hmap))
            return
        x = order[k]
        for y in candidates(x, hmap):
            hmap[x] = y
            if all(
                dst(hmap[z]) == fmap(hmap, src(z))
                for z in ready[k]
                if not forced[z]
            ):
                yield from backtrack(k + 1)
            del hmap[x]

    yield from backtrack(0)


# ------------------------------------------------------------------------------
#   iterate / sandwich_transfer
# ------------------------------------------------------------------------------


def iterate(c: Coalgebra, cap: Optional[int] = None) -> Coalgebra:
    """The coalgebra (F C, F c)."""
    img = apply_obj(c.sig, c.carrier, cap)
    check_size("F applied to F C", c.sig.size_of_image(len(img.obj)), cap)
    c_enc = {x: encode(fe) for x, fe in c.structure.items()}
    return Coalgebra(
        c.sig,
        img.obj,
        {name: fmap(c_enc, fe) for name, fe in img.decode.items()},
    )


@dataclass
class SandwichReport:
    hypotheses_hold: bool
    r_recursive: bool
    b_recursive: bool

    def to_json(self) -> dict:
        return {
            "hypotheses_hold": self.hypotheses_hold,
            "r_recursive": self.r_recursive,
            "b_recursive": self.b_recursive,
        }


def sandwich_transfer(
    r: Coalgebra,
    b: Coalgebra,
    h: FinFn,
    g: FinFn,
    cap: Optional[int] = None,
) -> SandwichReport:
    """Transfer of recursiveness from (R, r) to (B, b) through
    h: (R, r) --> (B, b) and g: (B, b) --> (F R, F r) with b = Fh∘g.

    Raises:
        :class:`~unchained.BaseErrors.HypothesisFailed`:
            With the violated equation and element as witness.
    """
    fr = iterate(r, cap)
    img = apply_obj(r.sig, r.carrier, cap)

    bad = first_violation(COALG, h, r, b)
    if bad is not None:
        raise HypothesisFailed(
            "h is not a coalgebra morphism (R, r) --> (B, b).",
            witness={"equation": "b∘h = Fh∘r", "element": bad},
        )
    bad = first_violation(COALG, g, b, fr)
    if bad is not None:
        raise HypothesisFailed(
            "g is not a coalgebra morphism (B, b) --> (FR, Fr).",
            witness={"equation": "Fr∘g = Fg∘b", "element": bad},
        )
    hmap = h.as_dict()
    for y in b.carrier:
        if b(y) != fmap(hmap, img.decode[g(y)]):
            raise HypothesisFailed(
                "b differs from Fh∘g.",
                witness={"equation": "b = Fh∘g", "element": y},
            )

    r_rec = is_recursive(r)
    b_rec = is_recursive(b)
    if r_rec and not b_rec:
        raise RecursivenessFailed(
            "(B, b) is not recursive although (R, r) is.",
            witness={"cycle": list(recursion_certificate(b).cycle)},
        )
    return SandwichReport(True, r_rec, b_rec)


# ------------------------------------------------------------------------------
#   colim_coalgebras
# ------------------------------------------------------------------------------


class CoalgebraDiagram:
    """Diagram of coalgebras whose edges are coalgebra morphisms."""

    def __init__(self, nodes: Mapping[str, Coalgebra], edges: Iterable[Edge] = ()):
        self.nodes: Dict[str, Coalgebra] = dict(nodes)
        self.edges: List[Edge] = list(edges)
        _check_same_sig(*self.nodes.values())
        self.carriers = Diagram(
            {node: c.carrier for node, c in self.nodes.items()}, self.edges
        )

        for e in self.edges:
            bad = first_violation(
                COALG, e.fn, self.nodes[e.src], self.nodes[e.dst]
            )
            if bad is not None:
                raise NotCoalgebraMorphism(
                    f"Edge `{e.id}` is not a coalgebra morphism.",
                    witness={"edge": e.id, "element": bad},
                )

    @property
    def sig(self) -> Optional[Signature]:
        for c in self.nodes.values():
            return c.sig
        return None


@dataclass
class CoalgebraColimit:
    coalgebra: Coalgebra
    injections: Dict[str, FinFn]
    colimit: ColimitData


def colim_coalgebras(
    d: CoalgebraDiagram,
    sig: Optional[Signature] = None,
    cap: Optional[int] = None,
) -> CoalgebraColimit:
    """Colimit of a diagram of coalgebras, created by the forgetful functor:
    the colimit of the carriers with the unique structure that turns every
    injection into a coalgebra morphism.

    Args:
        sig (:class:`~unchained.Signature_functor.Signature`, optional):
            Needed only for an empty diagram.
    """
    sig = d.sig or sig
    if sig is None:
        raise ValueError("An empty coalgebra diagram needs an explicit sig.")

    cd = colimit(d.carriers, cap)

    # Cocone (F c_i ∘ x_i)_i into the reached part of F(apex)
    decoder: Dict[Elem, FElem] = {}
    leg_maps = {}
    for node, c in d.nodes.items():
        inj = cd.injections[node].as_dict()
        leg = {}
        for x in c.carrier:
            fe = fmap(inj, c(x))
            leg[x] = encode(fe)
            decoder[leg[x]] = fe
        leg_maps[node] = leg
    reached = FinSet(tuple(decoder))
    legs = {
        node: FinFn(d.nodes[node].carrier, reached, leg)
        for node, leg in leg_maps.items()
    }
    v = mediate(cd, Cocone(reached, legs))

    apex = Coalgebra(sig, cd.apex, {r: decoder[v(r)] for r in cd.apex})
    for node, c in d.nodes.items():
        bad = first_violation(COALG, cd.injections[node], c, apex)
        if bad is not None:
            raise NotCoalgebraMorphism(
                f"Injection at `{node}` is not a coalgebra morphism.",
                witness={"node": node, "element": bad},
            )
    return CoalgebraColimit(apex, dict(cd.injections), cd)


# ------------------------------------------------------------------------------
#   lambek_check / initial_from_iso
# ------------------------------------------------------------------------------


def lambek_check(c: Coalgebra, h: FinFn, cap: Optional[int] = None) -> FinFn:
    """Given h: F C --> C, confirm that c is an isomorphism with inverse h.

    Requires h to be a coalgebra morphism (F C, F c) --> (C, c) and the
    identity to be the only coalgebra endomorphism of (C, c).

    Raises:
        :class:`~unchained.BaseErrors.NotMorphism`,
        :class:`~unchained.BaseErrors.UniquenessFailed`,
        :class:`~unchained.BaseErrors.NotInverse`
    """
    fc = iterate(c, cap)
    bad = first_violation(COALG, h, fc, c)
    if bad is not None:
        raise NotMorphism(
            "h is not a coalgebra morphism (FC, Fc) --> (C, c).",
            witness={"element": bad},
        )

    id_c = identity(c.carrier)
    for e in coalgebra_morphisms(c, c, cap=cap):
        if e != id_c:
            raise UniquenessFailed(
                "(C, c) has a coalgebra endomorphism other than the identity.",
                witness=e.as_dict(),
            )

    cfn = c.structure_fn(cap)
    for x in c.carrier:
        if h(cfn(x)) != x:
            raise NotInverse(
                "h∘c is not the identity.", witness={"element": x}
            )
    for y in fc.carrier:
        if cfn(h(y)) != y:
            raise NotInverse(
                "c∘h is not the identity.", witness={"element": y}
            )
    return h


@dataclass
class InitialAlgebra:
    """The algebra (C, c⁻¹) of a recursive coalgebra with bijective structure.
    Such an algebra is initial."""

    coalgebra: Coalgebra
    algebra: Algebra

    def unique_morphism(self, b: Algebra, cap: Optional[int] = None) -> FinFn:
        """The unique algebra morphism into `b`, computed as the hylomorphism
        and confirmed unique by brute force over all functions.

        Raises:
            :class:`~unchained.BaseErrors.UniquenessFailed`
        """
        h = hylo(self.coalgebra, b)
        check_size(
            "functions tried by brute force",
            len(b.carrier) ** len(self.algebra.carrier),
            cap,
        )
        found = [
            f
            for f in all_functions(self.algebra.carrier, b.carrier)
            if verify_morphism(ALG, f, self.algebra, b)
        ]
        if found != [h]:
            raise UniquenessFailed(
                f"Expected exactly the hylomorphism, found {len(found)} "
                "algebra morphisms.",
                witness=[f.as_dict() for f in found],
            )
        return h


def initial_from_iso(c: Coalgebra, cap: Optional[int] = None) -> InitialAlgebra:
    cert = recursion_certificate(c)
    if not cert.recursive:
        raise NotRecursive(
            "Coalgebra is not recursive.",
            witness={"cycle": list(cert.cycle)},
        )
    cfn = c.structure_fn(cap)
    inv = try_inverse(cfn)
    if inv is None:
        raise NotBijective(
            "The coalgebra structure is not bijective.",
            witness={
                "carrier": len(cfn.dom),
                "F_carrier": len(cfn.cod),
                "image": len(cfn.image()),
            },
        )
    img = apply_obj(c.sig, c.carrier, cap)
    algebra = Algebra(
        c.sig,
        c.carrier,
        {fe: inv(name) for name, fe in img.decode.items()},
        name="initial",
        cap=cap,
    )
    return InitialAlgebra(c, algebra)


# ------------------------------------------------------------------------------
#   split_to_canonical
# ------------------------------------------------------------------------------


class SplitResult(NamedTuple):
    coalgebra: Coalgebra
    e: FinFn
    m: FinFn


def relabel(c: Coalgebra, bij: FinFn) -> Coalgebra:
    """Transport (C, c) along a bijection C --> P."""
    inv = try_inverse(bij)
    if inv is None:
        raise NotBijective("relabel needs a bijection.")
    bmap = bij.as_dict()
    return Coalgebra(
        c.sig, bij.cod, {p: fmap(bmap, c(inv(p))) for p in bij.cod}
    )


def split_to_canonical(c: Coalgebra) -> SplitResult:
    """Rename the carrier to {0, ..., n-1} in canonical order. Returns the
    ordinal coalgebra with structure Fm∘c∘e, and e: P --> C, m: C --> P
    with e∘m = id."""
    p = FinSet.ordinal(len(c.carrier))
    m = FinFn.from_images(c.carrier, p, p.elems)
    e = FinFn.from_images(p, c.carrier, c.carrier.elems)
    return SplitResult(relabel(c, m), e, m)
