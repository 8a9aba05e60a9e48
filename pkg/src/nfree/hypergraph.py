"""Hypergraphs, their anticlique and clique algebras, and posets.

Vertex sets and edges are stored as bitmasks over vertex indices.  The
anticliques (or cliques) of a hypergraph are listed in ascending bitset order
and that list is the ground set of its algebra, so ``idx(A)`` below always
means the position of ``A`` in that list.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import (
    Element,
    FieldAlgebra,
    GeneratedAlgebra,
    Homomorphism,
    generator_isomorphism,
    iter_bits,
    sikorski_extend,
)
from .config import get_limits
from .errors import (
    InvalidHypergraph,
    InvalidPoset,
    JoinOnNonGraph,
    NotAGraph,
    NotOmegaIndependent,
    NotOrderPreserving,
    ReconstructionFailed,
    TooManyVertices,
    ZeroGenerator,
)
from .independence import OMEGA, Verdict, _family, _Tables, is_n_independent, is_n_preserving

__all__ = [
    "Hypergraph",
    "Poset",
    "complete_graph",
    "edgeless",
    "anticliques",
    "cliques",
    "anticlique_algebra",
    "clique_algebra",
    "perp_hypergraph",
    "minimalize",
    "verify_reconstruction",
    "is_hypergraph_homomorphism",
    "disjoint_union",
    "join",
    "comparability_graph",
    "chains",
    "antichains",
    "bco",
    "baco",
    "induced_incomparability_hom",
]


@dataclass(frozen=True)
class Hypergraph:
    """A finite loopless hypergraph.

    ``edges`` may be given as iterables of vertex labels; they are stored as
    a sorted tuple of vertex-index bitmasks.
    """

    vertices: tuple
    edges: tuple = ()
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        index = {}
        for i, v in enumerate(vertices):
            if v in index:
                raise InvalidHypergraph(f"duplicate vertex {v!r}")
            index[v] = i
        masks = set()
        for e in self.edges:
            if isinstance(e, int) and not isinstance(e, bool):
                mask = e
                if mask >> len(vertices):
                    raise InvalidHypergraph(f"edge mask {mask:#x} outside the vertex set")
            else:
                mask = 0
                for v in e:
                    if v not in index:
                        raise InvalidHypergraph(f"edge member {v!r} is not a vertex")
                    mask |= 1 << index[v]
            if mask.bit_count() < 2:
                raise InvalidHypergraph("hyperedges must have at least two vertices")
            if mask in masks:
                raise InvalidHypergraph(f"duplicate edge {self._labels_of(vertices, mask)}")
            masks.add(mask)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(sorted(masks)))
        object.__setattr__(self, "_index", index)

    @staticmethod
    def _labels_of(vertices, mask) -> tuple:
        return tuple(vertices[i] for i in iter_bits(mask))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index(self, v) -> int:
        return self._index[v]

    def vertex_mask(self, labels: Iterable) -> int:
        mask = 0
        for v in labels:
            mask |= 1 << self._index[v]
        return mask

    def labels(self, mask: int) -> tuple:
        return self._labels_of(self.vertices, mask)

    def edge_labels(self) -> list[tuple]:
        return [self.labels(e) for e in self.edges]

    @property
    def max_edge_size(self) -> int:
        return max((e.bit_count() for e in self.edges), default=0)

    @property
    def is_graph(self) -> bool:
        return all(e.bit_count() == 2 for e in self.edges)

    def is_uniform(self, n: int) -> bool:
        return all(e.bit_count() == n for e in self.edges)

    def is_bounded(self, n: int) -> bool:
        return all(e.bit_count() <= n for e in self.edges)

    def relabel(self, mapping: Callable) -> Hypergraph:
        return Hypergraph(tuple(mapping(v) for v in self.vertices), self.edges)

    def __repr__(self):
        return f"Hypergraph({list(self.vertices)!r}, {self.edge_labels()!r})"


def complete_graph(n: int, labels: Sequence | None = None) -> Hypergraph:
    vs = tuple(range(n)) if labels is None else tuple(labels)
    return Hypergraph(vs, tuple((1 << i) | (1 << j) for i, j in combinations(range(n), 2)))


def edgeless(n: int, labels: Sequence | None = None) -> Hypergraph:
    return Hypergraph(tuple(range(n)) if labels is None else tuple(labels), ())


def _vertex_cap(g: Hypergraph) -> None:
    cap = get_limits().max_vertices
    if g.order > cap:
        raise TooManyVertices(f"{g.order} vertices exceed cap {cap}")


def anticlique_masks(g: Hypergraph) -> list[int]:
    _vertex_cap(g)
    edges = g.edges
    return [a for a in range(1 << g.order) if not any(e & ~a == 0 for e in edges)]


def anticliques(g: Hypergraph) -> list[tuple]:
    """Vertex sets including no hyperedge, ascending bitset order."""
    return [g.labels(a) for a in anticlique_masks(g)]


def _require_graph(g: Hypergraph, exc=NotAGraph) -> None:
    if not g.is_graph:
        raise exc("operation defined for 2-uniform graphs only")


def clique_masks(g: Hypergraph) -> list[int]:
    _require_graph(g)
    _vertex_cap(g)
    adjacent = set(g.edges)
    out = []
    for c in range(1 << g.order):
        members = list(iter_bits(c))
        if all((1 << u) | (1 << v) in adjacent for u, v in combinations(members, 2)):
            out.append(c)
    return out


def cliques(g: Hypergraph) -> list[tuple]:
    return [g.labels(c) for c in clique_masks(g)]


def _plus_algebra(g: Hypergraph, sets: list[int]) -> GeneratedAlgebra:
    ambient = FieldAlgebra(tuple(g.labels(a) for a in sets))
    gens = []
    for v in range(g.order):
        mask = 0
        for pos, a in enumerate(sets):
            if a >> v & 1:
                mask |= 1 << pos
        gens.append(Element(ambient, mask))
    return GeneratedAlgebra(ambient, tuple(gens), g.vertices)


def anticlique_algebra(g: Hypergraph) -> GeneratedAlgebra:
    """``BA(G)``: generated by ``v₊`` = anticliques containing ``v``, inside
    the powerset of the anticliques.  Generators follow vertex order and are
    named by the vertex labels."""
    return _plus_algebra(g, anticlique_masks(g))


def clique_algebra(g: Hypergraph) -> GeneratedAlgebra:
    """``BC(G)`` for a graph: the same construction over cliques."""
    return _plus_algebra(g, clique_masks(g))


def perp_hypergraph(xs, names: Sequence | None = None, checked: bool = True) -> Hypergraph:
    """The hypergraph on the family whose edges are its minimal zero-product subsets.

    ``xs`` is a sequence of elements or a :class:`GeneratedAlgebra` (whose
    generators and names are used).  The family must avoid 0 and, unless
    ``checked`` is false, be omega-independent.
    """
    if isinstance(xs, GeneratedAlgebra):
        names = xs.names if names is None else names
        xs = xs.generators
    xs = list(xs)
    elems, masks, top = _family(xs)
    if len(elems) != len(xs):
        raise InvalidHypergraph("family has repeated elements")
    for i, m in enumerate(masks):
        if m == 0:
            raise ZeroGenerator(f"generator {i} is 0")
    if checked and not is_n_independent(elems, OMEGA).holds:
        raise NotOmegaIndependent("the family is not omega-independent")
    names = tuple(range(len(elems))) if names is None else tuple(names)
    if not elems:
        return Hypergraph(names, ())
    t = _Tables(masks, top)
    edges = []
    by_size = sorted(range(1, 1 << len(elems)), key=lambda s: (s.bit_count(), s))
    for s in by_size:
        if t.prod[s] != 0:
            continue
        if any(e & ~s == 0 for e in edges):
            continue
        edges.append(s)
    return Hypergraph(names, tuple(edges))


def minimalize(g: Hypergraph) -> Hypergraph:
    """Drop every edge that properly contains another edge."""
    keep = [e for e in g.edges if not any(f != e and f & ~e == 0 for f in g.edges)]
    return Hypergraph(g.vertices, tuple(keep))


def verify_reconstruction(a: GeneratedAlgebra, checked: bool = True) -> Homomorphism:
    """Rebuild ``a`` as the anticlique algebra of its ⊥-hypergraph.

    Returns the forward isomorphism ``x_i ↦ (x_i)₊`` after checking that
    both directions extend and compose to identities.
    """
    g = perp_hypergraph(a, checked=checked)
    b = anticlique_algebra(g)
    if len(a.atom_masks) != len(b.atom_masks):
        raise ReconstructionFailed(
            f"atom counts differ: {len(a.atom_masks)} vs {len(b.atom_masks)}"
        )
    try:
        return generator_isomorphism(a, b)
    except Exception as exc:
        raise ReconstructionFailed(str(exc)) from exc


def is_hypergraph_homomorphism(f: Mapping, g: Hypergraph, h: Hypergraph) -> Verdict:
    """Every edge of ``g`` must map, as a set, onto an edge of ``h``.

    Collapsed images smaller than two vertices are never edges.  The witness
    is the first offending edge of ``g`` as a label tuple.
    """
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise InvalidHypergraph(f"map undefined on {missing}")
    targets = set(h.edges)
    for e in g.edges:
        try:
            image = h.vertex_mask(f[v] for v in g.labels(e))
        except KeyError:
            return Verdict(False, g.labels(e))
        if image not in targets:
            return Verdict(False, g.labels(e))
    return Verdict(True)


def _default_relabel(i, v):
    return (i, v)


def disjoint_union(graphs: Sequence[Hypergraph], relabel: Callable = _default_relabel) -> Hypergraph:
    """Vertex ``v`` of factor ``i`` becomes ``relabel(i, v)``."""
    vertices, edges, offset = [], [], 0
    for i, g in enumerate(graphs):
        vertices += [relabel(i, v) for v in g.vertices]
        edges += [e << offset for e in g.edges]
        offset += g.order
    cap = get_limits().max_vertices
    if offset > cap:
        raise TooManyVertices(f"{offset} vertices exceed cap {cap}")
    return Hypergraph(tuple(vertices), tuple(edges))


def join(graphs: Sequence[Hypergraph], relabel: Callable = _default_relabel) -> Hypergraph:
    """Disjoint union of graphs plus every edge between different factors."""
    for g in graphs:
        _require_graph(g, JoinOnNonGraph)
    union = disjoint_union(graphs, relabel)
    blocks, offset = [], 0
    for g in graphs:
        blocks.append(range(offset, offset + g.order))
        offset += g.order
    cross = [
        (1 << u) | (1 << v)
        for a, b in combinations(blocks, 2)
        for u in a
        for v in b
    ]
    return Hypergraph(union.vertices, union.edges + tuple(cross))


# ---------------------------------------------------------------- posets


@dataclass(frozen=True)
class Poset:
    """A strict partial order given by its ``<`` pairs."""

    elements: tuple
    strict_lt: frozenset

    def __post_init__(self):
        elements = tuple(self.elements)
        if len(set(elements)) != len(elements):
            raise InvalidPoset("duplicate poset element")
        pairs = frozenset((p, q) for p, q in self.strict_lt)
        known = set(elements)
        for p, q in pairs:
            if p not in known or q not in known:
                raise InvalidPoset(f"pair ({p!r}, {q!r}) mentions an unknown element")
            if p == q:
                raise InvalidPoset(f"{p!r} < {p!r} violates irreflexivity")
        for p, q in pairs:
            for q2, r in pairs:
                if q == q2 and (p, r) not in pairs:
                    raise InvalidPoset(f"not transitive: {p!r} < {q!r} < {r!r}")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "strict_lt", pairs)

    @classmethod
    def from_relation(cls, elements: Iterable, pairs: Iterable) -> tuple[Poset, int]:
        """Close ``pairs`` transitively; returns the poset and how many pairs were added."""
        closed = {tuple(p) for p in pairs}
        given = len(closed)
        changed = True
        while changed:
            changed = False
            for p, q in list(closed):
                for q2, r in list(closed):
                    if q == q2 and (p, r) not in closed:
                        closed.add((p, r))
                        changed = True
        return cls(tuple(elements), frozenset(closed)), len(closed) - given

    def lt(self, p, q) -> bool:
        return (p, q) in self.strict_lt

    def comparable(self, p, q) -> bool:
        return self.lt(p, q) or self.lt(q, p)


def comparability_graph(p: Poset) -> Hypergraph:
    """Vertices are the elements; edges join distinct comparable pairs."""
    edges = {frozenset(pair) for pair in p.strict_lt}
    return Hypergraph(p.elements, tuple(tuple(sorted(e, key=p.elements.index)) for e in edges))


def chains(p: Poset) -> list[tuple]:
    out = []
    n = len(p.elements)
    for s in range(1 << n):
        members = [p.elements[i] for i in iter_bits(s)]
        if all(p.comparable(a, b) for a, b in combinations(members, 2)):
            out.append(tuple(members))
    return out


def antichains(p: Poset) -> list[tuple]:
    out = []
    n = len(p.elements)
    for s in range(1 << n):
        members = [p.elements[i] for i in iter_bits(s)]
        if not any(p.comparable(a, b) for a, b in combinations(members, 2)):
            out.append(tuple(members))
    return out


def bco(p: Poset) -> GeneratedAlgebra:
    """Comparability algebra: the clique algebra of the comparability graph."""
    return clique_algebra(comparability_graph(p))


def baco(p: Poset) -> GeneratedAlgebra:
    """Incomparability algebra: the anticlique algebra of the comparability graph."""
    return anticlique_algebra(comparability_graph(p))


def induced_incomparability_hom(f: Mapping, p: Poset, q: Poset) -> Homomorphism:
    """``f* : Baco(P) → Baco(Q)`` with ``f*(p₊) = f(p)₊`` for strictly
    order-preserving ``f``."""
    for a, b in p.strict_lt:
        if a not in f or b not in f:
            raise NotOrderPreserving(f"map undefined on {a if a not in f else b!r}")
        if not q.lt(f[a], f[b]):
            raise NotOrderPreserving(f"{a!r} < {b!r} but not f({a!r}) < f({b!r})")
    for a in p.elements:
        if a not in f:
            raise NotOrderPreserving(f"map undefined on {a!r}")
    source = baco(p)
    target = baco(q)
    images = [target.generators[q.elements.index(f[a])] for a in p.elements]
    if not is_n_preserving(list(source.generators), 2, images).holds:
        raise NotOrderPreserving("generator map is not 2-preserving")
    return sikorski_extend(source, images, target.ambient)
