"""Finite hypergraph spaces, kept as set systems over the anticliques.

A finite space is discrete, so no topology object is built.  What carries
information is the closed subbase ``{v₊, v₋}`` and how many of its members
must be tested to see an empty intersection: its arity.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .algebra import FieldAlgebra, iter_bits
from .config import get_limits
from .errors import InvalidHypergraph, TooLargeForExhaustive
from .hypergraph import Hypergraph, anticlique_masks
from .independence import Verdict

__all__ = [
    "SubbaseFamily",
    "CompactnessBound",
    "subbase",
    "is_n_linked",
    "is_n_ary",
    "cmpn_upper_bound",
    "disjoint_union_family",
]


@dataclass(frozen=True)
class SubbaseFamily:
    """Tagged subsets of a labelled ground set.

    For a hypergraph subbase the tags are ``(v, "+")`` and ``(v, "-")``.
    """

    ground: tuple
    sets: tuple[int, ...]
    tags: tuple

    def __post_init__(self):
        if len(self.sets) != len(self.tags):
            raise ValueError("one tag per set is required")
        top = (1 << len(self.ground)) - 1
        for m in self.sets:
            if m & ~top:
                raise ValueError("set has points outside the ground")

    @property
    def top(self) -> int:
        return (1 << len(self.ground)) - 1

    def __len__(self):
        return len(self.sets)

    def get(self, tag) -> int:
        return self.sets[self.tags.index(tag)]

    def members(self, tag) -> tuple:
        return tuple(self.ground[i] for i in iter_bits(self.get(tag)))

    def algebra(self) -> FieldAlgebra:
        return FieldAlgebra(self.ground)


def subbase(g: Hypergraph) -> SubbaseFamily:
    """``v₊`` and ``v₋`` for every vertex, in vertex order, over the anticliques."""
    ground = anticlique_masks(g)
    sets, tags = [], []
    top = (1 << len(ground)) - 1
    for v in range(g.order):
        plus = 0
        for pos, a in enumerate(ground):
            if a >> v & 1:
                plus |= 1 << pos
        minus = top & ~plus
        sets += [plus, minus]
        tags += [(g.vertices[v], "+"), (g.vertices[v], "-")]
    return SubbaseFamily(tuple(g.labels(a) for a in ground), tuple(sets), tuple(tags))


def _as_masks(family) -> tuple[list[int], int | None, list]:
    if isinstance(family, SubbaseFamily):
        return list(family.sets), family.top, list(family.tags)
    masks = [int(m) for m in family]
    return masks, None, list(range(len(masks)))


def _meet(masks: Sequence[int], top: int) -> int:
    acc = top
    for m in masks:
        acc &= m
    return acc


def _linked_fail(masks: Sequence[int], idx: Sequence[int], n: int, top: int):
    """First subfamily of at most ``n`` members (by size, then index order)
    with empty intersection."""
    for r in range(1, min(n, len(idx)) + 1):
        for combo in combinations(idx, r):
            if _meet([masks[i] for i in combo], top) == 0:
                return combo
    return None


def is_n_linked(family, n: int, top: int | None = None) -> Verdict:
    """Every ``n`` members meet.

    Members may repeat, so this is tested on every subfamily of at most
    ``n`` sets.  ``family`` is a :class:`SubbaseFamily` or a sequence of
    bitmasks; the witness is a tuple of tags (indices for plain masks).
    """
    if n < 1:
        raise ValueError("n must be positive")
    masks, fam_top, tags = _as_masks(family)
    if top is None:
        top = fam_top if fam_top is not None else _union_top(masks)
    hit = _linked_fail(masks, range(len(masks)), n, top)
    if hit is None:
        return Verdict(True)
    return Verdict(False, tuple(tags[i] for i in hit))


def _union_top(masks) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def is_n_ary(family, n: int) -> Verdict:
    """Every n-linked subfamily has a common point.

    The empty subfamily meets in the whole ground set.  Search is
    depth-first over subfamilies in index order, extending only n-linked
    ones (n-linkedness passes to subfamilies); the witness is the first
    n-linked subfamily found with empty intersection, as a tuple of tags.
    """
    if n < 1:
        raise ValueError("n must be positive")
    masks, top, tags = _as_masks(family)
    if top is None:
        top = _union_top(masks)
    cap = get_limits().max_family
    if len(masks) > cap:
        raise TooLargeForExhaustive(f"family of {len(masks)} sets exceeds cap {cap}")
    k = len(masks)

    def extends(chosen: list[int], j: int) -> bool:
        # chosen is n-linked already; only subfamilies containing j are new
        return all(
            _meet([masks[i] for i in combo] + [masks[j]], top)
            for combo in _combos(chosen, n - 1)
        )

    def walk(chosen: list[int], meet: int, start: int):
        if chosen and meet == 0:
            return tuple(chosen)
        for j in range(start, k):
            if extends(chosen, j):
                found = walk(chosen + [j], meet & masks[j], j + 1)
                if found is not None:
                    return found
        return None

    hit = walk([], top, 0)
    if hit is None:
        return Verdict(True)
    return Verdict(False, tuple(tags[i] for i in hit))


def _combos(items, r):
    for size in range(0, min(r, len(items)) + 1):
        yield from combinations(items, size)


@dataclass(frozen=True)
class CompactnessBound:
    """Least ``n ≥ 2`` for which the subbase is n-ary.

    ``one_ary`` flags the special case where even 1-arity holds.
    """

    n: int
    max_edge_size: int
    one_ary: bool


def cmpn_upper_bound(g: Hypergraph) -> CompactnessBound:
    family = subbase(g)
    one_ary = is_n_ary(family, 1).holds
    # an n-linked family of at most n sets meets, so n = max(2, |family|) always works
    for n in range(2, max(2, len(family)) + 1):
        if is_n_ary(family, n).holds:
            return CompactnessBound(n, g.max_edge_size, one_ary)
    raise InvalidHypergraph("no arity bound found")


def disjoint_union_family(p: SubbaseFamily, q: SubbaseFamily) -> SubbaseFamily:
    """``S ∪ T ∪ {X, Y}`` over the disjoint union of the two grounds.

    Points and tags are prefixed with the factor index; the two ground
    copies are tagged ``("ground", 0)`` and ``("ground", 1)``.
    """
    shift = len(p.ground)
    ground = tuple((0, x) for x in p.ground) + tuple((1, y) for y in q.ground)
    sets = list(p.sets) + [m << shift for m in q.sets] + [p.top, q.top << shift]
    tags = (
        [(0, t) for t in p.tags]
        + [(1, t) for t in q.tags]
        + [("ground", 0), ("ground", 1)]
    )
    return SubbaseFamily(ground, tuple(sets), tuple(tags))
