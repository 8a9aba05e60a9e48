"""Slow, literal reference implementations used as test oracles.

Everything here works on frozensets of ground points and follows the
definitions word for word, without bitmasks, dynamic programming or pruning.
Nothing in this file imports the package under test.
"""
from __future__ import annotations

from functools import reduce
from itertools import chain, combinations, product


def subsets(items, min_size=0, max_size=None):
    items = list(items)
    top = len(items) if max_size is None else min(max_size, len(items))
    return chain.from_iterable(combinations(items, r) for r in range(min_size, top + 1))


def meet(sets, ground):
    return reduce(lambda a, b: a & b, sets, frozenset(ground))


def join(sets):
    return reduce(lambda a, b: a | b, sets, frozenset())


# ---------------------------------------------------------------- independence


def perp1(xs, ground):
    return all(join(F) != ground for F in subsets(xs, 1))


def perp2(xs, ground, n):
    for F in subsets(xs, 1):
        if not meet(F, ground):
            if not any(not meet(Fp, ground) for Fp in subsets(F, 1, n)):
                return False
    return True


def perp3(xs, ground):
    xs = list(xs)
    for F in subsets(xs, 1):
        p = meet(F, ground)
        if not p:
            continue
        rest = [x for x in xs if x not in F]
        for G in subsets(rest, 1):
            if p <= join(G):
                return False
    return True


def n_independent(xs, ground, n):
    """``n`` is a positive int or ``None`` for omega."""
    xs = list(dict.fromkeys(frozenset(x) for x in xs))
    ground = frozenset(ground)
    if any(not x for x in xs):
        return False
    if not perp1(xs, ground) or not perp3(xs, ground):
        return False
    return n is None or perp2(xs, ground, n)


def elementary_value(xs, signs, ground):
    acc = frozenset(ground)
    for x, s in zip(xs, signs):
        acc &= x if s else ground - x
    return acc


def fully_independent(xs, ground):
    ground = frozenset(ground)
    return all(elementary_value(xs, signs, ground) for signs in product((0, 1), repeat=len(xs)))


# ---------------------------------------------------------------- subalgebras


def closure(gens, ground):
    """Close under union, intersection and complement, starting from 0 and 1."""
    ground = frozenset(ground)
    elems = {frozenset(), ground} | {frozenset(g) for g in gens}
    while True:
        new = set(elems)
        for a in elems:
            new.add(ground - a)
            for b in elems:
                new.add(a | b)
                new.add(a & b)
        if new == elems:
            return elems
        elems = new


def atoms_of(elems):
    nonzero = [e for e in elems if e]
    return sorted(
        (e for e in nonzero if not any(f < e for f in nonzero)), key=lambda s: sorted(s)
    )


def homomorphism_exists(gens, ground, images, target):
    """Stone duality at finite scale: homomorphisms ``⟨gens⟩ → P(target)``
    are the maps from target points to atoms of ``⟨gens⟩``."""
    atoms = atoms_of(closure(gens, ground))
    target = list(target)
    for choice in product(range(len(atoms)), repeat=len(target)):
        if all(
            frozenset(t for t, c in zip(target, choice) if atoms[c] <= g) == frozenset(img)
            for g, img in zip(gens, images)
        ):
            return True
    return False


def n_preserving(gens, ground, images, target, n):
    ground, target = frozenset(ground), frozenset(target)
    for idx in subsets(range(len(gens)), 1, n):
        if not meet([gens[i] for i in idx], ground) and meet([images[i] for i in idx], target):
            return False
    return True


# ---------------------------------------------------------------- hypergraphs


def anticliques(vertices, edges):
    edges = [frozenset(e) for e in edges]
    return [
        frozenset(a)
        for a in subsets(vertices)
        if not any(e <= frozenset(a) for e in edges)
    ]


def cliques(vertices, edges):
    es = {frozenset(e) for e in edges}
    return [
        frozenset(c)
        for c in subsets(vertices)
        if all(frozenset(p) in es for p in combinations(c, 2))
    ]


def plus_sets(vertices, ground_sets):
    """``v₊`` for each vertex, as sets of (frozenset) ground points."""
    return [frozenset(a for a in ground_sets if v in a) for v in vertices]


def minimal_zero_sets(xs, ground):
    ground = frozenset(ground)
    zero = [frozenset(F) for F in subsets(range(len(xs)), 1) if not meet([xs[i] for i in F], ground)]
    return sorted((z for z in zero if not any(w < z for w in zero)), key=lambda s: (len(s), sorted(s)))


def all_hypergraph_edge_sets(n):
    """Every edge set on ``range(n)``, i.e. every family of subsets of size ≥ 2."""
    possible = [frozenset(c) for c in subsets(range(n), 2)]
    for chosen in subsets(possible):
        yield list(chosen)


# ---------------------------------------------------------------- set systems


def n_linked(family, ground, n):
    return all(meet(F, ground) for F in subsets(family, 1, n))


def n_ary(family, ground, n):
    return all(
        meet(F, ground)
        for F in subsets(family, 1)
        if n_linked(F, ground, n)
    )


# ---------------------------------------------------------------- maximal families


def maximal_families(ground, n, max_size):
    """All maximal n-independent families in P(ground) of size at most ``max_size``."""
    ground = frozenset(ground)
    nonzero = [frozenset(s) for s in subsets(sorted(ground), 1)]
    indep = [F for F in subsets(nonzero, 0, max_size) if n_independent(F, ground, n)]
    out = []
    for F in indep:
        if not any(c not in F and n_independent(list(F) + [c], ground, n) for c in nonzero):
            out.append(F)
    return out


def weakly_dense(ys, ground):
    ground = frozenset(ground)
    return all(
        any(y <= a or y <= ground - a for y in ys)
        for a in (frozenset(s) for s in subsets(sorted(ground), 1))
    )


def disjunctive(hs):
    hs = list(hs)
    for h in hs:
        for F in subsets(hs, 1):
            if h <= join(F) and not any(h <= x for x in F):
                return False
    return True
