"""Independence notions for finite families of elements.

A family ``X`` is handled as a set: duplicates are dropped, order is kept and
fixes the canonical order of witnesses.  Every quantifier "for all finite
F ⊆ X" becomes a loop over bitmasks of ``X``'s indices, so everything here is
exponential in ``|X|`` and meant for small families.

Two routes decide n-independence.  The definitional one checks ``0 ∉ X``,
(⊥1), (⊥2)ₙ and (⊥3) as stated.  The elementary-product route checks that
every zero elementary product has at most ``n`` uncomplemented factors with
zero product.  :func:`is_n_independent` runs both and refuses to answer if
they disagree.
"""
from __future__ import annotations

import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Union

from .algebra import (
    Element,
    FieldAlgebra,
    GeneratedAlgebra,
    eval_elementary_product,
    ElementaryProduct,
    iter_bits,
    sikorski_extend,
    submasks_ascending,
)
from .config import get_limits
from .errors import (
    AlgebraMismatch,
    CriterionViolated,
    InternalDisagreement,
    NotIndependentInput,
    NotMaximalInput,
    TooLargeForExhaustive,
    ZeroInH,
    ZeroInY,
)

__all__ = [
    "OMEGA",
    "parse_degree",
    "Verdict",
    "ContainsZero",
    "Perp1Fail",
    "Perp2Fail",
    "Perp3Fail",
    "PropAFail",
    "IndependenceReport",
    "Perp3Variants",
    "Spectrum",
    "is_n_preserving",
    "check_perp1",
    "check_perp2_n",
    "check_perp3",
    "perp3_variants",
    "is_n_independent",
    "is_independent",
    "is_maximal",
    "extend_to_maximal",
    "i_n_spectrum",
    "i_n",
    "maximality_atom_check",
    "nonzero_elementary_products",
    "is_weakly_dense",
    "product_closure",
    "is_disjunctive",
    "is_disjunctive_via_downsets",
]


class _Omega:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"

    def __str__(self):
        return "omega"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()
NDegree = Union[int, _Omega]


def parse_degree(text) -> NDegree:
    if text is OMEGA or (isinstance(text, str) and text.strip().lower() in ("omega", "ω")):
        return OMEGA
    n = int(text)
    if n < 1:
        raise ValueError(f"degree must be a positive integer or omega, got {n}")
    return n


def _bound(n) -> int | None:
    """Finite bound on zero-product witnesses, ``None`` for omega."""
    if n is OMEGA:
        return None
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"degree must be a positive integer or OMEGA, got {n!r}")
    return n


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no check; ``witness`` is set exactly when it fails."""

    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


# ---------------------------------------------------------------- families


def _family(xs: Iterable[Element]) -> tuple[tuple[Element, ...], list[int], int | None]:
    elems: list[Element] = []
    seen = set()
    algebra = None
    for x in xs:
        if not isinstance(x, Element):
            raise TypeError(f"expected Element, got {type(x).__name__}")
        if algebra is None:
            algebra = x.algebra
        elif x.algebra != algebra:
            raise AlgebraMismatch("family mixes elements of different algebras")
        if x.mask not in seen:
            seen.add(x.mask)
            elems.append(x)
    top = algebra.top if algebra is not None else None
    return tuple(elems), [x.mask for x in elems], top


class _Tables:
    """Products and sums of every subfamily, indexed by bitmask."""

    __slots__ = ("k", "top", "masks", "prod", "sum")

    def __init__(self, masks: Sequence[int], top: int):
        k = len(masks)
        size = 1 << k
        prod = [top] * size
        total = [0] * size
        for s in range(1, size):
            low = s & -s
            i = low.bit_length() - 1
            prod[s] = prod[s ^ low] & masks[i]
            total[s] = total[s ^ low] | masks[i]
        self.k, self.top, self.masks, self.prod, self.sum = k, top, masks, prod, total

    def has_small_zero(self, bound: int | None) -> list[bool]:
        """``out[F]``: some ``F' ⊆ F`` with ``|F'| ≤ bound`` has product 0."""
        prod = self.prod
        size = 1 << self.k
        if bound is None:
            return [p == 0 for p in prod]
        out = [False] * size
        for s in range(size):
            if s.bit_count() <= bound and prod[s] == 0:
                out[s] = True
                continue
            rest = s
            while rest:
                low = rest & -rest
                if out[s ^ low]:
                    out[s] = True
                    break
                rest ^= low
        return out


def _pick(elems: Sequence[Element], mask: int) -> tuple[Element, ...]:
    return tuple(elems[i] for i in iter_bits(mask))


def _prod(elems: Sequence[Element], algebra: FieldAlgebra) -> Element:
    acc = algebra.one
    for x in elems:
        acc = acc * x
    return acc


def _sum(elems: Sequence[Element], algebra: FieldAlgebra) -> Element:
    acc = algebra.zero
    for x in elems:
        acc = acc + x
    return acc


# ---------------------------------------------------------------- witnesses


@dataclass(frozen=True)
class ContainsZero:
    element: Element

    def verify(self) -> bool:
        return self.element.is_zero


@dataclass(frozen=True)
class Perp1Fail:
    """A nonempty finite ``F`` with ``ΣF = 1``."""

    F: tuple

    def verify(self) -> bool:
        return bool(self.F) and _sum(self.F, self.F[0].algebra).is_one


@dataclass(frozen=True)
class Perp2Fail:
    """``ΠF = 0`` but no ``F' ⊆ F`` with ``|F'| ≤ n`` has product 0."""

    F: tuple
    n: int

    def verify(self) -> bool:
        if not self.F:
            return False
        alg = self.F[0].algebra
        if not _prod(self.F, alg).is_zero:
            return False
        return not any(
            _prod(sub, alg).is_zero
            for r in range(1, min(self.n, len(self.F)) + 1)
            for sub in combinations(self.F, r)
        )


@dataclass(frozen=True)
class Perp3Fail:
    """Disjoint nonempty ``F, G`` with ``0 ≠ ΠF ≤ ΣG``."""

    F: tuple
    G: tuple

    def verify(self) -> bool:
        if not self.F or not self.G or set(self.F) & set(self.G):
            return False
        alg = self.F[0].algebra
        p = _prod(self.F, alg)
        return not p.is_zero and p <= _sum(self.G, alg)


@dataclass(frozen=True)
class PropAFail:
    """A zero elementary product over ``R`` with signs ``signs`` whose
    uncomplemented factors contain no zero-product subset of size ``≤ n``
    (``n`` is ``None`` for omega)."""

    R: tuple
    signs: tuple
    n: int | None

    @property
    def positive(self) -> tuple:
        return tuple(x for x, s in zip(self.R, self.signs) if s == 1)

    def verify(self) -> bool:
        if not self.R:
            return False
        alg = self.R[0].algebra
        value = alg.one
        for x, s in zip(self.R, self.signs):
            value = value * x.power(s)
        if not value.is_zero:
            return False
        pos = self.positive
        top = len(pos) if self.n is None else min(self.n, len(pos))
        return not any(
            _prod(sub, alg).is_zero for r in range(1, top + 1) for sub in combinations(pos, r)
        )


Witness = Union[ContainsZero, Perp1Fail, Perp2Fail, Perp3Fail, PropAFail]


@dataclass(frozen=True)
class IndependenceReport:
    """Result of :func:`is_n_independent`.

    ``witness`` comes from the elementary-product route (or is
    :class:`ContainsZero`); ``definitional_witness`` is the first failing
    clause of the definition.  Both are ``None`` exactly when ``holds``.
    """

    holds: bool
    witness: Witness | None = None
    definitional_witness: Witness | None = None

    def __bool__(self):
        return self.holds


# ---------------------------------------------------------------- route 1


def _zero_index(masks) -> int | None:
    for i, m in enumerate(masks):
        if m == 0:
            return i
    return None


def _perp1_violation(t: _Tables) -> int | None:
    for s in range(1, 1 << t.k):
        if t.sum[s] == t.top:
            return s
    return None


def _perp2_violation(t: _Tables, bound: int, small: list[bool] | None = None) -> int | None:
    small = t.has_small_zero(bound) if small is None else small
    for s in range(1, 1 << t.k):
        if t.prod[s] == 0 and not small[s]:
            return s
    return None


def _perp3_violation(t: _Tables) -> tuple[int, int] | None:
    full = (1 << t.k) - 1
    for f in range(1, 1 << t.k):
        p = t.prod[f]
        if p == 0:
            continue
        for g in submasks_ascending(full & ~f):
            if g and p & ~t.sum[g] == 0:
                return f, g
    return None


def check_perp1(xs: Iterable[Element]) -> Verdict:
    """(⊥1): no nonempty finite ``F ⊆ X`` has ``ΣF = 1``."""
    elems, masks, top = _family(xs)
    if not elems:
        return Verdict(True)
    s = _perp1_violation(_Tables(masks, top))
    return Verdict(True) if s is None else Verdict(False, Perp1Fail(_pick(elems, s)))


def check_perp2_n(xs: Iterable[Element], n) -> Verdict:
    """(⊥2)ₙ: every zero product has a zero sub-product of at most ``n`` factors."""
    bound = _bound(n)
    elems, masks, top = _family(xs)
    if not elems or bound is None:
        return Verdict(True)
    s = _perp2_violation(_Tables(masks, top), bound)
    return Verdict(True) if s is None else Verdict(False, Perp2Fail(_pick(elems, s), bound))


def check_perp3(xs: Iterable[Element]) -> Verdict:
    """(⊥3): ``0 ≠ ΠF ≤ ΣG`` forces ``F ∩ G ≠ ∅``."""
    elems, masks, top = _family(xs)
    if not elems:
        return Verdict(True)
    hit = _perp3_violation(_Tables(masks, top))
    if hit is None:
        return Verdict(True)
    f, g = hit
    return Verdict(False, Perp3Fail(_pick(elems, f), _pick(elems, g)))


def _definitional(elems, masks, top, bound) -> Witness | None:
    z = _zero_index(masks)
    if z is not None:
        return ContainsZero(elems[z])
    if not elems:
        return None
    t = _Tables(masks, top)
    s = _perp1_violation(t)
    if s is not None:
        return Perp1Fail(_pick(elems, s))
    if bound is not None:
        s = _perp2_violation(t, bound)
        if s is not None:
            return Perp2Fail(_pick(elems, s), bound)
    hit = _perp3_violation(t)
    if hit is not None:
        return Perp3Fail(_pick(elems, hit[0]), _pick(elems, hit[1]))
    return None


# ---------------------------------------------------------------- route 2


def _prop_a_violation(t: _Tables, bound: int | None) -> tuple[int, int] | None:
    """First ``(R, F)`` with ``F = ε⁻¹(1) ⊆ R`` whose elementary product is 0
    while ``F`` has no zero sub-product of size ``≤ bound``."""
    small = t.has_small_zero(bound)
    prod, total, top = t.prod, t.sum, t.top
    for r in range(1, 1 << t.k):
        for f in submasks_ascending(r):
            if prod[f] & ~total[r ^ f] & top == 0 and not small[f]:
                return r, f
    return None


def _prop_a(elems, masks, top, bound) -> Witness | None:
    z = _zero_index(masks)
    if z is not None:
        return ContainsZero(elems[z])
    if not elems:
        return None
    hit = _prop_a_violation(_Tables(masks, top), bound)
    if hit is None:
        return None
    r, f = hit
    rs = list(iter_bits(r))
    return PropAFail(
        tuple(elems[i] for i in rs), tuple(1 if f >> i & 1 else 0 for i in rs), bound
    )


def _fast_independent(masks: Sequence[int], top: int, bound: int | None) -> bool:
    if any(m == 0 for m in masks):
        return False
    if not masks:
        return True
    return _prop_a_violation(_Tables(masks, top), bound) is None


def is_n_independent(xs: Iterable[Element], n) -> IndependenceReport:
    """Decide n-independence (``n`` a positive int or :data:`OMEGA`) by both routes."""
    bound = _bound(n)
    elems, masks, top = _family(xs)
    definitional = _definitional(elems, masks, top, bound)
    product_route = _prop_a(elems, masks, top, bound)
    if (definitional is None) != (product_route is None):
        raise InternalDisagreement(
            f"definition says {definitional is None}, "
            f"elementary products say {product_route is None} for {elems!r}, n={n!r}"
        )
    if definitional is None:
        return IndependenceReport(True)
    return IndependenceReport(False, product_route, definitional)


def is_independent(xs: Iterable[Element]) -> bool:
    """Plain independence: every full sign pattern has nonzero product."""
    return is_n_independent(xs, 1).holds


class Perp3Variants(NamedTuple):
    direct: bool
    disjoint_form: bool
    complement_form: bool
    elementary_form: bool

    @property
    def agree(self) -> bool:
        return len(set(self)) == 1


def perp3_variants(xs: Iterable[Element]) -> Perp3Variants:
    """The four equivalent forms of (⊥3), each computed on its own."""
    elems, masks, top = _family(xs)
    k = len(masks)
    if not k:
        return Perp3Variants(True, True, True, True)
    full = (1 << k) - 1

    def prod_of(s):
        acc = top
        for i in iter_bits(s):
            acc &= masks[i]
        return acc

    def sum_of(s):
        acc = 0
        for i in iter_bits(s):
            acc |= masks[i]
        return acc

    def prod_of_complements(s):
        acc = top
        for i in iter_bits(s):
            acc &= top & ~masks[i]
        return acc

    prods = [prod_of(s) for s in range(full + 1)]
    sums = [sum_of(s) for s in range(full + 1)]
    comps = [prod_of_complements(s) for s in range(full + 1)]

    direct = all(
        not (prods[f] and prods[f] & ~sums[g] == 0) or f & g
        for f in range(1, full + 1)
        for g in range(1, full + 1)
    )
    disjoint_form = all(
        prods[f] & ~sums[g] != 0
        for f in range(1, full + 1)
        if prods[f]
        for g in range(1, full + 1)
        if not f & g
    )
    complement_form = all(
        prods[f] & comps[g] != 0
        for f in range(1, full + 1)
        if prods[f]
        for g in range(1, full + 1)
        if not f & g
    )

    elementary_form = True
    for r in range(1, full + 1):
        rs = list(iter_bits(r))
        for pattern in range(1, 1 << len(rs)):
            positive = 0
            value = top
            for j, i in enumerate(rs):
                if pattern >> j & 1:
                    positive |= 1 << i
                    value &= masks[i]
                else:
                    value &= ~masks[i]
            if prods[positive] and value & top == 0:
                elementary_form = False
                break
        if not elementary_form:
            break
    return Perp3Variants(direct, disjoint_form, complement_form, elementary_form)


# ---------------------------------------------------------------- preserving maps


def is_n_preserving(f, n, images: Sequence[Element] | None = None) -> Verdict:
    """Whether a map sends zero products of at most ``n`` domain elements
    (all finite products for :data:`OMEGA`) to zero products.

    ``f`` is a mapping ``{x: f(x)}``, or a domain sequence with the aligned
    ``images`` passed separately.  The witness is the first offending tuple
    of domain elements, by size and then index order.
    """
    bound = _bound(n)
    if isinstance(f, Mapping):
        domain, imgs = list(f.keys()), list(f.values())
    else:
        domain, imgs = list(f), list(images or ())
    if len(domain) != len(imgs):
        raise ValueError("domain and images differ in length")
    _family(domain)
    _family(imgs)
    if not domain:
        return Verdict(True)
    src_top, img_top = domain[0].algebra.top, imgs[0].algebra.top
    k = len(domain)
    top_size = k if bound is None else min(bound, k)
    for r in range(1, top_size + 1):
        for idx in combinations(range(k), r):
            s = src_top
            for i in idx:
                s &= domain[i].mask
            if s:
                continue
            t = img_top
            for i in idx:
                t &= imgs[i].mask
            if t:
                return Verdict(False, tuple(domain[i] for i in idx))
    return Verdict(True)


# ---------------------------------------------------------------- maximal families


def _algebra_of(A) -> FieldAlgebra:
    if isinstance(A, (FieldAlgebra, GeneratedAlgebra)):
        return A.ambient
    raise TypeError(f"expected FieldAlgebra or GeneratedAlgebra, got {type(A).__name__}")


def _check_members(xs, A) -> None:
    for x in xs:
        if not A.contains(x):
            raise AlgebraMismatch(f"{x!r} is not an element of the algebra")


def is_maximal(xs: Iterable[Element], n, A) -> Verdict:
    """Whether ``X`` is a maximal n-independent subset of ``A``.

    A failing verdict carries either the independence report (``X`` is not
    n-independent) or the first element of ``A⁺ ∖ X`` that can be added.
    """
    bound = _bound(n)
    elems, masks, _ = _family(xs)
    _check_members(elems, A)
    top = _algebra_of(A).top
    report = is_n_independent(elems, n)
    if not report.holds:
        return Verdict(False, report)
    present = set(masks)
    for c in A.nonzero_elements():
        if c.mask in present:
            continue
        if _fast_independent(masks + [c.mask], top, bound):
            return Verdict(False, c)
    return Verdict(True)


def extend_to_maximal(xs: Iterable[Element], n, A) -> tuple[Element, ...]:
    """Greedy extension of an n-independent ``X`` to a maximal one.

    Candidates from ``A⁺`` are tried once each in ascending bitset order; as
    n-independence is inherited by subsets, a candidate rejected early stays
    rejected, so one pass suffices.
    """
    bound = _bound(n)
    elems, masks, _ = _family(xs)
    _check_members(elems, A)
    if not is_n_independent(elems, n).holds:
        raise NotIndependentInput(f"{list(elems)!r} is not {n}-independent")
    top = _algebra_of(A).top
    out = list(elems)
    present = set(masks)
    for c in A.nonzero_elements():
        if c.mask in present:
            continue
        if _fast_independent(masks + [c.mask], top, bound):
            masks.append(c.mask)
            present.add(c.mask)
            out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class Spectrum:
    """Sizes of maximal n-independent families.

    When ``exhaustive`` is false the families come from random greedy runs:
    ``sizes`` is then only a subset of the true spectrum, and ``minimum`` is
    an upper bound for the true minimum.
    """

    sizes: tuple[int, ...]
    minimum: int
    families: tuple[tuple[Element, ...], ...]
    exhaustive: bool


def _ground_measure(A) -> int:
    if isinstance(A, GeneratedAlgebra):
        return len(A.atom_masks)
    return A.ground_size


def i_n_spectrum(A, n, mode: str = "exhaustive", samples: int = 200, seed: int = 0) -> Spectrum:
    """All maximal n-independent subsets of ``A`` and their sizes.

    ``mode="exhaustive"`` enumerates every n-independent family by
    depth-first search (subsets only ever lose candidates, so each node
    passes its extendable candidates down).  It is refused above
    ``max_exhaustive_ground``; ``mode="sampled"`` then runs ``samples``
    greedy extensions in random candidate orders.
    """
    bound = _bound(n)
    top = _algebra_of(A).top
    candidates = [c.mask for c in A.nonzero_elements()]
    ambient = _algebra_of(A)

    if mode == "sampled":
        rng = random.Random(seed)
        found = set()
        for _ in range(samples):
            order = candidates[:]
            rng.shuffle(order)
            chosen: list[int] = []
            for c in order:
                if _fast_independent(chosen + [c], top, bound):
                    chosen.append(c)
            found.add(tuple(sorted(chosen)))
        return _spectrum(ambient, found, exhaustive=False)
    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")

    cap = get_limits().max_exhaustive_ground
    if _ground_measure(A) > cap:
        raise TooLargeForExhaustive(
            f"ground size {_ground_measure(A)} exceeds exhaustive cap {cap}; use mode='sampled'"
        )

    found: set[tuple[int, ...]] = set()

    def walk_child(chosen, extendable, last):
        if not extendable:
            found.add(tuple(chosen))
            return
        for c in extendable:
            if c < last:
                continue
            grown = chosen + [c]
            nxt = [d for d in extendable if d != c and _fast_independent(grown + [d], top, bound)]
            walk_child(grown, nxt, c)

    initial = [c for c in candidates if _fast_independent([c], top, bound)]
    walk_child([], initial, 0)
    return _spectrum(ambient, found, exhaustive=True)


def _spectrum(ambient: FieldAlgebra, found, exhaustive: bool) -> Spectrum:
    families = tuple(
        tuple(Element(ambient, m) for m in fam)
        for fam in sorted(found, key=lambda fam: (len(fam), fam))
    )
    sizes = tuple(sorted({len(fam) for fam in families}))
    return Spectrum(sizes, sizes[0], families, exhaustive)


def i_n(A, n) -> int:
    return i_n_spectrum(A, n).minimum


def maximality_atom_check(xs: Iterable[Element], A, n) -> bool:
    """For a maximal n-independent finite ``X``: is ``-ΣX`` an atom of ``A``?"""
    elems, _, _ = _family(xs)
    verdict = is_maximal(elems, n, A)
    if not verdict.holds:
        raise NotMaximalInput(f"{list(elems)!r} is not maximal {n}-independent")
    ambient = _algebra_of(A)
    return A.is_atom(-_sum(elems, ambient))


def nonzero_elementary_products(xs: Iterable[Element], algebra: FieldAlgebra | None = None):
    """Every nonzero ``Π_{x∈R} x^{ε_x}`` over finite ``R ⊆ X``, including the
    empty product 1, in ascending bitset order without repeats."""
    elems, masks, top = _family(xs)
    if algebra is None:
        if not elems:
            raise AlgebraMismatch("cannot infer the algebra of an empty family")
        algebra = elems[0].algebra
    gens = list(elems)
    values = set()
    k = len(gens)
    for r in range(1 << k):
        rs = list(iter_bits(r))
        for pattern in range(1 << len(rs)):
            p = ElementaryProduct(tuple((i, pattern >> j & 1) for j, i in enumerate(rs)))
            v = eval_elementary_product(gens, p, algebra)
            if not v.is_zero:
                values.add(v.mask)
    return tuple(Element(algebra, m) for m in sorted(values))


def is_weakly_dense(ys: Iterable[Element], A) -> Verdict:
    """Every ``a ∈ A⁺`` has some ``y ∈ Y`` with ``y ≤ a`` or ``y ≤ -a``;
    the witness is the first uncovered ``a``."""
    elems, masks, _ = _family(ys)
    _check_members(elems, A)
    for y in elems:
        if y.is_zero:
            raise ZeroInY("weakly dense families must avoid 0")
    top = _algebra_of(A).top
    for a in A.nonzero_elements():
        comp = top & ~a.mask
        if not any(m & ~a.mask == 0 or m & ~comp == 0 for m in masks):
            return Verdict(False, a)
    return Verdict(True)


def product_closure(gens: Iterable[Element], algebra: FieldAlgebra | None = None):
    """Finite products of ``gens`` together with 0 and 1, ascending."""
    elems, masks, top = _family(gens)
    if algebra is None:
        if not elems:
            raise AlgebraMismatch("cannot infer the algebra of an empty family")
        algebra = elems[0].algebra
    top = algebra.top
    values = {0, top}
    frontier = {top}
    while frontier:
        nxt = set()
        for v in frontier:
            for m in masks:
                w = v & m
                if w not in values:
                    values.add(w)
                    nxt.add(w)
        frontier = nxt
    return tuple(Element(algebra, m) for m in sorted(values))


def is_disjunctive(hs: Iterable[Element], A=None) -> Verdict:
    """``h ≤ h₁+…+h_k`` (all in ``H``) forces ``h ≤ hᵢ`` for some ``i``.

    For a fixed ``h`` it suffices to test the sum of all members not above
    ``h``: any violating finite sum is below that one.  The witness is
    ``(h, those members)``.
    """
    elems, masks, _ = _family(hs)
    if A is not None:
        _check_members(elems, A)
    for h in elems:
        if h.is_zero:
            raise ZeroInH("disjunctive families must avoid 0")
    for h, hm in zip(elems, masks):
        others = [(x, m) for x, m in zip(elems, masks) if hm & ~m]
        cover = 0
        for _, m in others:
            cover |= m
        if others and hm & ~cover == 0:
            return Verdict(False, (h, tuple(x for x, _ in others)))
    return Verdict(True)


def is_disjunctive_via_downsets(hs: Iterable[Element], A=None, max_size: int = 6) -> Verdict:
    """Disjunctivity through down-sets: for every ``M ⊆ H`` the map
    ``h ↦ {m ∈ M : m ≤ h}`` into ``P(M)`` must extend to a homomorphism on
    ``⟨H⟩``.  Exponential in ``|H|``, so refused above ``max_size``; the
    witness is the first ``M`` that fails."""
    elems, masks, _ = _family(hs)
    if A is not None:
        _check_members(elems, A)
    for h in elems:
        if h.is_zero:
            raise ZeroInH("disjunctive families must avoid 0")
    if len(elems) > max_size:
        raise TooLargeForExhaustive(f"|H| = {len(elems)} exceeds {max_size}")
    if not elems:
        return Verdict(True)
    source = GeneratedAlgebra(elems[0].algebra, elems)
    k = len(elems)
    for msel in range(1 << k):
        members = list(iter_bits(msel))
        target = FieldAlgebra(tuple(range(len(members))))
        images = []
        for hm in masks:
            down = 0
            for j, i in enumerate(members):
                if masks[i] & ~hm == 0:
                    down |= 1 << j
            images.append(Element(target, down))
        try:
            sikorski_extend(source, images, target)
        except CriterionViolated:
            return Verdict(False, tuple(elems[i] for i in members))
    return Verdict(True)
