"""Finite boolean algebras as fields of sets.

Every algebra here is concretely a powerset ``P(S)`` of a finite labelled
ground set, or a subalgebra of one given by generators.  Elements are
bitmasks over the ground indices, so ``+``, ``*`` and ``-`` are ``|``,
``&`` and complement relative to the top mask.

A subalgebra is never closed symbolically: :class:`GeneratedAlgebra` refines
the ground set into the nonzero full elementary products of its generators
(its atoms), and membership means "is a union of atoms".
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .config import get_limits
from .errors import (
    AlgebraMismatch,
    CriterionViolated,
    DuplicateLabel,
    GroundTooLarge,
    NotAHomomorphism,
    TooManyGenerators,
    UnknownGeneratorIndex,
)

__all__ = [
    "FieldAlgebra",
    "Element",
    "ElementaryProduct",
    "GeneratedAlgebra",
    "Homomorphism",
    "DirectProduct",
    "FreeProduct",
    "powerset_algebra",
    "eval_elementary_product",
    "generate",
    "free_algebra",
    "sikorski_extend",
    "generator_isomorphism",
    "direct_product",
    "free_product",
    "is_homomorphism",
]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks_ascending(mask: int) -> list[int]:
    subs = []
    sub = mask
    while True:
        subs.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    subs.reverse()
    return subs


@dataclass(frozen=True)
class FieldAlgebra:
    """The powerset algebra of an ordered, duplicate-free list of labels."""

    labels: tuple
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        cap = get_limits().max_ground
        if len(labels) > cap:
            raise GroundTooLarge(f"ground size {len(labels)} exceeds cap {cap}")
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise DuplicateLabel(f"duplicate ground label {label!r}")
            index[label] = i
        object.__setattr__(self, "_index", index)

    @property
    def ground_size(self) -> int:
        return len(self.labels)

    @property
    def ground_labels(self) -> tuple:
        return self.labels

    @property
    def top(self) -> int:
        return (1 << len(self.labels)) - 1

    @property
    def size(self) -> int:
        return 1 << len(self.labels)

    @property
    def ambient(self) -> FieldAlgebra:
        return self

    @property
    def zero(self) -> Element:
        return Element(self, 0)

    @property
    def one(self) -> Element:
        return Element(self, self.top)

    @property
    def atoms(self) -> tuple[Element, ...]:
        return tuple(Element(self, 1 << i) for i in range(len(self.labels)))

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a ground label") from None

    def element(self, labels: Iterable = ()) -> Element:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Element(self, mask)

    def from_indices(self, indices: Iterable[int]) -> Element:
        mask = 0
        for i in indices:
            if not 0 <= i < len(self.labels):
                raise IndexError(f"ground index {i} out of range")
            mask |= 1 << i
        return Element(self, mask)

    def from_mask(self, mask: int) -> Element:
        if mask & ~self.top:
            raise ValueError(f"mask {mask:#x} has bits outside the ground set")
        return Element(self, mask)

    def contains(self, x: Element) -> bool:
        return x.algebra == self

    def is_atom(self, x: Element) -> bool:
        self._check(x)
        return x.mask.bit_count() == 1

    def elements(self) -> Iterator[Element]:
        """All elements in ascending bitset order."""
        for mask in range(self.size):
            yield Element(self, mask)

    def nonzero_elements(self) -> Iterator[Element]:
        for mask in range(1, self.size):
            yield Element(self, mask)

    def _check(self, x: Element) -> None:
        if x.algebra != self:
            raise AlgebraMismatch("element belongs to a different algebra")

    def __repr__(self):
        return f"FieldAlgebra({list(self.labels)!r})"


@dataclass(frozen=True, eq=True)
class Element:
    """A subset of a :class:`FieldAlgebra`'s ground set."""

    algebra: FieldAlgebra
    mask: int

    @property
    def members(self) -> frozenset[int]:
        return frozenset(iter_bits(self.mask))

    @property
    def labels(self) -> tuple:
        return tuple(self.algebra.labels[i] for i in iter_bits(self.mask))

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def is_one(self) -> bool:
        return self.mask == self.algebra.top

    def _other(self, other: Element) -> int:
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")
        return other.mask

    def __add__(self, other):
        return Element(self.algebra, self.mask | self._other(other))

    __or__ = __add__

    def __mul__(self, other):
        return Element(self.algebra, self.mask & self._other(other))

    __and__ = __mul__

    def __sub__(self, other):
        return Element(self.algebra, self.mask & ~self._other(other))

    def __neg__(self):
        return Element(self.algebra, self.algebra.top & ~self.mask)

    __invert__ = __neg__

    def __le__(self, other):
        m = self._other(other)
        return self.mask & ~m == 0

    def __lt__(self, other):
        m = self._other(other)
        return self.mask != m and self.mask & ~m == 0

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def perp(self, other: Element) -> bool:
        """``x ⊥ y`` iff ``x·y = 0``."""
        return self.mask & self._other(other) == 0

    def power(self, sign: int) -> Element:
        """``x¹ = x`` and ``x⁰ = -x``."""
        if sign == 1:
            return self
        if sign == 0:
            return -self
        raise ValueError(f"sign must be 0 or 1, got {sign!r}")

    def is_atom(self) -> bool:
        return self.mask.bit_count() == 1

    def __repr__(self):
        return "{" + ",".join(map(str, self.labels)) + "}"


@dataclass(frozen=True)
class ElementaryProduct:
    """Signs ``ε`` on a finite support ``R`` of generator indices.

    Built from a mapping ``{index: sign}`` or an iterable of pairs; stored as
    a tuple of ``(index, sign)`` sorted by index.
    """

    signs: tuple

    def __post_init__(self):
        raw = self.signs.items() if isinstance(self.signs, Mapping) else self.signs
        pairs = tuple(sorted((int(i), int(s)) for i, s in raw))
        seen = set()
        for i, s in pairs:
            if i < 0 or i in seen:
                raise ValueError(f"bad or repeated generator index {i}")
            if s not in (0, 1):
                raise ValueError(f"sign must be 0 or 1, got {s}")
            seen.add(i)
        object.__setattr__(self, "signs", pairs)

    @classmethod
    def full(cls, count: int, pattern: int) -> ElementaryProduct:
        """Full support ``0..count-1`` with ``ε_i`` = bit ``i`` of ``pattern``."""
        return cls(tuple((i, (pattern >> i) & 1) for i in range(count)))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.signs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.signs)

    def positive(self) -> tuple[int, ...]:
        return tuple(i for i, s in self.signs if s == 1)

    def negative(self) -> tuple[int, ...]:
        return tuple(i for i, s in self.signs if s == 0)


def _signed_product(masks: Sequence[int], pairs, top: int) -> int:
    acc = top
    for i, s in pairs:
        acc &= masks[i] if s else ~masks[i]
    return acc & top


def powerset_algebra(labels: Iterable) -> FieldAlgebra:
    return FieldAlgebra(tuple(labels))


def eval_elementary_product(
    gens: Sequence[Element], p: ElementaryProduct, algebra: FieldAlgebra | None = None
) -> Element:
    """Value of ``∏_{i∈R} g_i^{ε_i}``; the empty product is 1."""
    gens = list(gens)
    if algebra is None:
        if not gens:
            raise AlgebraMismatch("cannot infer the algebra of an empty generator list")
        algebra = gens[0].algebra
    for g in gens:
        algebra._check(g)
    for i in p.support:
        if i >= len(gens):
            raise UnknownGeneratorIndex(f"generator index {i} not in 0..{len(gens) - 1}")
    masks = [g.mask for g in gens]
    return Element(algebra, _signed_product(masks, p.signs, algebra.top))


@dataclass(frozen=True)
class GeneratedAlgebra:
    """The subalgebra of ``ambient`` generated by an indexed family.

    ``names`` optionally labels the generators (vertex labels for anticlique
    algebras); it defaults to the indices.
    """

    ambient: FieldAlgebra
    generators: tuple
    names: tuple | None = None
    _atoms: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        cap = get_limits().max_generators
        if len(gens) > cap:
            raise TooManyGenerators(f"{len(gens)} generators exceed cap {cap}")
        for g in gens:
            if not isinstance(g, Element) or g.algebra != self.ambient:
                raise AlgebraMismatch("generator is not an element of the ambient algebra")
        names = tuple(range(len(gens))) if self.names is None else tuple(self.names)
        if len(names) != len(gens) or len(set(names)) != len(names):
            raise DuplicateLabel("generator names must be unique, one per generator")
        object.__setattr__(self, "names", names)

        top = self.ambient.top
        blocks = {0: top} if top else {}
        for i, g in enumerate(gens):
            refined = {}
            for sig, block in blocks.items():
                inside = block & g.mask
                outside = block & ~g.mask
                if inside:
                    refined[sig | (1 << i)] = inside
                if outside:
                    refined[sig] = outside
            blocks = refined
        atoms = tuple(sorted(((m, s) for s, m in blocks.items())))
        object.__setattr__(self, "_atoms", atoms)

    # atoms and size

    @property
    def atom_masks(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self._atoms)

    @property
    def atom_signatures(self) -> tuple[int, ...]:
        """Sign pattern of each atom, bit ``i`` = ``ε_i``."""
        return tuple(s for _, s in self._atoms)

    @property
    def atoms(self) -> tuple[Element, ...]:
        return tuple(Element(self.ambient, m) for m, _ in self._atoms)

    def atom_products(self) -> tuple[ElementaryProduct, ...]:
        k = len(self.generators)
        return tuple(ElementaryProduct.full(k, s) for _, s in self._atoms)

    @property
    def size(self) -> int:
        return 1 << len(self._atoms)

    @property
    def zero(self) -> Element:
        return self.ambient.zero

    @property
    def one(self) -> Element:
        return self.ambient.one

    @property
    def top(self) -> int:
        return self.ambient.top

    # membership

    def contains(self, x: Element) -> bool:
        if x.algebra != self.ambient:
            return False
        return all(x.mask & m in (0, m) for m, _ in self._atoms)

    def decompose(self, x: Element) -> tuple[int, ...]:
        """Indices of the atoms whose sum is ``x``."""
        if x.algebra != self.ambient:
            raise AlgebraMismatch("element belongs to a different algebra")
        out = []
        for k, (m, _) in enumerate(self._atoms):
            meet = x.mask & m
            if meet == m:
                out.append(k)
            elif meet:
                raise ValueError(f"{x!r} is not in the generated subalgebra")
        return tuple(out)

    def is_atom(self, x: Element) -> bool:
        return x.algebra == self.ambient and x.mask in self.atom_masks

    def evaluate(self, p: ElementaryProduct) -> Element:
        return eval_elementary_product(self.generators, p, self.ambient)

    def elements(self) -> Iterator[Element]:
        """All elements, in ascending bitset order of their ambient masks."""
        masks = [0]
        for m, _ in self._atoms:
            masks += [x | m for x in masks]
        for mask in sorted(masks):
            yield Element(self.ambient, mask)

    def nonzero_elements(self) -> Iterator[Element]:
        it = self.elements()
        next(it)
        return it

    # atom representation

    def atom_field(self) -> FieldAlgebra:
        """``P(atoms)``, the algebra this one is isomorphic to."""
        return FieldAlgebra(tuple(range(len(self._atoms))))

    def to_atom_field(self, x: Element) -> Element:
        return self.atom_field().from_indices(self.decompose(x))

    def from_atom_field(self, y: Element) -> Element:
        mask = 0
        for k in iter_bits(y.mask):
            mask |= self._atoms[k][0]
        return Element(self.ambient, mask)

    def __repr__(self):
        return (
            f"GeneratedAlgebra(ground={self.ambient.ground_size}, "
            f"generators={len(self.generators)}, atoms={len(self._atoms)})"
        )


def generate(ambient: FieldAlgebra, gens: Iterable[Element], names=None) -> GeneratedAlgebra:
    return GeneratedAlgebra(ambient, tuple(gens), names)


def free_algebra(m: int) -> GeneratedAlgebra:
    """``FR(m)`` as ``P(2^m)`` with its ``m`` free generators.

    Ground point ``s`` is the sign pattern whose bit ``a`` says whether ``s``
    lies in generator ``x_a``.
    """
    ambient = FieldAlgebra(tuple(range(1 << m)))
    gens = []
    for a in range(m):
        mask = 0
        for s in range(1 << m):
            if (s >> a) & 1:
                mask |= 1 << s
        gens.append(Element(ambient, mask))
    return GeneratedAlgebra(ambient, tuple(gens))


@dataclass(frozen=True)
class Homomorphism:
    """A homomorphism from a generated algebra, given by its values on atoms."""

    source: GeneratedAlgebra
    target: FieldAlgebra
    atom_images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.atom_images)
        object.__setattr__(self, "atom_images", images)
        if len(images) != len(self.source.atom_masks):
            raise NotAHomomorphism("one image per source atom is required")
        seen = 0
        for m in images:
            if m & ~self.target.top:
                raise NotAHomomorphism("atom image outside the target ground set")
            if m & seen:
                raise NotAHomomorphism("atom images are not pairwise disjoint")
            seen |= m
        if seen != self.target.top:
            raise NotAHomomorphism("atom images do not sum to 1")

    def __call__(self, x: Element) -> Element:
        mask = 0
        for k in self.source.decompose(x):
            mask |= self.atom_images[k]
        return Element(self.target, mask)

    def on_generators(self) -> tuple[Element, ...]:
        return tuple(self(g) for g in self.source.generators)

    def table(self) -> list[tuple[Element, Element]]:
        return [
            (a, Element(self.target, m))
            for a, m in zip(self.source.atoms, self.atom_images)
        ]

    @property
    def is_injective(self) -> bool:
        return all(self.atom_images)


def _image_masks(source: GeneratedAlgebra, f, target: FieldAlgebra) -> list[int]:
    k = len(source.generators)
    if isinstance(f, Mapping):
        by_index = {}
        for key, value in f.items():
            if isinstance(key, Element):
                hits = [i for i, g in enumerate(source.generators) if g == key]
                if not hits:
                    raise UnknownGeneratorIndex(f"{key!r} is not a generator")
                for i in hits:
                    by_index[i] = value
            else:
                if not (isinstance(key, int) and 0 <= key < k):
                    raise UnknownGeneratorIndex(f"generator index {key!r} out of range")
                by_index[key] = value
        missing = [i for i in range(k) if i not in by_index]
        if missing:
            raise UnknownGeneratorIndex(f"map undefined on generators {missing}")
        images = [by_index[i] for i in range(k)]
    else:
        images = list(f)
        if len(images) != k:
            raise UnknownGeneratorIndex(f"expected {k} images, got {len(images)}")
    for y in images:
        if not isinstance(y, Element) or y.algebra != target:
            raise AlgebraMismatch("generator image is not an element of the target")
    return [y.mask for y in images]


def _first_violation(src: Sequence[int], img: Sequence[int], src_top: int, img_top: int):
    """First full sign pattern (ascending as an integer) that is 0 in the
    source but not in the image, or ``None``.

    Depth-first from the highest index, sign 0 before 1; a subtree whose
    partial products are both 0 cannot contain a violation and is skipped.
    """
    k = len(src)

    def walk(i, s, t, pattern):
        if s == 0 and t == 0:
            return None
        if i < 0:
            return pattern if s == 0 else None
        for sign in (0, 1):
            s2 = s & (src[i] if sign else ~src[i])
            t2 = t & (img[i] if sign else ~img[i])
            found = walk(i - 1, s2, t2, pattern | (sign << i))
            if found is not None:
                return found
        return None

    return walk(k - 1, src_top, img_top, 0)


def sikorski_extend(source: GeneratedAlgebra, f, target: FieldAlgebra) -> Homomorphism:
    """Extend a generator map to a homomorphism ``source -> target``.

    ``f`` is either a sequence of target elements indexed like
    ``source.generators`` or a mapping keyed by generator index or generator
    element.  The extension exists iff every full elementary product that is
    0 in the source has image product 0; otherwise :class:`CriterionViolated`
    carries the first offending product.
    """
    img = _image_masks(source, f, target)
    src = [g.mask for g in source.generators]
    pattern = _first_violation(src, img, source.top, target.top)
    k = len(src)
    if pattern is not None:
        p = ElementaryProduct.full(k, pattern)
        raise CriterionViolated(p, Element(target, _signed_product(img, p.signs, target.top)))
    images = []
    for sig in source.atom_signatures:
        acc = target.top
        for i in range(k):
            acc &= img[i] if (sig >> i) & 1 else ~img[i]
        images.append(acc & target.top)
    return Homomorphism(source, target, tuple(images))


def generator_isomorphism(a: GeneratedAlgebra, b: GeneratedAlgebra) -> Homomorphism:
    """The isomorphism ``a -> b`` sending generator ``i`` to generator ``i``.

    Raises :class:`CriterionViolated` if either direction fails to extend and
    :class:`NotAHomomorphism` if the composites are not identities.
    """
    if len(a.generators) != len(b.generators):
        raise NotAHomomorphism("generator families differ in length")
    if len(a.atom_masks) != len(b.atom_masks):
        raise NotAHomomorphism(
            f"atom counts differ: {len(a.atom_masks)} vs {len(b.atom_masks)}"
        )
    forward = sikorski_extend(a, b.generators, b.ambient)
    backward = sikorski_extend(b, a.generators, a.ambient)
    for atom in a.atoms:
        if backward(forward(atom)) != atom:
            raise NotAHomomorphism("backward after forward is not the identity")
    for atom in b.atoms:
        if forward(backward(atom)) != atom:
            raise NotAHomomorphism("forward after backward is not the identity")
    return forward


@dataclass(frozen=True)
class DirectProduct:
    """``A × B`` realised as ``P(S ⊔ T)``; ground labels are ``(0, s)`` and ``(1, t)``."""

    left: FieldAlgebra
    right: FieldAlgebra
    algebra: FieldAlgebra

    def pair(self, a: Element, b: Element) -> Element:
        self.left._check(a)
        self.right._check(b)
        return Element(self.algebra, a.mask | (b.mask << self.left.ground_size))

    def project_left(self, x: Element) -> Element:
        self.algebra._check(x)
        return Element(self.left, x.mask & self.left.top)

    def project_right(self, x: Element) -> Element:
        self.algebra._check(x)
        return Element(self.right, x.mask >> self.left.ground_size)

    @property
    def unit_left(self) -> Element:
        """``(1, 0)``."""
        return self.pair(self.left.one, self.right.zero)

    @property
    def unit_right(self) -> Element:
        """``(0, 1)``."""
        return self.pair(self.left.zero, self.right.one)

    def embed(self, h: Iterable[Element], k: Iterable[Element]) -> tuple[Element, ...]:
        """``(H × {0}) ∪ ({0} × K)``, left part first."""
        return tuple(self.pair(x, self.right.zero) for x in h) + tuple(
            self.pair(self.left.zero, y) for y in k
        )


def direct_product(a: FieldAlgebra, b: FieldAlgebra) -> DirectProduct:
    labels = tuple((0, s) for s in a.labels) + tuple((1, t) for t in b.labels)
    return DirectProduct(a, b, FieldAlgebra(labels))


@dataclass(frozen=True)
class FreeProduct:
    """``A ⊕ B`` (trivial amalgam) realised as ``P(S × T)``.

    Operands may be generated algebras; they are then replaced by their atom
    fields and elements are translated on the way in.
    """

    left: FieldAlgebra | GeneratedAlgebra
    right: FieldAlgebra | GeneratedAlgebra
    algebra: FieldAlgebra

    @staticmethod
    def _to_field(operand, x: Element) -> Element:
        if isinstance(operand, GeneratedAlgebra):
            return operand.to_atom_field(x)
        operand._check(x)
        return x

    def embed_left(self, a: Element) -> Element:
        """``a × T``."""
        a = self._to_field(self.left, a)
        t = _field_size(self.right)
        row = (1 << t) - 1
        mask = 0
        for i in iter_bits(a.mask):
            mask |= row << (i * t)
        return Element(self.algebra, mask)

    def embed_right(self, b: Element) -> Element:
        """``S × b``."""
        b = self._to_field(self.right, b)
        s, t = _field_size(self.left), _field_size(self.right)
        mask = 0
        for i in range(s):
            mask |= b.mask << (i * t)
        return Element(self.algebra, mask)

    def generated(self) -> GeneratedAlgebra:
        """Subalgebra generated by the embedded generators of generated operands."""
        gens, names = [], []
        if isinstance(self.left, GeneratedAlgebra):
            gens += [self.embed_left(g) for g in self.left.generators]
            names += [(0, n) for n in self.left.names]
        if isinstance(self.right, GeneratedAlgebra):
            gens += [self.embed_right(g) for g in self.right.generators]
            names += [(1, n) for n in self.right.names]
        return GeneratedAlgebra(self.algebra, tuple(gens), tuple(names))


def _field_size(operand) -> int:
    if isinstance(operand, GeneratedAlgebra):
        return len(operand.atom_masks)
    return operand.ground_size


def free_product(a, b) -> FreeProduct:
    s, t = _field_size(a), _field_size(b)
    cap = get_limits().max_ground
    if s * t > cap:
        raise GroundTooLarge(f"free product ground size {s * t} exceeds cap {cap}")
    left_labels = a.labels if isinstance(a, FieldAlgebra) else tuple(range(s))
    right_labels = b.labels if isinstance(b, FieldAlgebra) else tuple(range(t))
    labels = tuple((x, y) for x in left_labels for y in right_labels)
    return FreeProduct(a, b, FieldAlgebra(labels))


def is_homomorphism(h, source, target: FieldAlgebra | None = None) -> bool:
    """Exhaustive check that ``h`` preserves 0, 1, complement and sum.

    ``h`` is a callable or a mapping defined on every element of ``source``
    (a field or generated algebra).
    """
    apply = h.__getitem__ if isinstance(h, Mapping) else h
    elems = list(source.elements())
    try:
        values = {x.mask: apply(x) for x in elems}
    except (KeyError, ValueError, AlgebraMismatch):
        return False
    if target is None:
        target = values[source.top].algebra if isinstance(values[source.top], Element) else None
    if target is None:
        return False
    if any(not isinstance(v, Element) or v.algebra != target for v in values.values()):
        return False
    if values[0].mask != 0 or values[source.top].mask != target.top:
        return False
    for x in elems:
        if values[source.top & ~x.mask].mask != target.top & ~values[x.mask].mask:
            return False
    for x, y in combinations(elems, 2):
        if values[x.mask | y.mask].mask != values[x.mask].mask | values[y.mask].mask:
            return False
    return True
