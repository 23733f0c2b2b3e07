"""Set systems over a labelled ground set and the vertex-flip algebra.

A set system is a ground set plus a family of subsets, each subset encoded
as an integer bitmask over the ground-set positions.  The three vertex
flips (pivot, loop complementation, dual pivot) act per element and
generate a group isomorphic to S3 on each element; flips on distinct
elements commute.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, Sequence, Union

from .errors import CapExceededError, GroundSetError, ImproperSystemError, SizeGuardError

MAX_GROUND = 62  # subsets must fit a single machine-word-sized bitmask
PARITY_TRANSFORM_GUARD = 20  # whole-ground loopc/dual-pivot formulas walk 2^n cells

FlipKind = Literal["pivot", "loopc", "dualpivot"]

Mask = int
Subset = Union[int, str, Iterable[str]]


@dataclass(frozen=True)
class GroundSet:
    """Ordered, distinct element labels; position i maps to bit 1 << i."""

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) > MAX_GROUND:
            raise GroundSetError(f"ground set has {len(labels)} elements, max is {MAX_GROUND}")
        index = {}
        for i, lab in enumerate(labels):
            if not isinstance(lab, str) or not lab:
                raise GroundSetError(f"labels must be nonempty strings, got {lab!r}")
            if lab in index:
                raise GroundSetError(f"duplicate label {lab!r}")
            index[lab] = i
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> Mask:
        return (1 << len(self.labels)) - 1

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GroundSetError(f"element {label!r} not in ground set {self.labels}") from None

    def bit(self, label: str) -> Mask:
        return 1 << self.index(label)

    def mask_of(self, elements: Iterable[str]) -> Mask:
        m = 0
        for lab in elements:
            b = self.bit(lab)
            if m & b:
                raise GroundSetError(f"repeated element {lab!r} in subset")
            m |= b
        return m

    def coerce(self, subset: Subset) -> Mask:
        """Accept a bitmask, a single label, or an iterable of labels."""
        if isinstance(subset, int):
            if subset & ~self.full_mask:
                raise GroundSetError(f"mask {subset:#x} has bits outside the ground set")
            return subset
        if isinstance(subset, str):
            return self.bit(subset)
        return self.mask_of(subset)

    def labels_of(self, mask: Mask) -> tuple[str, ...]:
        return tuple(lab for i, lab in enumerate(self.labels) if mask >> i & 1)

    def restrict(self, mask: Mask) -> "GroundSet":
        """Sub-ground-set keeping only the elements of mask, in original order."""
        return GroundSet(self.labels_of(mask))

    def format_subset(self, mask: Mask) -> str:
        if mask == 0:
            return "{}"
        return "{" + ",".join(self.labels_of(mask)) + "}"


@dataclass(frozen=True)
class SystemClass:
    """Derived predicates of a set system."""

    proper: bool
    normal: bool
    equicardinal: bool


@dataclass(frozen=True)
class SetSystem:
    """Immutable set system: ground set plus canonically sorted family of masks."""

    ground: GroundSet
    family: tuple[Mask, ...]

    def __post_init__(self) -> None:
        fam = self.family
        full = self.ground.full_mask
        canon = tuple(sorted(set(fam)))
        for m in canon:
            if m & ~full:
                raise GroundSetError(f"member mask {m:#x} has bits outside the ground set")
        if canon != tuple(fam):
            object.__setattr__(self, "family", canon)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_sets(cls, labels: Sequence[str], sets: Iterable[Iterable[str]]) -> "SetSystem":
        ground = GroundSet(tuple(labels))
        return cls(ground, tuple(ground.mask_of(s) for s in sets))

    @classmethod
    def from_masks(cls, ground: GroundSet, masks: Iterable[Mask]) -> "SetSystem":
        return cls(ground, tuple(masks))

    # -- basic views ----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.ground.n

    def __len__(self) -> int:
        return len(self.family)

    def __contains__(self, mask: Mask) -> bool:
        return mask in self.family

    def members(self) -> tuple[Mask, ...]:
        return self.family

    def member_sets(self) -> list[tuple[str, ...]]:
        return [self.ground.labels_of(m) for m in self.family]

    @property
    def is_proper(self) -> bool:
        return bool(self.family)

    @property
    def is_normal(self) -> bool:
        return bool(self.family) and self.family[0] == 0

    @property
    def is_equicardinal(self) -> bool:
        sizes = {m.bit_count() for m in self.family}
        return len(sizes) <= 1

    def classify(self) -> SystemClass:
        return SystemClass(self.is_proper, self.is_normal, self.is_equicardinal)

    def require_proper(self) -> None:
        if not self.family:
            raise ImproperSystemError("operation needs a proper (nonempty) set system")

    def __str__(self) -> str:
        inner = ",".join(self.ground.format_subset(m) for m in self.family)
        return "{" + inner + "}"

    # -- vertex flips ---------------------------------------------------------

    def pivot(self, subset: Subset) -> "SetSystem":
        """Translate every member by the symmetric difference with the subset."""
        x = self.ground.coerce(subset)
        return SetSystem(self.ground, tuple(m ^ x for m in self.family))

    def _loopc_single(self, bit: Mask) -> "SetSystem":
        fam = set(self.family)
        fam ^= {m | bit for m in self.family if not m & bit}
        return SetSystem(self.ground, tuple(fam))

    def loopc(self, subset: Subset) -> "SetSystem":
        """Loop complementation, element by element in index order.

        Order does not matter: loop complementations on distinct elements
        commute.
        """
        x = self.ground.coerce(subset)
        out = self
        while x:
            bit = x & -x
            out = out._loopc_single(bit)
            x ^= bit
        return out

    def dual_pivot(self, subset: Subset) -> "SetSystem":
        """The third involution on each element: loopc, pivot, loopc."""
        x = self.ground.coerce(subset)
        out = self
        while x:
            bit = x & -x
            out = out._loopc_single(bit).pivot(bit)._loopc_single(bit)
            x ^= bit
        return out

    # -- restriction / deletion ----------------------------------------------

    def restrict(self, subset: Subset) -> "SetSystem":
        """Keep members contained in the subset; the ground set becomes the subset."""
        x = self.ground.coerce(subset)
        new_ground = self.ground.restrict(x)
        positions = [i for i in range(self.ground.n) if x >> i & 1]
        kept = []
        for m in self.family:
            if m & ~x:
                continue
            packed = 0
            for j, i in enumerate(positions):
                if m >> i & 1:
                    packed |= 1 << j
            kept.append(packed)
        return SetSystem(new_ground, tuple(kept))

    def delete(self, subset: Subset) -> "SetSystem":
        x = self.ground.coerce(subset)
        return self.restrict(self.ground.full_mask & ~x)


def apply_vertex_flip(system: SetSystem, kind: FlipKind, subset: Subset) -> SetSystem:
    """Apply one of the three vertex flips on a subset of the ground set."""
    if kind == "pivot":
        return system.pivot(subset)
    if kind == "loopc":
        return system.loopc(subset)
    if kind == "dualpivot":
        return system.dual_pivot(subset)
    raise ValueError(f"unknown flip kind {kind!r}")


def restrict_delete(system: SetSystem, mode: Literal["restrict", "delete"], subset: Subset) -> SetSystem:
    if mode == "restrict":
        return system.restrict(subset)
    if mode == "delete":
        return system.delete(subset)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class VertexFlipWord:
    """A sequence of (flip kind, subset mask) steps, applied left to right."""

    steps: tuple[tuple[FlipKind, Mask], ...]

    def apply(self, system: SetSystem) -> SetSystem:
        out = system
        for kind, mask in self.steps:
            out = apply_vertex_flip(out, kind, mask)
        return out

    def __len__(self) -> int:
        return len(self.steps)


# -- whole-ground flips by their closed formulas ------------------------------


def _subset_parity_transform(system: SetSystem, superset_version: bool, force: bool) -> SetSystem:
    n = system.ground.n
    if n > PARITY_TRANSFORM_GUARD and not force:
        raise SizeGuardError(f"n={n} exceeds the parity-transform guard {PARITY_TRANSFORM_GUARD}")
    size = 1 << n
    vec = bytearray(size)
    for m in system.family:
        vec[m] ^= 1
    # zeta transform over GF(2): accumulate subset (or superset) parities
    for i in range(n):
        bit = 1 << i
        for x in range(size):
            if x & bit:
                if superset_version:
                    vec[x ^ bit] ^= vec[x]
                else:
                    vec[x] ^= vec[x ^ bit]
    return SetSystem(system.ground, tuple(x for x in range(size) if vec[x]))


def full_flip_explicit(system: SetSystem, kind: FlipKind, force: bool = False) -> SetSystem:
    """Flip on the whole ground set, computed by the closed membership rules.

    pivot: a set belongs iff its complement belongs to the input.
    loopc: a set belongs iff it contains an odd number of input members.
    dualpivot: a set belongs iff it is contained in an odd number of members.

    Must agree with the element-by-element composition; tests enforce this.
    """
    full = system.ground.full_mask
    if kind == "pivot":
        return SetSystem(system.ground, tuple(full ^ m for m in system.family))
    if kind == "loopc":
        return _subset_parity_transform(system, superset_version=False, force=force)
    if kind == "dualpivot":
        return _subset_parity_transform(system, superset_version=True, force=force)
    raise ValueError(f"unknown flip kind {kind!r}")


# -- distance ------------------------------------------------------------------


def distance(system: SetSystem, subset: Subset = 0) -> int:
    """Smallest symmetric-difference size between the subset and a member."""
    system.require_proper()
    x = system.ground.coerce(subset)
    return min((x ^ m).bit_count() for m in system.family)


# -- orbits --------------------------------------------------------------------

OrbitGenerators = Literal["fullV-alternation", "all-single-element-flips"]


def vf_orbit(
    system: SetSystem, generators: OrbitGenerators, cap: int = 100_000, force: bool = False
) -> list[SetSystem]:
    """Closure of a system under the chosen flip generators, canonical dedup.

    fullV-alternation walks +V, *V, +V, ... until the walk returns to the
    start; all-single-element-flips is a BFS closure under every single
    element pivot and loop complementation.
    """
    system.require_proper()
    if generators == "fullV-alternation":
        seen: list[SetSystem] = [system]
        cur = system
        steps = 0
        while True:
            kind: FlipKind = "loopc" if steps % 2 == 0 else "pivot"
            cur = full_flip_explicit(cur, kind, force=force)
            steps += 1
            if cur == system and steps % 2 == 0:
                return seen
            if cur not in seen:
                seen.append(cur)
            if len(seen) > cap or steps > 2 * cap:
                raise CapExceededError(f"orbit exceeded cap {cap}")
    if generators == "all-single-element-flips":
        order: list[SetSystem] = [system]
        visited = {system.family}
        queue = deque([system])
        bits = [1 << i for i in range(system.ground.n)]
        while queue:
            cur = queue.popleft()
            for bit in bits:
                for nxt in (cur.pivot(bit), cur._loopc_single(bit)):
                    if nxt.family not in visited:
                        visited.add(nxt.family)
                        order.append(nxt)
                        queue.append(nxt)
                        if len(order) > cap:
                            raise CapExceededError(f"orbit exceeded cap {cap}")
        return order
    raise ValueError(f"unknown generator choice {generators!r}")


def iter_submasks(mask: Mask) -> Iterator[Mask]:
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
