"""Delta-matroid predicates: exchange axiom, evenness, vf-closure, divisibility."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError
from .setsystem import SetSystem, distance


def is_delta_matroid(system: SetSystem) -> bool:
    """Symmetric exchange axiom, brute force over ordered member pairs.

    For members X, Y and every u in X ^ Y, either X ^ {u} is a member or
    some v != u in X ^ Y makes X ^ {u, v} a member.  Improper systems
    fail by definition.
    """
    fam = set(system.family)
    if not fam:
        return False
    members = system.family
    for x in members:
        for y in members:
            diff = x ^ y
            if not diff:
                continue
            d = diff
            while d:
                ubit = d & -d
                d ^= ubit
                if x ^ ubit in fam:
                    continue
                rest = diff ^ ubit
                found = False
                r = rest
                while r:
                    vbit = r & -r
                    r ^= vbit
                    if x ^ ubit ^ vbit in fam:
                        found = True
                        break
                if not found:
                    return False
    return True


def is_even(system: SetSystem) -> bool:
    """All members share cardinality parity."""
    system.require_proper()
    parities = {m.bit_count() & 1 for m in system.family}
    return len(parities) == 1


@dataclass(frozen=True)
class DivisibilityStatus:
    divisible: bool
    strongly_divisible: bool


def divisibility(system: SetSystem, element) -> DivisibilityStatus:
    """Divisibility of the system by one element, via properness of minors.

    Divisible: both the deletion and the pivot-deletion minors are proper,
    i.e. some member contains the element and some member avoids it.
    Strongly divisible: additionally some member's toggle by the element
    is not a member.
    """
    system.require_proper()
    bit = system.ground.coerce(element)
    if bit.bit_count() != 1:
        raise ValueError("divisibility is defined per single element")
    has_with = any(m & bit for m in system.family)
    has_without = any(not m & bit for m in system.family)
    div = has_with and has_without
    fam = set(system.family)
    strong = div and any(m ^ bit not in fam for m in system.family)
    if __debug__:
        # cross-check against the existential definitions
        exists_pair = any(
            (x ^ y) & bit for x in system.family for y in system.family
        )
        assert div == exists_pair
    return DivisibilityStatus(div, strong)


def divisible_by(system: SetSystem, bit: int) -> bool:
    """Fast path used by the recursion engine; bit must be a single element."""
    has_with = False
    has_without = False
    for m in system.family:
        if m & bit:
            has_with = True
        else:
            has_without = True
        if has_with and has_without:
            return True
    return False


def strongly_divisible_by(system: SetSystem, bit: int) -> bool:
    """Fast path: divisible and some member's toggle is not a member."""
    if not divisible_by(system, bit):
        return False
    fam = set(system.family)
    return any(m ^ bit not in fam for m in system.family)


def is_vf_closed(system: SetSystem, cap: int = 100_000) -> bool:
    """Every image of the system under vertex-flip sequences is a delta-matroid.

    Enumeration is cut down by pivot invariance of the exchange axiom: any
    flip word factors per element into a coset representative in
    {identity, loopc, dual pivot} followed by a pivot, so it suffices to
    check the images under disjoint loopc/dual-pivot element choices
    (at most 3^n systems after dedup).
    """
    system.require_proper()
    seen = {system.family}
    frontier = [system]
    if not is_delta_matroid(system):
        return False
    for i in range(system.ground.n):
        bit = 1 << i
        new_frontier = list(frontier)
        for s in frontier:
            for image in (s.loopc(bit), s.dual_pivot(bit)):
                if image.family in seen:
                    continue
                seen.add(image.family)
                if len(seen) > cap:
                    raise CapExceededError(f"vf-closure enumeration exceeded cap {cap}")
                if not is_delta_matroid(image):
                    return False
                new_frontier.append(image)
        frontier = new_frontier
    return True


def distance_triple(system: SetSystem, element) -> tuple[int, int, int]:
    """Minimum member sizes of the system, its pivot, and its dual pivot on one element.

    For delta-matroids the three values are m, m, m+1 in some order; the
    shape is asserted by tests, not here.
    """
    system.require_proper()
    bit = system.ground.coerce(element)
    if bit.bit_count() != 1:
        raise ValueError("distance_triple is defined per single element")
    d_m = distance(system, 0)
    d_pivot = distance(system, bit)
    d_dual = distance(system.dual_pivot(bit), 0)
    return (d_m, d_pivot, d_dual)
