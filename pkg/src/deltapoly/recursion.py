"""Recursive computation of q1, q2, q3, Q1 with explicit computation trees.

Branching removes one ground element per step.  The element is the
smallest-index one satisfying the branch condition (divisibility for q1,
divisibility of the transformed system for q2/q3, strong divisibility
for Q1); leaves carry closed-form values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .delta import divisible_by, is_delta_matroid, is_vf_closed, strongly_divisible_by
from .errors import PreconditionError
from .interlace import UniPoly, Which, poly_direct
from .setsystem import Mask, SetSystem, full_flip_explicit

CHECK_LIMIT = 8  # hypotheses are verified automatically up to this ground size

Chooser = Literal["min", "max"]


@dataclass(frozen=True)
class RecursionTrace:
    """One node of a computation tree.

    Leaves have no branches and carry a closed-form value; an internal
    node's value is the sum of its children's values, times the factor
    when a multiplicative shortcut was taken.
    """

    system: SetSystem
    value: UniPoly
    element: Optional[str] = None
    branches: tuple[tuple[str, "RecursionTrace"], ...] = ()
    factor: Optional[UniPoly] = None

    @property
    def is_leaf(self) -> bool:
        return not self.branches

    def leaf_values(self) -> list[UniPoly]:
        if self.is_leaf:
            return [self.value]
        out: list[UniPoly] = []
        for _, child in self.branches:
            out.extend(child.leaf_values())
        return out

    def branch_labels(self) -> list[str]:
        return [label for label, _ in self.branches]

    def render(self, indent: str = "") -> str:
        head = f"{indent}{self.system} = {self.value.text()}"
        if self.factor is not None:
            head += f"  [factor {self.factor.text()}]"
        lines = [head]
        for label, child in self.branches:
            lines.append(f"{indent}  {label}:")
            lines.append(child.render(indent + "    "))
        return "\n".join(lines)


def _should_check(system: SetSystem, checked: Optional[bool]) -> bool:
    if checked is None:
        return system.ground.n <= CHECK_LIMIT
    return checked


def _pick(bits: list[int], chooser: Chooser) -> int:
    return bits[0] if chooser == "min" else bits[-1]


def q1_recursive(
    system: SetSystem,
    checked: Optional[bool] = None,
    chooser: Chooser = "min",
    use_multiplicative: bool = False,
    memoize: bool = False,
) -> tuple[UniPoly, Optional[RecursionTrace]]:
    """Two-way deletion / pivot-deletion recursion for q1.

    The input must be a delta-matroid for the recursion to agree with the
    summation formula; this is verified up to the check limit unless
    overridden.
    """
    system.require_proper()
    if _should_check(system, checked) and not is_delta_matroid(system):
        raise PreconditionError("q1 recursion needs a delta-matroid input")
    memo: Optional[dict] = {} if memoize else None

    def go(m: SetSystem) -> tuple[UniPoly, Optional[RecursionTrace]]:
        if memo is not None:
            key = (m.ground.labels, m.family)
            hit = memo.get(key)
            if hit is not None:
                return hit, None
        n = m.ground.n
        if use_multiplicative:
            result = _q1_multiplicative(m, chooser)
        else:
            bits = [1 << i for i in range(n) if divisible_by(m, 1 << i)]
            if not bits:
                value = UniPoly.binomial_power(1, n)
                result = (value, None if memo is not None else RecursionTrace(m, value))
            else:
                bit = _pick(bits, chooser)
                left = m.delete(bit)
                right = m.pivot(bit).delete(bit)
                lv, lt = go(left)
                rv, rt = go(right)
                value = lv + rv
                trace = None
                if memo is None:
                    label = m.ground.labels_of(bit)[0]
                    trace = RecursionTrace(
                        m,
                        value,
                        element=label,
                        branches=((f"\\{label}", lt), (f"*{label}\\{label}", rt)),
                    )
                result = (value, trace)
        if memo is not None:
            memo[key] = result[0]
        return result

    def _q1_multiplicative(m: SetSystem, chooser: Chooser):
        n = m.ground.n
        if n == 0 or len(m.family) == 1:
            value = UniPoly.binomial_power(1, n)
            return value, None if memo is not None else RecursionTrace(m, value)
        bits = [1 << i for i in range(n)]
        bit = _pick(bits, chooser)
        label = m.ground.labels_of(bit)[0]
        case, factor, components = q1_multiplicative_step(m, bit)
        if case == "additive":
            lv, lt = go(components[0])
            rv, rt = go(components[1])
            value = lv + rv
            if memo is not None:
                return value, None
            return value, RecursionTrace(
                m, value, element=label,
                branches=((f"\\{label}", lt), (f"*{label}\\{label}", rt)),
            )
        cv, ct = go(components[0])
        value = factor * cv
        if memo is not None:
            return value, None
        op = f"\\{label}" if case == "loop" else f"*{label}\\{label}"
        return value, RecursionTrace(m, value, element=label, branches=((op, ct),), factor=factor)

    return go(system)


def q1_multiplicative_step(system: SetSystem, element) -> tuple[str, Optional[UniPoly], tuple[SetSystem, ...]]:
    """Classify one q1 step at an element into loop, coloop, or additive.

    loop: the element occurs in no member, so the pivot-deletion minor is
    improper and q1 gains a factor y+1 on the deletion minor.  coloop:
    the element occurs in every member, symmetrically.  Otherwise both
    minors are proper and the step is the two-way sum.
    """
    system.require_proper()
    bit = system.ground.coerce(element)
    if bit.bit_count() != 1:
        raise ValueError("the multiplicative step works on a single element")
    has_with = any(m & bit for m in system.family)
    has_without = any(not m & bit for m in system.family)
    factor = UniPoly.from_coeffs([1, 1])
    if not has_with:
        return "loop", factor, (system.delete(bit),)
    if not has_without:
        return "coloop", factor, (system.pivot(bit).delete(bit),)
    return "additive", None, (system.delete(bit), system.pivot(bit).delete(bit))


def q2_q3_recursive(
    system: SetSystem,
    which: Literal["q2", "q3"],
    checked: Optional[bool] = None,
    chooser: Chooser = "min",
) -> tuple[UniPoly, RecursionTrace]:
    """Two-way recursion for q2 (pivot/dual-pivot branches) or q3 (dual-pivot/deletion).

    Branching is governed by divisibility of the fully transformed system,
    tested cheaply per element on the singly transformed one.  The
    delta-matroid hypothesis on the transformed system is verified at the
    root when checking is on; the recursion preserves it.
    """
    system.require_proper()
    if which not in ("q2", "q3"):
        raise ValueError("which must be q2 or q3")
    if _should_check(system, checked):
        kind = "dualpivot" if which == "q2" else "loopc"
        transformed = full_flip_explicit(system, kind)
        if not is_delta_matroid(transformed):
            raise PreconditionError(
                f"{which} recursion needs the {kind}-transformed system to be a delta-matroid"
            )

    def branch_bit(m: SetSystem) -> Optional[Mask]:
        bits = []
        for i in range(m.ground.n):
            bit = 1 << i
            single = m.dual_pivot(bit) if which == "q2" else m.loopc(bit)
            if divisible_by(single, bit):
                bits.append(bit)
        if not bits:
            return None
        return _pick(bits, chooser)

    def go(m: SetSystem) -> tuple[UniPoly, RecursionTrace]:
        bit = branch_bit(m)
        if bit is None:
            value = UniPoly.binomial_power(1, m.ground.n)
            return value, RecursionTrace(m, value)
        label = m.ground.labels_of(bit)[0]
        if which == "q2":
            first = m.pivot(bit).delete(bit)
            second = m.dual_pivot(bit).delete(bit)
            labels = (f"*{label}\\{label}", f"~*{label}\\{label}")
        else:
            first = m.dual_pivot(bit).delete(bit)
            second = m.delete(bit)
            labels = (f"~*{label}\\{label}", f"\\{label}")
        fv, ft = go(first)
        sv, st = go(second)
        value = fv + sv
        return value, RecursionTrace(
            m, value, element=label, branches=((labels[0], ft), (labels[1], st))
        )

    return go(system)


def Q1_recursive(
    system: SetSystem,
    checked: Optional[bool] = None,
    chooser: Chooser = "min",
    cap: int = 100_000,
) -> tuple[UniPoly, RecursionTrace]:
    """Three-way recursion for Q1 on vf-closed delta-matroids.

    vf-closure is required for correctness and is verified at the root
    when checking is on; with checking off the result can disagree with
    the summation formula (see recursion_consistency).
    """
    system.require_proper()
    if _should_check(system, checked) and not is_vf_closed(system, cap=cap):
        raise PreconditionError("Q1 recursion needs a vf-closed delta-matroid input")

    def strong_bit(m: SetSystem) -> Optional[Mask]:
        bits = [1 << i for i in range(m.ground.n) if strongly_divisible_by(m, 1 << i)]
        if not bits:
            return None
        return _pick(bits, chooser)

    def go(m: SetSystem) -> tuple[UniPoly, RecursionTrace]:
        bit = strong_bit(m)
        if bit is None:
            value = UniPoly.binomial_power(2, m.ground.n)
            return value, RecursionTrace(m, value)
        label = m.ground.labels_of(bit)[0]
        parts = (
            (f"\\{label}", m.delete(bit)),
            (f"*{label}\\{label}", m.pivot(bit).delete(bit)),
            (f"~*{label}\\{label}", m.dual_pivot(bit).delete(bit)),
        )
        total = UniPoly.zero()
        branches = []
        for op, child in parts:
            cv, ct = go(child)
            total = total + cv
            branches.append((op, ct))
        return total, RecursionTrace(m, total, element=label, branches=tuple(branches))

    return go(system)


def q1_normal_step(
    system: SetSystem,
    member,
    element=None,
    checked: Optional[bool] = None,
) -> tuple[UniPoly, RecursionTrace]:
    """One q1 step that keeps both components normal.

    Requires a normal system, a member X containing the chosen element;
    the components are the deletion and the pivot on all of X followed by
    deletion.  Component values are completed by the plain q1 recursion.
    """
    system.require_proper()
    x = system.ground.coerce(member)
    if x not in system.family:
        raise PreconditionError("the pivot set must be a member of the system")
    if not system.is_normal:
        raise PreconditionError("the normal-step rule needs a normal system")
    if element is None:
        bit = x & -x
    else:
        bit = system.ground.coerce(element)
    if bit.bit_count() != 1 or not bit & x:
        raise PreconditionError("the removed element must lie in the chosen member")
    if _should_check(system, checked):
        if not is_delta_matroid(system):
            raise PreconditionError("the normal-step rule needs a delta-matroid")
    left = system.delete(bit)
    right = system.pivot(x).delete(bit)
    for part in (left, right):
        if not part.is_normal:
            raise PreconditionError("normal-step components must stay normal")
    lv, lt = q1_recursive(left, checked=False)
    rv, rt = q1_recursive(right, checked=False)
    value = lv + rv
    label = system.ground.labels_of(bit)[0]
    xs = "{" + ",".join(system.ground.labels_of(x)) + "}"
    return value, RecursionTrace(
        system,
        value,
        element=label,
        branches=((f"\\{label}", lt), (f"*{xs}\\{label}", rt)),
    )


def q2_edge_step(
    system: SetSystem,
    u,
    v,
    checked: Optional[bool] = None,
) -> tuple[UniPoly, RecursionTrace]:
    """Three-term q2 step for a two-element member whose singletons are absent.

    Under the hypotheses {u, v} in the system and {u}, {v} not in it, q2
    splits into the double pivot, the mixed pivot/dual-pivot, and the
    single dual-pivot components, all normal.
    """
    system.require_proper()
    ub = system.ground.coerce(u)
    vb = system.ground.coerce(v)
    if ub.bit_count() != 1 or vb.bit_count() != 1 or ub == vb:
        raise PreconditionError("the edge step needs two distinct single elements")
    pair = ub | vb
    if pair not in system.family or ub in system.family or vb in system.family:
        raise PreconditionError("edge-step hypothesis: the pair is a member, the singletons are not")
    if not system.is_normal:
        raise PreconditionError("the edge-step rule needs a normal system")
    if _should_check(system, checked) and not is_vf_closed(system):
        raise PreconditionError("the edge-step rule needs a vf-closed delta-matroid")
    parts = (
        system.pivot(pair).delete(pair),
        system.pivot(ub).dual_pivot(vb).delete(pair),
        system.dual_pivot(ub).delete(ub),
    )
    for part in parts:
        if not part.is_normal:
            raise PreconditionError("edge-step components must stay normal")
    ul = system.ground.labels_of(ub)[0]
    vl = system.ground.labels_of(vb)[0]
    labels = (
        f"*{{{ul},{vl}}}\\{{{ul},{vl}}}",
        f"*{ul}~*{vl}\\{{{ul},{vl}}}",
        f"~*{ul}\\{ul}",
    )
    total = UniPoly.zero()
    branches = []
    for op, part in zip(labels, parts):
        pv, pt = q2_q3_recursive(part, "q2", checked=False)
        total = total + pv
        branches.append((op, pt))
    return total, RecursionTrace(system, total, element=ul, branches=tuple(branches))


@dataclass(frozen=True)
class ConsistencyReport:
    """Recursive-versus-definitional comparison for one polynomial."""

    which: str
    recursive: UniPoly
    direct: UniPoly

    @property
    def equal(self) -> bool:
        return self.recursive == self.direct


def recursion_consistency(system: SetSystem, which: Which) -> ConsistencyReport:
    """Run the recursion without hypothesis checks and compare with the summation.

    A mismatch is the designed diagnostic for inputs that break a
    recursion hypothesis (for example Q1 on a delta-matroid that is not
    vf-closed).
    """
    if which == "q1":
        rec, _ = q1_recursive(system, checked=False)
    elif which in ("q2", "q3"):
        rec, _ = q2_q3_recursive(system, which, checked=False)
    elif which == "Q1":
        rec, _ = Q1_recursive(system, checked=False)
    else:
        raise ValueError(f"unknown polynomial name {which!r}")
    return ConsistencyReport(which, rec, poly_direct(system, which))
