"""Matrices over GF(2): determinants, nullity, principal pivot transform.

Rows are integer bitmasks; addition is XOR.  Square matrices are indexed
by a labelled ground set so they interoperate with set systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import PivotUndefinedError, SizeGuardError
from .setsystem import GroundSet, Mask, SetSystem, Subset

SUPPORT_GUARD = 20  # 2^n principal minors are enumerated


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank of a list of bitmask vectors, elimination on the lowest set bit."""
    basis: list[int] = []
    rank = 0
    for v in vectors:
        for b in basis:
            low = b & -b
            if v & low:
                v ^= b
        if v:
            basis.append(v)
            rank += 1
    return rank


def gf2_row_reduce(vectors: Iterable[int]) -> list[int]:
    """Independent spanning vectors in reduced form, sorted by pivot bit."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            low = b & -b
            if v & low:
                v ^= b
        if v:
            low = v & -v
            for i, b in enumerate(basis):
                if b & low:
                    basis[i] = b ^ v
            basis.append(v)
    return sorted(basis, key=lambda b: b & -b)


def gf2_in_span(vector: int, basis_reduced: Sequence[int]) -> bool:
    v = vector
    for b in basis_reduced:
        if v & (b & -b):
            v ^= b
    return v == 0


def gf2_kernel_basis(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of {x : every row is orthogonal to x}, vectors over the columns."""
    reduced = gf2_row_reduce(rows)
    pivot_cols = [(b & -b).bit_length() - 1 for b in reduced]
    pivot_set = set(pivot_cols)
    kernel = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        vec = 1 << j
        for b, pc in zip(reduced, pivot_cols):
            if b >> j & 1:
                vec |= 1 << pc
        kernel.append(vec)
    return kernel


def gf2_solve_columns(columns: Sequence[int], target: int) -> Optional[int]:
    """Coefficients (as a mask over the column list) with XOR sum equal to target.

    Returns one solution or None when the target is outside the span.
    """
    basis: list[tuple[int, int]] = []  # (vector, combination mask)
    for j, col in enumerate(columns):
        v, combo = col, 1 << j
        for b, c in basis:
            if v & (b & -b):
                v ^= b
                combo ^= c
        if v:
            basis.append((v, combo))
    v, combo = target, 0
    for b, c in basis:
        if v & (b & -b):
            v ^= b
            combo ^= c
    return combo if v == 0 else None


@dataclass(frozen=True)
class Gf2Matrix:
    """Square GF(2) matrix with rows stored as bitmasks over the ground set."""

    ground: GroundSet
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.ground.n
        if len(self.rows) != n:
            raise ValueError(f"expected {n} rows, got {len(self.rows)}")
        full = self.ground.full_mask
        for r in self.rows:
            if r & ~full:
                raise ValueError("row has bits outside the ground set")

    @classmethod
    def from_rows(cls, labels: Sequence[str], rows: Sequence[Sequence[int]]) -> "Gf2Matrix":
        ground = GroundSet(tuple(labels))
        packed = []
        for row in rows:
            if len(row) != ground.n:
                raise ValueError("matrix is not square")
            m = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                if v:
                    m |= 1 << j
            packed.append(m)
        return cls(ground, tuple(packed))

    @classmethod
    def zeros(cls, ground: GroundSet) -> "Gf2Matrix":
        return cls(ground, (0,) * ground.n)

    @classmethod
    def identity(cls, ground: GroundSet) -> "Gf2Matrix":
        return cls(ground, tuple(1 << i for i in range(ground.n)))

    @property
    def n(self) -> int:
        return self.ground.n

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        n = self.n
        return [[self.rows[i] >> j & 1 for j in range(n)] for i in range(n)]

    @property
    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.entry(i, j) == self.entry(j, i) for i in range(n) for j in range(i + 1, n))

    def with_toggled_diagonal(self, subset: Subset) -> "Gf2Matrix":
        x = self.ground.coerce(subset)
        rows = list(self.rows)
        for i in range(self.n):
            if x >> i & 1:
                rows[i] ^= 1 << i
        return Gf2Matrix(self.ground, tuple(rows))

    def principal_rows(self, x: Mask) -> list[int]:
        """Rows of the principal submatrix, columns packed to the low bits."""
        positions = [i for i in range(self.n) if x >> i & 1]
        out = []
        for i in positions:
            row = self.rows[i]
            packed = 0
            for j, p in enumerate(positions):
                if row >> p & 1:
                    packed |= 1 << j
            out.append(packed)
        return out


def det_nullity(matrix: Gf2Matrix, subset: Subset) -> tuple[int, int]:
    """Determinant (0 or 1) and nullity of a principal submatrix.

    The empty submatrix has determinant 1 and nullity 0.
    """
    x = matrix.ground.coerce(subset)
    k = x.bit_count()
    if k == 0:
        return 1, 0
    rank = gf2_rank(matrix.principal_rows(x))
    return (1 if rank == k else 0), k - rank


def nullity(matrix: Gf2Matrix, subset: Subset | None = None) -> int:
    x = matrix.ground.full_mask if subset is None else matrix.ground.coerce(subset)
    return det_nullity(matrix, x)[1]


def _invert(rows: Sequence[int], k: int) -> Optional[list[int]]:
    """Inverse of a k x k bitmask matrix by Gauss-Jordan, or None if singular."""
    aug = [rows[i] | (1 << (k + i)) for i in range(k)]
    pivots: list[int] = []
    for col in range(k):
        bit = 1 << col
        pivot_row = None
        for r in range(len(aug)):
            if r in pivots:
                continue
            if aug[r] & bit:
                pivot_row = r
                break
        if pivot_row is None:
            return None
        pivots.append(pivot_row)
        for r in range(len(aug)):
            if r != pivot_row and aug[r] & bit:
                aug[r] ^= aug[pivot_row]
    inv = [0] * k
    for col, r in enumerate(pivots):
        inv[col] = aug[r] >> k
    return inv


def _matmul(a_rows: Sequence[int], b_rows: Sequence[int]) -> list[int]:
    """Product of bitmask matrices: a is rows over len(b_rows) columns."""
    out = []
    for arow in a_rows:
        acc = 0
        r = arow
        while r:
            low = r & -r
            acc ^= b_rows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return out


def ppt(matrix: Gf2Matrix, subset: Subset) -> Gf2Matrix:
    """Principal pivot transform on a nonsingular principal submatrix.

    Over GF(2) the block formula has no signs: the pivoted block is
    inverted, the off-diagonal blocks are multiplied through the inverse,
    and the complementary block becomes its Schur complement.
    """
    x = matrix.ground.coerce(subset)
    if x == 0:
        return matrix
    n = matrix.n
    pos = [i for i in range(n) if x >> i & 1]
    rest = [i for i in range(n) if not x >> i & 1]
    k = len(pos)

    def extract(row: int, cols: list[int]) -> int:
        packed = 0
        for j, c in enumerate(cols):
            if row >> c & 1:
                packed |= 1 << j
        return packed

    p_rows = [extract(matrix.rows[i], pos) for i in pos]
    p_inv = _invert(p_rows, k)
    if p_inv is None:
        raise PivotUndefinedError("principal submatrix is singular")
    q_rows = [extract(matrix.rows[i], rest) for i in pos]
    r_rows = [extract(matrix.rows[i], pos) for i in rest]
    s_rows = [extract(matrix.rows[i], rest) for i in rest]
    piq = _matmul(p_inv, q_rows)  # k rows over rest columns
    rpi = _matmul(r_rows, p_inv)  # rest rows over pivot columns
    rpiq = _matmul(rpi, q_rows)  # rest rows over rest columns

    def scatter(packed: int, cols: list[int]) -> int:
        out = 0
        for j, c in enumerate(cols):
            if packed >> j & 1:
                out |= 1 << c
        return out

    new_rows = [0] * n
    for idx, i in enumerate(pos):
        new_rows[i] = scatter(p_inv[idx], pos) | scatter(piq[idx], rest)
    for idx, i in enumerate(rest):
        new_rows[i] = scatter(rpi[idx], pos) | scatter(s_rows[idx] ^ rpiq[idx], rest)
    return Gf2Matrix(matrix.ground, tuple(new_rows))


def schur_complement(matrix: Gf2Matrix, subset: Subset) -> Gf2Matrix:
    """The block of the pivot transform living on the complementary elements."""
    x = matrix.ground.coerce(subset)
    pivoted = ppt(matrix, x)
    keep = matrix.ground.full_mask & ~x
    pos = [i for i in range(matrix.n) if keep >> i & 1]
    ground = matrix.ground.restrict(keep)
    rows = []
    for i in pos:
        row = pivoted.rows[i]
        packed = 0
        for j, p in enumerate(pos):
            if row >> p & 1:
                packed |= 1 << j
        rows.append(packed)
    return Gf2Matrix(ground, tuple(rows))


def support_set_system(matrix: Gf2Matrix, force: bool = False) -> SetSystem:
    """All index sets whose principal submatrix is nonsingular.

    The empty set always qualifies, so the result is normal.  Symmetric
    matrices yield delta-matroids.
    """
    n = matrix.n
    if n > SUPPORT_GUARD and not force:
        raise SizeGuardError(f"n={n} exceeds the principal-minor guard {SUPPORT_GUARD}")
    members = [x for x in range(1 << n) if det_nullity(matrix, x)[0]]
    return SetSystem(matrix.ground, tuple(members))
