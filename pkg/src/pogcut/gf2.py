"""GF(2) vector spaces over subsets of a fixed edge set.

Edge subsets are Python ints used as bitsets: bit ``e`` is set iff edge ``e``
belongs to the subset.  A :class:`Gf2Subspace` keeps its basis in reduced
row-echelon form, keyed by the highest set bit of each row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Operands live in ambient spaces of different sizes."""


class ContainmentError(ValueError):
    """A quotient was requested for a non-subspace."""


@dataclass(frozen=True)
class EdgeVector:
    """Characteristic vector of a subset of ``{0, ..., length-1}``."""

    bits: int
    length: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise DimensionError(f"bits exceed length {self.length}")

    @classmethod
    def from_edges(cls, edges: Iterable[int], length: int) -> "EdgeVector":
        bits = 0
        for e in edges:
            bits ^= 1 << e
        return cls(bits, length)

    @classmethod
    def full(cls, length: int) -> "EdgeVector":
        return cls((1 << length) - 1, length)

    def edges(self) -> list[int]:
        return [e for e in range(self.length) if self.bits >> e & 1]

    def weight(self) -> int:
        return self.bits.bit_count()

    def complement(self) -> "EdgeVector":
        return EdgeVector(self.bits ^ ((1 << self.length) - 1), self.length)

    def __xor__(self, other: "EdgeVector") -> "EdgeVector":
        return sym_diff(self, other)

    def __contains__(self, e: int) -> bool:
        return bool(self.bits >> e & 1)


def _check(a: EdgeVector, b: EdgeVector) -> None:
    if a.length != b.length:
        raise DimensionError(f"length mismatch: {a.length} != {b.length}")


def popcount(x: int) -> int:
    return x.bit_count()


def sym_diff(a: EdgeVector, b: EdgeVector) -> EdgeVector:
    _check(a, b)
    return EdgeVector(a.bits ^ b.bits, a.length)


def orthogonal(a: EdgeVector, b: EdgeVector) -> bool:
    """True iff ``|a & b|`` is even."""
    _check(a, b)
    return popcount(a.bits & b.bits) % 2 == 0


def _reduce(rows: dict[int, int], v: int) -> int:
    # rows maps pivot bit -> row whose highest bit is the pivot
    while v:
        top = v.bit_length() - 1
        r = rows.get(top)
        if r is None:
            return v
        v ^= r
    return 0


def _echelon(vectors: Iterable[int]) -> dict[int, int]:
    rows: dict[int, int] = {}
    for v in vectors:
        v = _reduce(rows, v)
        if v:
            rows[v.bit_length() - 1] = v
    # back-substitute so each pivot bit appears in exactly one row
    for p in sorted(rows):
        r = rows[p]
        for q in sorted(rows):
            if q != p and rows[q] >> p & 1:
                rows[q] ^= r
    return rows


@dataclass(frozen=True)
class Gf2Subspace:
    """Subspace of GF(2)^ambient_dim with a reduced row-echelon basis."""

    ambient_dim: int
    basis: tuple[int, ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> dict[int, int]:
        return {r.bit_length() - 1: r for r in self.basis}

    def vectors(self) -> list[EdgeVector]:
        return [EdgeVector(r, self.ambient_dim) for r in self.basis]

    def contains(self, v: EdgeVector | int) -> bool:
        bits = v if isinstance(v, int) else v.bits
        if not isinstance(v, int):
            if v.length != self.ambient_dim:
                raise DimensionError(f"length mismatch: {v.length} != {self.ambient_dim}")
        return _reduce(self.pivots, bits) == 0

    def __contains__(self, v: EdgeVector | int) -> bool:
        return self.contains(v)

    def is_subspace_of(self, other: "Gf2Subspace") -> bool:
        _check_spaces(self, other)
        return all(other.contains(r) for r in self.basis)

    def __add__(self, other: "Gf2Subspace") -> "Gf2Subspace":
        _check_spaces(self, other)
        return _from_ints(self.basis + other.basis, self.ambient_dim)

    def __le__(self, other: "Gf2Subspace") -> bool:
        return self.is_subspace_of(other)


def _check_spaces(a: Gf2Subspace, b: Gf2Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient mismatch: {a.ambient_dim} != {b.ambient_dim}")


def _from_ints(vectors: Iterable[int], ambient: int) -> Gf2Subspace:
    rows = _echelon(vectors)
    return Gf2Subspace(ambient, tuple(rows[p] for p in sorted(rows, reverse=True)))


def span(vectors: Sequence[EdgeVector], ambient: int) -> Gf2Subspace:
    """Row-reduce ``vectors``; the result's dim is their rank."""
    for v in vectors:
        if v.length != ambient:
            raise DimensionError(f"length mismatch: {v.length} != {ambient}")
    return _from_ints((v.bits for v in vectors), ambient)


def full_space(ambient: int) -> Gf2Subspace:
    return _from_ints((1 << e for e in range(ambient)), ambient)


def zero_space(ambient: int) -> Gf2Subspace:
    return Gf2Subspace(ambient, ())


def _kernel(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of ``{x : x . rows[i] = 0 for all i}`` as int bitsets."""
    ech = _echelon(rows)
    pivots = set(ech)
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = 1 << f
        for p, r in ech.items():
            if r >> f & 1:
                x |= 1 << p
        out.append(x)
    return out


def orth_complement(a: Gf2Subspace) -> Gf2Subspace:
    return _from_ints(_kernel(a.basis, a.ambient_dim), a.ambient_dim)


def intersect(a: Gf2Subspace, b: Gf2Subspace) -> Gf2Subspace:
    """Basis of ``a & b`` via the kernel of the stacked bases."""
    _check_spaces(a, b)
    stacked = list(a.basis) + list(b.basis)
    na = len(a.basis)
    # combinations c with sum_i c_i * stacked_i == 0; the a-part of each gives a vector in a & b
    # transpose: column j of the coefficient matrix is stacked[j]
    n = len(stacked)
    cols = []
    for bit in range(a.ambient_dim):
        row = 0
        for j, v in enumerate(stacked):
            if v >> bit & 1:
                row |= 1 << j
        if row:
            cols.append(row)
    out = []
    for c in _kernel(cols, n):
        v = 0
        for j in range(na):
            if c >> j & 1:
                v ^= stacked[j]
        out.append(v)
    result = _from_ints(out, a.ambient_dim)
    assert result.dim == a.dim + b.dim - (a + b).dim
    return result


def quotient_dim(a: Gf2Subspace, b: Gf2Subspace) -> int:
    """``dim(a / b)``; ``b`` must be contained in ``a``."""
    _check_spaces(a, b)
    if not b.is_subspace_of(a):
        raise ContainmentError("second space is not contained in the first")
    return a.dim - b.dim
