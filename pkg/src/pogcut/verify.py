"""Exhaustive oracles: cut enumeration, brute-force MaxCut, feasible-point search.

The point enumerator is a depth-first search over integer boxes with bound
propagation on each row; rows have at most four +-1 coefficients, so each
row's slack is recomputed from scratch whenever one of its variables moves.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .gf2 import EdgeVector
from .model import InequalitySystem
from .pog import CapabilityError
from .rozig import edge_pairs, num_edges

CUT_GUARD = 30
POINTS_GUARD = 28
BOX_GUARD = 15
BRUTE_GUARD = 20


@dataclass(frozen=True)
class CutVector:
    bits: EdgeVector
    side: frozenset  # 1-based labels, never containing vertex 1


@dataclass(frozen=True)
class Solution:
    value: int
    argmax: EdgeVector
    side: Optional[frozenset] = None


def _coboundaries(z: int) -> list[int]:
    cob = [0] * z
    for e, (i, j) in enumerate(edge_pairs(z)):
        cob[i - 1] |= 1 << e
        cob[j - 1] |= 1 << e
    return cob


def _guard_z(z: int) -> None:
    if z > CUT_GUARD:
        raise CapabilityError(f"z = {z} exceeds the cut enumeration guard {CUT_GUARD}")


def _gray_cuts(z: int):
    """Yield (side bitmask over vertices 2..z, cut bits) for every cut, in Gray order."""
    cob = _coboundaries(z)
    side, bits = 0, 0
    yield side, bits
    for k in range(1, 1 << (z - 1)):
        flip = (k & -k).bit_length() - 1  # vertex index (0-based) among 2..z
        side ^= 1 << flip
        bits ^= cob[flip + 1]
        yield side, bits


def _side_labels(side: int) -> frozenset:
    return frozenset(v + 2 for v in range(side.bit_length()) if side >> v & 1)


def enumerate_cuts(z: int) -> set[CutVector]:
    _guard_z(z)
    m = num_edges(z)
    return {CutVector(EdgeVector(bits, m), _side_labels(side)) for side, bits in _gray_cuts(z)}


def _objective_bits(objective: Sequence[int]) -> Optional[int]:
    if all(w in (0, 1) for w in objective):
        return sum(1 << e for e, w in enumerate(objective) if w)
    return None


def _value(objective: Sequence[int], obits: Optional[int], x: int) -> int:
    if obits is not None:
        return (obits & x).bit_count()
    return sum(w for e, w in enumerate(objective) if x >> e & 1)


def maxcut_oracle(z: int, objective: Sequence[int]) -> Solution:
    """Best cut by full enumeration; ties go to the lexicographically least side."""
    _guard_z(z)
    m = num_edges(z)
    if len(objective) != m:
        raise ValueError(f"objective needs {m} entries")
    obits = _objective_bits(objective)
    best = None
    for side, bits in _gray_cuts(z):
        val = _value(objective, obits, bits)
        key = tuple(sorted(_side_labels(side)))
        if best is None or val > best[0] or (val == best[0] and key < best[1]):
            best = (val, key, bits)
    val, key, bits = best
    return Solution(val, EdgeVector(bits, m), frozenset(key))


# -- feasible point search -------------------------------------------------


def _le_rows(sys: InequalitySystem):
    rows = []
    for r in sys.rows:
        vs = tuple(v for v, _ in r.coeffs)
        cs = tuple(c for _, c in r.coeffs)
        if r.rel == "<=":
            rows.append((vs, cs, r.rhs))
        else:
            rows.append((vs, cs, r.rhs))
            rows.append((vs, tuple(-c for c in cs), -r.rhs))
    return rows


def _var_order(n: int, rows) -> list[int]:
    count = [0] * n
    for vs, _, _ in rows:
        for v in vs:
            count[v] += 1
    return sorted(range(n), key=lambda v: (-count[v], v))


class _Search:
    def __init__(self, n: int, rows, ub: int, order: list[int]):
        self.n = n
        self.rows = rows
        self.order = order
        self.lo = [0] * n
        self.hi = [ub] * n
        self.var_rows: list[list[int]] = [[] for _ in range(n)]
        for i, (vs, _, _) in enumerate(rows):
            for v in vs:
                self.var_rows[v].append(i)
        self.trail: list[tuple[int, int, int]] = []
        self.out: list[tuple[int, ...]] = []

    def _set(self, v: int, lo: int, hi: int) -> None:
        self.trail.append((v, self.lo[v], self.hi[v]))
        self.lo[v], self.hi[v] = lo, hi

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            v, lo, hi = self.trail.pop()
            self.lo[v], self.hi[v] = lo, hi

    def propagate(self, queue: list[int]) -> bool:
        lo, hi, rows = self.lo, self.hi, self.rows
        pending = set(queue)
        while queue:
            r = queue.pop()
            pending.discard(r)
            vs, cs, rhs = rows[r]
            minlhs = 0
            for v, c in zip(vs, cs):
                minlhs += c * (lo[v] if c > 0 else hi[v])
            slack = rhs - minlhs
            if slack < 0:
                return False
            for v, c in zip(vs, cs):
                if c > 0:
                    nh = lo[v] + slack // c
                    if nh < hi[v]:
                        self._set(v, lo[v], nh)
                    else:
                        continue
                else:
                    nl = hi[v] - slack // (-c)
                    if nl > lo[v]:
                        self._set(v, nl, hi[v])
                    else:
                        continue
                if lo[v] > hi[v]:
                    return False
                for r2 in self.var_rows[v]:
                    if r2 not in pending:
                        pending.add(r2)
                        queue.append(r2)
        return True

    def assign(self, v: int, val: int) -> bool:
        self._set(v, val, val)
        return self.propagate(list(self.var_rows[v]))

    def run(self) -> None:
        self._dfs(0)

    def _dfs(self, k: int) -> None:
        order, lo, hi = self.order, self.lo, self.hi
        while k < self.n and lo[order[k]] == hi[order[k]]:
            k += 1
        if k == self.n:
            self.out.append(tuple(lo))
            return
        v = order[k]
        for val in range(lo[v], hi[v] + 1):
            mark = len(self.trail)
            if self.assign(v, val):
                self._dfs(k + 1)
            self._undo(mark)


def _search_prefix(args) -> list[tuple[int, ...]]:
    n, rows, ub, order, prefix = args
    s = _Search(n, rows, ub, order)
    if not s.propagate(list(range(len(rows)))):
        return []
    for v, val in prefix:
        if s.lo[v] <= val <= s.hi[v]:
            if not s.assign(v, val):
                return []
        else:
            return []
    s.run()
    return s.out


def _search(sys: InequalitySystem, ub: int, threads: int) -> list[tuple[int, ...]]:
    n = sys.num_vars
    rows = _le_rows(sys)
    order = _var_order(n, rows)
    if threads <= 1:
        return _search_prefix((n, rows, ub, order, ()))
    depth = min(n, max(1, math.ceil(math.log(threads * 4, ub + 1))))
    prefixes = []

    def gen(i, acc):
        if i == depth:
            prefixes.append(tuple(acc))
            return
        for val in range(ub + 1):
            gen(i + 1, acc + [(order[i], val)])

    gen(0, [])
    jobs = [(n, rows, ub, order, p) for p in prefixes]
    out: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=threads) as ex:
        for part in ex.map(_search_prefix, jobs):
            out.extend(part)
    return out


def _pack(x: tuple[int, ...]) -> int:
    return sum(1 << e for e, v in enumerate(x) if v)


def enumerate_01_points(sys: InequalitySystem, threads: int = 1) -> set[EdgeVector]:
    """All 0-1 vectors satisfying every row of a P12 system."""
    if sys.kind != "P12":
        raise ValueError("expected a P12 system")
    if sys.num_vars > POINTS_GUARD:
        raise CapabilityError(f"|E| = {sys.num_vars} exceeds the point guard {POINTS_GUARD}")
    return {EdgeVector(_pack(x), sys.num_vars) for x in _search(sys, 1, threads)}


def integer_box_scan(sys: InequalitySystem, ub: int, threads: int = 1) -> set[tuple[int, ...]]:
    """All integer points of a P12 system with coordinates in ``[0, ub]``."""
    if sys.kind != "P12":
        raise ValueError("expected a P12 system")
    if ub > 2 or ub < 0:
        raise CapabilityError("box scans support 0 <= ub <= 2")
    if sys.num_vars > BOX_GUARD:
        raise CapabilityError(f"|E| = {sys.num_vars} exceeds the box guard {BOX_GUARD}")
    return set(_search(sys, ub, threads))


def brute_force_points(sys: InequalitySystem, ub: int = 1, chunk: int = 1 << 20) -> set[tuple[int, ...]]:
    """Unpruned scan of the whole box ``[0, ub]^n``; an independent check on the search."""
    n = sys.num_vars
    if (ub + 1) ** n > (ub + 1) ** BRUTE_GUARD:
        raise CapabilityError("box too large for the unpruned scan")
    A = np.zeros((len(sys.rows), n), dtype=np.int64)
    b = np.zeros(len(sys.rows), dtype=np.int64)
    eq = np.zeros(len(sys.rows), dtype=bool)
    for i, r in enumerate(sys.rows):
        for v, c in r.coeffs:
            A[i, v] += c
        b[i] = r.rhs
        eq[i] = r.rel == "="
    base = ub + 1
    total = base**n
    powers = base ** np.arange(n, dtype=np.int64)
    out: set[tuple[int, ...]] = set()
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        X = (idx[:, None] // powers[None, :]) % base
        lhs = X @ A.T
        ok = np.where(eq[None, :], lhs == b[None, :], lhs <= b[None, :]).all(axis=1)
        out.update(map(tuple, X[ok].tolist()))
    return out


def model_solve(
    sys: InequalitySystem,
    objective: Sequence[int],
    points: Optional[set[EdgeVector]] = None,
    threads: int = 1,
) -> Solution:
    """Maximise over the feasible 0-1 points; ties go to the lexicographically least vector."""
    if points is None:
        points = enumerate_01_points(sys, threads)
    if len(objective) != sys.num_vars:
        raise ValueError(f"objective needs {sys.num_vars} entries")
    obits = _objective_bits(objective)
    n = sys.num_vars
    best = None
    for p in points:
        val = _value(objective, obits, p.bits)
        key = tuple(-(p.bits >> e & 1) for e in range(n))
        # lexicographically least (x_0, x_1, ...) == greatest key of negated bits
        if best is None or val > best[0] or (val == best[0] and key > best[1]):
            best = (val, key, p)
    return Solution(best[0], best[2])
