"""Q-graphs: gems plus a crossing matching, their dualities and maps.

Each edge ``e = {u, w}`` of the underlying map owns four corners
``4e + 2*end + side`` where ``end`` is 0 at ``u`` and 1 at ``w`` and ``side``
is 0 (left) or 1 (right) looking out of the vertex along ``e``.  A matching
is stored as an involution over the corners.

Matching positions follow ``Q(m0, m1, m2, m3)``: short, angular, long and
crossing edges.  For an untwisted edge the long sides join ``(u, L)`` with
``(w, R)``; twisting swaps the long and crossing pairs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Literal

from .rozig import RotationSystem

Walk = tuple[int, ...]
Duality = Literal["dual", "skew", "phial"]


class StructureError(ValueError):
    """Input does not describe a valid rotation system or Q-graph."""


def corner(e: int, end: int, side: int) -> int:
    return 4 * e + 2 * end + side


@dataclass(frozen=True)
class QGraph:
    matchings: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def num_corners(self) -> int:
        return len(self.matchings[0])

    @property
    def num_edges(self) -> int:
        return self.num_corners // 4

    def hyperedge_of(self, c: int) -> int:
        return c // 4


def _pair(mat: list[int], a: int, b: int) -> None:
    if mat[a] != -1 or mat[b] != -1 or a == b:
        raise StructureError(f"corner clash pairing {a} and {b}")
    mat[a] = b
    mat[b] = a


def build_qgraph(rs: RotationSystem) -> QGraph:
    m = rs.num_edges
    n = 4 * m
    mats = [[-1] * n for _ in range(4)]
    for e, (u, w) in enumerate(rs.ends):
        if u == w:
            raise StructureError("loops are not supported")
        l0, r0, l1, r1 = (corner(e, 0, 0), corner(e, 0, 1), corner(e, 1, 0), corner(e, 1, 1))
        _pair(mats[0], l0, r0)
        _pair(mats[0], l1, r1)
        straight = [(l0, r1), (r0, l1)]
        crossed = [(l0, l1), (r0, r1)]
        long_, cross = (crossed, straight) if e in rs.twist else (straight, crossed)
        for a, b in long_:
            _pair(mats[2], a, b)
        for a, b in cross:
            _pair(mats[3], a, b)
    seen = Counter()
    for v, rot in enumerate(rs.rotation):
        k = len(rot)
        for i, e in enumerate(rot):
            if not 0 <= e < m:
                raise StructureError(f"edge id {e} out of range")
            seen[e] += 1
        for i, e in enumerate(rot):
            f = rot[(i + 1) % k]
            _pair(mats[1], corner(e, _end(rs, e, v), 1), corner(f, _end(rs, f, v), 0))
    if any(seen[e] != 2 for e in range(m)):
        raise StructureError("each edge must occur in exactly two vertex rotations")
    q = QGraph(tuple(tuple(x) for x in mats))
    validate_qgraph(q)
    return q


def _end(rs: RotationSystem, e: int, v: int) -> int:
    u, w = rs.ends[e]
    if v == u:
        return 0
    if v == w:
        return 1
    raise StructureError(f"edge {e} is not incident to vertex {v}")


def validate_qgraph(q: QGraph) -> None:
    n = q.num_corners
    if n % 4:
        raise StructureError("corner count must be a multiple of 4")
    for mat in q.matchings:
        if any(mat[mat[c]] != c or mat[c] == c for c in range(n)):
            raise StructureError("matching is not a perfect matching")
    for c in range(n):
        partners = {q.matchings[i][c] for i in range(4)}
        if len(partners) != 4:
            raise StructureError("matchings are not pairwise disjoint")
        inner = {q.matchings[i][c] for i in (0, 2, 3)}
        if inner != {x for x in range(4 * (c // 4), 4 * (c // 4) + 4)} - {c}:
            raise StructureError("hyperedge is not a K4 on its four corners")


def apply_duality(q: QGraph, kind: Duality) -> QGraph:
    m0, m1, m2, m3 = q.matchings
    if kind == "dual":
        return QGraph((m2, m1, m0, m3))
    if kind == "skew":
        return QGraph((m0, m1, m3, m2))
    if kind == "phial":
        return QGraph((m3, m1, m2, m0))
    raise ValueError(f"unknown duality {kind!r}")


def dual(q: QGraph) -> QGraph:
    return apply_duality(q, "dual")


def skew(q: QGraph) -> QGraph:
    return apply_duality(q, "skew")


def phial(q: QGraph) -> QGraph:
    return apply_duality(q, "phial")


def bigons(q: QGraph, i: int, j: int) -> list[list[int]]:
    """Alternating ``i``/``j`` corner cycles, each starting with an ``i`` step."""
    if i == j or not {i, j} <= {0, 1, 2, 3}:
        raise ValueError("need two distinct colours in 0..3")
    mi, mj = q.matchings[i], q.matchings[j]
    seen = [False] * q.num_corners
    out = []
    for start in range(q.num_corners):
        if seen[start]:
            continue
        cyc = []
        c = start
        while True:
            cyc.append(c)
            seen[c] = True
            d = mi[c]
            cyc.append(d)
            seen[d] = True
            c = mj[d]
            if c == start:
                break
        out.append(cyc)
    return out


def canonical_walk(walk: Walk | list[int]) -> Walk:
    """Least rotation of the walk or its reversal."""
    w = tuple(walk)
    if not w:
        return w
    cands = []
    for seq in (w, w[::-1]):
        cands.extend(seq[k:] + seq[:k] for k in range(len(seq)))
    return min(cands)


def _walks(q: QGraph, colour: int) -> list[Walk]:
    # colour is 0, 2 or 3: the hyperedge step between angular steps
    walks = []
    for cyc in bigons(q, colour, 1):
        walks.append(canonical_walk([cyc[k] // 4 for k in range(0, len(cyc), 2)]))
    return sorted(walks)


def is_orientable(q: QGraph) -> bool:
    """Bipartiteness of the gem formed by the first three matchings."""
    n = q.num_corners
    colour = [-1] * n
    for s in range(n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            c = stack.pop()
            for k in range(3):
                d = q.matchings[k][c]
                if colour[d] == -1:
                    colour[d] = 1 - colour[c]
                    stack.append(d)
                elif colour[d] == colour[c]:
                    return False
    return True


@dataclass(frozen=True)
class CombMap:
    """A map read off a Q-graph: vertices, faces and zigzags as edge walks."""

    edge_count: int
    vertices: tuple[Walk, ...]
    faces: tuple[Walk, ...]
    zigzags: tuple[Walk, ...]
    orientable: bool

    @property
    def euler_char(self) -> int:
        return len(self.vertices) + len(self.faces) - self.edge_count


def extract_map(q: QGraph) -> CombMap:
    cm = CombMap(
        edge_count=q.num_edges,
        vertices=tuple(_walks(q, 0)),
        faces=tuple(_walks(q, 2)),
        zigzags=tuple(_walks(q, 3)),
        orientable=is_orientable(q),
    )
    for walks in (cm.vertices, cm.faces, cm.zigzags):
        counts = Counter(e for w in walks for e in w)
        if any(counts[e] != 2 for e in range(cm.edge_count)):
            raise StructureError("every edge must be traversed twice by each walk family")
    return cm
