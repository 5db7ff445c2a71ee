"""Polygon families and the inequality systems built from them.

Variables ``0..m-1`` are the edge variables of K_z (``x_e`` for the MaxCut
model, ``x'_e`` for the strong O-join models).  The slack model appends one
double-slack variable per polygon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Literal, Optional

from .pog import Triad, build_triad
from .rozig import edge_pairs, num_edges

Kind = Literal["P12", "P2prime", "P0prime", "custom"]


class ModelError(ValueError):
    """A generated system breaks its own structural contract."""


@dataclass(frozen=True)
class Polygon:
    index: int
    edges: tuple[int, ...]
    origin: Literal["vertex", "face"]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SignedPolygon:
    polygon: Polygon
    signs: tuple[int, ...]

    @property
    def p_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def p_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @property
    def minus_mask(self) -> int:
        """Bit k set iff the k-th polygon edge carries sign -1."""
        return sum(1 << k for k, s in enumerate(self.signs) if s < 0)


@dataclass(frozen=True)
class Row:
    """``sum(coef * x[var]) rel rhs``; coeffs keep polygon order for display."""

    coeffs: tuple[tuple[int, int], ...]
    rel: Literal["<=", "="]
    rhs: int
    name: str = ""
    tag: str = "polygon"

    def key(self) -> tuple:
        return (tuple(sorted(self.coeffs)), self.rel, self.rhs)

    def lhs(self, x) -> object:
        return sum(c * x[v] for v, c in self.coeffs)

    def satisfied(self, x) -> bool:
        val = self.lhs(x)
        return val <= self.rhs if self.rel == "<=" else val == self.rhs


@dataclass(frozen=True)
class InequalitySystem:
    kind: Kind
    num_vars: int
    var_names: tuple[str, ...]
    rows: tuple[Row, ...]
    lower: tuple[Optional[int], ...]
    upper: tuple[Optional[int], ...]
    z: int = 0
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def polygon_rows(self) -> tuple[Row, ...]:
        return tuple(r for r in self.rows if r.tag == "polygon")

    def row_multiset(self, tag: str = "polygon") -> list[tuple]:
        return sorted(r.key() for r in self.rows if r.tag == tag)

    def feasible(self, x) -> bool:
        for i, v in enumerate(x):
            lo, hi = self.lower[i], self.upper[i]
            if (lo is not None and v < lo) or (hi is not None and v > hi):
                return False
        return all(r.satisfied(x) for r in self.rows)


def edge_var_names(z: int, prime: bool = False) -> tuple[str, ...]:
    stem = "xp" if prime else "x"
    return tuple(f"{stem}_{i}_{j}" for i, j in edge_pairs(z))


def _cycle_order(edges: tuple[int, ...], z: int) -> tuple[int, ...]:
    """Edges of a K_z cycle listed from its least vertex toward the lesser neighbour.

    Raises if the edge set is not a simple cycle.
    """
    pairs = edge_pairs(z)
    if len(set(edges)) != len(edges):
        raise ModelError("polygon repeats an edge")
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        a, b = pairs[e]
        adj.setdefault(a, []).append((b, e))
        adj.setdefault(b, []).append((a, e))
    if len(adj) != len(edges) or any(len(n) != 2 for n in adj.values()):
        raise ModelError("polygon is not a cycle of K_z")
    start = min(adj)
    cur = start
    nxt = min(adj[start])
    out = []
    while True:
        out.append(nxt[1])
        cur = nxt[0]
        if cur == start:
            break
        nxt = next(n for n in adj[cur] if n[1] != out[-1])
    if len(out) != len(edges):
        raise ModelError("polygon is not connected")
    return tuple(out)


def v12(t: Triad) -> list[Polygon]:
    """Length-3 and length-4 vertex coboundaries and face boundaries of g1."""
    polys = []
    for origin, walks in (("vertex", t.g1.vertices), ("face", t.g1.faces)):
        for w in walks:
            if len(w) in (3, 4):
                polys.append((origin, _cycle_order(w, t.z)))
    return [Polygon(i, edges, origin) for i, (origin, edges) in enumerate(polys)]


def signings(p: Polygon) -> list[SignedPolygon]:
    out = []
    for signs in product((1, -1), repeat=p.length):
        sp = SignedPolygon(p, signs)
        if sp.p_plus % 2 == 1:
            out.append(sp)
    return sorted(out, key=lambda s: s.minus_mask)


def signed_row(sp: SignedPolygon) -> Row:
    coeffs = tuple(zip(sp.polygon.edges, sp.signs))
    return Row(coeffs, "<=", sp.p_plus - 1, f"p{sp.polygon.index}_s{sp.minus_mask}")


def s12(t: Triad) -> list[SignedPolygon]:
    return [sp for p in v12(t) for sp in signings(p)]


def build_p12(t: Triad) -> InequalitySystem:
    m = t.m
    names = edge_var_names(t.z)
    rows = [signed_row(sp) for sp in s12(t)]
    rows += [Row(((e, -1),), "<=", 0, f"nn_{names[e][2:]}", "nonneg") for e in range(m)]
    sys = InequalitySystem("P12", m, names, tuple(rows), (0,) * m, (None,) * m, t.z)
    check_p12(sys)
    return sys


def check_p12(sys: InequalitySystem) -> None:
    for r in sys.rows:
        if len(r.coeffs) > 4 or any(c not in (-1, 1) for _, c in r.coeffs):
            raise ModelError(f"row {r.name} is not a short +-1 row")
        if r.rhs not in (0, 1, 2):
            raise ModelError(f"row {r.name} has rhs {r.rhs}")
    if len(sys.rows) > 11 * sys.num_vars:
        raise ModelError("more than 11|E| rows")


def build_p2prime(t: Triad) -> InequalitySystem:
    m = t.m
    rows = []
    for p in v12(t):
        n = p.length
        for k in range(n):
            if (n - k) % 2 == 0:
                continue
            for q in combinations(range(n), k):
                qs = set(q)
                coeffs = tuple((e, 1 if i in qs else -1) for i, e in enumerate(p.edges))
                mask = sum(1 << i for i in q)
                rows.append((mask, p.index, Row(coeffs, "<=", k - 1, f"p{p.index}_s{mask}")))
    rows.sort(key=lambda r: (r[1], r[0]))
    return InequalitySystem(
        "P2prime", m, edge_var_names(t.z, prime=True), tuple(r[2] for r in rows),
        (0,) * m, (1,) * m, t.z,
    )


def pq_inequalities(p: Polygon, slack_var: int) -> list[Row]:
    """``s_p + sum_{e in q} x'_e <= (|p|+|q|-1)/2`` for ``q`` of opposite parity to ``p``."""
    n = p.length
    rows = []
    for k in range(n + 1):
        if (n + k) % 2 == 0:
            continue
        for q in combinations(range(n), k):
            coeffs = ((slack_var, 1),) + tuple((p.edges[i], 1) for i in q)
            mask = sum(1 << i for i in q)
            rows.append(Row(coeffs, "<=", (n + k - 1) // 2, f"pq{p.index}_q{mask}", "pq"))
    return rows


def build_p0prime(t: Triad, with_pq: bool = False) -> InequalitySystem:
    """Double-slack equalities; ``with_pq`` also attaches the pq rows."""
    m = t.m
    polys = v12(t)
    names = edge_var_names(t.z, prime=True) + tuple(f"s_{p.index}" for p in polys)
    rows = []
    for p in polys:
        s = m + p.index
        coeffs = ((s, 2),) + tuple((e, 1) for e in p.edges)
        rows.append(Row(coeffs, "=", p.length, f"eq{p.index}", "parity"))
        if with_pq:
            rows.extend(pq_inequalities(p, s))
    n = m + len(polys)
    return InequalitySystem(
        "P0prime", n, names, tuple(rows),
        (0,) * n, (1,) * m + (None,) * len(polys), t.z,
    )


def pq_eliminates_fractional(p: Polygon) -> bool:
    """Over every 0-1 assignment on p: the implied s_p is fractional iff a pq row fails."""
    n = p.length
    slack = -1
    rows = pq_inequalities(p, slack)
    local = {e: i for i, e in enumerate(p.edges)}
    for bits in product((0, 1), repeat=n):
        # s_p = twice_s / 2; compare doubled sides to stay in integers
        twice_s = n - sum(bits)
        violated = False
        for r in rows:
            lhs2 = twice_s + 2 * sum(bits[local[v]] for v, _ in r.coeffs if v != slack)
            if lhs2 > 2 * r.rhs:
                violated = True
                break
        if (twice_s % 2 == 1) != violated:
            return False
    return True


def complement_transform(p2: InequalitySystem) -> InequalitySystem:
    """Substitute ``x' = 1 - x`` in every row of a P2prime system."""
    if p2.kind != "P2prime":
        raise ModelError("complement transform expects a P2prime system")
    rows = []
    for r in p2.rows:
        total = sum(c for _, c in r.coeffs)
        coeffs = tuple((v, -c) for v, c in r.coeffs)
        rhs = r.rhs - total
        p_plus = sum(1 for _, c in coeffs if c > 0)
        if p_plus % 2 != 1 or rhs != p_plus - 1:
            raise ModelError(f"row {r.name} does not transform to a signed polygon row")
        rows.append(Row(coeffs, r.rel, rhs, r.name, r.tag))
    m = p2.num_vars
    return InequalitySystem(
        "P12", m, edge_var_names(p2.z), tuple(rows), (0,) * m, (None,) * m, p2.z
    )


def predicted_s12(z: int) -> int:
    if z % 4 == 0:
        h = z // 4
        return 16 * z * h - 8 * z
    return 16 * (z // 4) * z


def count_report(z: int) -> dict:
    t = build_triad(z)
    polys = v12(t)
    n3 = sum(1 for p in polys if p.length == 3)
    n4 = sum(1 for p in polys if p.length == 4)
    got = len(s12(t))
    m = num_edges(z)
    total = got + m
    return {
        "z": z,
        "m": m,
        "unifiers_3": n3,
        "unifiers_4": n4,
        "s12_count": got,
        "s12_from_unifiers": 4 * n3 + 8 * n4,
        "predicted": predicted_s12(z),
        "total_rows": total,
        "bound_11m": 11 * m,
        "pass": got == predicted_s12(z) == 4 * n3 + 8 * n4 and total <= 11 * m,
        # crude 4z^2 <= 10|E| estimate; informational only
        "crude_estimate_ok": 4 * z * z <= 10 * m,
    }
