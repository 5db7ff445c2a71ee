"""The triad Pog_h / its projective dual / K_z over one common edge set.

``g3`` is K_z embedded by the shaded rozig table, ``g1 = Pog_h`` is its phial
and ``g2`` the dual of ``g1``.  Construction is purely combinatorial; the
geometric orbit picture only supplies the census that validates it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import gf2
from .gf2 import EdgeVector, Gf2Subspace
from .qgraph import CombMap, QGraph, build_qgraph, dual, extract_map, phial
from .rozig import build_table, check_z, edge_pairs, num_edges, rotation_and_twist


class TriadError(ValueError):
    """The constructed maps fail a structural invariant."""


class CapabilityError(RuntimeError):
    """The request exceeds the exhaustive-enumeration guard."""


@dataclass(frozen=True)
class Triad:
    z: int
    q: QGraph
    g1: CombMap
    g2: CombMap
    g3: CombMap

    @property
    def h(self) -> Fraction:
        return Fraction(self.z, 4)

    @property
    def m(self) -> int:
        return num_edges(self.z)


def walk_vector(walk, m: int) -> EdgeVector:
    """Walk reduced mod 2: edges traversed twice cancel."""
    return EdgeVector.from_edges(walk, m)


def census(cmap: CombMap) -> dict[str, dict[int, int]]:
    return {
        "vertex_degrees": dict(sorted(Counter(len(w) for w in cmap.vertices).items())),
        "face_sizes": dict(sorted(Counter(len(w) for w in cmap.faces).items())),
        "zigzag_lengths": dict(sorted(Counter(len(w) for w in cmap.zigzags).items())),
    }


def expected_census(z: int) -> dict[str, int]:
    """Counts of 3-/4-vertices and 3-/4-faces of Pog_h, h = z/4."""
    check_z(z)
    if z % 4 == 0:
        h = z // 4
        return {"v3": z, "v4": z * (h - 1), "f3": 0, "f4": z * (h - 1) + z // 2}
    fh = z // 4
    return {"v3": 0, "v4": fh * z, "f3": z, "f4": (fh - 1) * z + z // 2}


def _census_counts(cmap: CombMap) -> dict[str, int]:
    c = census(cmap)
    return {
        "v3": c["vertex_degrees"].get(3, 0),
        "v4": c["vertex_degrees"].get(4, 0),
        "f3": c["face_sizes"].get(3, 0),
        "f4": c["face_sizes"].get(4, 0),
    }


def zigzag_labels(t: Triad) -> list[tuple[int, int]]:
    """For each edge, the (1-based) pair of g1-zigzags through it.

    Zigzags are named by the K_z vertex whose coboundary they traverse.
    """
    name = {}
    pairs = edge_pairs(t.z)
    for walk in t.g1.zigzags:
        common = set(pairs[walk[0]])
        for e in walk[1:]:
            common &= set(pairs[e])
        if len(common) != 1:
            raise TriadError("zigzag of g1 is not a vertex coboundary of K_z")
        name[walk] = common.pop()
    through: dict[int, list[int]] = {e: [] for e in range(t.m)}
    for walk in t.g1.zigzags:
        for e in set(walk):
            through[e].append(name[walk])
    out = []
    for e in range(t.m):
        if len(through[e]) != 2:
            raise TriadError(f"edge {e} lies on {len(through[e])} zigzags")
        a, b = sorted(through[e])
        out.append((a, b))
    return out


def validate_triad(t: Triad) -> None:
    z, m = t.z, t.m
    g1, g2, g3 = t.g1, t.g2, t.g3
    pairs = edge_pairs(z)

    if len(g3.vertices) != z or any(len(w) != z - 1 for w in g3.vertices):
        raise TriadError("g3 is not K_z: wrong vertex count or degree")
    cobs = sorted(frozenset(w) for w in g3.vertices)
    want = sorted(frozenset(e for e, p in enumerate(pairs) if v in p) for v in range(1, z + 1))
    if cobs != want:
        raise TriadError("g3 vertex coboundaries are not those of K_z")

    for name, g in (("g1", g1), ("g2", g2)):
        if g.euler_char != 1:
            raise TriadError(f"{name} has Euler characteristic {g.euler_char}, expected 1")
        if g.orientable:
            raise TriadError(f"{name} is orientable, expected the projective plane")
    if sorted(g2.vertices) != sorted(g1.faces) or sorted(g2.faces) != sorted(g1.vertices):
        raise TriadError("g2 is not the dual of g1")

    if len(g1.zigzags) != z:
        raise TriadError(f"g1 has {len(g1.zigzags)} zigzags, expected {z}")
    labels = zigzag_labels(t)
    if labels != list(pairs):
        raise TriadError("zigzag labelling of g1 edges disagrees with the rozig edge ids")

    got = _census_counts(g1)
    exp = expected_census(z)
    if got != exp:
        raise TriadError(f"census {got} != expected {exp}")
    long_walks = [w for w in g1.vertices + g1.faces if len(w) not in (3, 4)]
    if len(long_walks) != 1 or len(long_walks[0]) != z:
        raise TriadError("expected exactly one central walk of length z")
    if len(g1.vertices) + len(g1.faces) - len(long_walks) != m:
        raise TriadError("unifier count differs from |E|")


@lru_cache(maxsize=None)
def build_triad(z: int) -> Triad:
    check_z(z)
    q = build_qgraph(rotation_and_twist(build_table(z)))
    g1q = phial(q)
    t = Triad(z=z, q=q, g1=extract_map(g1q), g2=extract_map(dual(g1q)), g3=extract_map(q))
    validate_triad(t)
    return t


@dataclass(frozen=True)
class MapSpaces:
    v1: Gf2Subspace
    v2: Gf2Subspace
    v3: Gf2Subspace
    f1: Gf2Subspace
    z1: Gf2Subspace
    gamma: int
    cdefs: tuple[int, int, int]

    @property
    def cdef(self) -> int:
        return self.cdefs[0]

    @property
    def coboundary(self) -> tuple[Gf2Subspace, Gf2Subspace, Gf2Subspace]:
        return (self.v1, self.v2, self.v3)


def _span_walks(walks, m: int) -> Gf2Subspace:
    return gf2.span([walk_vector(w, m) for w in walks], m)


@lru_cache(maxsize=None)
def _map_spaces(z: int) -> MapSpaces:
    t = build_triad(z)
    m = t.m
    v1 = _span_walks(t.g1.vertices, m)
    v2 = _span_walks(t.g2.vertices, m)
    v3 = _span_walks(t.g3.vertices, m)
    f1 = _span_walks(t.g1.faces, m)
    z1 = _span_walks(t.g1.zigzags, m)
    vs = (v1, v2, v3)
    inter = {
        (i, j): gf2.intersect(vs[i], vs[j]).dim for i in range(3) for j in range(i + 1, 3)
    }
    if len(set(inter.values())) != 1:
        raise TriadError(f"pairwise intersection dimensions differ: {inter}")
    cdefs = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        cdefs.append(gf2.quotient_dim(gf2.orth_complement(vs[i]), vs[j] + vs[k]))
    return MapSpaces(v1, v2, v3, f1, z1, inter[(0, 1)], tuple(cdefs))


def map_spaces(t: Triad) -> MapSpaces:
    return _map_spaces(t.z)


def absorption_holds(ms: MapSpaces) -> bool:
    vs = ms.coboundary
    for i, j, k in permutations(range(3)):
        if not gf2.intersect(vs[i], vs[j]).is_subspace_of(vs[k]):
            return False
    return True


def richness_report(t: Triad) -> dict[str, bool]:
    """Checks tying the three maps' spaces together on a built triad."""
    ms = map_spaces(t)
    vs = ms.coboundary
    comp = [gf2.orth_complement(v) for v in vs]
    cycle1 = comp[0]
    zig = [walk_vector(w, t.m) for w in t.g1.zigzags]
    out = {
        "faces_span_dual_coboundaries": ms.f1 == ms.v2,
        "zigzags_span_phial_coboundaries": ms.z1 == ms.v3,
        "cdef_zero_all_maps": ms.cdefs == (0, 0, 0),
        "absorption": absorption_holds(ms),
        "coboundary_is_cross_complement": all(
            vs[i] == gf2.intersect(comp[j], comp[k]) for i, j, k in permutations(range(3))
        ),
        "dim_plus_complement": all(v.dim + c.dim == t.m for v, c in zip(vs, comp)),
        "zigzag_not_in_face_span": all(not ms.f1.contains(v) for v in zig),
        "zigzag_completes_cycle_space": all(
            ms.f1 + gf2.span([v], t.m) == cycle1 for v in zig
        ),
        "face_quotient_is_one": gf2.quotient_dim(cycle1, ms.f1) == 1,
    }
    return out


def _walk_constraints(t: Triad) -> list[tuple[int, int]]:
    # (reduced walk bits, required parity of |F & walk|)
    out = []
    for w in t.g1.vertices + t.g1.faces:
        out.append((walk_vector(w, t.m).bits, len(w) % 2))
    return out


def is_strong_ojoin(t: Triad, F: EdgeVector) -> bool:
    """Parity of F on every g1 vertex coboundary and face boundary matches its degree."""
    if F.length != t.m:
        raise gf2.DimensionError(f"length mismatch: {F.length} != {t.m}")
    for bits, parity in _walk_constraints(t):
        # multiplicity-weighted count: an edge traversed twice adds an even amount
        if (F.bits & bits).bit_count() % 2 != parity:
            return False
    return True


STRONG_OJOIN_GUARD = 28


def enumerate_strong_ojoins(t: Triad) -> list[EdgeVector]:
    """All strong O-joins of g1, by parity search with forced last edges."""
    m = t.m
    if m > STRONG_OJOIN_GUARD:
        raise CapabilityError(f"|E| = {m} exceeds the enumeration guard {STRONG_OJOIN_GUARD}")
    cons = [(tuple(EdgeVector(b, m).edges()), p) for b, p in _walk_constraints(t)]
    # order edges so constraints close as early as possible
    order: list[int] = []
    placed = set()
    remaining = sorted(cons, key=lambda c: len(c[0]))
    while len(order) < m:
        best = min(
            (c for c in remaining if not set(c[0]) <= placed),
            key=lambda c: (len(set(c[0]) - placed), c[0]),
            default=None,
        )
        if best is None:
            order.extend(e for e in range(m) if e not in placed)
            break
        for e in best[0]:
            if e not in placed:
                placed.add(e)
                order.append(e)
    pos = {e: i for i, e in enumerate(order)}
    # each constraint is checked when its last edge (in order) is assigned
    closing: dict[int, list[tuple[int, int]]] = {}
    for edges, p in cons:
        last = max(pos[e] for e in edges)
        mask = 0
        for e in edges:
            mask |= 1 << e
        closing.setdefault(last, []).append((mask, p))

    out: list[EdgeVector] = []

    def rec(i: int, bits: int) -> None:
        if i == m:
            out.append(EdgeVector(bits, m))
            return
        e = order[i]
        for val in (0, 1):
            b = bits | (val << e)
            if all((b & mask).bit_count() % 2 == p for mask, p in closing.get(i, ())):
                rec(i + 1, b)

    rec(0, 0)
    return sorted(out, key=lambda v: v.bits)


def min_strong_ojoin(t: Triad) -> int:
    return min(F.weight() for F in enumerate_strong_ojoins(t))


def strong_ojoin_cut_equivalence(t: Triad) -> bool:
    """Complements of strong O-joins are exactly the cut vectors of K_z."""
    from .verify import enumerate_cuts

    comps = {F.complement().bits for F in enumerate_strong_ojoins(t)}
    cuts = {c.bits.bits for c in enumerate_cuts(t.z)}
    return comps == cuts
