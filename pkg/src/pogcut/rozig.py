"""Shaded rozig tables: a rotation system with twists for K_z.

Table labels are the 1-based vertex names of K_z (rendered in base 17 as
``1..9, A..G``).  Edge ids are 0-based, ``edge_id(i, j)`` being the
position of ``{i, j}`` in the lexicographic list of pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Pair = tuple[int, int]

BASE17 = "0123456789ABCDEFG"


class RozigError(ValueError):
    """Bad table parameters or a table that breaks a structural invariant."""


def check_z(z: int) -> None:
    if not isinstance(z, int) or z < 6 or z % 2:
        raise RozigError(f"z must be an even integer >= 6, got {z!r}")


def num_edges(z: int) -> int:
    return z * (z - 1) // 2


def edge_id(i: int, j: int, z: int) -> int:
    """Lexicographic index of the pair ``{i, j}`` of 1-based labels."""
    if i == j:
        raise ValueError("loop")
    a, b = (i, j) if i < j else (j, i)
    # pairs (1,2),(1,3),...,(1,z),(2,3),...
    return (a - 1) * z - (a - 1) * a // 2 + (b - a - 1)


@lru_cache(maxsize=None)
def edge_pairs(z: int) -> tuple[Pair, ...]:
    return tuple((i, j) for i in range(1, z + 1) for j in range(i + 1, z + 1))


def suc2(label: int, z: int) -> int:
    if not 1 <= label <= z:
        raise RozigError(f"label {label} out of range 1..{z}")
    if label <= z - 2:
        return label + 2
    return 1 if label == z else 2


def _alternate(partners: list[int], first_out: bool) -> list[Pair]:
    # first_out: the first pair is (1, p); orientation then alternates
    row = []
    out = first_out
    for p in partners:
        row.append((1, p) if out else (p, 1))
        out = not out
    return row


def first_row(z: int) -> list[Pair]:
    """Oriented coboundary of vertex 1 in rotation order."""
    check_z(z)
    left = _alternate(list(range(4, z + 1, 2)), True)
    right = _alternate(list(range(3, z, 2)), z % 4 == 2)
    return [(2, 1)] + left + right


def shading(z: int) -> list[bool]:
    check_z(z)
    half = z // 2 - 1
    left = [k % 2 == 0 for k in range(1, half + 1)]
    return [True] + left + left[::-1]


@dataclass(frozen=True)
class RozigTable:
    z: int
    entries: tuple[tuple[Pair, ...], ...]
    shaded: tuple[bool, ...]

    @property
    def row_labels(self) -> tuple[int, ...]:
        """The vertex whose coboundary each row lists."""
        return tuple(_common(row) for row in self.entries)

    def render(self, base17: bool = False) -> str:
        use17 = base17 and self.z <= 16

        def cell(p: Pair) -> str:
            if use17:
                return BASE17[p[0]] + BASE17[p[1]]
            return f"{p[0]},{p[1]}"

        width = max(len(cell(p)) for row in self.entries for p in row)
        marks = " ".join(("#" if s else ".").center(width) for s in self.shaded)
        lines = [marks]
        for row in self.entries:
            lines.append(" ".join(cell(p).rjust(width) for p in row))
        return "\n".join(lines) + "\n"


def _common(row: tuple[Pair, ...]) -> int:
    common = set(row[0])
    for p in row[1:]:
        common &= set(p)
    if len(common) != 1:
        raise RozigError("row does not share a single label")
    return common.pop()


def build_table(z: int) -> RozigTable:
    row = first_row(z)
    rows = [tuple(row)]
    for _ in range(z - 1):
        row = [(suc2(a, z), suc2(b, z)) for a, b in row]
        rows.append(tuple(row))
    t = RozigTable(z, tuple(rows), tuple(shading(z)))
    validate_table(t)
    return t


def validate_table(t: RozigTable) -> None:
    z = t.z
    seen: dict[frozenset, int] = {}
    for row in t.entries:
        if len(row) != z - 1:
            raise RozigError("row length must be z-1")
        for a, b in row:
            if a == b or not (1 <= a <= z and 1 <= b <= z):
                raise RozigError(f"bad entry {(a, b)}")
            key = frozenset((a, b))
            seen[key] = seen.get(key, 0) + 1
    if len(seen) != num_edges(z) or any(c != 2 for c in seen.values()):
        raise RozigError("every pair must appear exactly twice")
    labels = t.row_labels
    if sorted(labels) != list(range(1, z + 1)):
        raise RozigError("rows must be the coboundaries of distinct vertices")
    wrap = tuple((suc2(a, z), suc2(b, z)) for a, b in t.entries[-1])
    if wrap != t.entries[0]:
        raise RozigError("suc2 applied to the last row must give the first")


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic edge order at each vertex plus the set of twisted edges.

    ``rotation[v]`` lists edge ids around the 0-based vertex ``v``;
    ``ends[e]`` gives the 0-based endpoints ``(u, w)`` with ``u < w``.
    """

    nverts: int
    rotation: tuple[tuple[int, ...], ...]
    twist: frozenset
    ends: tuple[tuple[int, int], ...]

    @property
    def num_edges(self) -> int:
        return len(self.ends)

    def untwisted(self) -> "RotationSystem":
        return RotationSystem(self.nverts, self.rotation, frozenset(), self.ends)


def rotation_and_twist(t: RozigTable) -> RotationSystem:
    z = t.z
    m = num_edges(z)
    rotation: list[tuple[int, ...]] = [()] * z
    col_shade: dict[int, set] = {}
    for row, v in zip(t.entries, t.row_labels):
        ids = []
        for col, (a, b) in enumerate(row):
            e = edge_id(a, b, z)
            ids.append(e)
            col_shade.setdefault(e, set()).add(t.shaded[col])
        rotation[v - 1] = tuple(ids)
    for e, shades in col_shade.items():
        if len(shades) != 1:
            i, j = edge_pairs(z)[e]
            raise RozigError(f"edge {{{i},{j}}} lies in both a shaded and a non-shaded column")
    twist = frozenset(e for e, s in col_shade.items() if True in s)
    ends = tuple((i - 1, j - 1) for i, j in edge_pairs(z))
    rs = RotationSystem(z, tuple(rotation), twist, ends)
    assert len(ends) == m
    return rs
