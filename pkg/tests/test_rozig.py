import pytest

from pogcut.rozig import (
    BASE17,
    RozigError,
    build_table,
    edge_id,
    edge_pairs,
    first_row,
    rotation_and_twist,
    shading,
    suc2,
)

# reference K_16 table, base-17 digits
K16_TABLE = """\
21 14 61 18 A1 1C E1 1G 31 15 71 19 B1 1D F1
43 36 83 3A C3 3E G3 31 53 37 93 3B D3 3F 23
65 58 A5 5C E5 5G 15 53 75 59 B5 5D F5 52 45
87 7A C7 7E G7 71 37 75 97 7B D7 7F 27 74 67
A9 9C E9 9G 19 93 59 97 B9 9D F9 92 49 96 89
CB BE GB B1 3B B5 7B B9 DB BF 2B B4 6B B8 AB
ED DG 1D D3 5D D7 9D DB FD D2 4D D6 8D DA CD
GF F1 3F F5 7F F9 BF FD 2F F4 6F F8 AF FC EF
12 23 52 27 92 2B D2 2F 42 26 82 2A C2 2E G2
34 45 74 49 B4 4D F4 42 64 48 A4 4C E4 4G 14
56 67 96 6B D6 6F 26 64 86 6A C6 6E G6 61 36
78 89 B8 8D F8 82 48 86 A8 8C E8 8G 18 83 58
9A AB DA AF 2A A4 6A A8 CA AE GA A1 3A A5 7A
BC CD FC C2 4C C6 8C CA EC CG 1C C3 5C C7 9C
DE EF 2E E4 6E E8 AE EC GE E1 3E E5 7E E9 BE
FG G2 4G G6 8G GA CG GE 1G G3 5G G7 9G GB DG
"""
K16_SHADED = {0, 2, 4, 6, 9, 11, 13}

EVEN_Z = [6, 8, 10, 12, 14, 16, 18, 20]


def decode(text):
    return [[(BASE17.index(c[0]), BASE17.index(c[1])) for c in line.split()] for line in text.splitlines()]


def test_k16_table_matches_reference():
    t = build_table(16)
    assert [list(r) for r in t.entries] == decode(K16_TABLE)
    assert {k for k, s in enumerate(t.shaded) if s} == K16_SHADED


def test_render_base17_roundtrip():
    lines = build_table(16).render(base17=True).splitlines()
    assert lines[0].split() == ["#" if k in K16_SHADED else "." for k in range(15)]
    assert "\n".join(line.strip() for line in lines[1:]) + "\n" == K16_TABLE


@pytest.mark.parametrize("label,z,out", [(2, 16, 4), (15, 16, 2), (16, 16, 1), (1, 6, 3), (5, 6, 2), (6, 6, 1)])
def test_suc2(label, z, out):
    assert suc2(label, z) == out


def test_suc2_range():
    with pytest.raises(RozigError):
        suc2(0, 6)
    with pytest.raises(RozigError):
        suc2(7, 6)


def test_first_row_z16():
    assert first_row(16) == [
        (2, 1), (1, 4), (6, 1), (1, 8), (10, 1), (1, 12), (14, 1), (1, 16),
        (3, 1), (1, 5), (7, 1), (1, 9), (11, 1), (1, 13), (15, 1),
    ]


@pytest.mark.parametrize("z", EVEN_Z)
def test_first_row_is_coboundary_of_1(z):
    row = first_row(z)
    assert len(row) == z - 1
    assert all(1 in p for p in row)
    assert sorted(max(p) for p in row) == list(range(2, z + 1))


@pytest.mark.parametrize("row,col,pair", [(1, 0, (4, 3)), (8, 0, (1, 2)), (15, 1, (16, 2))])
def test_k16_cells(row, col, pair):
    assert build_table(16).entries[row][col] == pair


@pytest.mark.parametrize("z", EVEN_Z)
def test_shading_mirror(z):
    s = shading(z)
    assert len(s) == z - 1
    assert s[0]
    assert all(s[k] == s[z - 1 - k] for k in range(1, z - 1))
    assert [s[k] for k in range(1, z // 2)] == [k % 2 == 0 for k in range(1, z // 2)]


@pytest.mark.parametrize("z", EVEN_Z)
def test_table_invariants(z):
    t = build_table(z)
    assert sorted(t.row_labels) == list(range(1, z + 1))
    seen = {}
    for row in t.entries:
        for a, b in row:
            key = frozenset((a, b))
            seen[key] = seen.get(key, 0) + 1
    assert set(seen.values()) == {2}
    assert len(seen) == z * (z - 1) // 2


@pytest.mark.parametrize("z", EVEN_Z)
def test_twist_set(z):
    t = build_table(z)
    rs = rotation_and_twist(t)
    assert len(rs.twist) == z // 2 * sum(t.shaded)
    assert edge_id(1, 2, z) in rs.twist
    # every rotation lists each incident edge once
    for v, rot in enumerate(rs.rotation):
        assert sorted(rot) == sorted(e for e, p in enumerate(edge_pairs(z)) if v + 1 in p)


@pytest.mark.parametrize("z", [4, 7, 0, -2, 9])
def test_bad_z(z):
    with pytest.raises(RozigError):
        build_table(z)


def test_edge_id_lexicographic():
    for z in (6, 9):
        for k, (i, j) in enumerate(edge_pairs(z)):
            assert edge_id(i, j, z) == k == edge_id(j, i, z)
