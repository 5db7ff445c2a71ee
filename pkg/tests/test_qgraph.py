import networkx as nx
import pytest

from pogcut.pog import TriadError, build_triad, validate_triad, Triad
from pogcut.qgraph import (
    QGraph,
    StructureError,
    bigons,
    build_qgraph,
    dual,
    extract_map,
    is_orientable,
    phial,
    skew,
    validate_qgraph,
)
from pogcut.rozig import RotationSystem, build_table, rotation_and_twist

ZS = [6, 8, 10, 12]


def q_of(z):
    return build_qgraph(rotation_and_twist(build_table(z)))


def gem_graph(q):
    g = nx.Graph()
    for k in range(3):
        g.add_edges_from((c, d) for c, d in enumerate(q.matchings[k]))
    return g


def test_corner_count():
    q = q_of(8)
    assert q.num_corners == 112
    assert q.num_edges == 28


@pytest.mark.parametrize("z", ZS)
def test_hyperedges_are_k4(z):
    q = q_of(z)
    g = nx.Graph()
    for k in (0, 2, 3):
        g.add_edges_from(enumerate(q.matchings[k]))
    comps = list(nx.connected_components(g))
    assert len(comps) == q.num_edges
    assert all(g.subgraph(c).number_of_edges() == 6 for c in comps)


@pytest.mark.parametrize("z", ZS)
def test_duality_algebra(z):
    q = q_of(z)
    for f in (dual, skew, phial):
        assert f(f(q)) == q
    assert phial(q) == dual(skew(dual(q)))
    assert phial(q) == skew(dual(skew(q)))
    # the dualities generate S3: (dual.skew) has order 3
    ds = lambda x: dual(skew(x))
    assert ds(ds(ds(q))) == q and ds(q) != q


@pytest.mark.parametrize("z", ZS)
def test_dualities_preserve_structure(z):
    q = q_of(z)
    base = extract_map(q)
    d = extract_map(dual(q))
    assert d.euler_char == base.euler_char
    assert sorted(d.vertices) == sorted(base.faces)
    assert sorted(d.zigzags) == sorted(base.zigzags)
    assert sorted(extract_map(skew(q)).vertices) == sorted(base.vertices)
    assert sorted(extract_map(phial(q)).faces) == sorted(base.faces)


@pytest.mark.parametrize("z", ZS)
def test_bigons(z):
    q = q_of(z)
    assert len(bigons(q, 0, 1)) == z
    assert all(len(c) == 4 for c in bigons(q, 0, 2))
    assert all(len(c) == 4 for c in bigons(q, 2, 3))


@pytest.mark.parametrize("z", ZS)
def test_orientability_matches_bipartite(z):
    q = q_of(z)
    for x in (q, phial(q), dual(phial(q))):
        assert is_orientable(x) == nx.is_bipartite(gem_graph(x))
    assert not is_orientable(phial(q))
    flat = build_qgraph(rotation_and_twist(build_table(z)).untwisted())
    assert is_orientable(flat) and nx.is_bipartite(gem_graph(flat))
    # Euler characteristic of an orientable surface is even
    assert extract_map(flat).euler_char % 2 == 0


def theta(second, twist=()):
    # two vertices joined by three parallel edges
    return RotationSystem(2, ((0, 1, 2), second), frozenset(twist), ((0, 1),) * 3)


def test_theta_graph():
    sphere = build_qgraph(theta((0, 2, 1)))
    assert is_orientable(sphere)
    assert extract_map(sphere).euler_char == 2
    torus = build_qgraph(theta((0, 1, 2)))
    assert is_orientable(torus)
    assert extract_map(torus).euler_char == 0
    one = build_qgraph(theta((0, 2, 1), {0}))
    assert not is_orientable(one) and not nx.is_bipartite(gem_graph(one))
    assert extract_map(one).euler_char == 1


def test_invalid_rotation():
    with pytest.raises(StructureError):
        build_qgraph(RotationSystem(2, ((0, 1), (0,)), frozenset(), ((0, 1), (0, 1))))
    with pytest.raises(StructureError):
        build_qgraph(RotationSystem(1, ((0, 0),), frozenset(), ((0, 0),)))


def test_invalid_matchings():
    q = q_of(6)
    m0, m1, m2, m3 = q.matchings
    with pytest.raises(StructureError):
        validate_qgraph(QGraph((m0, m1, m0, m3)))


def test_complemented_twist_fails_validation():
    z = 8
    rs = rotation_and_twist(build_table(z))
    bad = RotationSystem(rs.nverts, rs.rotation, frozenset(range(rs.num_edges)) - rs.twist, rs.ends)
    q = build_qgraph(bad)
    g1q = phial(q)
    t = Triad(z, q, extract_map(g1q), extract_map(dual(g1q)), extract_map(q))
    with pytest.raises(TriadError):
        validate_triad(t)
